#include "tlex/timeline.hpp"

#include <algorithm>
#include <cassert>

#include "tlex/errors.hpp"

namespace tlex {

NormalFormTimeline greedy_kahn(const CompoundDAG& dag) {
    const std::size_t count = dag.size();
    const auto adj = dag.adjacency();

    std::vector<std::size_t> in_degree(count, 0);
    for (const auto& [from, to] : dag.edges) ++in_degree[to - 1];

    NormalFormTimeline timeline;
    timeline.positions.assign(count, 0);

    std::vector<std::uint32_t> free;
    for (std::uint32_t c = 1; c <= count; ++c) {
        if (in_degree[c - 1] == 0) free.push_back(c);
    }

    std::size_t scheduled = 0;
    std::uint32_t stage = 0;
    while (scheduled < count) {
        if (free.empty()) {
            throw CycleDetectedError(std::to_string(count - scheduled) +
                                     " compound time-points have no free predecessor");
        }
        ++stage;
        std::vector<std::uint32_t> next;
        for (std::uint32_t u : free) {
            timeline.positions[u - 1] = stage;
            ++scheduled;
            for (std::uint32_t v : adj[u - 1]) {
                if (--in_degree[v - 1] == 0) next.push_back(v);
            }
        }
        std::sort(next.begin(), next.end());
        free = std::move(next);
    }
    timeline.length = stage;
    return timeline;
}

namespace {

// DFS from `from`, truncated as soon as `to` is discovered.
bool reaches(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t from,
             std::uint32_t to) {
    if (from == to) return true;
    std::vector<bool> visited(adj.size(), false);
    std::vector<std::uint32_t> stack{from};
    visited[from - 1] = true;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v : adj[u - 1]) {
            if (v == to) return true;
            if (!visited[v - 1]) {
                visited[v - 1] = true;
                stack.push_back(v);
            }
        }
    }
    return false;
}

} // namespace

bool is_indeterminate(const CompoundDAG& dag, std::uint32_t u, std::uint32_t v) {
    assert(u != v);
    const auto adj = dag.adjacency();
    return !reaches(adj, u, v) && !reaches(adj, v, u);
}

TransitiveClosure::TransitiveClosure(const CompoundDAG& dag) : count_(dag.size()) {
    const std::size_t words = (count_ + 63) / 64;
    bits_.assign(count_ * words, 0);

    // Process vertices in reverse topological order so each row is the union
    // of its successors' finished rows.
    const auto order = greedy_kahn(dag); // positions give a valid topological rank
    std::vector<std::uint32_t> by_rank(count_);
    for (std::uint32_t c = 1; c <= count_; ++c) by_rank[c - 1] = c;
    std::sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
        return order.position_of(a) > order.position_of(b);
    });

    const auto adj = dag.adjacency();
    for (std::uint32_t u : by_rank) {
        std::uint64_t* row = bits_.data() + (u - 1) * words;
        for (std::uint32_t v : adj[u - 1]) {
            row[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
            const std::uint64_t* succ = bits_.data() + (v - 1) * words;
            for (std::size_t w = 0; w < words; ++w) row[w] |= succ[w];
        }
    }
}

bool TransitiveClosure::reaches(std::uint32_t from, std::uint32_t to) const {
    if (from == to) return true;
    const std::size_t words = (count_ + 63) / 64;
    return (bits_[(from - 1) * words + (to - 1) / 64] >> ((to - 1) % 64)) & 1;
}

namespace {

IndeterminacyTable sections_impl(const CompoundDAG& dag, const NormalFormTimeline& timeline,
                                 bool all_pairs) {
    IndeterminacyTable table;
    table.all_pairs = all_pairs;
    const std::size_t count = dag.size();
    if (count == 0) return table;

    std::vector<std::vector<std::uint32_t>> level(timeline.length + 1);
    for (std::uint32_t c = 1; c <= count; ++c) {
        level[timeline.position_of(c)].push_back(c);
    }

    const auto adj = dag.adjacency();
    auto record_pair = [&](std::uint32_t a, std::uint32_t b) {
        table.unordered_pairs.insert({std::min(a, b), std::max(a, b)});
    };

    // Distinct compounds sharing a position in the minimum timeline can never
    // reach one another, so co-location alone marks the position.
    std::vector<bool> marked(timeline.length + 2, false);
    std::vector<bool> boundary(timeline.length + 2, false);
    for (std::uint32_t p = 1; p <= timeline.length; ++p) {
        if (level[p].size() >= 2) {
            marked[p] = true;
            for (std::size_t a = 0; a < level[p].size(); ++a) {
                for (std::size_t b = a + 1; b < level[p].size(); ++b) {
                    record_pair(level[p][a], level[p][b]);
                }
            }
        }
        if (p < timeline.length) {
            for (std::uint32_t u : level[p]) {
                for (std::uint32_t v : level[p + 1]) {
                    if (!reaches(adj, u, v) && !reaches(adj, v, u)) {
                        marked[p] = true;
                        boundary[p] = true;
                        record_pair(u, v);
                    }
                }
            }
        }
    }

    for (std::uint32_t p = 1; p <= timeline.length; ++p) {
        if (!marked[p]) continue;
        std::uint32_t end = p;
        while (end + 1 <= timeline.length && marked[end + 1]) ++end;
        std::uint32_t section_end = boundary[end] ? end + 1 : end;
        table.sections.emplace_back(p, section_end);
        p = end;
    }
    table.section_pair_count = table.unordered_pairs.size();

    if (all_pairs) {
        const TransitiveClosure closure(dag);
        for (std::uint32_t i = 1; i <= count; ++i) {
            for (std::uint32_t j = i + 1; j <= count; ++j) {
                if (closure.indeterminate(i, j)) table.unordered_pairs.insert({i, j});
            }
        }
    }
    return table;
}

} // namespace

IndeterminacyTable detect_sections(const CompoundDAG& dag, const NormalFormTimeline& timeline) {
    return sections_impl(dag, timeline, false);
}

IndeterminacyTable indeterminacy_table(const CompoundDAG& dag, const NormalFormTimeline& timeline) {
    return sections_impl(dag, timeline, true);
}

} // namespace tlex
