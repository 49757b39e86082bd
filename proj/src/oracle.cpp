#include "tlex/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tlex/errors.hpp"

namespace tlex {

namespace {

// Hang guard for the assignment search; the budget's max_enumeration caps
// emitted orderings, not backtracking nodes.
constexpr std::size_t kSearchNodeCap = 1'000'000'000;

struct IndexedConstraint {
    std::size_t lhs;
    std::size_t rhs;
    PARel rel;
};

bool search_assignment(std::size_t next, std::vector<std::size_t>& assignment,
                       const std::vector<std::vector<IndexedConstraint>>& incident,
                       std::size_t n_points, std::size_t& expansions, std::size_t cap) {
    if (next == n_points) return true;
    if (++expansions > cap) throw TooLargeError(expansions, cap);
    for (std::size_t value = 1; value <= n_points; ++value) {
        assignment[next] = value;
        bool ok = true;
        // Only constraints whose other endpoint is already assigned.
        for (const auto& c : incident[next]) {
            const std::size_t other = c.lhs == next ? c.rhs : c.lhs;
            if (other > next) continue;
            const std::size_t lhs_val = assignment[c.lhs];
            const std::size_t rhs_val = assignment[c.rhs];
            if (c.rel == PARel::Less ? lhs_val >= rhs_val : lhs_val != rhs_val) {
                ok = false;
                break;
            }
        }
        if (ok && search_assignment(next + 1, assignment, incident, n_points, expansions, cap)) {
            return true;
        }
    }
    assignment[next] = 0;
    return false;
}

} // namespace

bool brute_consistent(const PAGraph& pa, const OracleBudget& budget) {
    const std::size_t n = pa.points.size();
    if (n > budget.max_points) throw TooLargeError(n, budget.max_points);
    if (n == 0) return true;

    std::map<TimePoint, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(pa.points[i], i);

    std::vector<std::vector<IndexedConstraint>> incident(n);
    for (const auto& constraint : pa.constraints) {
        IndexedConstraint c{index.at(constraint.lhs), index.at(constraint.rhs), constraint.rel};
        if (c.lhs == c.rhs) {
            if (c.rel == PARel::Less) return false; // v < v is unsatisfiable outright
            continue;
        }
        incident[c.lhs].push_back(c);
        incident[c.rhs].push_back(c);
    }

    // Satisfiability is independent per connected component of the
    // constraint graph, and a BFS order within a component keeps every
    // assignment after the first immediately checkable.
    std::vector<bool> visited(n, false);
    std::size_t expansions = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::vector<std::size_t> component{root};
        visited[root] = true;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (const auto& c : incident[component[head]]) {
                const std::size_t other = c.lhs == component[head] ? c.rhs : c.lhs;
                if (!visited[other]) {
                    visited[other] = true;
                    component.push_back(other);
                }
            }
        }

        std::vector<std::size_t> rank(n, n); // position of each point in BFS order
        for (std::size_t i = 0; i < component.size(); ++i) rank[component[i]] = i;
        std::vector<std::vector<IndexedConstraint>> local(component.size());
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (const auto& c : incident[component[i]]) {
                local[i].push_back({rank[c.lhs], rank[c.rhs], c.rel});
            }
        }

        std::vector<std::size_t> assignment(component.size(), 0);
        if (!search_assignment(0, assignment, local, component.size(), expansions,
                               kSearchNodeCap)) {
            return false;
        }
    }
    return true;
}

namespace {

void enumerate_rec(const std::vector<std::vector<std::uint32_t>>& adj,
                   std::vector<std::size_t>& in_degree, std::vector<std::uint32_t>& available,
                   NormalFormTimeline& partial, std::size_t placed, std::size_t total,
                   std::vector<NormalFormTimeline>& out, std::size_t cap) {
    if (placed == total) {
        out.push_back(partial);
        if (out.size() > cap) throw TooLargeError(out.size(), cap);
        return;
    }
    const std::vector<std::uint32_t> candidates = available;
    const std::size_t k = candidates.size();
    // Every non-empty subset of the currently free compounds may share the
    // next position.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::uint32_t> chosen;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask >> b & 1) chosen.push_back(candidates[b]);
        }
        partial.length += 1;
        std::vector<std::uint32_t> next_available;
        for (std::uint32_t c : candidates) {
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) {
                next_available.push_back(c);
            }
        }
        for (std::uint32_t c : chosen) {
            partial.positions[c - 1] = partial.length;
            for (std::uint32_t v : adj[c - 1]) {
                if (--in_degree[v - 1] == 0) next_available.push_back(v);
            }
        }
        std::sort(next_available.begin(), next_available.end());
        std::swap(available, next_available);
        enumerate_rec(adj, in_degree, available, partial, placed + chosen.size(), total, out, cap);
        std::swap(available, next_available);
        for (std::uint32_t c : chosen) {
            partial.positions[c - 1] = 0;
            for (std::uint32_t v : adj[c - 1]) ++in_degree[v - 1];
        }
        partial.length -= 1;
    }
}

} // namespace

std::vector<NormalFormTimeline> enumerate_timelines(const CompoundDAG& dag,
                                                    const OracleBudget& budget) {
    const std::size_t count = dag.size();
    if (count > budget.max_points) throw TooLargeError(count, budget.max_points);

    std::vector<NormalFormTimeline> out;
    if (count == 0) {
        out.push_back({});
        return out;
    }

    const auto adj = dag.adjacency();
    std::vector<std::size_t> in_degree(count, 0);
    for (const auto& [from, to] : dag.edges) ++in_degree[to - 1];

    std::vector<std::uint32_t> available;
    for (std::uint32_t c = 1; c <= count; ++c) {
        if (in_degree[c - 1] == 0) available.push_back(c);
    }

    NormalFormTimeline partial;
    partial.positions.assign(count, 0);
    enumerate_rec(adj, in_degree, available, partial, 0, count, out, budget.max_enumeration);
    return out;
}

NormalFormTimeline brute_min_timeline(const CompoundDAG& dag, const OracleBudget& budget) {
    const auto all = enumerate_timelines(dag, budget);
    NormalFormTimeline minimum;
    minimum.positions.assign(dag.size(), 0);
    for (const auto& timeline : all) {
        for (std::size_t i = 0; i < timeline.positions.size(); ++i) {
            if (minimum.positions[i] == 0 || timeline.positions[i] < minimum.positions[i]) {
                minimum.positions[i] = timeline.positions[i];
            }
        }
    }
    minimum.length = 0;
    for (std::uint32_t p : minimum.positions) minimum.length = std::max(minimum.length, p);
    return minimum;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    bool chance(double p) {
        return static_cast<double>(engine_()) / static_cast<double>(std::mt19937_64::max()) < p;
    }

private:
    std::mt19937_64 engine_;
};

struct GroundTruthInterval {
    NodeId node;
    long start;
    long end;
    bool is_event;
};

// The basic TimeML relation exhibited by two ground-truth intervals, or
// nullopt for plain overlap, which the basic vocabulary cannot express.
std::optional<TlinkRel> config_relation(const GroundTruthInterval& a,
                                        const GroundTruthInterval& b) {
    if (a.end < b.start) return TlinkRel::Before;
    if (b.end < a.start) return TlinkRel::After;
    if (a.start == b.start && a.end == b.end) return TlinkRel::Simultaneous;
    if (a.end == b.start) return TlinkRel::IBefore;
    if (b.end == a.start) return TlinkRel::IAfter;
    if (a.start == b.start) return a.end < b.end ? TlinkRel::Begins : TlinkRel::BegunBy;
    if (a.end == b.end) return a.start > b.start ? TlinkRel::Ends : TlinkRel::EndedBy;
    if (a.start < b.start && b.end < a.end) return TlinkRel::Includes;
    if (b.start < a.start && a.end < b.end) return TlinkRel::IsIncluded;
    return std::nullopt;
}

} // namespace

GeneratedGraph generate_random_graph(std::uint64_t seed, std::size_t n_intervals, double density,
                                     double slink_prob, Fault fault) {
    Rng rng(seed);
    GeneratedGraph out;

    std::vector<TemporalEntity> entities;
    std::vector<GroundTruthInterval> truth;
    const long span = static_cast<long>(4 * n_intervals + 4);

    for (std::size_t i = 0; i < n_intervals; ++i) {
        const bool is_event = rng.below(100) < 80;
        const long start = 1 + static_cast<long>(rng.below(span));
        long end = start + 1 + static_cast<long>(rng.below(span / 2 + 1));

        TemporalEntity entity;
        entity.char_offset = 8 * i;
        entity.surface_text = "w" + std::to_string(i + 1);
        if (is_event) {
            entity.node = {NodeKind::EventInstance, "ei" + std::to_string(i + 1)};
        } else {
            entity.node = {NodeKind::Timex, "t" + std::to_string(i + 1)};
            const std::uint64_t roll = rng.below(100);
            if (roll < 55) {
                entity.timex_class = TimexClass::Date;
            } else if (roll < 75) {
                entity.timex_class = TimexClass::Time;
                end = start; // a TIME expression pinpoints one moment
            } else if (roll < 90) {
                entity.timex_class = TimexClass::Duration;
            } else {
                entity.timex_class = TimexClass::Set;
            }
        }
        truth.push_back({entity.node, start, end, is_event});
        entities.push_back(std::move(entity));
    }

    std::vector<TimeMLLink> links;
    std::size_t next_lid = 1;
    auto make_lid = [&next_lid] { return "l" + std::to_string(next_lid++); };

    for (std::size_t i = 0; i < n_intervals; ++i) {
        for (std::size_t j = i + 1; j < n_intervals; ++j) {
            if (!rng.chance(density)) continue;
            const bool flip = rng.chance(0.5);
            const auto& a = truth[flip ? j : i];
            const auto& b = truth[flip ? i : j];
            const auto rel = config_relation(a, b);
            if (!rel) continue;

            LinkRel emitted = *rel;
            if (a.is_event && b.is_event) {
                if (*rel == TlinkRel::Simultaneous && rng.chance(0.2)) {
                    emitted = TlinkRel::Identity;
                } else if (rng.chance(0.25)) {
                    // Emit the aspectual twin of the temporal relation.
                    if (*rel == TlinkRel::Begins) {
                        emitted = AlinkRel::Initiates;
                    } else if (*rel == TlinkRel::Ends) {
                        emitted = rng.chance(0.5) ? AlinkRel::Terminates : AlinkRel::Culminates;
                    } else if (*rel == TlinkRel::IsIncluded) {
                        emitted = rng.chance(0.5) ? AlinkRel::Continues : AlinkRel::Reinitiates;
                    }
                }
            }
            links.push_back({make_lid(), a.node, b.node, emitted});
        }
    }

    for (std::size_t i = 0; i < n_intervals; ++i) {
        for (std::size_t j = i + 1; j < n_intervals; ++j) {
            if (!truth[i].is_event || !truth[j].is_event) continue;
            if (!rng.chance(slink_prob)) continue;
            const SlinkRel rel = all_slink_rels[rng.below(kSlinkCount)];
            links.push_back({make_lid(), truth[i].node, truth[j].node, rel});
        }
    }

    if (fault == Fault::InjectCycle) {
        // A fresh contradictory pair: the reported cycle is then guaranteed
        // to name exactly these two links.
        for (std::size_t k = 0; k < 2; ++k) {
            TemporalEntity entity;
            entity.node = {NodeKind::EventInstance, "ei" + std::to_string(n_intervals + k + 1)};
            entity.surface_text = "w" + std::to_string(n_intervals + k + 1);
            entity.char_offset = 8 * (n_intervals + k);
            entities.push_back(std::move(entity));
        }
        const NodeId x = entities[entities.size() - 2].node;
        const NodeId y = entities[entities.size() - 1].node;
        for (const auto& [src, dst] : {std::pair(x, y), std::pair(y, x)}) {
            std::string lid = make_lid();
            out.injected_link_ids.push_back(lid);
            links.push_back({std::move(lid), src, dst, TlinkRel::Before});
        }
    }

    out.graph = build_graph(std::move(entities), std::move(links), {});
    return out;
}

PAGraph generate_random_pa_graph(std::uint64_t seed, std::size_t n_points, double density,
                                 double equal_fraction) {
    Rng rng(seed);
    PAGraph pa;
    const std::size_t n_intervals = (n_points + 1) / 2;
    for (std::size_t i = 0; i < n_intervals; ++i) {
        const NodeId node{NodeKind::EventInstance, "ei" + std::to_string(i + 1)};
        pa.points.push_back(start_of(node));
        if (pa.points.size() < n_points) {
            pa.points.push_back(end_of(node));
            pa.add(make_less(start_of(node), end_of(node)));
        }
    }
    std::sort(pa.points.begin(), pa.points.end());

    std::size_t next_lid = 1;
    for (std::size_t i = 0; i < pa.points.size(); ++i) {
        for (std::size_t j = 0; j < pa.points.size(); ++j) {
            if (i == j || !rng.chance(density)) continue;
            const std::string lid = "r" + std::to_string(next_lid++);
            if (rng.chance(equal_fraction)) {
                pa.add(make_equal(pa.points[i], pa.points[j], lid));
            } else {
                pa.add(make_less(pa.points[i], pa.points[j], lid));
            }
        }
    }
    return pa;
}

} // namespace tlex
