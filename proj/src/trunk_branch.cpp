#include "tlex/trunk_branch.hpp"

#include <algorithm>
#include <limits>

#include "tlex/errors.hpp"

namespace tlex {

std::set<std::size_t> identify_main(const Partition& partition,
                                    const std::optional<std::set<NodeId>>& anchors) {
    std::set<std::size_t> mains;
    if (anchors) {
        for (const NodeId& anchor : *anchors) {
            const auto it = partition.subgraph_of.find(anchor);
            if (it == partition.subgraph_of.end()) throw AnchorUnknownError(anchor.id);
            mains.insert(it->second);
        }
        return mains;
    }
    // Approximation: main iff no subordinating link from another subgraph
    // targets one of its nodes.
    std::set<std::size_t> has_incoming;
    for (const auto& cp : partition.connecting_points) {
        has_incoming.insert(partition.subgraph_of.at(cp.target));
    }
    for (std::size_t id = 0; id < partition.size(); ++id) {
        if (!has_incoming.count(id)) mains.insert(id);
    }
    return mains;
}

std::uint32_t TrunkBranchTimeline::position_of(std::size_t subgraph, const TimePoint& point) const {
    const auto& entry = timelines.at(subgraph);
    const std::uint32_t local = entry.solved.timeline.position_of_point(entry.solved.dag, point);
    const auto offset = global_offsets.find(subgraph);
    return offset == global_offsets.end() ? local : offset->second + local;
}

TrunkBranchTimeline assemble(const Partition& partition,
                             const std::vector<SubgraphTimeline>& results,
                             const std::set<std::size_t>& mains) {
    if (results.size() < partition.size()) throw MissingTimelineError(results.size());

    TrunkBranchTimeline tbt;
    std::uint32_t offset = 0;
    for (std::size_t id = 0; id < partition.size(); ++id) {
        TrunkBranchTimeline::Entry entry;
        entry.subgraph_id = id;
        entry.solved = results[id];
        entry.is_main = mains.count(id) > 0;
        if (entry.is_main) {
            tbt.global_offsets[id] = offset;
            offset += entry.solved.timeline.length;
        }
        tbt.timelines.push_back(std::move(entry));
    }
    tbt.trunk_length = offset;

    for (const auto& link : partition.slinks) {
        const std::size_t from = partition.subgraph_of.at(link.source);
        const std::size_t to = partition.subgraph_of.at(link.target);
        if (from == to) {
            tbt.intra_slinks.push_back(link);
            continue;
        }
        BranchLink branch;
        branch.link_id = link.link_id;
        branch.rel = std::get<SlinkRel>(link.rel);
        branch.source = link.source;
        branch.source_subgraph = from;
        branch.source_pos = tbt.position_of(from, start_of(link.source));
        branch.target = link.target;
        branch.target_subgraph = to;
        branch.target_pos = tbt.position_of(to, start_of(link.target));
        tbt.branch_links.push_back(std::move(branch));
    }
    return tbt;
}

std::vector<BreakingPair> breaking_pairs(const Partition& partition,
                                         const std::set<std::size_t>& mains) {
    std::vector<BreakingPair> pairs;
    if (mains.size() < 2) return pairs;

    const std::vector<std::size_t> ordered(mains.begin(), mains.end()); // partition order is text order
    for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
        const TimeMLGraph& a = partition.subgraphs[ordered[k]];
        const TimeMLGraph& b = partition.subgraphs[ordered[k + 1]];
        BreakingPair best;
        best.subgraph_a = ordered[k];
        best.subgraph_b = ordered[k + 1];
        best.char_distance = std::numeric_limits<std::size_t>::max();
        for (const auto& ea : a.nodes) {
            for (const auto& eb : b.nodes) {
                const std::size_t distance = ea.char_offset > eb.char_offset
                                                 ? ea.char_offset - eb.char_offset
                                                 : eb.char_offset - ea.char_offset;
                const auto key = std::tuple(distance, ea.node.id, eb.node.id);
                const auto best_key = std::tuple(best.char_distance, best.node_a.id, best.node_b.id);
                if (key < best_key) {
                    best.node_a = ea.node;
                    best.node_b = eb.node;
                    best.char_distance = distance;
                }
            }
        }
        pairs.push_back(std::move(best));
    }
    return pairs;
}

CorpusStats corpus_stats(const std::vector<DocStats>& rows) {
    CorpusStats stats;
    stats.main_length.min = std::numeric_limits<std::size_t>::max();
    stats.branches.min = std::numeric_limits<std::size_t>::max();
    stats.sections.min = std::numeric_limits<std::size_t>::max();

    std::size_t consistent = 0;
    double length_sum = 0, branch_sum = 0, section_sum = 0;
    for (const auto& row : rows) {
        ++stats.files;
        if (!row.parse_ok) {
            ++stats.parse_failures;
            continue;
        }
        stats.total_cycles += row.cycle_count;
        if (!row.consistent) {
            ++stats.inconsistent_files;
            continue;
        }
        ++consistent;
        stats.total_sections += row.section_count;
        length_sum += row.main_timeline_length;
        branch_sum += static_cast<double>(row.branch_count);
        section_sum += static_cast<double>(row.section_count);
        stats.main_length.min = std::min<std::size_t>(stats.main_length.min, row.main_timeline_length);
        stats.main_length.max = std::max<std::size_t>(stats.main_length.max, row.main_timeline_length);
        stats.branches.min = std::min(stats.branches.min, row.branch_count);
        stats.branches.max = std::max(stats.branches.max, row.branch_count);
        stats.sections.min = std::min(stats.sections.min, row.section_count);
        stats.sections.max = std::max(stats.sections.max, row.section_count);
    }
    if (consistent == 0) {
        stats.main_length.min = stats.branches.min = stats.sections.min = 0;
    } else {
        stats.main_length.avg = length_sum / static_cast<double>(consistent);
        stats.branches.avg = branch_sum / static_cast<double>(consistent);
        stats.sections.avg = section_sum / static_cast<double>(consistent);
    }
    return stats;
}

} // namespace tlex
