#ifndef TLEX_TRUNK_BRANCH_HPP
#define TLEX_TRUNK_BRANCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tlex/partition.hpp"
#include "tlex/timeline.hpp"

namespace tlex {

// One subgraph's solved timeline together with its compound mapping.
struct SubgraphTimeline {
    CompoundDAG dag;
    NormalFormTimeline timeline;
    IndeterminacyTable table;

    bool operator==(const SubgraphTimeline&) const = default;
};

// Identifies main ("real world") subgraphs. With anchors, a subgraph is main
// iff it contains an anchor node; without, the approximation applies: main
// iff no SLINK from another subgraph targets any of its nodes.
// Throws AnchorUnknownError for anchors outside the graph.
std::set<std::size_t> identify_main(const Partition& partition,
                                    const std::optional<std::set<NodeId>>& anchors = std::nullopt);

// A subordinating link between timelines, with the positions of both
// endpoints. Positions on main subgraphs are global trunk positions
// (concatenation offset applied); positions on subordinated subgraphs stay
// local to their branch.
struct BranchLink {
    std::string link_id;
    SlinkRel rel = SlinkRel::Modal;
    NodeId source;
    std::size_t source_subgraph = 0;
    std::uint32_t source_pos = 0; // position of the source's start point
    NodeId target;
    std::size_t target_subgraph = 0;
    std::uint32_t target_pos = 0;

    bool operator==(const BranchLink&) const = default;
};

struct TrunkBranchTimeline {
    struct Entry {
        std::size_t subgraph_id = 0;
        SubgraphTimeline solved;
        bool is_main = false;

        bool operator==(const Entry&) const = default;
    };

    std::vector<Entry> timelines;                   // partition order
    std::map<std::size_t, std::uint32_t> global_offsets; // main subgraphs only
    std::uint32_t trunk_length = 0;
    std::vector<BranchLink> branch_links;           // cross-subgraph SLINKs
    std::vector<TimeMLLink> intra_slinks;           // SLINKs inside one subgraph

    // Global trunk position for points on main subgraphs, local branch
    // position otherwise.
    std::uint32_t position_of(std::size_t subgraph, const TimePoint& point) const;

    bool operator==(const TrunkBranchTimeline&) const = default;
};

// Concatenates the main timelines in partition order to form the trunk
// (cumulative offsets, so L(v) = offset + local(v)) and attaches every
// subordinated timeline as a branch anchored at its connecting points.
// Throws MissingTimelineError if a subgraph was not solved.
TrunkBranchTimeline assemble(const Partition& partition,
                             const std::vector<SubgraphTimeline>& results,
                             const std::set<std::size_t>& mains);

// For two disjoint main timelines, the cross-timeline entity pair closest in
// the text. Computed for each consecutive pair of mains in text order.
struct BreakingPair {
    std::size_t subgraph_a = 0;
    std::size_t subgraph_b = 0;
    NodeId node_a;
    NodeId node_b;
    std::size_t char_distance = 0;

    // Word distance approximated as character distance over an average word
    // length of 6.
    double approx_word_distance() const { return static_cast<double>(char_distance) / 6.0; }

    bool operator==(const BreakingPair&) const = default;
};

std::vector<BreakingPair> breaking_pairs(const Partition& partition,
                                         const std::set<std::size_t>& mains);

// One per-document row of the corpus table.
struct DocStats {
    std::string doc_id;
    bool parse_ok = true;
    bool consistent = false;
    std::size_t cycle_count = 0; // MLIC size across subgraphs
    std::uint32_t main_timeline_length = 0;
    std::size_t branch_count = 0;
    std::size_t main_timeline_count = 0;
    std::size_t section_count = 0;
    std::size_t indeterminate_pair_count = 0;

    bool operator==(const DocStats&) const = default;
};

struct MinAvgMax {
    std::size_t min = 0;
    double avg = 0.0;
    std::size_t max = 0;
    bool operator==(const MinAvgMax&) const = default;
};

struct CorpusStats {
    std::size_t files = 0;
    std::size_t parse_failures = 0;
    std::size_t inconsistent_files = 0;
    std::size_t total_cycles = 0;
    std::size_t total_sections = 0;
    // Aggregated over consistent files.
    MinAvgMax main_length;
    MinAvgMax branches;
    MinAvgMax sections;

    bool operator==(const CorpusStats&) const = default;
};

CorpusStats corpus_stats(const std::vector<DocStats>& rows);

} // namespace tlex

#endif
