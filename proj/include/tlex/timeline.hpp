#ifndef TLEX_TIMELINE_HPP
#define TLEX_TIMELINE_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "tlex/consistency.hpp"

namespace tlex {

// A normal form timeline: every compound time-point mapped to a 1-based
// position such that each edge (u, v) has position(u) < position(v).
// greedy_kahn produces the minimum one, where positions are also contiguous.
struct NormalFormTimeline {
    std::vector<std::uint32_t> positions; // positions[index - 1], values 1..length
    std::uint32_t length = 0;

    std::uint32_t position_of(std::uint32_t compound_index) const {
        return positions[compound_index - 1];
    }
    std::uint32_t position_of_point(const CompoundDAG& dag, const TimePoint& point) const {
        return position_of(dag.point_to_compound.at(point));
    }

    bool operator==(const NormalFormTimeline&) const = default;
};

// Stage-by-stage Kahn scheduling: every step assigns the next position to all
// currently in-degree-zero compounds, which yields the unique minimum normal
// form timeline. Throws CycleDetectedError if vertices remain but none is
// free (the caller bypassed consistency checking).
NormalFormTimeline greedy_kahn(const CompoundDAG& dag);

// True iff neither compound reaches the other, i.e. consistent timelines
// exist with either relative order. Each direction is a DFS truncated at
// target discovery.
bool is_indeterminate(const CompoundDAG& dag, std::uint32_t u, std::uint32_t v);

// Precomputed all-pairs reachability for dense querying; answers match
// is_indeterminate exactly.
class TransitiveClosure {
public:
    explicit TransitiveClosure(const CompoundDAG& dag);
    bool reaches(std::uint32_t from, std::uint32_t to) const;
    bool indeterminate(std::uint32_t u, std::uint32_t v) const {
        return !reaches(u, v) && !reaches(v, u);
    }

private:
    std::size_t count_;
    std::vector<std::uint64_t> bits_;
};

struct IndeterminacyTable {
    // Symmetric set stored as (i, j) with i < j, 1-based compound indices.
    // Holds all unordered pairs when all_pairs is set; otherwise only the
    // pairs discovered by section detection (co-located and across adjacent
    // positions).
    std::set<std::pair<std::uint32_t, std::uint32_t>> unordered_pairs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sections; // [start_pos, end_pos]
    std::size_t section_pair_count = 0;
    bool all_pairs = false;

    bool operator==(const IndeterminacyTable&) const = default;
};

// Section rule: a position p is marked if it holds two or more mutually
// unordered compounds, or some compound at p is unordered with some compound
// at p + 1; a section is a maximal run of consecutive marked positions,
// extended to p + 1 when the final mark came from the boundary condition.
IndeterminacyTable detect_sections(const CompoundDAG& dag, const NormalFormTimeline& timeline);

// detect_sections plus the full pairwise table (all unordered pairs).
IndeterminacyTable indeterminacy_table(const CompoundDAG& dag, const NormalFormTimeline& timeline);

} // namespace tlex

#endif
