#ifndef TLEX_CONSISTENCY_HPP
#define TLEX_CONSISTENCY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tlex/pa_graph.hpp"

namespace tlex {

// An equivalence class of time-points connected by equality constraints.
// Indices are 1-based and assigned in lexicographic order of the smallest
// member, so they are stable across runs.
struct CompoundPoint {
    std::uint32_t index = 0;
    std::vector<TimePoint> members; // sorted, non-empty

    bool operator==(const CompoundPoint&) const = default;
};

// The equality-merged constraint graph: compound time-points connected by
// less-than edges only. Only consistent inputs produce one, so it is acyclic.
struct CompoundDAG {
    std::vector<CompoundPoint> compounds;                       // compounds[i].index == i + 1
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;    // 1-based (from, to), all Less
    std::map<TimePoint, std::uint32_t> point_to_compound;       // 1-based indices

    std::size_t size() const { return compounds.size(); }
    const CompoundPoint& compound(std::uint32_t index) const { return compounds[index - 1]; }

    // Out-neighbour lists indexed by compound index - 1, each sorted.
    std::vector<std::vector<std::uint32_t>> adjacency() const;

    bool operator==(const CompoundDAG&) const = default;
};

enum class CycleType { TypeI, TypeII, TypeIII };

std::string_view cycle_type_name(CycleType type);

struct InconsistentCycle {
    CycleType type = CycleType::TypeIII;
    std::vector<TimePoint> points;       // members of the implicated compounds, in cycle order
    std::set<std::string> link_ids;      // originating TimeML links, via constraint provenance
    std::vector<PAConstraint> witness;   // replaying these alone is already inconsistent

    bool operator==(const InconsistentCycle&) const = default;
};

// Maximal List of Inconsistent Cycles. Maximal relative to the checking
// procedure (each detected cycle is broken and the search continues), not the
// set of all simple cycles.
struct InconsistencyReport {
    std::vector<InconsistentCycle> cycles;

    bool operator==(const InconsistencyReport&) const = default;
};

struct MergeResult {
    std::vector<CompoundPoint> compounds;
    std::map<TimePoint, std::uint32_t> point_to_compound;
};

// Merges time-points that are inter-connected by equality constraints:
// connected components of the equality-only undirected subgraph, singletons
// included.
MergeResult merge_equalities(const PAGraph& pa);

using CheckResult = std::variant<CompoundDAG, InconsistencyReport>;

// Consistency check per the three-part procedure: merge equalities, detect
// type (i)/(ii) cycles while building the compound graph, then detect type
// (iii) cycles by DFS with back-edge removal. Inconsistency is a result, not
// an error.
CheckResult check(const PAGraph& pa);

inline bool is_consistent(const CheckResult& result) {
    return std::holds_alternative<CompoundDAG>(result);
}

} // namespace tlex

#endif
