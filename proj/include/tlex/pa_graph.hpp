#ifndef TLEX_PA_GRAPH_HPP
#define TLEX_PA_GRAPH_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tlex/model.hpp"

namespace tlex {

enum class IntervalEnd { Start, End };

// One of the two time-points of an interval node. Rendered "ei5⁻" / "ei5⁺".
struct TimePoint {
    NodeId node;
    IntervalEnd end = IntervalEnd::Start;

    std::string render() const { return node.id + (end == IntervalEnd::Start ? "⁻" : "⁺"); }

    bool operator==(const TimePoint&) const = default;
    std::strong_ordering operator<=>(const TimePoint& other) const {
        if (auto cmp = node <=> other.node; cmp != 0) return cmp;
        return end <=> other.end;
    }
};

inline TimePoint start_of(const NodeId& node) { return {node, IntervalEnd::Start}; }
inline TimePoint end_of(const NodeId& node) { return {node, IntervalEnd::End}; }

enum class PARel { Less, Equal };

// A basic point-algebra constraint lhs < rhs or lhs = rhs. Equal constraints
// are stored once per unordered pair (lhs <= rhs). provenance carries the
// TimeML link id that induced the constraint; implicit start-before-end
// constraints have none.
struct PAConstraint {
    TimePoint lhs;
    TimePoint rhs;
    PARel rel = PARel::Less;
    std::optional<std::string> provenance;

    bool operator==(const PAConstraint&) const = default;
};

PAConstraint make_less(TimePoint lhs, TimePoint rhs, std::optional<std::string> provenance = {});
PAConstraint make_equal(TimePoint lhs, TimePoint rhs, std::optional<std::string> provenance = {});

struct PAGraph {
    std::vector<TimePoint> points;        // sorted, unique
    std::vector<PAConstraint> constraints;

    // Deduplicates: Equal once per unordered pair, Less once per
    // (lhs, rhs, provenance) triple.
    void add(PAConstraint constraint);

    bool operator==(const PAGraph&) const = default;
};

// The conjunction of basic PA constraints imposed by one temporal or
// aspectual relation between intervals a and b. Aspectual relations map to
// their temporal equivalents (initiates ≙ begins, terminates/culminates ≙
// ends, continues/reinitiates ≙ is_included).
std::vector<PAConstraint> rel_constraints(TlinkRel rel, const NodeId& a, const NodeId& b,
                                          const std::optional<std::string>& provenance = {});
std::vector<PAConstraint> rel_constraints(AlinkRel rel, const NodeId& a, const NodeId& b,
                                          const std::optional<std::string>& provenance = {});

// Translates a temporally/aspectually connected TimeML subgraph into its PA
// constraint graph: two time-points per interval, an implicit start < end
// constraint per interval, and the Table-style conjunction per link. TIME
// time expressions pinpoint a single moment, so they get start = end instead
// of start < end. The subgraph must not contain SLINKs.
PAGraph transform(const TimeMLGraph& subgraph);

} // namespace tlex

#endif
