#include "tlex/pa_graph.hpp"

#include <algorithm>
#include <cassert>

namespace tlex {

PAConstraint make_less(TimePoint lhs, TimePoint rhs, std::optional<std::string> provenance) {
    return {std::move(lhs), std::move(rhs), PARel::Less, std::move(provenance)};
}

PAConstraint make_equal(TimePoint lhs, TimePoint rhs, std::optional<std::string> provenance) {
    if (rhs < lhs) std::swap(lhs, rhs); // one canonical orientation per unordered pair
    return {std::move(lhs), std::move(rhs), PARel::Equal, std::move(provenance)};
}

void PAGraph::add(PAConstraint constraint) {
    if (constraint.rel == PARel::Equal && constraint.rhs < constraint.lhs) {
        std::swap(constraint.lhs, constraint.rhs);
    }
    for (const auto& existing : constraints) {
        if (existing.rel != constraint.rel || existing.lhs != constraint.lhs ||
            existing.rhs != constraint.rhs) {
            continue;
        }
        if (constraint.rel == PARel::Equal) return; // once per unordered pair
        if (existing.provenance == constraint.provenance) return;
    }
    constraints.push_back(std::move(constraint));
}

std::vector<PAConstraint> rel_constraints(TlinkRel rel, const NodeId& a, const NodeId& b,
                                          const std::optional<std::string>& provenance) {
    const TimePoint am = start_of(a), ap = end_of(a);
    const TimePoint bm = start_of(b), bp = end_of(b);
    const auto& p = provenance;
    switch (rel) {
    case TlinkRel::Before: return {make_less(ap, bm, p)};
    case TlinkRel::After: return {make_less(bp, am, p)};
    case TlinkRel::IBefore: return {make_equal(ap, bm, p)};
    case TlinkRel::IAfter: return {make_equal(bp, am, p)};
    case TlinkRel::Begins: return {make_equal(am, bm, p), make_less(ap, bp, p)};
    case TlinkRel::BegunBy: return {make_equal(am, bm, p), make_less(bp, ap, p)};
    case TlinkRel::Ends: return {make_less(bm, am, p), make_equal(ap, bp, p)};
    case TlinkRel::EndedBy: return {make_less(am, bm, p), make_equal(ap, bp, p)};
    case TlinkRel::Includes: return {make_less(am, bm, p), make_less(bp, ap, p)};
    case TlinkRel::IsIncluded: return {make_less(bm, am, p), make_less(ap, bp, p)};
    case TlinkRel::Simultaneous: return {make_equal(am, bm, p), make_equal(ap, bp, p)};
    case TlinkRel::Identity: return {make_equal(am, bm, p), make_equal(ap, bp, p)};
    case TlinkRel::During: return {make_equal(bm, am, p), make_equal(ap, bp, p)};
    case TlinkRel::DuringInv: return {make_equal(am, bm, p), make_equal(bp, ap, p)};
    }
    return {};
}

std::vector<PAConstraint> rel_constraints(AlinkRel rel, const NodeId& a, const NodeId& b,
                                          const std::optional<std::string>& provenance) {
    switch (rel) {
    case AlinkRel::Initiates: return rel_constraints(TlinkRel::Begins, a, b, provenance);
    case AlinkRel::Culminates: return rel_constraints(TlinkRel::Ends, a, b, provenance);
    case AlinkRel::Terminates: return rel_constraints(TlinkRel::Ends, a, b, provenance);
    case AlinkRel::Continues: return rel_constraints(TlinkRel::IsIncluded, a, b, provenance);
    case AlinkRel::Reinitiates: return rel_constraints(TlinkRel::IsIncluded, a, b, provenance);
    }
    return {};
}

PAGraph transform(const TimeMLGraph& subgraph) {
    PAGraph pa;
    pa.points.reserve(2 * subgraph.n());
    for (const auto& entity : subgraph.nodes) {
        pa.points.push_back(start_of(entity.node));
        pa.points.push_back(end_of(entity.node));
        if (entity.timex_class == TimexClass::Time) {
            // A TIME expression pinpoints a single moment.
            pa.add(make_equal(start_of(entity.node), end_of(entity.node)));
        } else {
            pa.add(make_less(start_of(entity.node), end_of(entity.node)));
        }
    }
    std::sort(pa.points.begin(), pa.points.end());

    for (const auto& link : subgraph.links) {
        assert(link.kind() != LinkKind::Slink);
        std::vector<PAConstraint> batch;
        if (const auto* t = std::get_if<TlinkRel>(&link.rel)) {
            batch = rel_constraints(*t, link.source, link.target, link.link_id);
        } else if (const auto* a = std::get_if<AlinkRel>(&link.rel)) {
            batch = rel_constraints(*a, link.source, link.target, link.link_id);
        }
        for (auto& constraint : batch) pa.add(std::move(constraint));
    }
    return pa;
}

} // namespace tlex
