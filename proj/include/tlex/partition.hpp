#ifndef TLEX_PARTITION_HPP
#define TLEX_PARTITION_HPP

#include <map>
#include <vector>

#include "tlex/model.hpp"

namespace tlex {

// Endpoint pair of a subordinating link that crosses two subgraphs.
struct ConnectingPoint {
    NodeId source;
    NodeId target;
    std::string link_id;
    SlinkRel rel = SlinkRel::Modal;

    bool operator==(const ConnectingPoint&) const = default;
};

// Split of a TimeML graph into subgraphs connected only by temporal and
// aspectual links. Subgraphs are node-disjoint, cover all input nodes, and
// are ordered by the earliest text offset of their members.
struct Partition {
    std::vector<TimeMLGraph> subgraphs;
    std::vector<TimeMLLink> slinks;                 // every SLINK of the input
    std::vector<ConnectingPoint> connecting_points; // cross-subgraph SLINKs only
    std::map<NodeId, std::size_t> subgraph_of;

    std::size_t size() const { return subgraphs.size(); }

    bool operator==(const Partition&) const = default;
};

// Connected components of the undirected view over TLINK/ALINK edges;
// SLINK relations are ignored for connectivity. SLINKs whose endpoints land
// in the same subgraph stay in `slinks` but produce no connecting point
// (they carry no temporal constraint of their own).
Partition partition(const TimeMLGraph& graph);

} // namespace tlex

#endif
