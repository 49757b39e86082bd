#ifndef TLEX_JSON_IO_HPP
#define TLEX_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tlex/consistency.hpp"
#include "tlex/model.hpp"

namespace tlex {

// Insertion-ordered JSON keeps the canonical field order stable, so dumps of
// equal values are byte-identical.
using Json = nlohmann::ordered_json;

// Canonical serialization of a TimeML graph: fixed field order, nodes and
// links in their (sorted) graph order.
Json graph_to_json(const TimeMLGraph& graph);
TimeMLGraph graph_from_json(const Json& json);

Json point_to_json(const TimePoint& point);

} // namespace tlex

#endif
