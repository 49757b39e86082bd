#ifndef TLEX_TESTS_HELPERS_HPP
#define TLEX_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "tlex/model.hpp"
#include "tlex/pa_graph.hpp"

namespace tlex::test {

inline NodeId event_id(const std::string& id) { return {NodeKind::EventInstance, id}; }
inline NodeId timex_id(const std::string& id) { return {NodeKind::Timex, id}; }

inline TemporalEntity make_event(const std::string& id, std::size_t offset = 0,
                            const std::string& text = "") {
    return {event_id(id), text.empty() ? id : text, offset, std::nullopt};
}

inline TemporalEntity make_timex(const std::string& id, TimexClass cls = TimexClass::Date,
                            std::size_t offset = 0) {
    return {timex_id(id), id, offset, cls};
}

inline TimeMLLink tlink(const std::string& lid, const NodeId& a, TlinkRel rel, const NodeId& b) {
    return {lid, a, b, rel};
}
inline TimeMLLink slink(const std::string& lid, const NodeId& a, SlinkRel rel, const NodeId& b) {
    return {lid, a, b, rel};
}
inline TimeMLLink alink(const std::string& lid, const NodeId& a, AlinkRel rel, const NodeId& b) {
    return {lid, a, b, rel};
}

inline std::string fixture_path(const std::string& name) {
    return std::string(TLEX_FIXTURE_DIR) + "/" + name;
}

} // namespace tlex::test

#endif
