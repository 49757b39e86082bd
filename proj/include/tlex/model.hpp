#ifndef TLEX_MODEL_HPP
#define TLEX_MODEL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlex/relations.hpp"

namespace tlex {

enum class NodeKind { EventInstance, Timex };

enum class TimexClass { Date, Time, Duration, Set };

std::string_view node_kind_name(NodeKind kind);
std::string_view timex_class_name(TimexClass cls);
std::optional<TimexClass> parse_timex_class(std::string_view text);

// Identity of a graph vertex: an event instance id ("ei5") or a time
// expression id ("t3"). Ids are unique within a document, so ordering and
// equality go by id alone.
struct NodeId {
    NodeKind kind = NodeKind::EventInstance;
    std::string id;

    bool operator==(const NodeId& other) const { return id == other.id && kind == other.kind; }
    std::strong_ordering operator<=>(const NodeId& other) const {
        if (auto cmp = id <=> other.id; cmp != 0) return cmp;
        return kind <=> other.kind;
    }
};

// An event instance or time expression together with its text anchor.
// char_offset indexes into the tag-stripped document text and backs the
// breaking-pair distance computation.
struct TemporalEntity {
    NodeId node;
    std::string surface_text;
    std::size_t char_offset = 0;
    std::optional<TimexClass> timex_class; // present exactly when kind == Timex

    bool operator==(const TemporalEntity&) const = default;
};

struct TimeMLLink {
    std::string link_id;
    NodeId source;
    NodeId target;
    LinkRel rel;

    LinkKind kind() const { return kind_of(rel); }
    bool operator==(const TimeMLLink&) const = default;
};

struct GraphOptions {
    bool drop_self_loops = true;
    bool include_alinks = true;
};

// Validated TimeML temporal graph. Nodes are sorted by id and links by
// (link_id, source, target); construction through build_graph guarantees the
// per-pair uniqueness rules. Immutable after construction.
struct TimeMLGraph {
    std::vector<TemporalEntity> nodes; // sorted by node id
    std::vector<TimeMLLink> links;     // sorted by (link_id, source, target)
    std::vector<std::string> warnings; // anomalies recorded during construction

    std::size_t n() const { return nodes.size(); }
    // Number of distinct ordered node pairs carrying at least one link.
    std::size_t m() const;

    bool contains(const NodeId& node) const;
    const TemporalEntity* find(const NodeId& node) const;
    const TimeMLLink* find_link(const std::string& link_id) const;

    bool operator==(const TimeMLGraph&) const = default;
};

// Validates and normalizes a graph. Self-loop links are removed with a
// warning when options.drop_self_loops is set; ALINKs are removed when
// options.include_alinks is false (the TLINK-only analysis mode). Identical
// duplicate links deduplicate silently.
//
// Throws DanglingEndpointError, DuplicateLinkError, SlinkOnTimexError.
TimeMLGraph build_graph(std::vector<TemporalEntity> entities, std::vector<TimeMLLink> links,
                        const GraphOptions& options = {});

} // namespace tlex

#endif
