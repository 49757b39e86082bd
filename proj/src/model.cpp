#include "tlex/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "tlex/errors.hpp"

namespace tlex {

std::string_view node_kind_name(NodeKind kind) {
    return kind == NodeKind::EventInstance ? "event_instance" : "timex";
}

std::string_view timex_class_name(TimexClass cls) {
    switch (cls) {
    case TimexClass::Date: return "DATE";
    case TimexClass::Time: return "TIME";
    case TimexClass::Duration: return "DURATION";
    case TimexClass::Set: return "SET";
    }
    return "?";
}

std::optional<TimexClass> parse_timex_class(std::string_view text) {
    std::string upper;
    upper.reserve(text.size());
    for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "DATE") return TimexClass::Date;
    if (upper == "TIME") return TimexClass::Time;
    if (upper == "DURATION") return TimexClass::Duration;
    if (upper == "SET") return TimexClass::Set;
    return std::nullopt;
}

std::size_t TimeMLGraph::m() const {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& link : links) pairs.emplace(link.source.id, link.target.id);
    return pairs.size();
}

bool TimeMLGraph::contains(const NodeId& node) const { return find(node) != nullptr; }

const TemporalEntity* TimeMLGraph::find(const NodeId& node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node,
                               [](const TemporalEntity& e, const NodeId& id) { return e.node < id; });
    if (it != nodes.end() && it->node == node) return &*it;
    return nullptr;
}

const TimeMLLink* TimeMLGraph::find_link(const std::string& link_id) const {
    for (const auto& link : links) {
        if (link.link_id == link_id) return &link;
    }
    return nullptr;
}

namespace {

std::size_t rel_index(const LinkRel& rel) {
    return std::visit([](auto r) { return static_cast<std::size_t>(r); }, rel);
}

auto link_sort_key(const TimeMLLink& link) {
    return std::tuple(link.link_id, link.source.id, link.target.id,
                      static_cast<std::size_t>(link.kind()), rel_index(link.rel));
}

} // namespace

TimeMLGraph build_graph(std::vector<TemporalEntity> entities, std::vector<TimeMLLink> links,
                        const GraphOptions& options) {
    TimeMLGraph graph;

    std::sort(entities.begin(), entities.end(),
              [](const TemporalEntity& a, const TemporalEntity& b) { return a.node < b.node; });
    graph.nodes = std::move(entities);

    std::map<std::string, const TemporalEntity*> by_id;
    for (const auto& entity : graph.nodes) by_id[entity.node.id] = &entity;

    std::sort(links.begin(), links.end(), [](const TimeMLLink& a, const TimeMLLink& b) {
        return link_sort_key(a) < link_sort_key(b);
    });

    // Per ordered pair, the TLINK and ALINK already kept. Conflicting
    // duplicates are annotation errors; identical ones deduplicate.
    std::map<std::pair<std::string, std::string>, const TimeMLLink*> tlink_seen;
    std::map<std::pair<std::string, std::string>, const TimeMLLink*> alink_seen;
    std::set<std::tuple<std::string, std::string, std::size_t>> slink_seen;

    for (auto& link : links) {
        if (!options.include_alinks && link.kind() == LinkKind::Alink) continue;

        for (const NodeId* endpoint : {&link.source, &link.target}) {
            auto it = by_id.find(endpoint->id);
            if (it == by_id.end()) throw DanglingEndpointError(link.link_id, endpoint->id);
            if (it->second->node.kind != endpoint->kind) {
                throw DanglingEndpointError(link.link_id, endpoint->id);
            }
        }
        if (link.kind() != LinkKind::Tlink) {
            for (const NodeId* endpoint : {&link.source, &link.target}) {
                if (endpoint->kind == NodeKind::Timex) {
                    throw SlinkOnTimexError(link.link_id, endpoint->id);
                }
            }
        }
        if (link.source == link.target) {
            if (options.drop_self_loops) {
                graph.warnings.push_back("dropped self-loop link " + link.link_id + " on " +
                                         link.source.id);
                continue;
            }
            // kept; the consistency checker will flag it if it is contradictory
        }

        const std::pair<std::string, std::string> pair(link.source.id, link.target.id);
        if (link.kind() == LinkKind::Tlink || link.kind() == LinkKind::Alink) {
            auto& seen = link.kind() == LinkKind::Tlink ? tlink_seen : alink_seen;
            auto [it, inserted] = seen.emplace(pair, &link);
            if (!inserted) {
                const TimeMLLink& prior = *it->second;
                if (prior.rel == link.rel) continue; // benign redundancy
                throw DuplicateLinkError(link.source.id, link.target.id,
                                         std::string(kind_name(link.kind())) + " " +
                                             prior.link_id + " (" + rel_name(prior.rel) +
                                             ") vs " + link.link_id + " (" + rel_name(link.rel) +
                                             ")");
            }
        } else {
            if (!slink_seen.emplace(pair.first, pair.second, rel_index(link.rel)).second) continue;
        }
        graph.links.push_back(link);
    }

    return graph;
}

} // namespace tlex
