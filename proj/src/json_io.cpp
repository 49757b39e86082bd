#include "tlex/json_io.hpp"

#include "tlex/errors.hpp"

namespace tlex {

namespace {

Json node_id_to_json(const NodeId& node) {
    return Json{{"id", node.id}, {"kind", std::string(node_kind_name(node.kind))}};
}

NodeId node_id_from_json(const Json& json) {
    NodeId node;
    node.id = json.at("id").get<std::string>();
    node.kind = json.at("kind").get<std::string>() == "timex" ? NodeKind::Timex
                                                              : NodeKind::EventInstance;
    return node;
}

LinkRel rel_from_json(const std::string& kind, const std::string& name) {
    const LinkKind link_kind = kind == "TLINK"   ? LinkKind::Tlink
                               : kind == "SLINK" ? LinkKind::Slink
                                                 : LinkKind::Alink;
    const auto rel = parse_rel(link_kind, name);
    if (!rel) throw Error("unknown relation \"" + name + "\" for " + kind);
    return *rel;
}

} // namespace

Json point_to_json(const TimePoint& point) {
    return Json{{"node", point.node.id},
                {"end", point.end == IntervalEnd::Start ? "start" : "end"}};
}

Json graph_to_json(const TimeMLGraph& graph) {
    Json nodes = Json::array();
    for (const auto& entity : graph.nodes) {
        Json node;
        node["id"] = entity.node.id;
        node["kind"] = std::string(node_kind_name(entity.node.kind));
        node["text"] = entity.surface_text;
        node["offset"] = entity.char_offset;
        if (entity.timex_class) {
            node["timex_class"] = std::string(timex_class_name(*entity.timex_class));
        }
        nodes.push_back(std::move(node));
    }
    Json links = Json::array();
    for (const auto& link : graph.links) {
        links.push_back(Json{{"lid", link.link_id},
                             {"type", std::string(kind_name(link.kind()))},
                             {"rel", rel_name(link.rel)},
                             {"source", node_id_to_json(link.source)},
                             {"target", node_id_to_json(link.target)}});
    }
    return Json{{"nodes", std::move(nodes)},
                {"links", std::move(links)},
                {"warnings", graph.warnings}};
}

TimeMLGraph graph_from_json(const Json& json) {
    std::vector<TemporalEntity> entities;
    for (const auto& node : json.at("nodes")) {
        TemporalEntity entity;
        entity.node.id = node.at("id").get<std::string>();
        entity.node.kind = node.at("kind").get<std::string>() == "timex" ? NodeKind::Timex
                                                                         : NodeKind::EventInstance;
        entity.surface_text = node.at("text").get<std::string>();
        entity.char_offset = node.at("offset").get<std::size_t>();
        if (node.contains("timex_class")) {
            entity.timex_class = parse_timex_class(node.at("timex_class").get<std::string>());
        }
        entities.push_back(std::move(entity));
    }
    std::vector<TimeMLLink> links;
    for (const auto& item : json.at("links")) {
        TimeMLLink link;
        link.link_id = item.at("lid").get<std::string>();
        link.rel = rel_from_json(item.at("type").get<std::string>(),
                                 item.at("rel").get<std::string>());
        link.source = node_id_from_json(item.at("source"));
        link.target = node_id_from_json(item.at("target"));
        links.push_back(std::move(link));
    }
    // Reconstruct without re-normalizing away anything; the dump came from a
    // validated graph.
    TimeMLGraph graph = build_graph(std::move(entities), std::move(links),
                                    {.drop_self_loops = false, .include_alinks = true});
    if (json.contains("warnings")) {
        graph.warnings = json.at("warnings").get<std::vector<std::string>>();
    }
    return graph;
}


} // namespace tlex
