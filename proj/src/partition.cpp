#include "tlex/partition.hpp"

#include <algorithm>
#include <limits>

namespace tlex {

Partition partition(const TimeMLGraph& graph) {
    Partition result;
    const std::size_t n = graph.n();
    if (n == 0) return result;

    std::map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(graph.nodes[i].node, i);

    std::vector<std::vector<std::size_t>> undirected(n);
    for (const auto& link : graph.links) {
        if (link.kind() == LinkKind::Slink) continue;
        const std::size_t a = index.at(link.source);
        const std::size_t b = index.at(link.target);
        if (a == b) continue;
        undirected[a].push_back(b);
        undirected[b].push_back(a);
    }
    for (auto& neighbours : undirected) std::sort(neighbours.begin(), neighbours.end());

    // DFS in node-id order; nodes are already sorted, so components come out
    // deterministically.
    constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> component(n, unassigned);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t root = 0; root < n; ++root) {
        if (component[root] != unassigned) continue;
        const std::size_t id = members.size();
        members.emplace_back();
        std::vector<std::size_t> stack{root};
        component[root] = id;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            members[id].push_back(u);
            for (std::size_t v : undirected[u]) {
                if (component[v] == unassigned) {
                    component[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }

    // Order components by the earliest text offset of their members; ties go
    // to the smaller node id.
    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto component_key = [&](std::size_t id) {
        std::size_t best_offset = std::numeric_limits<std::size_t>::max();
        std::size_t best_node = *std::min_element(members[id].begin(), members[id].end());
        for (std::size_t i : members[id]) {
            best_offset = std::min(best_offset, graph.nodes[i].char_offset);
        }
        return std::pair(best_offset, graph.nodes[best_node].node.id);
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return component_key(a) < component_key(b); });

    std::vector<std::size_t> rank(members.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        std::vector<TemporalEntity> entities;
        for (std::size_t i : members[order[pos]]) entities.push_back(graph.nodes[i]);
        std::vector<TimeMLLink> links;
        for (const auto& link : graph.links) {
            if (link.kind() == LinkKind::Slink) continue;
            if (component[index.at(link.source)] == order[pos]) links.push_back(link);
        }
        result.subgraphs.push_back(build_graph(std::move(entities), std::move(links),
                                               {.drop_self_loops = false, .include_alinks = true}));
        for (const auto& entity : result.subgraphs.back().nodes) {
            result.subgraph_of.emplace(entity.node, pos);
        }
    }

    for (const auto& link : graph.links) {
        if (link.kind() != LinkKind::Slink) continue;
        result.slinks.push_back(link);
        const std::size_t from = rank[component[index.at(link.source)]];
        const std::size_t to = rank[component[index.at(link.target)]];
        if (from != to) {
            result.connecting_points.push_back(
                {link.source, link.target, link.link_id, std::get<SlinkRel>(link.rel)});
        }
    }
    return result;
}

} // namespace tlex
