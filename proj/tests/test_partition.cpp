#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "tlex/oracle.hpp"
#include "tlex/parser.hpp"
#include "tlex/partition.hpp"

using namespace tlex;
using namespace tlex::test;

namespace {

std::set<std::string> node_ids(const TimeMLGraph& graph) {
    std::set<std::string> ids;
    for (const auto& node : graph.nodes) ids.insert(node.node.id);
    return ids;
}

// Plain union-find over node ids, as an independent component-count oracle.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t component_count_oracle(const TimeMLGraph& graph) {
    std::map<NodeId, std::size_t> index;
    for (const auto& node : graph.nodes) index.emplace(node.node, index.size());
    UnionFind uf(graph.n());
    for (const auto& link : graph.links) {
        if (link.kind() == LinkKind::Slink) continue;
        uf.unite(index.at(link.source), index.at(link.target));
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < graph.n(); ++i) roots.insert(uf.find(i));
    return roots.size();
}

} // namespace

TEST_CASE("running-example fixture splits into three subgraphs") {
    const auto graph = parse_file(fixture_path("cafe_story.tml"));
    const auto parts = partition(graph);

    REQUIRE(parts.size() == 3);
    CHECK(node_ids(parts.subgraphs[0]) ==
          std::set<std::string>{"ei1", "t2", "ei3", "ei4", "ei7", "ei8", "ei9", "ei10", "ei11",
                                "ei12", "ei13", "ei17", "ei18", "ei19", "ei20"});
    CHECK(node_ids(parts.subgraphs[1]) == std::set<std::string>{"ei5", "ei6"});
    CHECK(node_ids(parts.subgraphs[2]) == std::set<std::string>{"ei14", "ei15", "t16"});

    REQUIRE(parts.connecting_points.size() == 2);
    CHECK(parts.connecting_points[0].source.id == "ei4");
    CHECK(parts.connecting_points[0].target.id == "ei5");
    CHECK(parts.connecting_points[0].link_id == "l19");
    CHECK(parts.connecting_points[0].rel == SlinkRel::Modal);
    CHECK(parts.connecting_points[1].source.id == "ei13");
    CHECK(parts.connecting_points[1].target.id == "ei14");
    CHECK(parts.slinks.size() == 2);

    // Every temporal/aspectual link lies inside exactly one subgraph.
    std::size_t in_subgraphs = 0;
    for (const auto& sub : parts.subgraphs) in_subgraphs += sub.links.size();
    CHECK(in_subgraphs == 18);
}

TEST_CASE("connected graph without SLINKs is one subgraph") {
    const auto a = make_event("ei1", 0);
    const auto b = make_event("ei2", 8);
    const auto graph = build_graph({a, b}, {tlink("l1", a.node, TlinkRel::Before, b.node)});
    const auto parts = partition(graph);
    CHECK(parts.size() == 1);
    CHECK(parts.connecting_points.empty());
}

TEST_CASE("two events joined only by an SLINK") {
    const auto a = make_event("ei1", 0);
    const auto b = make_event("ei2", 8);
    const auto graph = build_graph({a, b}, {slink("l1", a.node, SlinkRel::Factive, b.node)});
    const auto parts = partition(graph);
    CHECK(parts.size() == 2);
    REQUIRE(parts.connecting_points.size() == 1);
    CHECK(parts.connecting_points[0].link_id == "l1");
}

TEST_CASE("empty graph yields an empty partition") {
    const auto parts = partition(build_graph({}, {}));
    CHECK(parts.size() == 0);
    CHECK(parts.slinks.empty());
}

TEST_CASE("intra-subgraph SLINK produces no connecting point") {
    const auto a = make_event("ei1", 0);
    const auto b = make_event("ei2", 8);
    const auto graph = build_graph({a, b}, {tlink("l1", a.node, TlinkRel::Before, b.node),
                                            slink("l2", a.node, SlinkRel::Evidential, b.node)});
    const auto parts = partition(graph);
    CHECK(parts.size() == 1);
    CHECK(parts.connecting_points.empty());
    CHECK(parts.slinks.size() == 1);
}

TEST_CASE("subgraphs partition the node set and match a union-find oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto generated = generate_random_graph(seed, 16, 0.12, 0.08);
        const auto parts = partition(generated.graph);

        CHECK(parts.size() == component_count_oracle(generated.graph));

        std::set<std::string> seen;
        std::size_t total = 0, covered_links = 0;
        for (const auto& sub : parts.subgraphs) {
            for (const auto& id : node_ids(sub)) {
                CHECK(seen.insert(id).second); // pairwise disjoint
            }
            total += sub.n();
            covered_links += sub.links.size();
        }
        CHECK(total == generated.graph.n());

        std::size_t temporal_links = 0;
        for (const auto& link : generated.graph.links) {
            if (link.kind() != LinkKind::Slink) ++temporal_links;
        }
        CHECK(covered_links == temporal_links);

        // Ordered by earliest text offset.
        std::vector<std::size_t> firsts;
        for (const auto& sub : parts.subgraphs) {
            std::size_t best = SIZE_MAX;
            for (const auto& node : sub.nodes) best = std::min(best, node.char_offset);
            firsts.push_back(best);
        }
        CHECK(std::is_sorted(firsts.begin(), firsts.end()));
    }
}

TEST_CASE("partition scales roughly linearly" * doctest::skip(false)) {
    // Coarse guard against accidental quadratic behaviour: doubling the input
    // should not blow past a small constant factor (generous bound for noise).
    auto time_for = [](std::size_t n) {
        const auto generated = generate_random_graph(7, n, 3.0 / static_cast<double>(n), 0.0);
        double best = 1e18;
        for (int run = 0; run < 3; ++run) {
            const auto start = std::chrono::steady_clock::now();
            const auto parts = partition(generated.graph);
            const auto stop = std::chrono::steady_clock::now();
            CHECK(parts.size() >= 1);
            best = std::min(best, std::chrono::duration<double>(stop - start).count());
        }
        return best;
    };
    const double small = time_for(4000);
    const double large = time_for(8000);
    CHECK(large < std::max(8.0 * small, 0.05));
}
