#include "tlex/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tlex/errors.hpp"
#include "tlex/pa_graph.hpp"

namespace tlex {

DocumentResult run_document(TimeMLGraph graph, const std::string& doc_id,
                            const PipelineOptions& options) {
    DocumentResult result;
    result.doc_id = doc_id;
    result.graph = std::move(graph);
    result.parts = partition(result.graph);
    result.consistent = true;

    for (std::size_t id = 0; id < result.parts.size(); ++id) {
        SubgraphOutcome outcome;
        outcome.subgraph_id = id;
        const PAGraph pa = transform(result.parts.subgraphs[id]);
        CheckResult checked = check(pa);
        if (auto* report = std::get_if<InconsistencyReport>(&checked)) {
            outcome.consistent = false;
            outcome.report = std::move(*report);
            result.consistent = false;
            result.stats.cycle_count += outcome.report.cycles.size();
        } else {
            outcome.consistent = true;
            outcome.solved.dag = std::move(std::get<CompoundDAG>(checked));
            outcome.solved.timeline = greedy_kahn(outcome.solved.dag);
            switch (options.indeterminacy) {
            case IndeterminacyMode::Sections:
                outcome.solved.table = detect_sections(outcome.solved.dag, outcome.solved.timeline);
                break;
            case IndeterminacyMode::Full:
                outcome.solved.table =
                    indeterminacy_table(outcome.solved.dag, outcome.solved.timeline);
                break;
            case IndeterminacyMode::None: break;
            }
        }
        result.subgraphs.push_back(std::move(outcome));
    }

    result.stats.doc_id = result.doc_id;
    result.stats.consistent = result.consistent;
    if (!result.consistent) return result;

    std::optional<std::set<NodeId>> anchors;
    if (options.anchor_ids) {
        anchors.emplace();
        for (const std::string& id : *options.anchor_ids) {
            const TemporalEntity* entity = nullptr;
            for (const auto& node : result.graph.nodes) {
                if (node.node.id == id) {
                    entity = &node;
                    break;
                }
            }
            if (!entity) throw AnchorUnknownError(id);
            anchors->insert(entity->node);
        }
    }
    result.mains = identify_main(result.parts, anchors);
    std::vector<SubgraphTimeline> solved;
    for (const auto& outcome : result.subgraphs) solved.push_back(outcome.solved);
    result.timeline = assemble(result.parts, solved, result.mains);
    result.breaks = breaking_pairs(result.parts, result.mains);

    result.stats.main_timeline_length = result.timeline->trunk_length;
    result.stats.main_timeline_count = result.mains.size();
    result.stats.branch_count = result.parts.size() - result.mains.size();
    for (const auto& entry : result.timeline->timelines) {
        result.stats.section_count += entry.solved.table.sections.size();
        result.stats.indeterminate_pair_count += entry.solved.table.section_pair_count;
    }
    return result;
}

namespace {

Json timeline_points_json(const SubgraphTimeline& solved, std::uint32_t offset,
                          const char* pos_key) {
    // Points ordered by (position, point), positions shifted by the
    // concatenation offset.
    std::vector<std::pair<std::uint32_t, TimePoint>> rows;
    for (const auto& [point, compound] : solved.dag.point_to_compound) {
        rows.emplace_back(offset + solved.timeline.position_of(compound), point);
    }
    std::sort(rows.begin(), rows.end());
    Json out = Json::array();
    for (const auto& [pos, point] : rows) {
        Json row = point_to_json(point);
        row[pos_key] = pos;
        out.push_back(std::move(row));
    }
    return out;
}

Json sections_json(const IndeterminacyTable& table, std::uint32_t offset) {
    Json out = Json::array();
    for (const auto& [from, to] : table.sections) {
        out.push_back(Json::array({offset + from, offset + to}));
    }
    return out;
}

// Unordered compound pairs rendered through representative points (the
// smallest member of each compound). Emitted only in full mode.
Json unordered_pairs_json(const SubgraphTimeline& solved) {
    Json out = Json::array();
    for (const auto& [i, j] : solved.table.unordered_pairs) {
        out.push_back(Json{{"a", point_to_json(solved.dag.compound(i).members.front())},
                           {"b", point_to_json(solved.dag.compound(j).members.front())}});
    }
    return out;
}

} // namespace

Json mlic_to_json(const DocumentResult& result) {
    Json mlic = Json::array();
    for (const auto& outcome : result.subgraphs) {
        if (outcome.consistent) continue;
        for (const auto& cycle : outcome.report.cycles) {
            Json points = Json::array();
            for (const auto& point : cycle.points) points.push_back(point_to_json(point));
            Json links = Json::array();
            for (const auto& lid : cycle.link_ids) {
                Json link{{"lid", lid}};
                if (const TimeMLLink* found = result.graph.find_link(lid)) {
                    link["rel"] = rel_name(found->rel);
                    link["type"] = std::string(kind_name(found->kind()));
                }
                links.push_back(std::move(link));
            }
            mlic.push_back(Json{{"subgraph", outcome.subgraph_id},
                                {"type", std::string(cycle_type_name(cycle.type))},
                                {"points", std::move(points)},
                                {"links", std::move(links)}});
        }
    }
    return mlic;
}

Json document_to_json(const DocumentResult& result) {
    Json doc;
    doc["doc_id"] = result.doc_id;
    doc["consistent"] = result.consistent;
    doc["mlic"] = mlic_to_json(result);

    if (!result.consistent || !result.timeline) {
        doc["trunk"] = nullptr;
        doc["branches"] = Json::array();
        doc["indeterminate_sections"] = Json::array();
        doc["stats"] = Json{{"cycles", result.stats.cycle_count}};
        return doc;
    }
    const TrunkBranchTimeline& tbt = *result.timeline;

    Json trunk;
    trunk["length"] = tbt.trunk_length;
    Json trunk_points = Json::array();
    Json global_sections = Json::array();
    Json trunk_pairs = Json::array();
    for (const auto& entry : tbt.timelines) {
        if (!entry.is_main) continue;
        const std::uint32_t offset = tbt.global_offsets.at(entry.subgraph_id);
        for (auto& row : timeline_points_json(entry.solved, offset, "global_pos")) {
            trunk_points.push_back(std::move(row));
        }
        for (auto& section : sections_json(entry.solved.table, offset)) {
            global_sections.push_back(std::move(section));
        }
        if (entry.solved.table.all_pairs) {
            for (auto& pair : unordered_pairs_json(entry.solved)) {
                pair["subgraph"] = entry.subgraph_id;
                trunk_pairs.push_back(std::move(pair));
            }
        }
    }
    std::sort(trunk_points.begin(), trunk_points.end(), [](const Json& a, const Json& b) {
        // Start points sort before end points, matching TimePoint order.
        return std::tuple(a.at("global_pos").get<std::uint32_t>(), a.at("node").get<std::string>(),
                          a.at("end").get<std::string>() != "start") <
               std::tuple(b.at("global_pos").get<std::uint32_t>(), b.at("node").get<std::string>(),
                          b.at("end").get<std::string>() != "start");
    });
    trunk["points"] = std::move(trunk_points);
    if (!trunk_pairs.empty()) trunk["unordered_pairs"] = std::move(trunk_pairs);
    doc["trunk"] = std::move(trunk);

    // Branch anchors: all connecting links are listed; the first connecting
    // link in text order of its source entity is the rendered anchor.
    Json branches = Json::array();
    for (const auto& entry : tbt.timelines) {
        if (entry.is_main) continue;
        Json branch;
        branch["subgraph"] = entry.subgraph_id;

        const BranchLink* anchor = nullptr;
        Json anchor_links = Json::array();
        for (const auto& link : tbt.branch_links) {
            if (link.target_subgraph != entry.subgraph_id) continue;
            anchor_links.push_back(Json{{"lid", link.link_id},
                                        {"rel", std::string(rel_name(link.rel))},
                                        {"source", link.source.id},
                                        {"source_subgraph", link.source_subgraph},
                                        {"source_pos", link.source_pos},
                                        {"target", link.target.id},
                                        {"target_pos", link.target_pos}});
            if (!anchor) {
                anchor = &link;
            } else {
                const auto* a = result.graph.find(anchor->source);
                const auto* b = result.graph.find(link.source);
                if (a && b && std::tuple(b->char_offset, link.link_id) <
                                  std::tuple(a->char_offset, anchor->link_id)) {
                    anchor = &link;
                }
            }
        }
        if (anchor) {
            branch["anchor"] = Json{{"node", anchor->source.id},
                                    {"subgraph", anchor->source_subgraph},
                                    {"pos", anchor->source_pos}};
            branch["slink"] = anchor->link_id;
            branch["rel"] = std::string(rel_name(anchor->rel));
        } else {
            branch["anchor"] = nullptr;
        }
        branch["links"] = std::move(anchor_links);
        branch["timeline"] = Json{{"length", entry.solved.timeline.length},
                                  {"points", timeline_points_json(entry.solved, 0, "pos")}};
        branch["sections"] = sections_json(entry.solved.table, 0);
        if (entry.solved.table.all_pairs) {
            branch["unordered_pairs"] = unordered_pairs_json(entry.solved);
        }
        branches.push_back(std::move(branch));
    }
    doc["branches"] = std::move(branches);
    doc["indeterminate_sections"] = std::move(global_sections);

    Json stats;
    stats["main_timeline_length"] = result.stats.main_timeline_length;
    stats["main_timeline_count"] = result.stats.main_timeline_count;
    stats["branch_count"] = result.stats.branch_count;
    stats["section_count"] = result.stats.section_count;
    stats["indeterminate_pair_count"] = result.stats.indeterminate_pair_count;
    Json breaks = Json::array();
    for (const auto& pair : result.breaks) {
        std::ostringstream words;
        words.precision(1);
        words << std::fixed << pair.approx_word_distance();
        breaks.push_back(Json{{"subgraph_a", pair.subgraph_a},
                              {"subgraph_b", pair.subgraph_b},
                              {"node_a", pair.node_a.id},
                              {"node_b", pair.node_b.id},
                              {"char_distance", pair.char_distance},
                              {"approx_word_distance", words.str()}});
    }
    stats["breaking_pairs"] = std::move(breaks);
    doc["stats"] = std::move(stats);
    return doc;
}

namespace {

void render_timeline_rows(std::ostream& out, const SubgraphTimeline& solved, std::uint32_t offset) {
    std::map<std::uint32_t, std::vector<TimePoint>> by_position;
    for (const auto& [point, compound] : solved.dag.point_to_compound) {
        by_position[offset + solved.timeline.position_of(compound)].push_back(point);
    }
    auto in_section = [&](std::uint32_t pos) {
        for (const auto& [from, to] : solved.table.sections) {
            if (pos >= offset + from && pos <= offset + to) return true;
        }
        return false;
    };
    for (auto& [pos, points] : by_position) {
        std::sort(points.begin(), points.end());
        out << "  [" << pos << "]" << (in_section(pos) ? " *" : "  ");
        for (const auto& point : points) out << " " << point.render();
        out << "\n";
    }
}

} // namespace

std::string document_to_text(const DocumentResult& result) {
    std::ostringstream out;
    out << "=== " << result.doc_id << ": "
        << (result.consistent ? "CONSISTENT" : "INCONSISTENT") << " ===\n";

    if (!result.consistent) {
        out << "maximal list of inconsistent cycles (relative to the detection pass):\n";
        for (const auto& outcome : result.subgraphs) {
            if (outcome.consistent) continue;
            for (const auto& cycle : outcome.report.cycles) {
                out << "cycle " << cycle_type_name(cycle.type) << " in subgraph "
                    << outcome.subgraph_id << ":";
                for (const auto& point : cycle.points) out << " " << point.render();
                out << "\n  links:";
                for (const auto& lid : cycle.link_ids) {
                    out << " " << lid;
                    if (const TimeMLLink* link = result.graph.find_link(lid)) {
                        out << "(" << rel_name(link->rel) << ")";
                    }
                }
                out << "\n";
            }
        }
        return std::move(out).str();
    }

    const TrunkBranchTimeline& tbt = *result.timeline;
    out << "trunk length " << tbt.trunk_length << ", " << result.mains.size()
        << " main timeline(s), " << (result.parts.size() - result.mains.size())
        << " branch(es); * marks indeterminate sections\n";
    for (const auto& entry : tbt.timelines) {
        if (!entry.is_main) continue;
        render_timeline_rows(out, entry.solved, tbt.global_offsets.at(entry.subgraph_id));
    }
    for (const auto& entry : tbt.timelines) {
        if (entry.is_main) continue;
        out << "branch subgraph " << entry.subgraph_id;
        for (const auto& link : tbt.branch_links) {
            if (link.target_subgraph == entry.subgraph_id) {
                out << " <- " << link.source.id << "@" << link.source_pos << " ("
                    << rel_name(link.rel) << " " << link.link_id << ")";
            }
        }
        out << "\n";
        render_timeline_rows(out, entry.solved, 0);
    }
    for (const auto& pair : result.breaks) {
        out << "breaking pair: " << pair.node_a.id << " / " << pair.node_b.id << " ("
            << pair.char_distance << " chars, approx. word distance ";
        std::ostringstream words;
        words.precision(1);
        words << std::fixed << pair.approx_word_distance();
        out << words.str() << ")\n";
    }
    return std::move(out).str();
}

} // namespace tlex
