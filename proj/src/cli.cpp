#include "tlex/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tlex/errors.hpp"
#include "tlex/oracle.hpp"
#include "tlex/parser.hpp"

namespace tlex::cli {

namespace fs = std::filesystem;

std::vector<std::string> collect_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const auto& input : inputs) {
        const fs::path path(input);
        if (fs::is_directory(path)) {
            for (const auto& entry : fs::recursive_directory_iterator(path)) {
                if (entry.is_regular_file() && entry.path().extension() == ".tml") {
                    files.push_back(entry.path().string());
                }
            }
        } else {
            files.push_back(path.string());
        }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    return files;
}

namespace {

std::size_t effective_jobs(const RunConfig& config) {
    if (config.jobs > 0) return config.jobs;
    if (const char* env = std::getenv("TLEX_JOBS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<std::size_t>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct DocTask {
    std::string path;
    bool ok = false;
    std::string error;
    DocumentResult result;
};

PipelineOptions pipeline_options(const RunConfig& config, std::ostream& err) {
    PipelineOptions options;
    options.graph.drop_self_loops = config.drop_self_loops;
    options.graph.include_alinks = config.include_alinks;
    options.indeterminacy = config.indeterminacy;
    if (config.anchors_file) {
        std::ifstream in(*config.anchors_file);
        if (!in) {
            err << "cannot open anchors file " << *config.anchors_file << "\n";
            throw Error("cannot open anchors file " + *config.anchors_file);
        }
        std::set<std::string> ids;
        std::string line;
        while (std::getline(in, line)) {
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line = line.substr(0, hash);
            }
            std::istringstream fields(line);
            std::string id;
            while (fields >> id) ids.insert(id);
        }
        options.anchor_ids = std::move(ids);
    }
    return options;
}

// Parses and runs every input document with a small worker pool; results come
// back in input order regardless of completion order.
std::vector<DocTask> run_all(const RunConfig& config, const PipelineOptions& options) {
    std::vector<DocTask> tasks;
    for (const auto& path : collect_inputs(config.inputs)) {
        DocTask task;
        task.path = path;
        tasks.push_back(std::move(task));
    }

    const std::size_t jobs = std::min(effective_jobs(config), std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            DocTask& task = tasks[i];
            try {
                TimeMLGraph graph = parse_file(task.path, options.graph);
                const std::string doc_id = fs::path(task.path).stem().string();
                task.result = run_document(std::move(graph), doc_id, options);
                task.ok = true;
            } catch (const std::exception& e) {
                task.error = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();
    return tasks;
}

int exit_code(const std::vector<DocTask>& tasks) {
    bool any_inconsistent = false;
    for (const auto& task : tasks) {
        if (!task.ok) return kExitFailure;
        if (!task.result.consistent) any_inconsistent = true;
    }
    return any_inconsistent ? kExitInconsistent : kExitConsistent;
}

void render_mlic_text(const DocTask& task, std::ostream& out) {
    out << "  maximal list of inconsistent cycles (relative to the detection pass):\n";
    for (const auto& outcome : task.result.subgraphs) {
        if (outcome.consistent) continue;
        for (const auto& cycle : outcome.report.cycles) {
            out << "  [subgraph " << outcome.subgraph_id << "] "
                << cycle_type_name(cycle.type) << " cycle:";
            for (const auto& point : cycle.points) out << " " << point.render();
            out << "\n    links:";
            for (const auto& lid : cycle.link_ids) {
                out << " " << lid;
                if (const TimeMLLink* link = task.result.graph.find_link(lid)) {
                    out << " (" << kind_name(link->kind()) << " " << rel_name(link->rel) << ")";
                }
            }
            out << "\n";
        }
    }
}

} // namespace

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PipelineOptions options = pipeline_options(config, err);
    const auto tasks = run_all(config, options);

    if (config.format == OutputFormat::Json) {
        Json docs = Json::array();
        for (const auto& task : tasks) {
            Json doc;
            doc["path"] = task.path;
            if (!task.ok) {
                doc["error"] = task.error;
            } else {
                doc["doc_id"] = task.result.doc_id;
                doc["consistent"] = task.result.consistent;
                doc["mlic"] = mlic_to_json(task.result);
            }
            docs.push_back(std::move(doc));
        }
        out << docs.dump(2) << "\n";
    } else {
        for (const auto& task : tasks) {
            if (!task.ok) {
                out << task.path << ": ERROR " << task.error << "\n";
                continue;
            }
            std::size_t cycles = 0;
            for (const auto& outcome : task.result.subgraphs) {
                cycles += outcome.report.cycles.size();
            }
            out << task.path << ": "
                << (task.result.consistent
                        ? "CONSISTENT"
                        : "INCONSISTENT (" + std::to_string(cycles) +
                              (cycles == 1 ? " cycle)" : " cycles)"))
                << "\n";
            if (!task.result.consistent) render_mlic_text(task, out);
        }
    }
    for (const auto& task : tasks) {
        if (!task.ok) err << task.path << ": " << task.error << "\n";
    }
    return exit_code(tasks);
}

int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PipelineOptions options = pipeline_options(config, err);
    const auto tasks = run_all(config, options);

    if (config.out_dir) fs::create_directories(*config.out_dir);
    for (const auto& task : tasks) {
        if (!task.ok) {
            err << task.path << ": " << task.error << "\n";
            continue;
        }
        std::string rendered = config.format == OutputFormat::Json
                                   ? document_to_json(task.result).dump(2) + "\n"
                                   : document_to_text(task.result);
        if (config.out_dir) {
            const std::string ext = config.format == OutputFormat::Json ? ".json" : ".txt";
            const fs::path target =
                fs::path(*config.out_dir) / (fs::path(task.path).stem().string() + ext);
            std::ofstream file(target, std::ios::binary);
            file << rendered;
        } else {
            out << rendered;
        }
    }
    return exit_code(tasks);
}

namespace {

std::string fixed1(double value) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << value;
    return s.str();
}

void stats_row(std::ostream& out, const std::string& name, const CorpusStats& stats) {
    out << std::left << std::setw(28) << name << std::right << std::setw(7) << stats.files
        << std::setw(9) << stats.inconsistent_files << std::setw(8) << stats.parse_failures
        << std::setw(8) << stats.main_length.min << "/" << fixed1(stats.main_length.avg) << "/"
        << stats.main_length.max << std::setw(8) << stats.branches.min << "/"
        << fixed1(stats.branches.avg) << "/" << stats.branches.max << std::setw(8)
        << stats.sections.min << "/" << fixed1(stats.sections.avg) << "/" << stats.sections.max
        << std::setw(8) << stats.total_cycles << "\n";
}

Json stats_to_json(const CorpusStats& stats) {
    auto mam = [](const MinAvgMax& v) {
        return Json{{"min", v.min}, {"avg", fixed1(v.avg)}, {"max", v.max}};
    };
    return Json{{"files", stats.files},
                {"inconsistent_files", stats.inconsistent_files},
                {"parse_failures", stats.parse_failures},
                {"main_timeline_length", mam(stats.main_length)},
                {"subordinated_branches", mam(stats.branches)},
                {"indeterminate_sections", mam(stats.sections)},
                {"total_sections", stats.total_sections},
                {"total_cycles", stats.total_cycles}};
}

} // namespace

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const PipelineOptions options = pipeline_options(config, err);

    // Each input argument forms one corpus group.
    std::vector<std::pair<std::string, std::vector<DocStats>>> groups;
    int worst = kExitConsistent;
    for (const auto& input : config.inputs) {
        RunConfig sub = config;
        sub.inputs = {input};
        const auto tasks = run_all(sub, options);
        std::vector<DocStats> rows;
        for (const auto& task : tasks) {
            if (!task.ok) {
                err << task.path << ": " << task.error << "\n";
                DocStats failed;
                failed.doc_id = task.path;
                failed.parse_ok = false;
                rows.push_back(std::move(failed));
            } else {
                rows.push_back(task.result.stats);
            }
        }
        worst = std::max(worst, exit_code(tasks));
        groups.emplace_back(input, std::move(rows));
    }

    std::vector<DocStats> all;
    for (const auto& [name, rows] : groups) all.insert(all.end(), rows.begin(), rows.end());

    if (config.format == OutputFormat::Json) {
        Json doc;
        Json corpora = Json::array();
        for (const auto& [name, rows] : groups) {
            Json group = stats_to_json(corpus_stats(rows));
            group["corpus"] = name;
            corpora.push_back(std::move(group));
        }
        doc["corpora"] = std::move(corpora);
        doc["total"] = stats_to_json(corpus_stats(all));
        out << doc.dump(2) << "\n";
    } else {
        out << std::left << std::setw(28) << "corpus" << std::right << std::setw(7) << "files"
            << std::setw(9) << "incons" << std::setw(8) << "errors" << std::setw(14)
            << "len(m/a/M)" << std::setw(14) << "branch(m/a/M)" << std::setw(14)
            << "sect(m/a/M)" << std::setw(8) << "cycles" << "\n";
        for (const auto& [name, rows] : groups) stats_row(out, name, corpus_stats(rows));
        if (groups.size() > 1) stats_row(out, "TOTAL", corpus_stats(all));
    }
    return worst;
}

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string upper(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return text;
}

// Derives the TimeML eid for a generated instance id of the form "ei<N>".
std::string eid_of(const std::string& eiid) { return "e" + eiid.substr(2); }

} // namespace

std::string to_timeml_xml(const TimeMLGraph& graph, const std::string&) {
    std::vector<const TemporalEntity*> by_offset;
    for (const auto& entity : graph.nodes) by_offset.push_back(&entity);
    std::sort(by_offset.begin(), by_offset.end(),
              [](const TemporalEntity* a, const TemporalEntity* b) {
                  return std::tuple(a->char_offset, a->node.id) <
                         std::tuple(b->char_offset, b->node.id);
              });

    std::ostringstream xml;
    xml << "<?xml version=\"1.0\" encoding=\"UTF-8\"?><TimeML><TEXT>";
    // Pad with spaces so each entity lands exactly on its recorded offset in
    // the tag-stripped text.
    std::size_t cursor = 0;
    for (const TemporalEntity* entity : by_offset) {
        while (cursor < entity->char_offset) {
            xml << ' ';
            ++cursor;
        }
        if (entity->node.kind == NodeKind::EventInstance) {
            xml << "<EVENT eid=\"" << eid_of(entity->node.id) << "\" class=\"OCCURRENCE\">"
                << xml_escape(entity->surface_text) << "</EVENT>";
        } else {
            xml << "<TIMEX3 tid=\"" << entity->node.id << "\" type=\""
                << timex_class_name(entity->timex_class.value_or(TimexClass::Date)) << "\">"
                << xml_escape(entity->surface_text) << "</TIMEX3>";
        }
        cursor += entity->surface_text.size();
    }
    xml << "</TEXT>\n";

    for (const auto& entity : graph.nodes) {
        if (entity.node.kind != NodeKind::EventInstance) continue;
        xml << "<MAKEINSTANCE eiid=\"" << entity.node.id << "\" eventID=\""
            << eid_of(entity.node.id) << "\"/>\n";
    }
    for (const auto& link : graph.links) {
        const std::string tag(kind_name(link.kind()));
        xml << "<" << tag << " lid=\"" << link.link_id << "\" relType=\""
            << upper(rel_name(link.rel)) << "\" ";
        if (link.source.kind == NodeKind::EventInstance) {
            xml << "eventInstanceID=\"" << link.source.id << "\" ";
        } else {
            xml << "timeID=\"" << link.source.id << "\" ";
        }
        if (link.target.kind == NodeKind::EventInstance) {
            xml << (link.kind() == LinkKind::Slink ? "subordinatedEventInstance"
                                                   : "relatedToEventInstance")
                << "=\"" << link.target.id << "\"/>\n";
        } else {
            xml << "relatedToTime=\"" << link.target.id << "\"/>\n";
        }
    }
    xml << "</TimeML>\n";
    return std::move(xml).str();
}

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.out_dir) {
        err << "gen requires --out\n";
        return kExitFailure;
    }
    const fs::path out_path(*config.out_dir);
    const bool single_file = config.gen_count == 1 && out_path.extension() == ".tml";
    if (!single_file) fs::create_directories(out_path);

    for (std::size_t i = 0; i < config.gen_count; ++i) {
        const std::uint64_t seed = config.seed + i;
        const GeneratedGraph generated =
            generate_random_graph(seed, config.gen_intervals, config.gen_density,
                                  config.gen_slink_prob,
                                  config.gen_inject_cycle ? Fault::InjectCycle : Fault::None);
        std::ostringstream name;
        name << "gen-" << std::setw(5) << std::setfill('0') << seed << ".tml";
        const fs::path target = single_file ? out_path : out_path / name.str();
        std::ofstream file(target, std::ios::binary);
        if (!file) {
            err << "cannot write " << target.string() << "\n";
            return kExitFailure;
        }
        file << to_timeml_xml(generated.graph, target.stem().string());
        out << target.string();
        if (!generated.injected_link_ids.empty()) {
            out << " (injected:";
            for (const auto& lid : generated.injected_link_ids) out << " " << lid;
            out << ")";
        }
        out << "\n";
    }
    return kExitConsistent;
}

int run_main(int argc, char** argv) {
    CLI::App app{"tlex-engine: timelines from TimeML annotated documents"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    std::string indeterminacy = "sections";

    auto add_common = [&](CLI::App* cmd, bool needs_inputs) {
        if (needs_inputs) {
            cmd->add_option("inputs", config.inputs, ".tml files or directories")->required();
        }
        cmd->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag_callback("--keep-self-loops",
                               [&config] { config.drop_self_loops = false; },
                               "keep self-loop links instead of dropping them with a warning");
        cmd->add_flag_callback("--tlinks-only", [&config] { config.include_alinks = false; },
                               "ignore ALINKs (temporal links only)");
        cmd->add_option("--indeterminacy", indeterminacy, "sections, full or none")
            ->check(CLI::IsMember({"sections", "full", "none"}));
        cmd->add_option("--anchors", config.anchors_file,
                        "file of node ids on main timelines (one per line, # comments)");
        cmd->add_option("--out", config.out_dir, "output directory");
        cmd->add_option("--jobs", config.jobs, "worker threads (default: TLEX_JOBS or cores)");
    };

    CLI::App* check = app.add_subcommand("check", "consistency verdicts and MLIC reports");
    add_common(check, true);
    CLI::App* extract = app.add_subcommand("extract", "trunk-and-branch timelines");
    add_common(extract, true);
    CLI::App* stats = app.add_subcommand("stats", "corpus statistics table");
    add_common(stats, true);

    CLI::App* gen = app.add_subcommand("gen", "generate synthetic .tml fixtures");
    gen->add_option("--seed", config.seed, "base RNG seed");
    gen->add_option("--count", config.gen_count, "number of documents");
    gen->add_option("--intervals", config.gen_intervals, "events/timexes per document");
    gen->add_option("--density", config.gen_density, "link probability per node pair");
    gen->add_option("--slink-prob", config.gen_slink_prob, "SLINK probability per event pair");
    gen->add_flag("--inject-cycle", config.gen_inject_cycle, "add a contradictory link pair");
    gen->add_option("--out", config.out_dir, "output directory or single .tml path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    config.indeterminacy = indeterminacy == "full"   ? IndeterminacyMode::Full
                           : indeterminacy == "none" ? IndeterminacyMode::None
                                                     : IndeterminacyMode::Sections;

    try {
        if (check->parsed()) return cmd_check(config, std::cout, std::cerr);
        if (extract->parsed()) return cmd_extract(config, std::cout, std::cerr);
        if (stats->parsed()) return cmd_stats(config, std::cout, std::cerr);
        if (gen->parsed()) return cmd_gen(config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace tlex::cli
