#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "helpers.hpp"
#include "tlex/cli.hpp"
#include "tlex/oracle.hpp"
#include "tlex/parser.hpp"
#include "tlex/pipeline.hpp"

using namespace tlex;
using namespace tlex::test;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("tlex-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

cli::RunConfig base_config(std::vector<std::string> inputs) {
    cli::RunConfig config;
    config.inputs = std::move(inputs);
    config.jobs = 2;
    return config;
}

} // namespace

TEST_CASE("run_document on the running example") {
    const auto result =
        run_document(parse_file(fixture_path("cafe_story.tml")), "cafe-story", {});
    CHECK(result.consistent);
    CHECK(result.mains == std::set<std::size_t>{0});
    REQUIRE(result.timeline.has_value());
    CHECK(result.timeline->trunk_length == 19);
    CHECK(result.stats.branch_count == 2);
    CHECK(result.stats.main_timeline_count == 1);

    // Trunk sections: [1,5] covering events 1 and 20, then [12,15], [18,19].
    const auto& main_entry = result.timeline->timelines[0];
    REQUIRE(main_entry.solved.table.sections.size() == 3);
    CHECK(main_entry.solved.table.sections[0] == std::pair<std::uint32_t, std::uint32_t>{1, 5});
    CHECK(main_entry.solved.table.sections[1] == std::pair<std::uint32_t, std::uint32_t>{12, 15});
    CHECK(main_entry.solved.table.sections[2] == std::pair<std::uint32_t, std::uint32_t>{18, 19});

    const auto p1 = result.timeline->position_of(0, start_of(event_id("ei1")));
    const auto p20 = result.timeline->position_of(0, start_of(event_id("ei20")));
    CHECK(p1 == 2);
    CHECK(p20 == 2);
    CHECK(p1 >= 1);
    CHECK(p1 <= 5); // inside the first section
}

TEST_CASE("empty document runs through the pipeline") {
    const auto result = run_document(build_graph({}, {}), "empty", {});
    CHECK(result.consistent);
    CHECK(result.parts.size() == 0);
    CHECK(result.timeline->trunk_length == 0);
    const auto json = document_to_json(result);
    CHECK(json["trunk"]["length"] == 0);
    CHECK(json["branches"].empty());
}

TEST_CASE("empty-link document: every node its own main subgraph, text order") {
    const auto a = make_event("ei1", 0), b = make_event("ei2", 10);
    const auto result = run_document(build_graph({a, b}, {}), "plain", {});
    CHECK(result.consistent);
    CHECK(result.parts.size() == 2);
    CHECK(result.mains.size() == 2);
    CHECK(result.timeline->trunk_length == 4);
    CHECK(result.timeline->position_of(0, start_of(a.node)) == 1);
    CHECK(result.timeline->position_of(1, start_of(b.node)) == 3);
}

TEST_CASE("document JSON is schema-stable and deterministic") {
    const auto graph = parse_file(fixture_path("cafe_story.tml"));
    const auto r1 = run_document(graph, "cafe-story", {});
    const auto r2 = run_document(graph, "cafe-story", {});
    const auto j1 = document_to_json(r1);
    const auto j2 = document_to_json(r2);
    CHECK(j1.dump(2) == j2.dump(2));

    for (const char* key :
         {"doc_id", "consistent", "mlic", "trunk", "branches", "indeterminate_sections", "stats"}) {
        CHECK(j1.contains(key));
    }
    CHECK(j1["consistent"] == true);
    CHECK(j1["trunk"]["length"] == 19);
    CHECK(j1["branches"].size() == 2);
    CHECK(j1["stats"]["breaking_pairs"].empty());

    // Branch anchors per the figure: ei4 and ei13.
    CHECK(j1["branches"][0]["anchor"]["node"] == "ei4");
    CHECK(j1["branches"][1]["anchor"]["node"] == "ei13");
}

TEST_CASE("inconsistent document yields MLIC in JSON") {
    const auto result =
        run_document(parse_file(fixture_path("inconsistent_pair.tml")), "bad", {});
    CHECK(!result.consistent);
    CHECK(!result.timeline.has_value());
    const auto json = document_to_json(result);
    CHECK(json["consistent"] == false);
    REQUIRE(json["mlic"].size() == 1);
    CHECK(json["mlic"][0]["type"] == "type-iii");
    CHECK(json["mlic"][0]["links"].size() == 2);
    CHECK(json["mlic"][0]["links"][0]["rel"] == "before");
}

TEST_CASE("cmd_check exit codes and report text") {
    std::ostringstream out, err;
    auto config = base_config({fixture_path("cafe_story.tml")});
    config.format = cli::OutputFormat::Text;
    CHECK(cli::cmd_check(config, out, err) == cli::kExitConsistent);
    CHECK(out.str().find("CONSISTENT") != std::string::npos);

    std::ostringstream out2, err2;
    auto bad = base_config({fixture_path("inconsistent_pair.tml")});
    bad.format = cli::OutputFormat::Text;
    CHECK(cli::cmd_check(bad, out2, err2) == cli::kExitInconsistent);
    CHECK(out2.str().find("INCONSISTENT") != std::string::npos);
    CHECK(out2.str().find("type-iii") != std::string::npos);
    CHECK(out2.str().find("l1") != std::string::npos);
    CHECK(out2.str().find("l2") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cli::cmd_check(base_config({"/nonexistent/file.tml"}), out3, err3) ==
          cli::kExitFailure);

    // JSON mode carries the offending relTypes alongside the link ids.
    std::ostringstream out4, err4;
    CHECK(cli::cmd_check(base_config({fixture_path("inconsistent_pair.tml")}), out4, err4) ==
          cli::kExitInconsistent);
    const auto docs = Json::parse(out4.str());
    REQUIRE(docs.size() == 1);
    CHECK(docs[0]["mlic"][0]["links"][0]["rel"] == "before");
    CHECK(docs[0]["mlic"][0]["links"][0]["type"] == "TLINK");
}

TEST_CASE("cmd_extract writes per-document JSON files") {
    TempDir dir;
    auto config = base_config({fixture_path("cafe_story.tml"),
                               fixture_path("five_intervals.tml")});
    config.out_dir = dir.path.string();
    std::ostringstream out, err;
    CHECK(cli::cmd_extract(config, out, err) == cli::kExitConsistent);
    CHECK(fs::exists(dir.path / "cafe_story.json"));
    CHECK(fs::exists(dir.path / "five_intervals.json"));

    std::ifstream in(dir.path / "five_intervals.json");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto doc = Json::parse(buffer.str());
    CHECK(doc["trunk"]["length"] == 8);
    CHECK(doc["indeterminate_sections"].size() == 1);
}

TEST_CASE("extract text mode renders trunk and branches") {
    std::ostringstream out, err;
    auto config = base_config({fixture_path("cafe_story.tml")});
    config.format = cli::OutputFormat::Text;
    CHECK(cli::cmd_extract(config, out, err) == cli::kExitConsistent);
    const std::string text = out.str();
    CHECK(text.find("trunk length 19") != std::string::npos);
    CHECK(text.find("branch subgraph 1") != std::string::npos);
    CHECK(text.find("ei4@6") != std::string::npos);
    CHECK(text.find("*") != std::string::npos);
}

TEST_CASE("extract renders the MLIC for inconsistent documents") {
    std::ostringstream out, err;
    auto config = base_config({fixture_path("inconsistent_pair.tml")});
    config.format = cli::OutputFormat::Text;
    CHECK(cli::cmd_extract(config, out, err) == cli::kExitInconsistent);
    CHECK(out.str().find("INCONSISTENT") != std::string::npos);
    CHECK(out.str().find("type-iii") != std::string::npos);
    CHECK(out.str().find("l1(before)") != std::string::npos);
}

TEST_CASE("tlinks-only mode can mask an aspectual inconsistency") {
    // before(A,B) and initiates(A,B) conflict: initiates pins A⁻ = B⁻ while
    // before demands A entirely precede B.
    TempDir dir;
    const auto a = make_event("ei1", 0), b = make_event("ei2", 8);
    const auto graph = build_graph({a, b}, {tlink("l1", a.node, TlinkRel::Before, b.node),
                                            alink("l2", a.node, AlinkRel::Initiates, b.node)});
    {
        std::ofstream file(dir.path / "conflict.tml", std::ios::binary);
        file << cli::to_timeml_xml(graph, "conflict");
    }

    std::ostringstream out1, err1;
    auto with = base_config({(dir.path / "conflict.tml").string()});
    CHECK(cli::cmd_check(with, out1, err1) == cli::kExitInconsistent);

    std::ostringstream out2, err2;
    auto without = base_config({(dir.path / "conflict.tml").string()});
    without.include_alinks = false;
    CHECK(cli::cmd_check(without, out2, err2) == cli::kExitConsistent);
}

TEST_CASE("cmd_gen emits parseable fixtures that round-trip the graph") {
    TempDir dir;
    auto config = base_config({});
    config.out_dir = dir.path.string();
    config.seed = 11;
    config.gen_count = 3;
    config.gen_intervals = 9;
    config.gen_density = 0.3;
    config.gen_slink_prob = 0.1;
    std::ostringstream out, err;
    REQUIRE(cli::cmd_gen(config, out, err) == cli::kExitConsistent);

    const auto files = cli::collect_inputs({dir.path.string()});
    REQUIRE(files.size() == 3);
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto parsed = parse_file(files[i]);
        const auto expected = generate_random_graph(11 + i, 9, 0.3, 0.1);
        CHECK(parsed == expected.graph);
    }
}

TEST_CASE("anchors file steers main-timeline identification") {
    TempDir dir;
    const auto anchors_path = dir.path / "anchors.txt";
    {
        std::ofstream file(anchors_path);
        file << "# branch event\nei5\n";
    }
    auto config = base_config({fixture_path("cafe_story.tml")});
    config.anchors_file = anchors_path.string();
    std::ostringstream out, err;
    CHECK(cli::cmd_extract(config, out, err) == cli::kExitConsistent);
    const auto doc = Json::parse(out.str());
    CHECK(doc["stats"]["main_timeline_count"] == 1);
    CHECK(doc["trunk"]["length"] == 4); // the {ei5, ei6} timeline is now the trunk
}

TEST_CASE("cmd_stats renders known aggregates") {
    TempDir dir;
    auto gen = base_config({});
    gen.out_dir = dir.path.string();
    gen.seed = 5;
    gen.gen_count = 6;
    gen.gen_intervals = 8;
    gen.gen_density = 0.35;
    gen.gen_slink_prob = 0.1;
    std::ostringstream gen_out, gen_err;
    REQUIRE(cli::cmd_gen(gen, gen_out, gen_err) == cli::kExitConsistent);

    auto config = base_config({dir.path.string()});
    std::ostringstream out, err;
    CHECK(cli::cmd_stats(config, out, err) == cli::kExitConsistent);
    const auto doc = Json::parse(out.str());
    CHECK(doc["total"]["files"] == 6);
    CHECK(doc["total"]["inconsistent_files"] == 0);

    std::ostringstream text_out, text_err;
    auto text_config = config;
    text_config.format = cli::OutputFormat::Text;
    CHECK(cli::cmd_stats(text_config, text_out, text_err) == cli::kExitConsistent);
    CHECK(text_out.str().find("files") != std::string::npos);
}

TEST_CASE("TLEX_JOBS steers the default worker count") {
    ::setenv("TLEX_JOBS", "3", 1);
    auto config = base_config({fixture_path("five_intervals.tml")});
    config.jobs = 0; // fall back to the environment
    std::ostringstream out, err;
    CHECK(cli::cmd_check(config, out, err) == cli::kExitConsistent);
    ::unsetenv("TLEX_JOBS");
}

TEST_CASE("indeterminacy mode full adds the pairwise table") {
    PipelineOptions full;
    full.indeterminacy = IndeterminacyMode::Full;
    const auto result =
        run_document(parse_file(fixture_path("five_intervals.tml")), "five", full);
    REQUIRE(result.consistent);
    const auto& table = result.timeline->timelines[0].solved.table;
    CHECK(table.all_pairs);
    // I2 and I3 are fully mutually unordered: 4 point pairs.
    CHECK(table.unordered_pairs.size() == 4);

    const auto json = document_to_json(result);
    REQUIRE(json["trunk"].contains("unordered_pairs"));
    CHECK(json["trunk"]["unordered_pairs"].size() == 4);
}
