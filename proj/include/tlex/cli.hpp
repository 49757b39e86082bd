#ifndef TLEX_CLI_HPP
#define TLEX_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlex/pipeline.hpp"

namespace tlex::cli {

enum class OutputFormat { Json, Text };

struct RunConfig {
    std::vector<std::string> inputs; // .tml files or directories of them
    OutputFormat format = OutputFormat::Json;
    bool drop_self_loops = true;
    bool include_alinks = true;
    IndeterminacyMode indeterminacy = IndeterminacyMode::Sections;
    std::optional<std::string> anchors_file;
    std::optional<std::string> out_dir;
    std::size_t jobs = 0; // 0: TLEX_JOBS env var, then hardware concurrency

    // gen-only knobs
    std::uint64_t seed = 1;
    std::size_t gen_count = 1;
    std::size_t gen_intervals = 10;
    double gen_density = 0.2;
    double gen_slink_prob = 0.05;
    bool gen_inject_cycle = false;
};

// Exit status: 0 all consistent, 1 some document inconsistent, 2 I/O or
// parse failure.
inline constexpr int kExitConsistent = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitFailure = 2;

// Per-document consistency verdicts plus formatted MLIC reports.
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full trunk-and-branch timelines (JSON or text); inconsistent documents
// yield their MLIC instead. With out_dir set, one file per document.
int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err);

// Corpus table: one row per input path plus a total row.
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes synthetic .tml fixture documents into out_dir (or the single file
// named by out_dir when gen_count is 1 and the path ends in .tml).
int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);

// Serializes a generated graph as a minimal TimeML document whose parse
// reproduces the graph exactly (ids, offsets, relations).
std::string to_timeml_xml(const TimeMLGraph& graph, const std::string& doc_id);

// Expands files/directories into a sorted list of .tml paths.
std::vector<std::string> collect_inputs(const std::vector<std::string>& inputs);

int run_main(int argc, char** argv);

} // namespace tlex::cli

#endif
