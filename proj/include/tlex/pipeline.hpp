#ifndef TLEX_PIPELINE_HPP
#define TLEX_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tlex/json_io.hpp"
#include "tlex/partition.hpp"
#include "tlex/trunk_branch.hpp"

namespace tlex {

enum class IndeterminacyMode { Sections, Full, None };

struct PipelineOptions {
    GraphOptions graph;
    IndeterminacyMode indeterminacy = IndeterminacyMode::Sections;
    // Anchor node ids known to lie on main timelines; resolved against each
    // document's graph. Unset means the no-incoming-SLINK approximation.
    std::optional<std::set<std::string>> anchor_ids;
};

// Outcome of checking one subgraph: either a solved timeline or its MLIC.
struct SubgraphOutcome {
    std::size_t subgraph_id = 0;
    bool consistent = false;
    InconsistencyReport report;  // empty when consistent
    SubgraphTimeline solved;     // meaningful when consistent
};

struct DocumentResult {
    std::string doc_id;
    TimeMLGraph graph;
    Partition parts;
    std::vector<SubgraphOutcome> subgraphs;
    bool consistent = false;
    std::set<std::size_t> mains;
    std::optional<TrunkBranchTimeline> timeline; // present iff consistent
    std::vector<BreakingPair> breaks;
    DocStats stats;
};

// Runs partition, transform, consistency check, timeline generation and
// indeterminacy detection on a validated graph. Inconsistent subgraphs keep
// the whole document on the MLIC path; the trunk-and-branch timeline is
// produced only when every subgraph is consistent.
DocumentResult run_document(TimeMLGraph graph, const std::string& doc_id,
                            const PipelineOptions& options = {});

// Document-level JSON: {doc_id, consistent, mlic, trunk, branches,
// indeterminate_sections, stats}.
Json document_to_json(const DocumentResult& result);

// The MLIC alone: cycle type, points, offending links with their relTypes.
Json mlic_to_json(const DocumentResult& result);

// Human-readable rendering: the trunk left to right with branch annotations,
// indeterminate positions starred.
std::string document_to_text(const DocumentResult& result);

} // namespace tlex

#endif
