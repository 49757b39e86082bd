#ifndef TLEX_ORACLE_HPP
#define TLEX_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tlex/model.hpp"
#include "tlex/pa_graph.hpp"
#include "tlex/timeline.hpp"

namespace tlex {

// Brute-force reference implementations. Test support and fixture
// generation only; never on the main pipeline path.

struct OracleBudget {
    std::size_t max_points = 12;
    std::size_t max_enumeration = 1'000'000;
};

// True iff some assignment of the points to positions 1..|points| satisfies
// every constraint (exhaustive search with pruning). Any satisfying
// real-valued timeline collapses to such an assignment, so the restricted
// range is complete. Throws TooLargeError beyond the budget.
bool brute_consistent(const PAGraph& pa, const OracleBudget& budget = {});

// All distinct normal form timelines of the DAG up to order-isomorphism,
// i.e. every weak ordering of the compounds consistent with the edges,
// rendered gap-free. Throws TooLargeError beyond the budget.
std::vector<NormalFormTimeline> enumerate_timelines(const CompoundDAG& dag,
                                                    const OracleBudget& budget = {});

// Pointwise minimum over all enumerated timelines.
NormalFormTimeline brute_min_timeline(const CompoundDAG& dag, const OracleBudget& budget = {});

enum class Fault { None, InjectCycle };

struct GeneratedGraph {
    TimeMLGraph graph;
    std::vector<std::string> injected_link_ids; // non-empty iff a fault was injected
};

// Deterministic fixture generator. Intervals get random ground-truth
// coordinates and links are emitted only when they agree with that ground
// truth, so a fault-free graph is consistent by construction. InjectCycle
// appends a fresh pair of events related by contradictory links and reports
// their ids.
GeneratedGraph generate_random_graph(std::uint64_t seed, std::size_t n_intervals, double density,
                                     double slink_prob, Fault fault = Fault::None);

// Unconstrained random PA graph over n_points/2 intervals: each ordered point
// pair may receive a < or = constraint, so both consistent and inconsistent
// graphs occur.
PAGraph generate_random_pa_graph(std::uint64_t seed, std::size_t n_points, double density,
                                 double equal_fraction = 0.3);

} // namespace tlex

#endif
