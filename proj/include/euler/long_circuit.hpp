#pragma once

#include <optional>

#include "euler/color_coding.hpp"
#include "euler/graph.hpp"

namespace euler {

/// How "is there a simple cycle with >= k edges" gets answered.
///
/// brute_exact enumerates simple cycles and is complete, but refuses graphs
/// past its edge budget. dfs_fundamental (undirected only) inspects one DFS
/// tree's fundamental cycles per component: any cycle it returns is real,
/// while a miss proves nothing on its own.
struct LongCycleOracle {
    enum class Strategy { brute_exact, dfs_fundamental };

    Strategy strategy = Strategy::brute_exact;
    int edge_budget = 25;  // brute_exact only
};

/// A simple cycle with at least min_len edges, or nothing. Deterministic:
/// lowest start vertex first, edges scanned in id order.
/// Throws BudgetError when brute_exact faces more edges than its budget.
std::optional<Circuit> has_cycle_at_least(const Graph& g, int min_len,
                                          const LongCycleOracle& oracle = {});

/// Is there a circuit with at least min_len edges?
///
/// Step 1 checks the fundamental cycles of one DFS tree per component and
/// answers yes when one is long enough. Otherwise a circuit of length
/// [min_len, 2*min_len - 2] exists iff any long circuit does, and step 2
/// searches that window with solve_range_circuit.
CircuitAnswer solve_long_circuit_undirected(const Graph& g, int min_len,
                                            const SolverConfig& config = {});

/// Directed variant: the DFS step is replaced by the long-cycle oracle.
/// Oracle budget errors propagate.
CircuitAnswer solve_long_circuit_directed(const Graph& g, int min_len,
                                          const LongCycleOracle& oracle = {},
                                          const SolverConfig& config = {});

/// Dispatches on g.orientation() with the default oracle.
CircuitAnswer solve_long_circuit(const Graph& g, int min_len, const SolverConfig& config = {});

} // namespace euler
