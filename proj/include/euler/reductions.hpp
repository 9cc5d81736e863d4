#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "euler/graph.hpp"
#include "euler/io.hpp"

namespace euler {

/// 3-CNF formula over variables 1..num_vars. A literal is a signed variable
/// id; clauses hold exactly three literals each.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

/// Undirected graph whose vertex set is split into parts with no edge inside
/// any part. Parts are 1-based by position in the list.
struct PartitionedGraph {
    Graph base;
    std::vector<std::vector<int>> parts;

    int part_count() const { return static_cast<int>(parts.size()); }
};

/// Generated target instance: the graph to solve, the vertex-count parameter
/// to solve it at, and a label for every target vertex naming the source
/// element it came from.
struct ReductionOutput {
    Graph target;
    int parameter = 0;
    std::map<int, std::string> provenance;
};

/// Decides whether a target graph has an induced Euler subgraph with at least
/// the given number of vertices. May throw BudgetError on oversized input.
using TargetSolver = std::function<bool(const Graph&, int)>;

/// DIMACS cnf reader: `c` comments, one `p cnf <vars> <clauses>` line, then
/// one clause per line as three nonzero literals terminated by 0.
/// Throws ParseError with the offending 1-based line (0 = end of input).
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf(const std::string& text);

/// Enforces the shape reduce_3sat_4occ needs: literals nonzero and in range,
/// and every variable occurring exactly twice positively and twice negated.
/// Throws std::invalid_argument naming the first violation.
void validate_cnf(const CnfFormula& f);

/// Bundles a parsed graph with its `t` assignment lines into a
/// PartitionedGraph, checking that the assignments cover every vertex exactly
/// once. Throws std::invalid_argument on an invalid partition.
PartitionedGraph make_partitioned(Graph base, const std::vector<PartAssignment>& assignments);

/// Full partition check: undirected base, nonempty parts covering every
/// vertex exactly once, no edge inside a part. Throws std::invalid_argument.
void validate_partitioned(const PartitionedGraph& p);

/// Subdivides every edge of a cubic graph. The target keeps the original
/// vertex ids and appends one vertex per edge, in edge-id order; it has
/// n + m vertices and 2m edges, and the question "induced Euler subgraph with
/// at least 2n vertices?" on it matches "is the source Hamiltonian?".
/// Throws std::invalid_argument unless every vertex has degree exactly 3.
ReductionOutput reduce_hamiltonian_cubic(const Graph& g);

/// Builds the directed target for a partitioned graph with k parts: one copy
/// of each base vertex, an arc per cross-part NON-edge oriented from the
/// lower part to the higher, an entry and an exit vertex per part wired to
/// all its members, and a ring closing the parts into one loop. The target
/// has |V| + 2k vertices and the question "induced Euler subgraph with at
/// least 3k vertices?" matches "does the source have a clique with one
/// vertex per part?".
ReductionOutput reduce_multicolored_clique(const PartitionedGraph& p);

/// Builds the directed target for a formula in which every variable occurs
/// exactly twice positively and twice negated: a two-branch gadget per
/// variable, a three-branch gadget per clause, chained into one ring, plus
/// two arcs tying each literal occurrence to its clause branch. The target
/// has 6n + 8m vertices and 7n + 16m arcs, and the question "induced Euler
/// subgraph with at least k vertices?" matches satisfiability for any
/// 4 <= k <= 4(n + m). Throws std::invalid_argument on an occurrence-count
/// violation or k out of range.
ReductionOutput reduce_3sat_4occ(const CnfFormula& f, int k);

/// Vertex set of the target cycle induced by a satisfying assignment: the
/// falsified branch of every variable gadget plus, per clause, the branch of
/// its first satisfied literal. The set has exactly 4(n + m) vertices.
/// Throws std::invalid_argument when the assignment does not satisfy f.
std::vector<int> sat_witness_vertices(const CnfFormula& f, const std::vector<bool>& assignment);

/// Soundness check: with no witness, runs the solver on (target, parameter)
/// and compares the verdict with the source answer (solver budget errors
/// propagate). With a witness the target must be a claimed yes; the witness
/// is verified as an induced Euler subgraph of the required size instead of
/// solving, so oversized targets stay checkable one-sidedly.
bool verify_reduction(bool src_answer, const ReductionOutput& out, const TargetSolver& solver,
                      const std::optional<std::vector<int>>& witness = std::nullopt);

} // namespace euler
