#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euler/color_coding.hpp"
#include "euler/graph.hpp"
#include "euler/numbers.hpp"

namespace euler {

/// Binomial upper bound binom(r+s-2, r-1) on the Ramsey number R(r, s):
/// every graph with that many vertices has a clique of size r or an
/// independent set of size s. r, s >= 1.
BigInt ramsey_bound(int r, int s);

/// Path-count threshold for target size k and path-length bound len:
///   threshold(2)   = ramsey_bound(k, k-1) + 1
///   threshold(len) = (k-1) * (2*(len-1)*(threshold(len/2+1) - 1) + 1) + 1
/// Two vertices joined by this many internally disjoint paths of length at
/// most len force an induced Euler subgraph on k vertices; extract_from_paths
/// realizes the guarantee. k >= 3, len >= 2.
BigInt path_threshold(int k, int len);

/// Degree threshold for target size k: every 2-connected graph containing a
/// vertex of strictly larger degree has an induced Euler subgraph on k
/// vertices. With f = path_threshold(k, 3k-8) the value is
///   1 + (f-1) * ((f-2)^(3(k-3)) - 1) / (f-3),
/// and the division is exact (the quotient is a geometric sum). k >= 4.
BigInt degree_threshold(int k);

/// Treewidth threshold k * (degree_threshold(k) - 1) + 2; graphs of larger
/// treewidth always contain an induced Euler subgraph on k vertices. k >= 4.
BigInt treewidth_threshold(int k);

/// All thresholds for one k; the path table spans len = 2 .. 3k-8.
struct Thresholds {
    int k = 0;
    std::map<int, BigInt> path_table;
    BigInt degree_bound;
    BigInt treewidth_bound;
};

Thresholds compute_thresholds(int k);

/// Exact solver by subset enumeration, scanning sizes from vertex_count
/// downward (only size k when exact_size) with a cheap degree-parity filter
/// ahead of the connectivity test. Returns the first qualifying set, which is
/// maximum-size by the scan order, or nothing. Works for both orientations.
/// Throws BudgetError when vertex_count exceeds min(budget, 25).
std::optional<EulerCertificate> brute_large_euler(const Graph& g, int k, bool exact_size = false,
                                                  int budget = 20);

/// Polynomial cases for digraphs, k in {1, 2, 3}. k <= 2: vertex set of a
/// shortest cycle, nothing iff acyclic. k = 3: first look for x, y, z with
/// arcs both ways between x,y and between y,z where x,z are joined by both
/// opposite arcs or by none; otherwise drop every opposite-arc pair and take
/// the vertex set of a shortest cycle of the remainder, which is always
/// induced Eulerian. Throws std::invalid_argument on undirected input or k
/// outside {1, 2, 3}.
std::optional<EulerCertificate> directed_large_euler_small_k(const Graph& g, int k);

/// Internally vertex-disjoint (s,t)-paths, each stored as its full vertex
/// sequence s .. t with 2 .. max_len edges (the bare edge s-t never belongs).
struct PathBundle {
    int s = 0;
    int t = 0;
    int max_len = 0;
    std::vector<std::vector<int>> paths;

    int count() const { return static_cast<int>(paths.size()); }
};

enum class PathSearchStatus { found, none, budget_exhausted };

struct PathSearchResult {
    PathSearchStatus status = PathSearchStatus::none;
    std::optional<PathBundle> bundle;  // present iff status == found
};

/// Backtracking search for `count` internally vertex-disjoint (s,t)-paths of
/// length 2 .. max_len in an undirected graph. Exhaustive within a search
/// node budget: `none` means the whole space was ruled out, budget_exhausted
/// that the search ran dry first and absence is unknown.
PathSearchResult find_disjoint_short_paths(const Graph& g, int s, int t, int max_len, int count,
                                           long long node_budget = 1000000);

struct RamseyWitness {
    enum class Kind { clique, independent_set };
    Kind kind = Kind::clique;
    std::vector<int> vertices;  // sorted ascending
};

/// Clique of size r or independent set of size s, by the pivot recursion
/// behind ramsey_bound: split the lowest-id vertex's candidates into
/// neighbors and non-neighbors and recurse on the side that stays large.
/// Requires vertex_count >= ramsey_bound(r, s) and an undirected graph.
RamseyWitness ramsey_witness(const Graph& g, int r, int s);

/// Builds an induced Euler subgraph on >= k vertices out of a bundle of
/// internally disjoint (s,t)-paths. Paths are first re-shortened until
/// chordless. When every path has length 2 the internal vertices hold a
/// clique of size k or an independent set of size k-1 and adjoining s (and t)
/// by parity gives the certificate; for longer paths either some vertex sees
/// enough other paths near one endpoint to recurse on a half-length bundle,
/// or k-1 pairwise non-adjacent paths are picked greedily and their union
/// (dropping one path on unfavorable parity) is the certificate. k >= 4.
///
/// With at least path_threshold(k, max_len) paths success is guaranteed and
/// any failure throws std::logic_error; on smaller bundles the same machinery
/// runs opportunistically and failure raises std::runtime_error naming the
/// shortfall. Every returned certificate is re-verified.
EulerCertificate extract_from_paths(const Graph& g, const PathBundle& bundle, int k);

/// Returned by extract_from_high_degree when neither route succeeds. The
/// pruned search forest size bounds the degree of u from above, which is the
/// content of the degree_threshold bound.
struct HighDegreeFailure {
    int tree_vertices = 0;            // kept vertices across the pruned shortest-path forests
    int neighborhood_components = 0;  // components of G - u that meet N(u)
};

using HighDegreeResult = std::variant<EulerCertificate, PathBundle, HighDegreeFailure>;

/// Searches around a (typically high-degree) vertex u of an undirected graph.
/// Inside each component of G - u take the breadth-first shortest-path tree
/// from the lowest neighbor of u, pruned to ancestors of neighbors of u.
/// Route one: along the tree path to the deepest neighbor, split the segments
/// between consecutive neighbors into three groups so that the best group
/// plus u forms a flower of induced cycles through u; flowers from different
/// components combine, and reaching k vertices yields a certificate. Route
/// two: a tree vertex w of degree >= path_threshold(k, 3k-8) yields that many
/// internally disjoint (u,w)-paths of length <= 3k-8, returned as a bundle
/// for extract_from_paths. Otherwise a failure report is returned. k >= 4.
HighDegreeResult extract_from_high_degree(const Graph& g, int u, int k);

/// Verdict is yes, no, or inconclusive; never an unsound no. route names the
/// step that settled the instance: "shortest-cycle" or "acyclic" (k <= 3),
/// "size" (k exceeds the vertex count), "exhaustive" (brute force within
/// budget), "girth" (a shortest cycle already has k vertices), "extraction"
/// (constructive search inside a block), or "open" (inconclusive).
struct LargeEulerDecision {
    Verdict verdict = Verdict::inconclusive;
    std::optional<EulerCertificate> certificate;  // present for yes
    std::string route;
};

/// Orchestrator for undirected Large Euler Subgraph at desk scale: exact for
/// k <= 3 (shortest cycle), exact within the brute-force budget, then girth
/// and per-block constructive extraction; anything unresolved is reported
/// inconclusive.
LargeEulerDecision decide_large_euler_undirected(const Graph& g, int k, int budget = 20);

} // namespace euler
