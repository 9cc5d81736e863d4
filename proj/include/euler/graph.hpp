#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace euler {

enum class Orientation { undirected, directed };

/// One edge or arc. Undirected edges are stored with tail < head.
struct Edge {
    int tail = 0;
    int head = 0;
};

/// Simple graph or digraph with dense 1-based vertex ids.
/// No self-loops, no parallel edges; a digraph may contain both (u,v) and
/// (v,u) as two distinct arcs. Edge ids are 0-based positions in input order.
class Graph {
public:
    Graph() = default;
    Graph(int n, Orientation orientation);
    Graph(int n, Orientation orientation, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Orientation orientation() const { return orientation_; }
    bool directed() const { return orientation_ == Orientation::directed; }

    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge ids incident to v. Directed graphs: arcs leaving v.
    std::span<const int> out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    /// Directed graphs: arcs entering v. Undirected graphs: same as out_edges.
    std::span<const int> in_edges(int v) const {
        return directed() ? std::span<const int>(in_[static_cast<std::size_t>(v)])
                          : std::span<const int>(out_[static_cast<std::size_t>(v)]);
    }

    int degree(int v) const;      // undirected only
    int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }
    /// Number of edge ends at v; works for both orientations.
    int total_degree(int v) const {
        return directed() ? in_degree(v) + out_degree(v) : degree(v);
    }

    /// Directed: true iff arc (u,v) exists. Undirected: true iff edge {u,v} exists.
    bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }
    std::optional<int> edge_id(int u, int v) const;

    /// Opposite endpoint of edge id as seen from v; v must be an endpoint.
    int other_end(int id, int v) const {
        const Edge& e = edge(id);
        if (e.tail == v) return e.head;
        if (e.head == v) return e.tail;
        throw std::invalid_argument("other_end: vertex is not an endpoint of the edge");
    }

    bool valid_vertex(int v) const { return v >= 1 && v <= n_; }

private:
    int n_ = 0;
    Orientation orientation_ = Orientation::undirected;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;              // incident (undirected) or out (directed)
    std::vector<std::vector<int>> in_;               // directed only
    std::vector<std::vector<std::pair<int, int>>> lookup_;  // (neighbor, edge id), sorted

    void add_edge_internal(int u, int v);
    void finish_build();
};

/// Closed trail: vertices v_0..v_t with v_0 = v_t, edges e_1..e_t pairwise
/// distinct, e_i joining v_{i-1} to v_i (respecting orientation). A single
/// vertex with no edges is the empty circuit.
struct Circuit {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Edge-disjoint simple cycles ordered so that every prefix union is connected.
using CycleList = std::vector<Circuit>;

/// Vertex set claimed to induce an Euler subgraph of some host graph.
struct EulerCertificate {
    std::vector<int> vertices;  // sorted, duplicate-free

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Induced subgraph together with both directions of the vertex-id mapping.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // index 1..|S| -> original id
    std::vector<int> from_original;  // original id -> new id, 0 when absent
    std::vector<int> edge_to_original;  // new edge id -> original edge id
};

/// True iff G has at least one edge, is connected (underlying graph, counting
/// every vertex), and every vertex is balanced: even degree when undirected,
/// in-degree equal to out-degree when directed.
bool is_eulerian(const Graph& g);

/// Closed trail through every edge exactly once. Throws std::invalid_argument
/// when the graph is not Eulerian.
Circuit euler_circuit(const Graph& g);

/// Total check of the Circuit invariants against g; malformed input gives false.
bool verify_circuit(const Graph& g, const Circuit& c);

/// Splits a circuit into edge-disjoint simple cycles whose prefix unions are
/// connected. Throws std::invalid_argument unless verify_circuit holds.
CycleList decompose_circuit(const Graph& g, const Circuit& c);

/// Biconnected components as vertex sets; every edge lies in exactly one.
/// Undirected input only.
std::vector<std::vector<int>> blocks(const Graph& g);

/// Fundamental cycles of a DFS tree rooted at root (undirected, connected
/// input); exactly m - n + 1 cycles, each simple.
std::vector<Circuit> dfs_fundamental_cycles(const Graph& g, int root);

/// A shortest cycle, or nothing when the graph is acyclic (forest). For a
/// digraph the result is an induced cycle.
std::optional<Circuit> shortest_cycle(const Graph& g);

/// Subgraph induced by S (deduplicated, sorted ascending; new ids follow that
/// order). Throws std::invalid_argument on out-of-range ids.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// True iff the certificate has at least k vertices, all ids are in range,
/// and the induced subgraph is Eulerian. Never throws.
bool verify_euler_certificate(const Graph& g, const EulerCertificate& cert, int k);

/// Connected components of the underlying graph, each sorted ascending,
/// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Raised when an exact search would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace euler
