#include "euler/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace euler {

Graph::Graph(int n, Orientation orientation) : n_(n), orientation_(orientation) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    out_.resize(static_cast<std::size_t>(n) + 1);
    if (directed()) in_.resize(static_cast<std::size_t>(n) + 1);
    lookup_.resize(static_cast<std::size_t>(n) + 1);
}

Graph::Graph(int n, Orientation orientation, const std::vector<std::pair<int, int>>& edges)
    : Graph(n, orientation) {
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) add_edge_internal(u, v);
    finish_build();
}

void Graph::add_edge_internal(int u, int v) {
    if (!valid_vertex(u) || !valid_vertex(v))
        throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    Edge e{u, v};
    if (!directed() && e.tail > e.head) std::swap(e.tail, e.head);
    const int id = static_cast<int>(edges_.size());
    edges_.push_back(e);
    if (directed()) {
        out_[static_cast<std::size_t>(e.tail)].push_back(id);
        in_[static_cast<std::size_t>(e.head)].push_back(id);
    } else {
        out_[static_cast<std::size_t>(e.tail)].push_back(id);
        out_[static_cast<std::size_t>(e.head)].push_back(id);
    }
    lookup_[static_cast<std::size_t>(e.tail)].emplace_back(e.head, id);
    if (!directed()) lookup_[static_cast<std::size_t>(e.head)].emplace_back(e.tail, id);
}

void Graph::finish_build() {
    for (auto& l : lookup_) std::sort(l.begin(), l.end());
    for (std::size_t v = 0; v < lookup_.size(); ++v) {
        const auto& l = lookup_[v];
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i].first == l[i - 1].first)
                throw std::invalid_argument("Graph: parallel edge rejected");
    }
}

int Graph::degree(int v) const {
    if (directed()) throw std::invalid_argument("degree: undirected graphs only");
    return static_cast<int>(out_[static_cast<std::size_t>(v)].size());
}

std::optional<int> Graph::edge_id(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
    int a = u, b = v;
    if (!directed() && a > b) std::swap(a, b);
    const auto& l = lookup_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(b, -1));
    if (it != l.end() && it->first == b) return it->second;
    return std::nullopt;
}

namespace {

// BFS over the underlying graph; returns component id per vertex (0 = unseen).
std::vector<int> underlying_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    std::vector<int> queue;
    for (int s = 1; s <= n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != 0) continue;
        comp[static_cast<std::size_t>(s)] = ++next;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            auto visit = [&](int e) {
                int w = g.other_end(e, v);
                if (comp[static_cast<std::size_t>(w)] == 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
            };
            for (int e : g.out_edges(v)) visit(e);
            if (g.directed())
                for (int e : g.in_edges(v)) visit(e);
        }
    }
    return comp;
}

} // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    auto comp = underlying_components(g);
    int count = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) count = std::max(count, comp[static_cast<std::size_t>(v)]);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (int v = 1; v <= g.vertex_count(); ++v)
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)] - 1)].push_back(v);
    return out;
}

bool is_eulerian(const Graph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return false;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.directed()) {
            if (g.in_degree(v) != g.out_degree(v)) return false;
        } else {
            if (g.degree(v) % 2 != 0) return false;
        }
    }
    auto comp = underlying_components(g);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (comp[static_cast<std::size_t>(v)] != 1) return false;
    return true;
}

Circuit euler_circuit(const Graph& g) {
    if (!is_eulerian(g)) throw std::invalid_argument("euler_circuit: graph is not Eulerian");
    const int m = g.edge_count();
    int start = 1;
    while (g.total_degree(start) == 0) ++start;

    std::vector<std::size_t> cursor(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    // (vertex, edge that reached it); finish order reversed is the circuit
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<int> vseq, eseq;
    vseq.reserve(static_cast<std::size_t>(m) + 1);
    eseq.reserve(static_cast<std::size_t>(m) + 1);
    while (!stack.empty()) {
        auto [v, via] = stack.back();
        auto inc = g.out_edges(v);
        std::size_t& cur = cursor[static_cast<std::size_t>(v)];
        while (cur < inc.size() && used[static_cast<std::size_t>(inc[cur])]) ++cur;
        if (cur == inc.size()) {
            vseq.push_back(v);
            eseq.push_back(via);
            stack.pop_back();
        } else {
            int e = inc[cur];
            used[static_cast<std::size_t>(e)] = 1;
            int w = g.directed() ? g.edge(e).head : g.other_end(e, v);
            stack.emplace_back(w, e);
        }
    }
    std::reverse(vseq.begin(), vseq.end());
    std::reverse(eseq.begin(), eseq.end());
    Circuit c;
    c.vertices = std::move(vseq);
    c.edges.assign(eseq.begin() + 1, eseq.end());  // drop the -1 sentinel
    assert(verify_circuit(g, c) && c.length() == m);
    return c;
}

bool verify_circuit(const Graph& g, const Circuit& c) {
    const auto& vs = c.vertices;
    const auto& es = c.edges;
    if (vs.empty() || vs.size() != es.size() + 1) return false;
    for (int v : vs)
        if (!g.valid_vertex(v)) return false;
    if (vs.front() != vs.back()) return false;
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        int e = es[i];
        if (e < 0 || e >= g.edge_count()) return false;
        if (used[static_cast<std::size_t>(e)]) return false;
        used[static_cast<std::size_t>(e)] = 1;
        const Edge& ed = g.edge(e);
        int a = vs[i], b = vs[i + 1];
        if (g.directed()) {
            if (ed.tail != a || ed.head != b) return false;
        } else {
            if (!((ed.tail == a && ed.head == b) || (ed.tail == b && ed.head == a))) return false;
        }
    }
    return true;
}

CycleList decompose_circuit(const Graph& g, const Circuit& c) {
    if (!verify_circuit(g, c)) throw std::invalid_argument("decompose_circuit: not a valid circuit");
    CycleList cycles;
    std::vector<int> sv{c.vertices[0]};
    std::vector<int> se;
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    pos[static_cast<std::size_t>(c.vertices[0])] = 0;
    for (std::size_t i = 1; i < c.vertices.size(); ++i) {
        int v = c.vertices[i];
        sv.push_back(v);
        se.push_back(c.edges[i - 1]);
        int p = pos[static_cast<std::size_t>(v)];
        if (p >= 0) {
            Circuit cyc;
            cyc.vertices.assign(sv.begin() + p, sv.end());
            cyc.edges.assign(se.begin() + p, se.end());
            for (std::size_t j = static_cast<std::size_t>(p) + 1; j + 1 < sv.size(); ++j)
                pos[static_cast<std::size_t>(sv[j])] = -1;
            sv.resize(static_cast<std::size_t>(p) + 1);
            se.resize(static_cast<std::size_t>(p));
            cycles.push_back(std::move(cyc));
        } else {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(sv.size()) - 1;
        }
    }
    assert(sv.size() == 1 && se.empty());

    // Reorder greedily so every prefix union is connected.
    if (cycles.size() > 1) {
        std::vector<char> taken(cycles.size(), 0);
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        CycleList ordered;
        ordered.reserve(cycles.size());
        auto absorb = [&](std::size_t i) {
            taken[i] = 1;
            for (int v : cycles[i].vertices) seen[static_cast<std::size_t>(v)] = 1;
            ordered.push_back(std::move(cycles[i]));
        };
        absorb(0);
        while (ordered.size() < cycles.size()) {
            bool progress = false;
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                if (taken[i]) continue;
                bool touches = false;
                for (int v : cycles[i].vertices)
                    if (seen[static_cast<std::size_t>(v)]) { touches = true; break; }
                if (touches) {
                    absorb(i);
                    progress = true;
                    break;
                }
            }
            if (!progress) throw std::logic_error("decompose_circuit: disconnected cycle set");
        }
        cycles = std::move(ordered);
    }
    return cycles;
}

std::vector<std::vector<int>> blocks(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("blocks: undirected graphs only");
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parent_edge(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::size_t> it(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> result;
    int timer = 0;

    auto emit_block = [&](int until_edge) {
        std::vector<int> verts;
        std::vector<char> mark(static_cast<std::size_t>(n) + 1, 0);
        while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            for (int v : {g.edge(e).tail, g.edge(e).head}) {
                if (!mark[static_cast<std::size_t>(v)]) {
                    mark[static_cast<std::size_t>(v)] = 1;
                    verts.push_back(v);
                }
            }
            if (e == until_edge) break;
        }
        std::sort(verts.begin(), verts.end());
        result.push_back(std::move(verts));
    };

    for (int s = 1; s <= n; ++s) {
        if (disc[static_cast<std::size_t>(s)] != 0) continue;
        std::vector<int> stack{s};
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = ++timer;
        while (!stack.empty()) {
            int v = stack.back();
            auto inc = g.out_edges(v);
            if (it[static_cast<std::size_t>(v)] < inc.size()) {
                int e = inc[it[static_cast<std::size_t>(v)]++];
                if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
                int w = g.other_end(e, v);
                if (disc[static_cast<std::size_t>(w)] == 0) {
                    edge_stack.push_back(e);
                    parent_edge[static_cast<std::size_t>(w)] = e;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = ++timer;
                    stack.push_back(w);
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                        emit_block(parent_edge[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
    return result;
}

std::vector<Circuit> dfs_fundamental_cycles(const Graph& g, int root) {
    if (g.directed()) throw std::invalid_argument("dfs_fundamental_cycles: undirected graphs only");
    if (!g.valid_vertex(root)) throw std::invalid_argument("dfs_fundamental_cycles: root out of range");
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parent_edge(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::size_t> it(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Circuit> cycles;
    int timer = 0;
    int seen = 0;

    std::vector<int> stack{root};
    disc[static_cast<std::size_t>(root)] = ++timer;
    ++seen;
    while (!stack.empty()) {
        int v = stack.back();
        auto inc = g.out_edges(v);
        if (it[static_cast<std::size_t>(v)] == inc.size()) {
            stack.pop_back();
            continue;
        }
        int e = inc[it[static_cast<std::size_t>(v)]++];
        if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
        int w = g.other_end(e, v);
        if (disc[static_cast<std::size_t>(w)] == 0) {
            disc[static_cast<std::size_t>(w)] = ++timer;
            ++seen;
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = e;
            stack.push_back(w);
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
            // back edge: climb the tree from v to w, then close with e
            Circuit c;
            int x = v;
            while (x != w) {
                c.vertices.push_back(x);
                c.edges.push_back(parent_edge[static_cast<std::size_t>(x)]);
                x = parent[static_cast<std::size_t>(x)];
            }
            c.vertices.push_back(w);
            c.edges.push_back(e);
            c.vertices.push_back(v);
            cycles.push_back(std::move(c));
        }
    }
    if (seen != n)
        throw std::invalid_argument("dfs_fundamental_cycles: graph is not connected");
    return cycles;
}

namespace {

// BFS shortest path from s to t, optionally skipping one edge id; path as edges.
std::optional<std::vector<int>> bfs_path(const Graph& g, int s, int t, int skip_edge) {
    const int n = g.vertex_count();
    std::vector<int> via(static_cast<std::size_t>(n) + 1, -2);  // edge used to reach
    via[static_cast<std::size_t>(s)] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == t) break;
        for (int e : g.out_edges(v)) {
            if (e == skip_edge) continue;
            int w = g.directed() ? g.edge(e).head : g.other_end(e, v);
            if (via[static_cast<std::size_t>(w)] != -2) continue;
            via[static_cast<std::size_t>(w)] = e;
            q.push(w);
        }
    }
    if (via[static_cast<std::size_t>(t)] == -2) return std::nullopt;
    std::vector<int> path;
    int x = t;
    while (x != s) {
        int e = via[static_cast<std::size_t>(x)];
        path.push_back(e);
        x = g.directed() ? g.edge(e).tail : g.other_end(e, x);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Circuit circuit_from_edge_walk(const Graph& g, int start, const std::vector<int>& walk) {
    Circuit c;
    c.vertices.push_back(start);
    int cur = start;
    for (int e : walk) {
        cur = g.directed() ? g.edge(e).head : g.other_end(e, cur);
        c.vertices.push_back(cur);
        c.edges.push_back(e);
    }
    return c;
}

} // namespace

std::optional<Circuit> shortest_cycle(const Graph& g) {
    std::optional<Circuit> best;
    auto better = [&](const Circuit& c) {
        return !best || c.length() < best->length();
    };
    if (g.directed()) {
        for (int v = 1; v <= g.vertex_count(); ++v) {
            // shortest cycle through v: path v -> u plus the arc (u, v)
            for (int e : g.in_edges(v)) {
                int u = g.edge(e).tail;
                auto path = bfs_path(g, v, u, -1);
                if (!path) continue;
                auto walk = *path;
                walk.push_back(e);
                Circuit c = circuit_from_edge_walk(g, v, walk);
                if (better(c)) best = std::move(c);
            }
        }
    } else {
        for (int e = 0; e < g.edge_count(); ++e) {
            int u = g.edge(e).tail, v = g.edge(e).head;
            auto path = bfs_path(g, u, v, e);
            if (!path) continue;
            auto walk = *path;
            walk.push_back(e);
            Circuit c = circuit_from_edge_walk(g, u, walk);
            if (better(c)) best = std::move(c);
        }
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (!g.valid_vertex(v)) throw std::invalid_argument("induced_subgraph: vertex out of range");

    InducedSubgraph out;
    out.from_original.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    out.to_original.assign(verts.size() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out.to_original[i + 1] = verts[i];
        out.from_original[static_cast<std::size_t>(verts[i])] = static_cast<int>(i + 1);
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = out.from_original[static_cast<std::size_t>(g.edge(e).tail)];
        int b = out.from_original[static_cast<std::size_t>(g.edge(e).head)];
        if (a != 0 && b != 0) {
            edges.emplace_back(a, b);
            out.edge_to_original.push_back(e);
        }
    }
    out.graph = Graph(static_cast<int>(verts.size()), g.orientation(), edges);
    return out;
}

bool verify_euler_certificate(const Graph& g, const EulerCertificate& cert, int k) {
    for (int v : cert.vertices)
        if (!g.valid_vertex(v)) return false;
    std::vector<int> verts = cert.vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) < k) return false;
    if (verts.empty()) return false;
    return is_eulerian(induced_subgraph(g, verts).graph);
}

} // namespace euler
