#include "euler/color_coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "euler/rng.hpp"

namespace euler {

Coloring random_coloring(const Graph& g, int palette_size, std::uint64_t seed) {
    if (palette_size < 1) throw std::invalid_argument("random_coloring: empty palette");
    Coloring c;
    c.palette_size = palette_size;
    c.color.resize(static_cast<std::size_t>(g.edge_count()));
    SplitMix64 rng(seed);
    for (int& x : c.color) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(palette_size)));
    return c;
}

long long trial_count(int palette_size, double epsilon) {
    if (palette_size < 1) throw std::invalid_argument("trial_count: palette must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("trial_count: epsilon must be positive");
    double ratio = 1.0;  // palette^palette / palette!
    for (int i = 1; i <= palette_size; ++i)
        ratio *= static_cast<double>(palette_size) / static_cast<double>(i);
    double x = ratio * std::log(1.0 / epsilon);
    if (!(x < 9.0e18)) return std::numeric_limits<long long>::max();
    // the tiny slack keeps exact hits (like ratio 2 with epsilon 1/e) from
    // being rounded one trial up by floating point noise
    double c = std::ceil(x - 1e-9);
    if (c < 1.0) return 1;
    return static_cast<long long>(c);
}

void ColoringTable::check_budget(const Graph& g, int palette_size) {
    if (palette_size < 0) throw std::invalid_argument("color table: negative palette");
    if (palette_size > 20) throw BudgetError("color table: palette exceeds 20 colors");
    const std::size_t words = static_cast<std::size_t>(g.vertex_count()) / 64 + 1;
    if ((std::size_t{1} << palette_size) * words > (std::size_t{1} << 23))
        throw BudgetError("color table: would exceed 64 MB");
}

ColoringTable::ColoringTable(const Graph& g, const Coloring& coloring, int start)
    : g_(&g), coloring_(&coloring), start_(start), palette_(coloring.palette_size) {
    if (!g.valid_vertex(start)) throw std::invalid_argument("color table: start out of range");
    if (coloring.color.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("color table: coloring size mismatch");
    check_budget(g, palette_);
    words_ = g.vertex_count() / 64 + 1;
    const std::size_t total = (std::size_t{1} << palette_) * static_cast<std::size_t>(words_);
    bits_.assign(total, 0);

    row(0)[static_cast<std::size_t>(start) >> 6] |= std::uint64_t{1} << (start & 63);

    std::vector<std::vector<int>> by_color(static_cast<std::size_t>(palette_));
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = coloring.color[static_cast<std::size_t>(e)];
        if (c < 0 || c >= palette_)
            throw std::invalid_argument("color table: edge color outside the palette");
        by_color[static_cast<std::size_t>(c)].push_back(e);
    }

    auto test = [](const std::uint64_t* w, int v) {
        return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    };
    auto set = [](std::uint64_t* w, int v) {
        w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    };
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << palette_); ++mask) {
        std::uint64_t* cur = row(mask);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const int c = std::countr_zero(rest);
            const std::uint64_t* prev = row(mask ^ (std::uint32_t{1} << c));
            for (int e : by_color[static_cast<std::size_t>(c)]) {
                const Edge& ed = g.edge(e);
                if (test(prev, ed.tail)) set(cur, ed.head);
                if (!g.directed() && test(prev, ed.head)) set(cur, ed.tail);
            }
        }
    }
}

std::optional<Circuit> ColoringTable::closed_trail(std::uint32_t color_mask) const {
    if (color_mask >= (std::uint32_t{1} << palette_))
        throw std::invalid_argument("closed_trail: mask outside the palette");
    if (!contains(color_mask, start_)) return std::nullopt;

    std::vector<int> back_vertices{start_};  // walked from the start backwards
    std::vector<int> back_edges;
    int x = start_;
    std::uint32_t left = color_mask;
    while (left) {
        bool stepped = false;
        for (int e : g_->in_edges(x)) {
            const int c = coloring_->color[static_cast<std::size_t>(e)];
            if (!(left & (std::uint32_t{1} << c))) continue;
            const int w = g_->directed() ? g_->edge(e).tail : g_->other_end(e, x);
            if (!contains(left ^ (std::uint32_t{1} << c), w)) continue;
            back_vertices.push_back(w);
            back_edges.push_back(e);
            x = w;
            left ^= std::uint32_t{1} << c;
            stepped = true;
            break;
        }
        if (!stepped) throw std::logic_error("closed_trail: reconstruction failed");
    }
    Circuit out;
    out.vertices.assign(back_vertices.rbegin(), back_vertices.rend());
    out.edges.assign(back_edges.rbegin(), back_edges.rend());
    if (!verify_circuit(*g_, out)) throw std::logic_error("closed_trail: produced invalid circuit");
    return out;
}

std::optional<Circuit> colorful_circuit(const Graph& g, const Coloring& coloring, int start,
                                        int min_len) {
    ColoringTable table(g, coloring, start);
    const int p = table.palette_size();
    if (min_len <= 0) return table.closed_trail(0);  // the empty trail
    const std::uint32_t limit = std::uint32_t{1} << p;
    for (int size = min_len; size <= p; ++size) {
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        while (true) {
            if (table.contains(mask, start)) return table.closed_trail(mask);
            const std::uint32_t low = mask & (0 - mask);
            const std::uint32_t ripple = mask + low;
            if (ripple >= limit) break;
            mask = (((mask ^ ripple) >> 2) / low) | ripple;
        }
    }
    return std::nullopt;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::no_with_confidence: return "no_with_confidence";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* to_string(SearchMode m) {
    switch (m) {
        case SearchMode::automatic: return "auto";
        case SearchMode::randomized: return "randomized";
        case SearchMode::exhaustive: return "exhaustive";
    }
    return "unknown";
}

namespace {

// Exact search: depth first over trails, one start vertex at a time, with a
// (vertex, used-edge-set) memo so no state is expanded twice per start. Only
// vertices >= start may appear; every circuit is found from its lowest vertex.
struct TrailSearch {
    const Graph& g;
    const int min_len;
    const int max_len;
    const int m;
    std::vector<std::uint8_t> seen;
    std::uint8_t stamp = 0;
    int start = 0;
    long long states = 0;
    std::vector<int> trail_vertices;
    std::vector<int> trail_edges;

    TrailSearch(const Graph& graph, int min_len_, int max_len_)
        : g(graph), min_len(min_len_), max_len(max_len_), m(graph.edge_count()) {
        seen.assign((static_cast<std::size_t>(g.vertex_count()) + 1) << m, 0);
    }

    std::optional<Circuit> run() {
        for (start = 1; start <= g.vertex_count(); ++start) {
            if (g.out_degree(start) == 0 || (g.directed() && g.in_degree(start) == 0)) continue;
            if (stamp == 255) {
                std::fill(seen.begin(), seen.end(), std::uint8_t{0});
                stamp = 1;
            } else {
                ++stamp;
            }
            trail_vertices.assign(1, start);
            trail_edges.clear();
            if (dfs(start, 0, 0)) {
                Circuit c;
                c.vertices = trail_vertices;
                c.edges = trail_edges;
                return c;
            }
        }
        return std::nullopt;
    }

    bool dfs(int v, std::uint32_t mask, int len) {
        if (v == start && len >= min_len) return true;  // len <= max_len by the prune below
        if (len == max_len) return false;
        std::uint8_t& cell = seen[(static_cast<std::size_t>(v) << m) | mask];
        if (cell == stamp) return false;
        cell = stamp;
        ++states;
        for (int e : g.out_edges(v)) {
            if (mask & (std::uint32_t{1} << e)) continue;
            const int w = g.directed() ? g.edge(e).head : g.other_end(e, v);
            if (w < start) continue;
            trail_vertices.push_back(w);
            trail_edges.push_back(e);
            if (dfs(w, mask | (std::uint32_t{1} << e), len + 1)) return true;
            trail_vertices.pop_back();
            trail_edges.pop_back();
        }
        return false;
    }
};

CircuitAnswer run_exhaustive(const Graph& g, int min_len, int max_len, CircuitAnswer ans) {
    const int m = g.edge_count();
    const std::size_t bytes = (static_cast<std::size_t>(g.vertex_count()) + 1) << std::min(m, 40);
    if (m > 22 || bytes > (std::size_t{1} << 28))
        throw BudgetError("exhaustive circuit search: memo would exceed the budget");
    TrailSearch search(g, min_len, max_len);
    auto found = search.run();
    ans.states_explored = search.states;
    if (found) {
        if (!verify_circuit(g, *found))
            throw std::logic_error("exhaustive circuit search: invalid certificate");
        ans.verdict = Verdict::yes;
        ans.certificate = std::move(found);
    } else {
        ans.verdict = Verdict::no;
    }
    return ans;
}

CircuitAnswer run_randomized(const Graph& g, int min_len, int palette, const SolverConfig& config,
                             CircuitAnswer ans) {
    ColoringTable::check_budget(g, palette);  // fail fast, not on trial 10^8
    long long trials = trial_count(palette, config.epsilon);
    if (config.max_trials) trials = std::min(trials, std::max<long long>(*config.max_trials, 0));
    for (long long t = 0; t < trials; ++t) {
        const Coloring coloring =
            random_coloring(g, palette, trial_seed(config.seed, static_cast<std::uint64_t>(t)));
        std::uint32_t present = 0;
        for (int c : coloring.color) present |= std::uint32_t{1} << c;
        if (std::popcount(present) < min_len) continue;  // not enough colors drawn
        for (int u = 1; u <= g.vertex_count(); ++u) {
            if (g.out_degree(u) == 0 || (g.directed() && g.in_degree(u) == 0)) continue;
            if (auto c = colorful_circuit(g, coloring, u, min_len)) {
                ans.verdict = Verdict::yes;
                ans.certificate = std::move(c);
                ans.trials_used = t + 1;
                return ans;
            }
        }
    }
    ans.verdict = Verdict::no_with_confidence;
    ans.trials_used = trials;
    return ans;
}

} // namespace

CircuitAnswer solve_range_circuit(const Graph& g, int min_len, int max_len,
                                  const SolverConfig& config) {
    if (min_len < 0) throw std::invalid_argument("solve_range_circuit: negative minimum length");
    if (max_len < min_len) throw std::invalid_argument("solve_range_circuit: empty length range");

    const int m = g.edge_count();
    const int cap = std::min(max_len, m);

    CircuitAnswer ans;
    SearchMode mode = config.mode;
    if (mode == SearchMode::automatic)
        mode = (m <= 16) ? SearchMode::exhaustive : SearchMode::randomized;
    ans.mode_used = mode;

    if (min_len == 0) {
        if (g.vertex_count() == 0) {
            ans.verdict = Verdict::no;  // not even a vertex to stand on
        } else {
            ans.verdict = Verdict::yes;
            ans.certificate = Circuit{{1}, {}};
        }
        return ans;
    }
    if (min_len > m) {
        ans.verdict = Verdict::no;  // a circuit has at most m edges; exact in any mode
        return ans;
    }
    if (mode == SearchMode::exhaustive) return run_exhaustive(g, min_len, cap, std::move(ans));
    return run_randomized(g, min_len, cap, config, std::move(ans));
}

CircuitAnswer solve_exact_circuit(const Graph& g, int len, const SolverConfig& config) {
    return solve_range_circuit(g, len, len, config);
}

} // namespace euler
