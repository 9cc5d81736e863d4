#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "euler/graph.hpp"

namespace euler {

/// Edge coloring over palette {0 .. palette_size-1}.
struct Coloring {
    int palette_size = 0;
    std::vector<int> color;  // edge id -> color
};

/// Independent uniform color per edge, deterministic in the seed.
Coloring random_coloring(const Graph& g, int palette_size, std::uint64_t seed);

/// Number of independent colorings needed to push the miss probability of one
/// fixed colorful target below epsilon: ceil((p^p / p!) * ln(1/epsilon)),
/// at least 1, saturating at the int64 maximum.
long long trial_count(int palette_size, double epsilon);

/// Dynamic program over color subsets rooted at one start vertex. For a color
/// set X, cell X holds every vertex reachable from the start by a trail that
/// uses each color of X exactly once. Distinct colors force distinct edges,
/// so such trails never repeat an edge.
class ColoringTable {
public:
    /// Builds all 2^palette cells. Throws BudgetError when the palette
    /// exceeds 20 or the table would pass 64 MB.
    ColoringTable(const Graph& g, const Coloring& coloring, int start);

    /// The constructor's feasibility test alone, for failing fast before a
    /// long trial loop ever starts.
    static void check_budget(const Graph& g, int palette_size);

    int palette_size() const { return palette_; }
    int start() const { return start_; }

    bool contains(std::uint32_t color_mask, int v) const {
        const std::uint64_t* w = row(color_mask);
        return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    /// Closed trail at the start vertex using exactly the colors in the mask;
    /// exists iff contains(color_mask, start). Walks the table backwards, so
    /// no per-cell parent bookkeeping is stored.
    std::optional<Circuit> closed_trail(std::uint32_t color_mask) const;

private:
    const Graph* g_;
    const Coloring* coloring_;
    int start_;
    int palette_;
    int words_;
    std::vector<std::uint64_t> bits_;

    const std::uint64_t* row(std::uint32_t mask) const {
        return bits_.data() + static_cast<std::size_t>(mask) * static_cast<std::size_t>(words_);
    }
    std::uint64_t* row(std::uint32_t mask) {
        return bits_.data() + static_cast<std::size_t>(mask) * static_cast<std::size_t>(words_);
    }
};

/// Shortest closed colorful trail at start with length >= min_len, scanning
/// color sets smallest first (sets of equal size in numeric order).
std::optional<Circuit> colorful_circuit(const Graph& g, const Coloring& coloring, int start,
                                        int min_len);

enum class SearchMode { automatic, randomized, exhaustive };

enum class Verdict { yes, no, no_with_confidence, inconclusive };

const char* to_string(Verdict v);
const char* to_string(SearchMode m);

struct SolverConfig {
    SearchMode mode = SearchMode::automatic;
    std::uint64_t seed = 0;
    double epsilon = 0.01;
    std::optional<long long> max_trials;
};

struct CircuitAnswer {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Circuit> certificate;  // present for yes
    SearchMode mode_used = SearchMode::exhaustive;
    long long trials_used = 0;      // randomized mode only
    long long states_explored = 0;  // exhaustive mode only
};

/// Is there a circuit whose length lies in [min_len, max_len]?
///
/// min_len 0 is trivially yes (empty circuit at vertex 1) on any graph with a
/// vertex. Exhaustive mode is an exact memoized trail search and requires
/// edge_count <= 22; randomized mode colors edges with max_len colors and
/// reports no_with_confidence after trial_count(palette, epsilon) misses.
/// Automatic mode picks exhaustive iff edge_count <= 16.
CircuitAnswer solve_range_circuit(const Graph& g, int min_len, int max_len,
                                  const SolverConfig& config = {});

/// Circuit of length exactly len.
CircuitAnswer solve_exact_circuit(const Graph& g, int len, const SolverConfig& config = {});

} // namespace euler
