#pragma once

#include <hrl/core.hpp>

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace hrl::mono {

enum class SearchStatus { complete, incomplete };

/// Largest monochromatic component. For mc_r searches `coloring` is the
/// coloring that attains `value`.
struct McResult {
    std::size_t value = 0;
    Color witness_color = 1;
    std::vector<Vertex> witness_component;
    std::optional<Coloring> coloring;
    SearchStatus status = SearchStatus::complete;
    /// Proven lower bound on mc_r; equals `value` when complete.
    std::size_t lower_bound = 0;
    std::uint64_t nodes = 0;
};

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    /// Zero means no wall-clock limit.
    std::chrono::milliseconds wall_clock{0};
    std::size_t shards = 1;
};

/// mc(H, chi). An edgeless hypergraph on n >= 1 vertices has mc = 1 (each
/// vertex is a singleton component).
McResult mc(const Hypergraph & graph, const Coloring & coloring);

/// Exact mc_r(H) by branch and bound over edge colorings.
///
/// Edges are colored in decreasing-overlap order; colors are introduced in
/// increasing order (a later edge may use at most one color beyond those
/// already used), which removes color-permutation symmetry. A partial coloring
/// whose largest monochromatic component already reaches the incumbent is cut:
/// adding edges never shrinks a component. Work is sharded over prefixes of
/// the first assignments; the value does not depend on the shard count, and
/// on completion the certificate is the first optimal coloring in search
/// order, so it does not either.
McResult mc_r_exact(const Hypergraph & graph, std::size_t r, const SearchBudget & budget = {});

/// Unpruned r^m scan. Intended as a test oracle for tiny instances.
McResult mc_r_brute_force(const Hypergraph & graph, std::size_t r);

struct LocalSearchOptions {
    /// Consecutive non-improving moves before a restart; 0 means 2m.
    std::uint64_t plateau_tolerance = 0;
};

/// Upper bound on mc_r(H): best mc found by single-edge recoloring descent
/// (objective: largest component, then sum of squared component sizes) with
/// plateau moves and seeded restarts. Restarts alternate between uniformly
/// random edge colorings and vertex-partition colorings. The value is an
/// upper bound, so `status` is always incomplete.
McResult mc_r_localsearch(const Hypergraph & graph, std::size_t r, std::size_t restarts, std::uint64_t seed,
    const LocalSearchOptions & options = {});

struct HighDegreeSubgraph {
    InducedSubgraph subgraph;
    /// (1 - eps^eta) C(n-1, k-1)
    double degree_threshold = 0;
    /// (1 - eps^(1-eta)) n
    double size_guarantee = 0;
    /// Whether the minimum-degree guarantee applied ((1 - eps^(1-eta)) n >= k^2).
    bool min_degree_checked = false;
    std::size_t min_degree = 0;
};

/// Vertices of degree at least (1 - eps^eta) C(n-1, k-1) and the hypergraph
/// they induce. Throws std::invalid_argument when e(H) < (1-eps) C(n,k) or the
/// parameters leave the admissible range, and std::logic_error when a
/// guaranteed property fails on the output.
HighDegreeSubgraph high_degree_subgraph(const Hypergraph & graph, double eps, double eta);

struct OneCoreCheck {
    /// Largest monochromatic 1-core order and the color attaining it.
    std::size_t largest = 0;
    Color color = 1;
    /// (k/(k+l) - sqrt(eps)) n with l = r - k.
    double bound = 0;
    bool pass = false;
    std::vector<std::size_t> per_color;
};

/// Checks a (k+l)-colored hypergraph against the monochromatic 1-core bound.
/// A failing verdict is data, not an error.
OneCoreCheck one_core_bound_check(const Hypergraph & graph, const Coloring & coloring, double eps);

} // namespace hrl::mono
