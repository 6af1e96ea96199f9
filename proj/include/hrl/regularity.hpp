#pragma once

#include <hrl/core.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hrl::reg {

/// e(U_1, ..., U_k) and d_p = e / (p Π|U_i|).
struct DensityRecord {
    std::vector<std::size_t> tuple;
    std::uint64_t edges = 0;
    double product = 0;
    double dp = 0;
};

/// Throws std::invalid_argument for overlapping sets, p <= 0 or a set count
/// other than k.
DensityRecord density(const Hypergraph & graph, const Partition & sets, double p);

/// PASS only means no violation turned up within the budget.
struct RegularityVerdict {
    bool pass = true;
    bool exhaustive = false;
    std::uint64_t checked = 0;
    double density = 0;
    /// FAIL only: W_1..W_k with Π|W_i| >= ε Π|U_i| and |d_p(W) - d_p(U)| > ε.
    std::optional<Partition> witness;
    double witness_density = 0;
    double deviation = 0;
};

/// Searches for sub-tuples violating (ε, p)-regularity: every admissible
/// W-tuple when there are at most `budget` subset combinations, otherwise
/// `budget` candidates (degree splits, then seeded half-size and
/// threshold-size random subsets).
RegularityVerdict regularity_falsifier(const Hypergraph & graph, const Partition & sets, double eps, double p,
    std::uint64_t budget, std::uint64_t seed = 0);

struct UniformityReport {
    bool pass = true;
    bool exhaustive = false;
    double max_dp = 0;
    Partition worst;
    std::uint64_t checked = 0;
};

/// Checks d_p(U_1..U_k) <= D over disjoint sets of size >= ηn: exhaustively
/// when (k+1)^n is small, otherwise from `starts` seeded random tuples of
/// size ceil(ηn) each improved by greedy vertex swaps.
UniformityReport upper_uniformity_check(const Hypergraph & graph, double eta, double p, double D,
    std::size_t starts = 8, std::uint64_t seed = 0);

/// 2 exp(-γ² mean / 3). Throws std::invalid_argument unless 0 <= γ <= 3/2 and
/// mean >= 0.
double chernoff_bound(double mean, double gamma);

/// Fraction of `runs` seeded Bin(trials, prob) draws X with |X - E X| >= γ E X.
double chernoff_deviation_frequency(std::uint64_t trials, double prob, double gamma, std::uint64_t runs,
    std::uint64_t seed);

struct RefinedPartition {
    Partition partition;
    /// Fraction of part k-tuples that fail the falsifier in some color.
    double irregular_fraction = 0;
    std::size_t tuples = 0;
    /// t = n (singleton parts) or t < k: the score is vacuous.
    bool degenerate = false;
};

/// Best-of-restarts equipartition into t parts under swap moves. No
/// guarantee that the result is (ε, p)-regular.
RefinedPartition refine_partition(const Hypergraph & graph, const Coloring & coloring, std::size_t t, double eps,
    double p, std::size_t restarts, std::uint64_t seed, std::uint64_t falsifier_budget = 256);

enum class Gate { density_threshold, falsifier };

struct ClusterEdge {
    std::vector<Vertex> tuple;
    std::vector<std::uint64_t> color_counts;
    Color majority = 1;
    double majority_dp = 0;
    double total_dp = 0;
};

struct ClusterGraph {
    Hypergraph graph;
    Coloring coloring;
    /// Aligned with graph edge indices.
    std::vector<ClusterEdge> edges;
    /// Tuples rejected by the gate.
    std::vector<std::vector<Vertex>> rejected;
};

/// Cluster graph on the parts. `density_threshold` admits a tuple when its
/// majority color has d_p >= 1/(2r) - ε; `falsifier` additionally needs every
/// color class to pass regularity_falsifier on it.
ClusterGraph build_cluster_graph(const Hypergraph & graph, const Coloring & coloring, const Partition & partition,
    double eps, double p, Gate gate = Gate::density_threshold, std::uint64_t falsifier_budget = 256,
    std::uint64_t seed = 0);

struct TupleComponent {
    /// Component of the k-partite subhypergraph meeting each V_i in >= (1-ε)|V_i|.
    std::optional<std::vector<Vertex>> component;
    std::vector<std::size_t> intersections;
    /// U_i ⊆ V_i, |U_i| >= ε|V_i|, spanning no edge.
    std::optional<Partition> counterexample;
    /// Whether the hypothesis was checked over every subset family.
    bool exhaustive = false;
};

/// Large component of a k-partite hypergraph whose every ε-sized subset
/// family spans an edge. Throws std::invalid_argument unless 0 < ε < 1/3;
/// std::logic_error if the verified hypothesis does not yield the component.
TupleComponent regular_tuple_component(const Hypergraph & graph, const Partition & parts, double eps,
    std::uint64_t budget = 50'000'000, std::uint64_t seed = 0);

} // namespace hrl::reg
