#pragma once

#include <hrl/core.hpp>

#include <cstdint>
#include <vector>

namespace hrl::gen {

/// The r-th k-subset of [0, n) in lexicographic order.
std::vector<Vertex> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank);

/// K^k_n.
Hypergraph complete(std::size_t k, std::size_t n);

/// H^(k)(n, p). Small instances flip one coin per k-set from a stream indexed
/// by the set's rank; large sparse instances skip geometrically between ranks.
Hypergraph random_hypergraph(std::size_t k, std::size_t n, double p, std::uint64_t seed);

enum class DeletionMode { uniform_random, adversarial_star };

/// Exactly ceil((1 - eps) * C(n, k)) edges. `adversarial_star` deletes the
/// edges through vertex 0 first, then vertex 1, and so on.
Hypergraph near_complete(std::size_t k, std::size_t n, double eps, DeletionMode mode, std::uint64_t seed);

struct PartitionedColoring {
    Hypergraph graph;
    Coloring coloring;
    Partition parts;
};

/// K^k_n with k+1 equal parts; each edge gets the smallest index of a part it
/// misses, so color i never touches V_i. Requires (k+1) | n.
PartitionedColoring extremal_component_coloring(std::size_t k, std::size_t n);

struct CycleColoring {
    Hypergraph graph;
    Coloring coloring;
    /// S = {0, ..., |S|-1}, |S| = (2k-2)n/(2k-1). Edges inside S are color 1
    /// (red), all others color 2 (blue).
    std::vector<Vertex> red_set;
};

/// Requires (2k-1) | n.
CycleColoring extremal_cycle_coloring(std::size_t k, std::size_t n);

struct KPartite {
    Hypergraph graph;
    Partition parts;
};

/// Parts are consecutive id blocks of the given sizes; each transversal k-set
/// is an edge independently with probability `density`.
KPartite k_partite(std::span<const std::size_t> sizes, double density, std::uint64_t seed);

/// Consecutive blocks with sizes differing by at most one (larger blocks first).
Partition equipartition(std::size_t n, std::size_t t);
Partition random_equipartition(std::size_t n, std::size_t t, std::uint64_t seed);

bool is_equipartition(const Partition & partition, std::size_t n);

} // namespace hrl::gen
