#pragma once

#include <hrl/core.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrl::loose {

/// Edges in path order; vertices in path order (ℓ(k-1)+1 of them).
struct LoosePath {
    std::vector<EdgeIndex> edges;
    std::vector<Vertex> vertices;
};

/// Edges in cyclic order; vertices in cyclic order (ℓ(k-1) of them).
struct LooseCycle {
    std::vector<EdgeIndex> edges;
    std::vector<Vertex> vertices;
};

/// Throws std::invalid_argument for an edge index outside the hypergraph.
bool is_loose_cycle(const Hypergraph & graph, const std::vector<EdgeIndex> & edges);
bool is_loose_path(const Hypergraph & graph, const std::vector<EdgeIndex> & edges);

/// Vertex order of a valid loose cycle / path; throws std::invalid_argument
/// when the sequence is not one.
LooseCycle make_cycle(const Hypergraph & graph, const std::vector<EdgeIndex> & edges);
/// A one-edge path needs its start vertex to fix the orientation.
LoosePath make_path(const Hypergraph & graph, const std::vector<EdgeIndex> & edges,
    std::optional<Vertex> start = std::nullopt);

enum class SearchStatus { complete, incomplete };

struct CycleSearchResult {
    std::optional<LooseCycle> cycle;
    SearchStatus status = SearchStatus::complete;
    std::uint64_t nodes = 0;
};

struct ColorFilter {
    const Coloring * coloring = nullptr;
    Color color = 1;
};

/// Maximum-vertex loose cycle by backtracking over edge sequences, each cycle
/// enumerated once (smallest edge index first, then the smaller of its two
/// neighbours next).
CycleSearchResult longest_loose_cycle_exact(const Hypergraph & graph, std::optional<ColorFilter> filter = std::nullopt,
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max());

/// Best loose cycle found by randomized greedy extension; a lower bound only.
CycleSearchResult longest_loose_cycle_heuristic(const Hypergraph & graph, std::optional<ColorFilter> filter,
    std::size_t attempts, std::uint64_t seed);

struct DfsTrace {
    std::uint64_t steps = 0;
    std::uint64_t restarts = 0;
    /// Step at which |X_1'| = |X_1*| or |X_k'| = |X_k*| first held, if ever.
    std::optional<std::uint64_t> balanced_stage;
    std::size_t longest_path = 0;
};

/// Either a loose path or sets U_1..U_k of equal size >= ζm spanning no
/// transversal edge.
struct PathOrWitness {
    std::optional<LoosePath> path;
    std::optional<Partition> witness;
    DfsTrace trace;
};

/// Depth-first search for a loose path in H[X_1, ..., X_k] whose inner
/// vertices of degree 2 lie in X_1 and X_k. Needs |X_2| = ... = |X_{k-1}| = m
/// and |X_1| = |X_k| = floor(m/2) (for k = 2, m = 2|X_1|). Edges of H that are
/// not transversals of the parts are ignored.
PathOrWitness dfs_loose_path_or_witness(const Hypergraph & graph, const Partition & parts, double zeta);

/// True when no edge of H has one vertex in each U_i.
bool spans_no_edge(const Hypergraph & graph, const Partition & sets);

/// Berge path E_1..E_ℓ from core[0] to core[ℓ], with core[i-1], core[i] in E_i.
struct BergePath {
    std::vector<EdgeIndex> edges;
    std::vector<std::vector<Vertex>> edge_sets;
    std::vector<Vertex> core;
    /// V_1..V_s: E_1 \ E_2 first (starting with core[0]), then each
    /// E_i ∩ E_{i+1} block (starting with core[i]), ending with core[ℓ].
    std::vector<Vertex> linear;
};

/// Fewest-edge Berge path by breadth-first search; none when u and v lie in
/// different components. u = v gives a path with no edges.
std::optional<BergePath> shortest_berge_path(const Hypergraph & graph, Vertex u, Vertex v);

/// A violated input condition of one of the constructions below.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ConnectorOptions {
    /// Optional preference per candidate endpoint (smaller is better), aligned
    /// with U_1 and U_s respectively. The sum of the two ranks is minimized.
    std::vector<std::size_t> start_rank;
    std::vector<std::size_t> end_rank;
};

/// A loose path with one edge per Berge edge, the i-th a transversal of the
/// clusters of E_i, from a vertex of U_1 to a vertex of U_s and using only
/// vertices of the U_j. `sets` is aligned with `path.linear`. Throws
/// PreconditionError when a tuple has transversal density <= eps, the path
/// is not shortest, or a U_j is too small; std::logic_error if the search
/// stalls anyway.
LoosePath connect_along_berge_path(const Hypergraph & host, const Partition & clusters, const BergePath & path,
    const Partition & sets, double eps, const ConnectorOptions & options = {});

struct DiamondMatching {
    /// Each entry is one 2-edge loose cycle (a single edge when k = 2).
    std::vector<std::vector<EdgeIndex>> cycles;
    std::size_t vertex_count = 0;
    /// The color-c component containing every cycle.
    std::vector<Vertex> component;
};

/// Greedy vertex-disjoint diamonds inside a single color-c component, trying
/// components largest first and several edge orders; stops once `target`
/// vertices are covered.
DiamondMatching find_connected_diamond_matching(const Hypergraph & graph, const Coloring & coloring, Color color,
    std::size_t target);

enum class AssemblyStage { precondition, long_paths, pool_exhaustion, connection, validation };

std::string to_string(AssemblyStage stage);

class AssemblyError : public std::runtime_error {
public:
    AssemblyError(AssemblyStage stage, const std::string & message) :
        std::runtime_error(to_string(stage) + ": " + message), stage_(stage)
    {
    }
    AssemblyStage stage() const { return stage_; }

private:
    AssemblyStage stage_;
};

struct AssemblyReport {
    LooseCycle cycle;
    Color color = 1;
    std::size_t packing_edges = 0;
    std::vector<std::size_t> long_path_edges;
    std::vector<std::size_t> connector_edges;
    /// Σ(|E(P_i)| - 2ζm)
    double edge_bound = 0;
};

/// Long loose cycle in the color-c part of H from a connected loose cycle
/// packing of the cluster graph: one long path per packing edge via the DFS,
/// joined by connectors along shortest Berge paths of the packing's
/// monochromatic cluster component. `packing` holds cycles of cluster-graph
/// edge indices in cyclic order.
AssemblyReport assemble_loose_cycle(const Hypergraph & graph, const Coloring & coloring, const Partition & clusters,
    const Hypergraph & cluster_graph, const Coloring & cluster_coloring,
    const std::vector<std::vector<EdgeIndex>> & packing, double eps);

} // namespace hrl::loose
