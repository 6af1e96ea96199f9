#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hrl {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Color = std::uint32_t;

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored canonically: vertices ascending inside each edge, edge
/// list sorted lexicographically. Constructing from an arbitrary edge list
/// reorders it; `build` reports where each input edge ended up.
class Hypergraph {
public:
    struct Built;

    Hypergraph() = default;
    Hypergraph(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges);

    static Built build(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges);

    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    std::size_t num_edges() const { return k_ == 0 ? 0 : flat_.size() / k_; }
    bool empty() const { return flat_.empty(); }

    std::span<const Vertex> edge(EdgeIndex e) const
    {
        return {flat_.data() + e * k_, k_};
    }
    std::span<const EdgeIndex> incident(Vertex v) const
    {
        return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t vertex_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Edge index of `vertices` (need not be sorted), if present.
    std::optional<EdgeIndex> find_edge(std::span<const Vertex> vertices) const;
    bool contains_edge(std::span<const Vertex> vertices) const { return find_edge(vertices).has_value(); }

    std::vector<std::vector<Vertex>> edge_list() const;

    friend bool operator==(const Hypergraph & a, const Hypergraph & b)
    {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.flat_ == b.flat_;
    }

private:
    void index();

    std::size_t k_ = 2;
    std::size_t n_ = 0;
    std::vector<Vertex> flat_;
    std::vector<std::size_t> offsets_{0};
    std::vector<EdgeIndex> incidence_;
};

struct Hypergraph::Built {
    Hypergraph graph;
    /// input position -> canonical edge index
    std::vector<EdgeIndex> canonical_index;
};

/// Edge coloring with colors 1..r, aligned with a hypergraph's edge indices.
class Coloring {
public:
    Coloring() = default;
    Coloring(std::size_t r, std::vector<Color> colors);

    /// All edges colored `color`.
    static Coloring uniform(std::size_t r, std::size_t num_edges, Color color = 1);

    std::size_t r() const { return r_; }
    std::size_t size() const { return colors_.size(); }
    Color operator[](EdgeIndex e) const { return colors_[e]; }
    const std::vector<Color> & colors() const { return colors_; }

    /// Throws std::invalid_argument unless aligned with `graph`.
    void check_against(const Hypergraph & graph) const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::size_t r_ = 1;
    std::vector<Color> colors_;
};

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    Vertex find(Vertex v);
    /// Returns the root of the merged set.
    Vertex unite(Vertex a, Vertex b);
    std::size_t size_of(Vertex v) { return size_[find(v)]; }

private:
    std::vector<Vertex> parent_;
    std::vector<std::size_t> size_;
};

struct ComponentDecomposition {
    Color color = 1;
    /// Each component sorted ascending; components ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components;
    /// Vertices incident to at least one edge of `color`, ascending.
    std::vector<Vertex> covered;

    std::size_t largest_size() const;
    const std::vector<Vertex> * largest() const;
};

/// All pairs contained in some edge, as a 2-uniform hypergraph on the same
/// vertex set.
Hypergraph shadow_graph(const Hypergraph & graph);

/// Components of the color-c subhypergraph. Vertices with no color-c edge are
/// omitted.
ComponentDecomposition components(const Hypergraph & graph, const Coloring & coloring, Color color);

/// Same, but every vertex with no color-c edge is its own singleton component.
ComponentDecomposition components_with_singletons(const Hypergraph & graph, const Coloring & coloring, Color color);

/// Components of the whole (uncolored) hypergraph, isolated vertices omitted.
std::vector<std::vector<Vertex>> components(const Hypergraph & graph);

bool is_connected(const Hypergraph & graph);

/// Hypergraph on a vertex subset, relabelled to 0..|vertices|-1.
struct InducedSubgraph {
    Hypergraph graph;
    /// new id -> original id
    std::vector<Vertex> vertices;
    /// new edge index -> original edge index
    std::vector<EdgeIndex> edges;
};

InducedSubgraph induced_subgraph(const Hypergraph & graph, std::span<const Vertex> vertices);

/// Induced on the vertices incident to at least one edge.
InducedSubgraph one_core(const Hypergraph & graph);

/// Color-c edges over the same vertex set, with their original indices.
struct ColorClass {
    Hypergraph graph;
    std::vector<EdgeIndex> original;
};

ColorClass color_class(const Hypergraph & graph, const Coloring & coloring, Color color);

/// Restricted link graph L(v, U): the (k-1)-sets S inside U with S + v an
/// edge. Vertex ids are kept; `ground` lists U.
struct LinkGraph {
    Vertex origin = 0;
    std::vector<Vertex> ground;
    Hypergraph graph;
    /// Inherited colors, present when the host coloring was supplied.
    std::optional<Coloring> coloring;
};

LinkGraph link_graph(const Hypergraph & graph, Vertex origin, std::span<const Vertex> ground,
    const Coloring * coloring = nullptr);
LinkGraph link_graph(const Hypergraph & graph, Vertex origin, const Coloring * coloring = nullptr);

/// d(v, U) = number of (k-1)-sets S of U \ {v} with S + v an edge.
std::size_t degree(const Hypergraph & graph, Vertex v, std::span<const Vertex> ground);
/// d(v, V \ {v}).
std::size_t degree(const Hypergraph & graph, Vertex v);
std::size_t min_degree(const Hypergraph & graph);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k);

std::vector<Vertex> all_vertices(std::size_t n);

/// Vertex classes V_1..V_t (stored 0-based).
using Partition = std::vector<std::vector<Vertex>>;

/// Throws std::invalid_argument unless the classes are pairwise disjoint,
/// nonempty and inside [0, n). With `cover`, they must also union to [0, n).
void check_partition(const Partition & partition, std::size_t n, bool cover);

/// Part index of each vertex, or -1 when uncovered.
std::vector<std::int64_t> part_of(const Partition & partition, std::size_t n);

} // namespace hrl
