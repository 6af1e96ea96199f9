#include <hrl/core.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrl {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

Hypergraph::Hypergraph(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges)
{
    *this = build(k, n, std::move(edges)).graph;
}

Hypergraph::Built Hypergraph::build(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges)
{
    if (k == 0)
        throw std::invalid_argument("uniformity must be positive");
    if (n > std::size_t{0xFFFFFFFFu})
        throw std::invalid_argument("vertex count exceeds 2^32 - 1");

    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto & e = edges[i];
        if (e.size() != k)
            throw std::invalid_argument("edge " + std::to_string(i) + " has " + std::to_string(e.size())
                + " vertices, expected " + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (std::size_t j = 0; j < k; ++j) {
            if (e[j] >= n)
                throw std::invalid_argument("edge " + std::to_string(i) + " has vertex " + std::to_string(e[j])
                    + " outside [0, " + std::to_string(n) + ")");
            if (j > 0 && e[j] == e[j - 1])
                throw std::invalid_argument("edge " + std::to_string(i) + " repeats vertex " + std::to_string(e[j]));
        }
    }

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
        [&](std::size_t a, std::size_t b) { return lex_less(edges[a], edges[b]); });

    Built built;
    Hypergraph & g = built.graph;
    g.k_ = k;
    g.n_ = n;
    g.flat_.reserve(edges.size() * k);
    built.canonical_index.assign(edges.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && edges[order[pos]] == edges[order[pos - 1]])
            throw std::invalid_argument("duplicate edge (input positions " + std::to_string(order[pos - 1]) + " and "
                + std::to_string(order[pos]) + ")");
        g.flat_.insert(g.flat_.end(), edges[order[pos]].begin(), edges[order[pos]].end());
        built.canonical_index[order[pos]] = pos;
    }
    g.index();
    return built;
}

void Hypergraph::index()
{
    offsets_.assign(n_ + 1, 0);
    for (Vertex v : flat_)
        ++offsets_[v + 1];
    for (std::size_t v = 0; v < n_; ++v)
        offsets_[v + 1] += offsets_[v];
    incidence_.assign(flat_.size(), 0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeIndex e = 0; e < num_edges(); ++e)
        for (Vertex v : edge(e))
            incidence_[cursor[v]++] = e;
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::span<const Vertex> vertices) const
{
    if (vertices.size() != k_)
        return std::nullopt;
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());
    std::size_t lo = 0, hi = num_edges();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (lex_less(edge(mid), key))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_edges() && std::equal(key.begin(), key.end(), edge(lo).begin()))
        return lo;
    return std::nullopt;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(num_edges());
    for (EdgeIndex e = 0; e < num_edges(); ++e)
        out.emplace_back(edge(e).begin(), edge(e).end());
    return out;
}

Coloring::Coloring(std::size_t r, std::vector<Color> colors) : r_(r), colors_(std::move(colors))
{
    if (r_ == 0)
        throw std::invalid_argument("number of colors must be positive");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] < 1 || colors_[i] > r_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has color " + std::to_string(colors_[i])
                + " outside [1, " + std::to_string(r_) + "]");
}

Coloring Coloring::uniform(std::size_t r, std::size_t num_edges, Color color)
{
    return Coloring(r, std::vector<Color>(num_edges, color));
}

void Coloring::check_against(const Hypergraph & graph) const
{
    if (colors_.size() != graph.num_edges())
        throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) + " entries but the hypergraph has "
            + std::to_string(graph.num_edges()) + " edges");
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1)
{
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex UnionFind::find(Vertex v)
{
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

Vertex UnionFind::unite(Vertex a, Vertex b)
{
    a = find(a);
    b = find(b);
    if (a == b)
        return a;
    if (size_[a] < size_[b])
        std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
}

std::size_t ComponentDecomposition::largest_size() const
{
    std::size_t best = 0;
    for (const auto & c : components)
        best = std::max(best, c.size());
    return best;
}

const std::vector<Vertex> * ComponentDecomposition::largest() const
{
    const std::vector<Vertex> * best = nullptr;
    for (const auto & c : components)
        if (!best || c.size() > best->size())
            best = &c;
    return best;
}

Hypergraph shadow_graph(const Hypergraph & graph)
{
    std::vector<std::vector<Vertex>> pairs;
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        auto vs = graph.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                pairs.push_back({vs[i], vs[j]});
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Hypergraph(2, graph.n(), std::move(pairs));
}

namespace {

/// Groups `members` by union-find root; components sorted internally and by
/// smallest vertex.
std::vector<std::vector<Vertex>> group_by_root(UnionFind & uf, std::span<const Vertex> members, std::size_t n)
{
    std::vector<std::size_t> slot(n, SIZE_MAX);
    std::vector<std::vector<Vertex>> groups;
    for (Vertex v : members) {
        Vertex root = uf.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = groups.size();
            groups.emplace_back();
        }
        groups[slot[root]].push_back(v);
    }
    // members ascending => each group ascending and groups ordered by first vertex
    return groups;
}

ComponentDecomposition decompose(const Hypergraph & graph, const Coloring & coloring, Color color, bool singletons)
{
    coloring.check_against(graph);
    if (color < 1 || color > coloring.r())
        throw std::invalid_argument("color " + std::to_string(color) + " outside [1, " + std::to_string(coloring.r()) + "]");

    UnionFind uf(graph.n());
    std::vector<char> touched(graph.n(), 0);
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        if (coloring[e] != color)
            continue;
        auto vs = graph.edge(e);
        for (Vertex v : vs)
            touched[v] = 1;
        for (std::size_t i = 1; i < vs.size(); ++i)
            uf.unite(vs[0], vs[i]);
    }

    ComponentDecomposition out;
    out.color = color;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < graph.n(); ++v) {
        if (touched[v])
            out.covered.push_back(v);
        if (touched[v] || singletons)
            members.push_back(v);
    }
    out.components = group_by_root(uf, members, graph.n());
    return out;
}

} // namespace

ComponentDecomposition components(const Hypergraph & graph, const Coloring & coloring, Color color)
{
    return decompose(graph, coloring, color, false);
}

ComponentDecomposition components_with_singletons(const Hypergraph & graph, const Coloring & coloring, Color color)
{
    return decompose(graph, coloring, color, true);
}

std::vector<std::vector<Vertex>> components(const Hypergraph & graph)
{
    return decompose(graph, Coloring::uniform(1, graph.num_edges()), 1, false).components;
}

bool is_connected(const Hypergraph & graph)
{
    if (graph.n() <= 1)
        return true;
    auto parts = decompose(graph, Coloring::uniform(1, graph.num_edges()), 1, true).components;
    return parts.size() == 1;
}

InducedSubgraph induced_subgraph(const Hypergraph & graph, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::int64_t> relabel(graph.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= graph.n())
            throw std::invalid_argument("vertex " + std::to_string(keep[i]) + " outside the hypergraph");
        relabel[keep[i]] = static_cast<std::int64_t>(i);
    }

    InducedSubgraph out;
    out.vertices = keep;
    std::vector<std::vector<Vertex>> edges;
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        auto vs = graph.edge(e);
        if (!std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return relabel[v] >= 0; }))
            continue;
        std::vector<Vertex> mapped;
        for (Vertex v : vs)
            mapped.push_back(static_cast<Vertex>(relabel[v]));
        edges.push_back(std::move(mapped));
        out.edges.push_back(e);
    }
    // relabelling is monotone, so canonical order is preserved
    out.graph = Hypergraph(graph.k(), keep.size(), std::move(edges));
    return out;
}

InducedSubgraph one_core(const Hypergraph & graph)
{
    std::vector<Vertex> covered;
    for (Vertex v = 0; v < graph.n(); ++v)
        if (graph.vertex_degree(v) > 0)
            covered.push_back(v);
    return induced_subgraph(graph, covered);
}

ColorClass color_class(const Hypergraph & graph, const Coloring & coloring, Color color)
{
    coloring.check_against(graph);
    ColorClass out;
    std::vector<std::vector<Vertex>> edges;
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        if (coloring[e] != color)
            continue;
        edges.emplace_back(graph.edge(e).begin(), graph.edge(e).end());
        out.original.push_back(e);
    }
    out.graph = Hypergraph(graph.k(), graph.n(), std::move(edges));
    return out;
}

LinkGraph link_graph(const Hypergraph & graph, Vertex origin, std::span<const Vertex> ground, const Coloring * coloring)
{
    if (origin >= graph.n())
        throw std::invalid_argument("origin vertex outside the hypergraph");
    if (graph.k() < 2)
        throw std::invalid_argument("link graph needs uniformity at least 2");
    std::vector<char> in_ground(graph.n(), 0);
    for (Vertex u : ground) {
        if (u >= graph.n())
            throw std::invalid_argument("ground vertex outside the hypergraph");
        if (u == origin)
            throw std::invalid_argument("origin vertex lies in the ground set");
        in_ground[u] = 1;
    }
    if (coloring)
        coloring->check_against(graph);

    LinkGraph out;
    out.origin = origin;
    out.ground.assign(ground.begin(), ground.end());
    std::sort(out.ground.begin(), out.ground.end());
    out.ground.erase(std::unique(out.ground.begin(), out.ground.end()), out.ground.end());

    std::vector<std::vector<Vertex>> edges;
    std::vector<Color> colors;
    for (EdgeIndex e : graph.incident(origin)) {
        std::vector<Vertex> rest;
        bool inside = true;
        for (Vertex v : graph.edge(e)) {
            if (v == origin)
                continue;
            if (!in_ground[v]) {
                inside = false;
                break;
            }
            rest.push_back(v);
        }
        if (!inside)
            continue;
        edges.push_back(std::move(rest));
        if (coloring)
            colors.push_back((*coloring)[e]);
    }
    // incident(origin) lists edges in canonical order and removing a common
    // vertex keeps lexicographic order, so `colors` stays aligned
    out.graph = Hypergraph(graph.k() - 1, graph.n(), std::move(edges));
    if (coloring)
        out.coloring = Coloring(coloring->r(), std::move(colors));
    return out;
}

LinkGraph link_graph(const Hypergraph & graph, Vertex origin, const Coloring * coloring)
{
    std::vector<Vertex> ground;
    for (Vertex v = 0; v < graph.n(); ++v)
        if (v != origin)
            ground.push_back(v);
    return link_graph(graph, origin, ground, coloring);
}

std::size_t degree(const Hypergraph & graph, Vertex v, std::span<const Vertex> ground)
{
    std::vector<char> in_ground(graph.n(), 0);
    for (Vertex u : ground)
        if (u != v)
            in_ground[u] = 1;
    std::size_t count = 0;
    for (EdgeIndex e : graph.incident(v)) {
        bool inside = true;
        for (Vertex u : graph.edge(e))
            if (u != v && !in_ground[u]) {
                inside = false;
                break;
            }
        count += inside ? 1 : 0;
    }
    return count;
}

std::size_t degree(const Hypergraph & graph, Vertex v)
{
    return graph.vertex_degree(v);
}

std::size_t min_degree(const Hypergraph & graph)
{
    if (graph.n() == 0)
        return 0;
    std::size_t best = SIZE_MAX;
    for (Vertex v = 0; v < graph.n(); ++v)
        best = std::min(best, graph.vertex_degree(v));
    return best;
}

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

std::vector<Vertex> all_vertices(std::size_t n)
{
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

void check_partition(const Partition & partition, std::size_t n, bool cover)
{
    std::vector<char> seen(n, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty())
            throw std::invalid_argument("part " + std::to_string(i + 1) + " is empty");
        for (Vertex v : partition[i]) {
            if (v >= n)
                throw std::invalid_argument("part " + std::to_string(i + 1) + " has vertex " + std::to_string(v)
                    + " outside [0, " + std::to_string(n) + ")");
            if (seen[v])
                throw std::invalid_argument("vertex " + std::to_string(v) + " appears in more than one part");
            seen[v] = 1;
            ++total;
        }
    }
    if (cover && total != n)
        throw std::invalid_argument("parts cover " + std::to_string(total) + " of " + std::to_string(n) + " vertices");
}

std::vector<std::int64_t> part_of(const Partition & partition, std::size_t n)
{
    std::vector<std::int64_t> out(n, -1);
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (Vertex v : partition[i])
            if (v < n)
                out[v] = static_cast<std::int64_t>(i);
    return out;
}

} // namespace hrl
