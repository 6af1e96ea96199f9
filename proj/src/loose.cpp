#include <hrl/loose.hpp>
#include <hrl/rng.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace hrl::loose {

namespace {

constexpr double tolerance = 1e-9;

void check_indices(const Hypergraph & graph, const std::vector<EdgeIndex> & edges)
{
    for (EdgeIndex e : edges)
        if (e >= graph.num_edges())
            throw std::invalid_argument("edge index " + std::to_string(e) + " out of range");
}

std::vector<Vertex> intersection(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(std::span<const Vertex> edge, Vertex v) { return std::binary_search(edge.begin(), edge.end(), v); }

std::size_t floor_tol(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::floor(x + tolerance)); }
std::size_t ceil_tol(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::ceil(x - tolerance)); }

/// Vertex order for a loose path given its junctions j_0..j_ℓ (endpoints
/// included).
std::vector<Vertex> path_vertices(const Hypergraph & graph, const std::vector<EdgeIndex> & edges,
    const std::vector<Vertex> & junctions)
{
    std::vector<Vertex> out{junctions.front()};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (Vertex v : graph.edge(edges[i]))
            if (v != junctions[i] && v != junctions[i + 1])
                out.push_back(v);
        out.push_back(junctions[i + 1]);
    }
    return out;
}

} // namespace

bool is_loose_cycle(const Hypergraph & graph, const std::vector<EdgeIndex> & edges)
{
    check_indices(graph, edges);
    std::size_t l = edges.size(), k = graph.k();
    if (l == 0)
        return false;
    if (l == 1)
        return k == 2;
    if (l == 2)
        return k >= 3 && intersection(graph.edge(edges[0]), graph.edge(edges[1])).size() == 2;
    std::vector<Vertex> junction(l);
    for (std::size_t i = 0; i < l; ++i) {
        auto shared = intersection(graph.edge(edges[(i + l - 1) % l]), graph.edge(edges[i]));
        if (shared.size() != 1)
            return false;
        junction[i] = shared[0];
    }
    for (std::size_t i = 0; i < l; ++i)
        if (junction[i] == junction[(i + 1) % l])
            return false;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 2; j < l; ++j)
            if (!(i == 0 && j == l - 1) && !intersection(graph.edge(edges[i]), graph.edge(edges[j])).empty())
                return false;
    return true;
}

bool is_loose_path(const Hypergraph & graph, const std::vector<EdgeIndex> & edges)
{
    check_indices(graph, edges);
    std::size_t l = edges.size();
    if (l == 0)
        return false;
    std::vector<Vertex> junction;
    for (std::size_t i = 1; i < l; ++i) {
        auto shared = intersection(graph.edge(edges[i - 1]), graph.edge(edges[i]));
        if (shared.size() != 1)
            return false;
        junction.push_back(shared[0]);
    }
    for (std::size_t i = 1; i < junction.size(); ++i)
        if (junction[i] == junction[i - 1])
            return false;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 2; j < l; ++j)
            if (!intersection(graph.edge(edges[i]), graph.edge(edges[j])).empty())
                return false;
    return true;
}

LooseCycle make_cycle(const Hypergraph & graph, const std::vector<EdgeIndex> & edges)
{
    if (!is_loose_cycle(graph, edges))
        throw std::invalid_argument("edge sequence is not a loose cycle");
    LooseCycle out{edges, {}};
    std::size_t l = edges.size();
    if (l == 1) {
        auto e = graph.edge(edges[0]);
        out.vertices.assign(e.begin(), e.end());
        return out;
    }
    if (l == 2) {
        auto shared = intersection(graph.edge(edges[0]), graph.edge(edges[1]));
        out.vertices.push_back(shared[0]);
        for (Vertex v : graph.edge(edges[0]))
            if (v != shared[0] && v != shared[1])
                out.vertices.push_back(v);
        out.vertices.push_back(shared[1]);
        for (Vertex v : graph.edge(edges[1]))
            if (v != shared[0] && v != shared[1])
                out.vertices.push_back(v);
        return out;
    }
    std::vector<Vertex> junction(l);
    for (std::size_t i = 0; i < l; ++i)
        junction[i] = intersection(graph.edge(edges[(i + l - 1) % l]), graph.edge(edges[i]))[0];
    for (std::size_t i = 0; i < l; ++i) {
        out.vertices.push_back(junction[i]);
        for (Vertex v : graph.edge(edges[i]))
            if (v != junction[i] && v != junction[(i + 1) % l])
                out.vertices.push_back(v);
    }
    return out;
}

LoosePath make_path(const Hypergraph & graph, const std::vector<EdgeIndex> & edges, std::optional<Vertex> start)
{
    if (!is_loose_path(graph, edges))
        throw std::invalid_argument("edge sequence is not a loose path");
    std::size_t l = edges.size();
    std::vector<Vertex> junctions;
    auto first = graph.edge(edges[0]);
    std::optional<Vertex> second;
    if (l > 1)
        second = intersection(first, graph.edge(edges[1]))[0];
    Vertex begin = first[0] == second ? first[1] : first[0];
    if (start) {
        if (!contains(first, *start) || start == second)
            throw std::invalid_argument("start vertex is not an end of the path");
        begin = *start;
    }
    junctions.push_back(begin);
    for (std::size_t i = 1; i < l; ++i)
        junctions.push_back(intersection(graph.edge(edges[i - 1]), graph.edge(edges[i]))[0]);
    auto last = graph.edge(edges[l - 1]);
    Vertex end = 0;
    for (auto it = last.rbegin(); it != last.rend(); ++it)
        if (*it != junctions.back()) {
            end = *it;
            break;
        }
    junctions.push_back(end);
    return {edges, path_vertices(graph, edges, junctions)};
}

namespace {

/// Backtracking over loose cycles of three or more edges. The exact mode
/// anchors each cycle at its smallest edge index and breaks the reflection by
/// requiring the second edge's index below the last one's.
class CycleSearch {
public:
    CycleSearch(const Hypergraph & graph, const std::vector<char> & allowed, std::uint64_t max_nodes) :
        g_(graph), allowed_(allowed), max_nodes_(max_nodes), incident_(graph.n()), used_(graph.n(), 0),
        in_path_(graph.num_edges(), 0)
    {
        std::vector<char> covered(graph.n(), 0);
        for (EdgeIndex e = 0; e < graph.num_edges(); ++e)
            if (allowed_[e])
                for (Vertex v : graph.edge(e)) {
                    incident_[v].push_back(e);
                    covered[v] = 1;
                }
        covered_ = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
        std::size_t k = graph.k();
        cap_ = covered_ / (k - 1) * (k - 1);
    }

    void short_cycles()
    {
        std::size_t k = g_.k();
        for (EdgeIndex e = 0; e < g_.num_edges(); ++e) {
            if (!allowed_[e])
                continue;
            if (k == 2) {
                offer({e});
                continue;
            }
            for (Vertex v : g_.edge(e))
                for (EdgeIndex f : incident_[v])
                    if (f > e && intersection(g_.edge(e), g_.edge(f)).size() == 2)
                        offer({e, f});
        }
    }

    void exact()
    {
        short_cycles();
        for (EdgeIndex e0 = 0; e0 < g_.num_edges() && !done(); ++e0)
            if (allowed_[e0])
                anchor(e0, nullptr);
    }

    void random(std::size_t attempts, std::uint64_t seed, std::uint64_t nodes_per_attempt)
    {
        short_cycles();
        std::vector<EdgeIndex> pool;
        for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
            if (allowed_[e])
                pool.push_back(e);
        if (pool.empty())
            return;
        for (std::size_t a = 0; a < attempts && best_vertices_ < cap_; ++a) {
            auto rng = derive_stream(seed, a);
            attempt_limit_ = nodes_ + nodes_per_attempt;
            anchor(pool[uniform_below(rng, pool.size())], &rng);
        }
    }

    std::optional<LooseCycle> best() const
    {
        if (best_edges_.empty())
            return std::nullopt;
        return make_cycle(g_, best_edges_);
    }
    bool incomplete() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool done() const { return aborted_ || best_vertices_ >= cap_; }

    void offer(std::vector<EdgeIndex> edges)
    {
        std::size_t vertices = edges.size() * (g_.k() - 1);
        if (edges.size() == 1)
            vertices = 2;
        if (vertices > best_vertices_) {
            best_vertices_ = vertices;
            best_edges_ = std::move(edges);
        }
    }

    void anchor(EdgeIndex e0, SplitMix64 * rng)
    {
        rng_ = rng;
        anchor_ = e0;
        auto vs = g_.edge(e0);
        for (Vertex v : vs)
            used_[v] = 1;
        path_ = {e0};
        in_path_[e0] = 1;
        for (Vertex j0 : vs)
            for (Vertex j1 : vs) {
                if (j0 == j1 || done())
                    continue;
                start_ = j0;
                extend(j1, vs.size());
            }
        in_path_[e0] = 0;
        for (Vertex v : vs)
            used_[v] = 0;
    }

    bool admissible(EdgeIndex f) const { return !in_path_[f] && (rng_ || f > anchor_); }

    void extend(Vertex current, std::size_t used_count)
    {
        if (done() || (rng_ && nodes_ >= attempt_limit_))
            return;
        if (++nodes_ >= max_nodes_) {
            aborted_ = true;
            return;
        }
        std::size_t k = g_.k();
        std::size_t placed = path_.size();
        std::size_t free = covered_ - used_count;
        if ((placed + (free + 1) / (k - 1)) * (k - 1) <= best_vertices_)
            return;

        std::vector<EdgeIndex> options = incident_[current];
        if (rng_)
            shuffle(std::span<EdgeIndex>(options), *rng_);

        if (placed >= 2) {
            for (EdgeIndex f : options) {
                if (!admissible(f) || !contains(g_.edge(f), start_))
                    continue;
                if (!rng_ && f < path_[1])
                    continue;
                bool fresh = true;
                for (Vertex v : g_.edge(f))
                    if (v != current && v != start_ && used_[v])
                        fresh = false;
                if (fresh) {
                    auto cycle = path_;
                    cycle.push_back(f);
                    offer(std::move(cycle));
                }
            }
        }

        for (EdgeIndex f : options) {
            if (done())
                return;
            if (!admissible(f) || contains(g_.edge(f), start_))
                continue;
            bool fresh = true;
            for (Vertex v : g_.edge(f))
                if (v != current && used_[v])
                    fresh = false;
            if (!fresh)
                continue;
            for (Vertex v : g_.edge(f))
                used_[v] = 1;
            path_.push_back(f);
            in_path_[f] = 1;
            for (Vertex next : g_.edge(f))
                if (next != current)
                    extend(next, used_count + k - 1);
            in_path_[f] = 0;
            path_.pop_back();
            for (Vertex v : g_.edge(f))
                if (v != current)
                    used_[v] = 0;
        }
    }

    const Hypergraph & g_;
    const std::vector<char> & allowed_;
    std::uint64_t max_nodes_;
    std::vector<std::vector<EdgeIndex>> incident_;
    std::vector<char> used_;
    std::vector<char> in_path_;
    std::size_t covered_ = 0;
    std::size_t cap_ = 0;

    SplitMix64 * rng_ = nullptr;
    std::uint64_t attempt_limit_ = 0;
    EdgeIndex anchor_ = 0;
    Vertex start_ = 0;
    std::vector<EdgeIndex> path_;

    std::size_t best_vertices_ = 0;
    std::vector<EdgeIndex> best_edges_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

std::vector<char> allowed_edges(const Hypergraph & graph, const std::optional<ColorFilter> & filter)
{
    std::vector<char> allowed(graph.num_edges(), 1);
    if (filter && filter->coloring) {
        filter->coloring->check_against(graph);
        for (EdgeIndex e = 0; e < graph.num_edges(); ++e)
            allowed[e] = (*filter->coloring)[e] == filter->color;
    }
    return allowed;
}

} // namespace

CycleSearchResult longest_loose_cycle_exact(const Hypergraph & graph, std::optional<ColorFilter> filter,
    std::uint64_t max_nodes)
{
    auto allowed = allowed_edges(graph, filter);
    CycleSearch search(graph, allowed, max_nodes);
    search.exact();
    return {search.best(), search.incomplete() ? SearchStatus::incomplete : SearchStatus::complete, search.nodes()};
}

CycleSearchResult longest_loose_cycle_heuristic(const Hypergraph & graph, std::optional<ColorFilter> filter,
    std::size_t attempts, std::uint64_t seed)
{
    auto allowed = allowed_edges(graph, filter);
    CycleSearch search(graph, allowed, std::numeric_limits<std::uint64_t>::max());
    search.random(attempts, seed, 20000);
    return {search.best(), SearchStatus::incomplete, search.nodes()};
}

bool spans_no_edge(const Hypergraph & graph, const Partition & sets)
{
    if (sets.size() != graph.k())
        throw std::invalid_argument("need one set per edge position");
    std::vector<std::int64_t> slot(graph.n(), -1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (Vertex v : sets[i]) {
            if (v >= graph.n() || slot[v] != -1)
                throw std::invalid_argument("witness sets must be disjoint vertex sets");
            slot[v] = static_cast<std::int64_t>(i);
        }
    std::vector<char> hit(sets.size());
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        std::size_t count = 0;
        for (Vertex v : graph.edge(e))
            if (slot[v] >= 0 && !hit[slot[v]]) {
                hit[slot[v]] = 1;
                ++count;
            }
        if (count == sets.size())
            return false;
    }
    return true;
}

namespace {

class PathDfs {
public:
    enum class State : std::uint8_t { outside, unexplored, rejected, on_path };

    PathDfs(const Hypergraph & graph, const Partition & parts) :
        g_(graph), parts_(parts), k_(graph.k()), part_(part_of(parts, graph.n())),
        state_(graph.n(), State::outside), star_(k_, 0), prime_(k_, 0)
    {
        for (std::size_t i = 0; i < k_; ++i) {
            for (Vertex v : parts[i])
                state_[v] = State::unexplored;
            star_[i] = parts[i].size();
        }
        transversal_.assign(graph.num_edges(), 0);
        std::vector<char> seen(k_);
        for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
            std::fill(seen.begin(), seen.end(), 0);
            bool ok = true;
            for (Vertex v : graph.edge(e)) {
                auto p = part_[v];
                if (p < 0 || seen[p]) {
                    ok = false;
                    break;
                }
                seen[p] = 1;
            }
            transversal_[e] = ok;
        }
        m_ = k_ == 2 ? 2 * parts[0].size() : parts[1].size();
        offset_ = static_cast<std::int64_t>(m_) - static_cast<std::int64_t>(parts[0].size() + parts[k_ - 1].size());
    }

    PathOrWitness run(double zeta)
    {
        PathOrWitness out;
        auto first = std::min_element(parts_[0].begin(), parts_[0].end());
        if (first != parts_[0].end()) {
            take(*first);
            junctions_ = {*first};
        }
        while (!junctions_.empty()) {
            ++out.trace.steps;
            step(out.trace);
            if (!junctions_.empty())
                check_identities();
            if (edges_.size() > best_edges_.size()) {
                best_edges_ = edges_;
                best_junctions_ = junctions_;
            }
            if (!stage_ && (prime_[0] == star_[0] || prime_[k_ - 1] == star_[k_ - 1])) {
                out.trace.balanced_stage = out.trace.steps;
                stage_ = snapshot(prime_[0] == star_[0]);
            }
        }
        out.trace.longest_path = best_edges_.size();

        double bound = (1.0 - 4.0 * zeta) * static_cast<double>(m_) - 2.0;
        bool long_enough = static_cast<double>(best_edges_.size()) >= bound - tolerance;
        if (long_enough && !best_edges_.empty()) {
            out.path = LoosePath{best_edges_, path_vertices(g_, best_edges_, best_junctions_)};
            return out;
        }

        std::size_t width = std::max<std::size_t>(ceil_tol(zeta * static_cast<double>(m_)), 1);
        std::vector<Partition> candidates;
        if (stage_)
            candidates.push_back(*stage_);
        candidates.push_back(snapshot_unexplored());
        for (auto & candidate : candidates) {
            if (std::any_of(candidate.begin(), candidate.end(), [&](const auto & s) { return s.size() < width; }))
                continue;
            for (auto & s : candidate)
                s.resize(width);
            if (spans_no_edge(g_, candidate)) {
                out.witness = std::move(candidate);
                return out;
            }
        }
        if (long_enough) {
            out.path = LoosePath{};
            return out;
        }
        throw std::logic_error("path search ended with a short path (" + std::to_string(best_edges_.size())
            + " edges) and no verified empty witness");
    }

private:
    void take(Vertex v)
    {
        --star_[part_[v]];
        state_[v] = State::on_path;
    }

    /// First edge through `end` whose other vertices are all unexplored.
    std::optional<EdgeIndex> extension(Vertex end) const
    {
        for (EdgeIndex f : g_.incident(end)) {
            if (!transversal_[f])
                continue;
            bool fresh = true;
            for (Vertex v : g_.edge(f))
                if (v != end && state_[v] != State::unexplored)
                    fresh = false;
            if (fresh)
                return f;
        }
        return std::nullopt;
    }

    Vertex vertex_in(EdgeIndex e, std::size_t part) const
    {
        for (Vertex v : g_.edge(e))
            if (static_cast<std::size_t>(part_[v]) == part)
                return v;
        throw std::logic_error("edge misses a part");
    }

    void push_edge(EdgeIndex f, Vertex from)
    {
        for (Vertex v : g_.edge(f))
            if (v != from)
                take(v);
        std::size_t next_part = static_cast<std::size_t>(part_[from]) == 0 ? k_ - 1 : 0;
        edges_.push_back(f);
        junctions_.push_back(vertex_in(f, next_part));
    }

    void step(DfsTrace & trace)
    {
        Vertex end = junctions_.back();
        if (auto f = extension(end)) {
            push_edge(*f, end);
            return;
        }
        if (edges_.empty()) {
            // a lone start vertex goes back to the unexplored pool
            state_[end] = State::unexplored;
            ++star_[part_[end]];
            junctions_.clear();
            for (EdgeIndex g = 0; g < g_.num_edges(); ++g) {
                if (!transversal_[g])
                    continue;
                bool fresh = true;
                for (Vertex v : g_.edge(g))
                    if (state_[v] != State::unexplored)
                        fresh = false;
                if (fresh) {
                    Vertex start = vertex_in(g, 0);
                    take(start);
                    junctions_ = {start};
                    push_edge(g, start);
                    ++trace.restarts;
                    return;
                }
            }
            return;
        }
        EdgeIndex last = edges_.back();
        Vertex keep = junctions_[junctions_.size() - 2];
        for (Vertex v : g_.edge(last))
            if (v != keep) {
                state_[v] = State::rejected;
                ++prime_[part_[v]];
            }
        edges_.pop_back();
        junctions_.pop_back();
    }

    void check_identities() const
    {
        for (std::size_t i = 1; i + 1 < k_; ++i) {
            if (prime_[i] != prime_[0] + prime_[k_ - 1])
                throw std::logic_error("rejected-vertex counts out of balance");
            if (static_cast<std::int64_t>(star_[i])
                != static_cast<std::int64_t>(star_[0] + star_[k_ - 1]) + 1 + offset_)
                throw std::logic_error("unexplored-vertex counts out of balance");
        }
    }

    std::vector<Vertex> members(std::size_t part, State state) const
    {
        std::vector<Vertex> out;
        for (Vertex v : parts_[part])
            if (state_[v] == state)
                out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// (X_1', X_2*, ..., X_k*) or (X_1*, ..., X_{k-1}*, X_k').
    Partition snapshot(bool first_side) const
    {
        Partition out;
        for (std::size_t i = 0; i < k_; ++i) {
            bool rejected = first_side ? i == 0 : i == k_ - 1;
            out.push_back(members(i, rejected ? State::rejected : State::unexplored));
        }
        return out;
    }

    Partition snapshot_unexplored() const
    {
        Partition out;
        for (std::size_t i = 0; i < k_; ++i)
            out.push_back(members(i, State::unexplored));
        return out;
    }

    const Hypergraph & g_;
    const Partition & parts_;
    std::size_t k_;
    std::vector<std::int64_t> part_;
    std::vector<State> state_;
    std::vector<std::size_t> star_, prime_;
    std::vector<char> transversal_;
    std::size_t m_ = 0;
    std::int64_t offset_ = 0;

    std::vector<EdgeIndex> edges_;
    std::vector<Vertex> junctions_;
    std::vector<EdgeIndex> best_edges_;
    std::vector<Vertex> best_junctions_;
    std::optional<Partition> stage_;
};

} // namespace

PathOrWitness dfs_loose_path_or_witness(const Hypergraph & graph, const Partition & parts, double zeta)
{
    std::size_t k = graph.k();
    if (parts.size() != k)
        throw std::invalid_argument("need exactly k parts");
    if (!(zeta >= 0.0 && zeta <= 1.0))
        throw std::invalid_argument("zeta must lie in [0, 1]");
    check_partition(parts, graph.n(), false);
    if (k == 2) {
        if (parts[0].size() != parts[1].size())
            throw std::invalid_argument("for k = 2 both parts need m/2 vertices");
    } else {
        std::size_t m = parts[1].size();
        for (std::size_t i = 1; i + 1 < k; ++i)
            if (parts[i].size() != m)
                throw std::invalid_argument("middle parts need m vertices each");
        if (parts[0].size() != m / 2 || parts[k - 1].size() != m / 2)
            throw std::invalid_argument("end parts need floor(m/2) vertices each");
    }
    return PathDfs(graph, parts).run(zeta);
}

std::optional<BergePath> shortest_berge_path(const Hypergraph & graph, Vertex u, Vertex v)
{
    if (u >= graph.n() || v >= graph.n())
        throw std::invalid_argument("vertex out of range");
    if (u == v)
        return BergePath{{}, {}, {u}, {u}};
    constexpr EdgeIndex none = std::numeric_limits<EdgeIndex>::max();
    std::vector<EdgeIndex> via(graph.n(), none);
    std::vector<Vertex> from(graph.n());
    std::vector<char> seen(graph.n(), 0), edge_seen(graph.num_edges(), 0);
    std::vector<Vertex> queue{u};
    seen[u] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[v]; ++head) {
        Vertex x = queue[head];
        for (EdgeIndex e : graph.incident(x)) {
            if (edge_seen[e])
                continue;
            edge_seen[e] = 1;
            for (Vertex y : graph.edge(e))
                if (!seen[y]) {
                    seen[y] = 1;
                    via[y] = e;
                    from[y] = x;
                    queue.push_back(y);
                }
        }
    }
    if (!seen[v])
        return std::nullopt;

    BergePath out;
    for (Vertex x = v; x != u; x = from[x]) {
        out.core.push_back(x);
        out.edges.push_back(via[x]);
    }
    out.core.push_back(u);
    std::reverse(out.core.begin(), out.core.end());
    std::reverse(out.edges.begin(), out.edges.end());
    for (EdgeIndex e : out.edges) {
        auto vs = graph.edge(e);
        out.edge_sets.emplace_back(vs.begin(), vs.end());
    }

    std::size_t l = out.edges.size();
    out.linear.push_back(u);
    for (std::size_t i = 0; i < l; ++i) {
        const auto & here = out.edge_sets[i];
        for (Vertex x : here) {
            bool shared_before = i > 0 && contains(out.edge_sets[i - 1], x);
            bool shared_after = i + 1 < l && contains(out.edge_sets[i + 1], x);
            if (!shared_before && !shared_after && x != u && x != v)
                out.linear.push_back(x);
        }
        if (i + 1 < l) {
            out.linear.push_back(out.core[i + 1]);
            for (Vertex x : intersection(here, out.edge_sets[i + 1]))
                if (x != out.core[i + 1])
                    out.linear.push_back(x);
        }
    }
    out.linear.push_back(v);
    return out;
}

namespace {

/// Layered search for the connector: layer i picks a host edge that is a
/// transversal of the clusters of E_i, shares the junction vertex with the
/// previous layer and uses fresh vertices in the other shared clusters.
class ConnectorSearch {
public:
    ConnectorSearch(const Hypergraph & host, const BergePath & path, const Partition & sets,
        const ConnectorOptions & options) :
        host_(host), path_(path), position_(host.n(), -1), layers_(path.edge_sets.size())
    {
        std::map<Vertex, std::size_t> slot;
        for (std::size_t j = 0; j < path.linear.size(); ++j)
            slot[path.linear[j]] = j;
        for (std::size_t j = 0; j < sets.size(); ++j)
            for (Vertex v : sets[j])
                position_[v] = static_cast<std::int64_t>(j);
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            for (Vertex c : path.edge_sets[i])
                layers_[i].positions.push_back(slot.at(c));
            std::sort(layers_[i].positions.begin(), layers_[i].positions.end());
            if (i + 1 < layers_.size()) {
                for (Vertex c : intersection(path.edge_sets[i], path.edge_sets[i + 1]))
                    layers_[i].shared_next.push_back(slot.at(c));
                std::sort(layers_[i].shared_next.begin(), layers_[i].shared_next.end());
            }
        }
        s_ = path.linear.size();
        rank_start_.assign(host.n(), 0);
        rank_end_.assign(host.n(), 0);
        for (std::size_t a = 0; a < sets.front().size(); ++a)
            rank_start_[sets.front()[a]] = a < options.start_rank.size() ? options.start_rank[a] : 0;
        for (std::size_t a = 0; a < sets.back().size(); ++a)
            rank_end_[sets.back()[a]] = a < options.end_rank.size() ? options.end_rank[a] : 0;
        starts_ = sets.front();
    }

    std::optional<std::pair<std::vector<EdgeIndex>, Vertex>> solve()
    {
        std::optional<std::pair<std::size_t, EdgeIndex>> best;
        Vertex best_start = 0;
        for (Vertex u : starts_) {
            for (EdgeIndex e : host_.incident(u)) {
                auto shared = fits(0, e, {});
                if (!shared)
                    continue;
                auto rest = layers_.size() == 1 ? std::optional<std::size_t>(rank_end_[at(e, s_ - 1)])
                                                : value(1, *shared);
                if (!rest)
                    continue;
                std::size_t total = rank_start_[u] + *rest;
                if (!best || total < best->first) {
                    best = std::pair{total, e};
                    best_start = u;
                }
            }
        }
        if (!best)
            return std::nullopt;
        std::vector<EdgeIndex> edges{best->second};
        auto shared = *fits(0, best->second, {});
        for (std::size_t i = 1; i < layers_.size(); ++i) {
            EdgeIndex e = memo_.at({i, shared})->second;
            edges.push_back(e);
            shared = *fits(i, e, shared);
        }
        return std::pair{edges, best_start};
    }

    /// Vertex of edge e lying in linear position j.
    Vertex at(EdgeIndex e, std::size_t j) const
    {
        for (Vertex v : host_.edge(e))
            if (position_[v] == static_cast<std::int64_t>(j))
                return v;
        throw std::logic_error("connector edge misses a cluster");
    }

private:
    struct Layer {
        std::vector<std::size_t> positions;
        std::vector<std::size_t> shared_next;
    };

    /// If e can serve as layer i after a previous edge whose vertices in the
    /// shared block were `previous` (junction first), the vertices e leaves in
    /// the next shared block.
    std::optional<std::vector<Vertex>> fits(std::size_t i, EdgeIndex e, const std::vector<Vertex> & previous) const
    {
        auto vs = host_.edge(e);
        std::vector<std::size_t> pos;
        for (Vertex v : vs) {
            if (position_[v] < 0)
                return std::nullopt;
            pos.push_back(static_cast<std::size_t>(position_[v]));
        }
        std::sort(pos.begin(), pos.end());
        if (pos != layers_[i].positions)
            return std::nullopt;
        if (i > 0) {
            const auto & block = layers_[i - 1].shared_next;
            for (std::size_t b = 0; b < block.size(); ++b) {
                Vertex mine = at(e, block[b]);
                if ((b == 0) != (mine == previous[b]))
                    return std::nullopt;
            }
        }
        std::vector<Vertex> next;
        for (std::size_t j : layers_[i].shared_next)
            next.push_back(at(e, j));
        return next;
    }

    /// Best end rank reachable from layer i given the previous shared block.
    std::optional<std::size_t> value(std::size_t i, const std::vector<Vertex> & previous)
    {
        auto key = std::pair{i, previous};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second ? std::optional<std::size_t>(it->second->first) : std::nullopt;
        std::optional<std::pair<std::size_t, EdgeIndex>> best;
        for (EdgeIndex e : host_.incident(previous.front())) {
            auto shared = fits(i, e, previous);
            if (!shared)
                continue;
            std::optional<std::size_t> rest
                = i + 1 == layers_.size() ? std::optional<std::size_t>(rank_end_[at(e, s_ - 1)]) : value(i + 1, *shared);
            if (rest && (!best || *rest < best->first))
                best = std::pair{*rest, e};
        }
        memo_[key] = best;
        return best ? std::optional<std::size_t>(best->first) : std::nullopt;
    }

    const Hypergraph & host_;
    const BergePath & path_;
    std::vector<std::int64_t> position_;
    std::vector<Layer> layers_;
    std::size_t s_ = 0;
    std::vector<std::size_t> rank_start_, rank_end_;
    std::vector<Vertex> starts_;
    std::map<std::pair<std::size_t, std::vector<Vertex>>, std::optional<std::pair<std::size_t, EdgeIndex>>> memo_;
};

std::string tuple_name(const std::vector<Vertex> & clusters)
{
    std::string out = "{";
    for (std::size_t i = 0; i < clusters.size(); ++i)
        out += (i ? "," : "") + std::to_string(clusters[i]);
    return out + "}";
}

/// Transversal edge counts of `host` per sorted cluster tuple.
std::map<std::vector<Vertex>, std::size_t> transversal_counts(const Hypergraph & host, const Partition & clusters)
{
    auto part = part_of(clusters, host.n());
    std::map<std::vector<Vertex>, std::size_t> out;
    std::vector<Vertex> tuple;
    for (EdgeIndex e = 0; e < host.num_edges(); ++e) {
        tuple.clear();
        for (Vertex v : host.edge(e)) {
            if (part[v] < 0)
                break;
            tuple.push_back(static_cast<Vertex>(part[v]));
        }
        if (tuple.size() != host.k())
            continue;
        std::sort(tuple.begin(), tuple.end());
        if (std::adjacent_find(tuple.begin(), tuple.end()) == tuple.end())
            ++out[tuple];
    }
    return out;
}

double tuple_density(const std::map<std::vector<Vertex>, std::size_t> & counts, const Partition & clusters,
    std::vector<Vertex> tuple)
{
    std::sort(tuple.begin(), tuple.end());
    double product = 1;
    for (Vertex c : tuple)
        product *= static_cast<double>(clusters[c].size());
    auto it = counts.find(tuple);
    return it == counts.end() || product == 0 ? 0.0 : static_cast<double>(it->second) / product;
}

} // namespace

LoosePath connect_along_berge_path(const Hypergraph & host, const Partition & clusters, const BergePath & path,
    const Partition & sets, double eps, const ConnectorOptions & options)
{
    std::size_t k = host.k();
    std::size_t l = path.edge_sets.size();
    if (l == 0)
        throw PreconditionError("Berge path has no edges");
    if (sets.size() != path.linear.size())
        throw std::invalid_argument("need one vertex set per cluster of the Berge path");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must lie in (0, 1)");
    check_partition(clusters, host.n(), false);
    for (const auto & e : path.edge_sets)
        if (e.size() != k || !std::is_sorted(e.begin(), e.end()))
            throw std::invalid_argument("Berge path edges must be sorted k-sets");
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 2; j < l; ++j)
            if (!intersection(path.edge_sets[i], path.edge_sets[j]).empty())
                throw PreconditionError("Berge path is not shortest: E_" + std::to_string(i + 1) + " and E_"
                    + std::to_string(j + 1) + " intersect");

    std::size_t s = path.linear.size();
    std::size_t m = clusters.at(path.linear.front()).size();
    for (Vertex c : path.linear)
        if (c >= clusters.size() || clusters[c].size() != m)
            throw PreconditionError("clusters on the Berge path must have equal size");
    double zm = std::pow(eps, 1.0 / static_cast<double>(k)) * static_cast<double>(m);
    for (std::size_t j = 0; j < s; ++j) {
        const auto & cluster = clusters[path.linear[j]];
        std::vector<Vertex> sorted_cluster = cluster;
        std::sort(sorted_cluster.begin(), sorted_cluster.end());
        for (Vertex v : sets[j])
            if (!std::binary_search(sorted_cluster.begin(), sorted_cluster.end(), v))
                throw PreconditionError("U_" + std::to_string(j + 1) + " is not inside its cluster");
        double need = (j == 0 || j + 1 == s) ? zm : 2 * zm;
        if (static_cast<double>(sets[j].size()) < need - tolerance * static_cast<double>(m))
            throw PreconditionError("|U_" + std::to_string(j + 1) + "| = " + std::to_string(sets[j].size())
                + " is below " + std::to_string(need));
    }
    auto counts = transversal_counts(host, clusters);
    for (const auto & e : path.edge_sets) {
        double d = tuple_density(counts, clusters, e);
        if (!(d > eps))
            throw PreconditionError("cluster tuple " + tuple_name(e) + " has density " + std::to_string(d)
                + " <= eps");
    }

    ConnectorSearch search(host, path, sets, options);
    auto found = search.solve();
    if (!found)
        throw std::logic_error("connector search found no loose path");
    auto & [edges, start] = *found;
    std::vector<Vertex> junctions{start};
    for (std::size_t i = 0; i + 1 < l; ++i)
        junctions.push_back(intersection(host.edge(edges[i]), host.edge(edges[i + 1]))[0]);
    junctions.push_back(search.at(edges.back(), s - 1));
    LoosePath out{edges, path_vertices(host, edges, junctions)};
    if (!is_loose_path(host, out.edges))
        throw std::logic_error("connector produced an invalid loose path");
    return out;
}

DiamondMatching find_connected_diamond_matching(const Hypergraph & graph, const Coloring & coloring, Color color,
    std::size_t target)
{
    coloring.check_against(graph);
    std::size_t k = graph.k();
    auto decomposition = components(graph, coloring, color);
    auto comps = decomposition.components;
    std::stable_sort(comps.begin(), comps.end(), [](const auto & a, const auto & b) { return a.size() > b.size(); });

    DiamondMatching best;
    for (const auto & comp : comps) {
        if (comp.size() < 2 * k - 2 || comp.size() <= best.vertex_count)
            continue;
        std::vector<EdgeIndex> pool;
        for (EdgeIndex e = 0; e < graph.num_edges(); ++e)
            if (coloring[e] == color && std::binary_search(comp.begin(), comp.end(), graph.edge(e)[0]))
                pool.push_back(e);

        for (int pass = 0; pass < 2; ++pass) {
            std::vector<EdgeIndex> order = pool;
            if (pass == 1)
                std::reverse(order.begin(), order.end());
            std::vector<char> used(graph.n(), 0);
            DiamondMatching current;
            current.component = comp;
            auto is_free = [&](EdgeIndex e, std::span<const Vertex> except) {
                for (Vertex v : graph.edge(e))
                    if (used[v] && std::find(except.begin(), except.end(), v) == except.end())
                        return false;
                return true;
            };
            for (EdgeIndex e : order) {
                if (target && current.vertex_count >= target)
                    break;
                if (!is_free(e, {}))
                    continue;
                if (k == 2) {
                    current.cycles.push_back({e});
                    for (Vertex v : graph.edge(e))
                        used[v] = 1;
                    current.vertex_count += 2;
                    continue;
                }
                std::optional<EdgeIndex> partner;
                for (Vertex v : graph.edge(e)) {
                    for (EdgeIndex f : graph.incident(v)) {
                        if (f == e || coloring[f] != color)
                            continue;
                        auto shared = intersection(graph.edge(e), graph.edge(f));
                        if (shared.size() == 2 && is_free(f, shared)
                            && (!partner || (pass == 0 ? f < *partner : f > *partner)))
                            partner = f;
                    }
                }
                if (!partner)
                    continue;
                for (Vertex v : graph.edge(e))
                    used[v] = 1;
                for (Vertex v : graph.edge(*partner))
                    used[v] = 1;
                current.cycles.push_back({std::min(e, *partner), std::max(e, *partner)});
                current.vertex_count += 2 * k - 2;
            }
            if (current.vertex_count > best.vertex_count)
                best = std::move(current);
        }
        if (target && best.vertex_count >= target)
            break;
    }
    return best;
}

std::string to_string(AssemblyStage stage)
{
    switch (stage) {
    case AssemblyStage::precondition: return "precondition";
    case AssemblyStage::long_paths: return "P_i construction";
    case AssemblyStage::pool_exhaustion: return "pool exhaustion";
    case AssemblyStage::connection: return "Q_i connection";
    case AssemblyStage::validation: return "validation";
    }
    return "unknown";
}

namespace {

struct PackingEdge {
    EdgeIndex edge;
    Vertex entry;
    Vertex exit;
    std::vector<Vertex> middles;
};

struct LongPath {
    LoosePath path;
    /// Junction positions (index into the path's junction sequence) of the
    /// entry-cluster vertices, in path order.
    std::vector<std::size_t> anchors;
    std::vector<Vertex> junctions;
};

} // namespace

AssemblyReport assemble_loose_cycle(const Hypergraph & graph, const Coloring & coloring, const Partition & clusters,
    const Hypergraph & cluster_graph, const Coloring & cluster_coloring,
    const std::vector<std::vector<EdgeIndex>> & packing, double eps)
{
    using Stage = AssemblyStage;
    std::size_t k = graph.k();
    if (packing.empty() || std::all_of(packing.begin(), packing.end(), [](const auto & c) { return c.empty(); }))
        throw std::invalid_argument("cycle packing is empty");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must lie in (0, 1)");
    coloring.check_against(graph);
    cluster_coloring.check_against(cluster_graph);
    if (cluster_graph.k() != k || cluster_graph.n() != clusters.size())
        throw AssemblyError(Stage::precondition, "cluster graph does not match the partition");
    check_partition(clusters, graph.n(), false);
    std::size_t m = clusters.front().size();
    for (const auto & c : clusters)
        if (c.size() != m)
            throw AssemblyError(Stage::precondition, "clusters must have equal size");

    // packing: loose cycles of one color, pairwise disjoint
    Color color = cluster_coloring[packing.front().front()];
    std::vector<PackingEdge> order;
    std::vector<char> cluster_used(clusters.size(), 0);
    for (const auto & cycle : packing) {
        if (!is_loose_cycle(cluster_graph, cycle) || cycle.size() < (k == 2 ? 3u : 2u))
            throw AssemblyError(Stage::precondition, "packing entry is not a loose cycle with enough edges");
        std::vector<Vertex> vertices;
        for (EdgeIndex e : cycle) {
            if (cluster_coloring[e] != color)
                throw AssemblyError(Stage::precondition, "packing is not monochromatic");
            for (Vertex c : cluster_graph.edge(e))
                vertices.push_back(c);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (Vertex c : vertices) {
            if (cluster_used[c])
                throw AssemblyError(Stage::precondition, "packing cycles are not vertex-disjoint");
            cluster_used[c] = 1;
        }
        std::size_t l = cycle.size();
        std::vector<Vertex> entry(l), exit(l);
        if (l == 2) {
            auto shared = intersection(cluster_graph.edge(cycle[0]), cluster_graph.edge(cycle[1]));
            entry = {shared[0], shared[1]};
            exit = {shared[1], shared[0]};
        } else {
            for (std::size_t i = 0; i < l; ++i)
                entry[i] = intersection(cluster_graph.edge(cycle[(i + l - 1) % l]), cluster_graph.edge(cycle[i]))[0];
            for (std::size_t i = 0; i < l; ++i)
                exit[i] = entry[(i + 1) % l];
        }
        for (std::size_t i = 0; i < l; ++i) {
            PackingEdge pe{cycle[i], entry[i], exit[i], {}};
            for (Vertex c : cluster_graph.edge(cycle[i]))
                if (c != entry[i] && c != exit[i])
                    pe.middles.push_back(c);
            order.push_back(std::move(pe));
        }
    }
    std::size_t f = order.size();

    // the monochromatic cluster component holding the packing
    auto cluster_class = color_class(cluster_graph, cluster_coloring, color);
    const Hypergraph & reduced = cluster_class.graph;
    std::vector<Vertex> component;
    for (const auto & comp : components(reduced))
        if (std::binary_search(comp.begin(), comp.end(), order.front().entry))
            component = comp;
    for (const auto & pe : order)
        for (Vertex c : cluster_graph.edge(pe.edge))
            if (!std::binary_search(component.begin(), component.end(), c))
                throw AssemblyError(Stage::precondition, "packing is not inside one monochromatic cluster component");

    auto host_class = color_class(graph, coloring, color);
    const Hypergraph & host = host_class.graph;
    auto counts = transversal_counts(host, clusters);
    for (EdgeIndex e = 0; e < reduced.num_edges(); ++e) {
        std::vector<Vertex> tuple(reduced.edge(e).begin(), reduced.edge(e).end());
        if (!std::binary_search(component.begin(), component.end(), tuple[0]))
            continue;
        double d = tuple_density(counts, clusters, tuple);
        if (!(d > eps))
            throw AssemblyError(Stage::precondition, "cluster edge " + tuple_name(tuple) + " has density "
                + std::to_string(d) + " <= eps");
    }

    double zeta = std::pow(eps, 1.0 / static_cast<double>(k));
    double zm = zeta * static_cast<double>(m);
    if (static_cast<double>(f) > zm + tolerance * static_cast<double>(m))
        throw AssemblyError(Stage::precondition, "packing has " + std::to_string(f) + " edges, more than eps^(1/k) m = "
            + std::to_string(zm));

    // long paths
    std::size_t half = m / 2;
    auto sorted = [&](Vertex c) {
        auto out = clusters[c];
        std::sort(out.begin(), out.end());
        return out;
    };
    double target_length = (1.0 - 4.0 * zeta) * static_cast<double>(m) - 2.0;
    std::size_t length = floor_tol(target_length);
    std::size_t width = std::max<std::size_t>(ceil_tol(zm), 1);
    if (length == 0)
        throw AssemblyError(Stage::long_paths, "(1 - 4 eps^(1/k)) m - 2 leaves no room for a path");
    std::vector<LongPath> long_paths;
    std::vector<char> on_long(graph.n(), 0);
    AssemblyReport report;
    report.color = color;
    report.packing_edges = f;
    for (std::size_t i = 0; i < f; ++i) {
        const auto & pe = order[i];
        Partition parts;
        auto entry = sorted(pe.entry), exit = sorted(pe.exit);
        parts.emplace_back(entry.begin(), entry.begin() + static_cast<std::ptrdiff_t>(half));
        for (Vertex c : pe.middles)
            parts.push_back(sorted(c));
        parts.emplace_back(exit.begin() + static_cast<std::ptrdiff_t>(half),
            exit.begin() + static_cast<std::ptrdiff_t>(2 * half));
        PathOrWitness result;
        try {
            result = dfs_loose_path_or_witness(host, parts, zeta);
        } catch (const std::exception & error) {
            throw AssemblyError(Stage::long_paths, "P_" + std::to_string(i + 1) + ": " + error.what());
        }
        if (!result.path || result.path->edges.size() < length)
            throw AssemblyError(Stage::long_paths, "P_" + std::to_string(i + 1) + " has fewer than "
                + std::to_string(length) + " edges (an empty witness exists)");
        LongPath lp;
        lp.path.edges.assign(result.path->edges.begin(), result.path->edges.begin() + static_cast<std::ptrdiff_t>(length));
        for (std::size_t t = 0; t <= length; ++t)
            lp.junctions.push_back(result.path->vertices[t * (k - 1)]);
        lp.path.vertices = path_vertices(host, lp.path.edges, lp.junctions);
        for (std::size_t t = 0; t <= length; t += 2)
            lp.anchors.push_back(t);
        if (lp.anchors.size() < 2 * width)
            throw AssemblyError(Stage::long_paths, "P_" + std::to_string(i + 1)
                + " is too short for disjoint end buffers of size " + std::to_string(width));
        for (Vertex v : lp.path.vertices)
            on_long[v] = 1;
        report.long_path_edges.push_back(length);
        long_paths.push_back(std::move(lp));
    }

    // connectors
    std::vector<char> used(graph.n(), 0);
    std::vector<std::size_t> pool_use(clusters.size(), 0);
    auto part = part_of(clusters, graph.n());
    std::vector<std::size_t> entry_anchor(f), exit_anchor(f);
    std::vector<std::vector<EdgeIndex>> connectors(f);
    for (std::size_t i = 0; i < f; ++i) {
        std::size_t next = (i + 1) % f;
        auto berge = shortest_berge_path(reduced, order[i].entry, order[next].entry);
        if (!berge || berge->edges.empty())
            throw AssemblyError(Stage::connection, "no Berge path between clusters " + std::to_string(order[i].entry)
                + " and " + std::to_string(order[next].entry));

        Partition sets;
        ConnectorOptions options;
        const auto & from = long_paths[i];
        const auto & to = long_paths[next];
        std::vector<Vertex> first;
        for (std::size_t a = from.anchors.size() - width; a < from.anchors.size(); ++a) {
            first.push_back(from.junctions[from.anchors[a]]);
            options.start_rank.push_back(from.anchors.size() - 1 - a);
        }
        sets.push_back(first);
        for (std::size_t j = 1; j + 1 < berge->linear.size(); ++j) {
            std::vector<Vertex> pool;
            for (Vertex v : sorted(berge->linear[j]))
                if (!on_long[v] && !used[v])
                    pool.push_back(v);
            if (static_cast<double>(pool.size()) < 2 * zm - tolerance * static_cast<double>(m))
                throw AssemblyError(Stage::pool_exhaustion, "cluster " + std::to_string(berge->linear[j]) + " has only "
                    + std::to_string(pool.size()) + " unused vertices left");
            sets.push_back(std::move(pool));
        }
        std::vector<Vertex> last;
        for (std::size_t a = 0; a < width; ++a) {
            last.push_back(to.junctions[to.anchors[a]]);
            options.end_rank.push_back(a);
        }
        sets.push_back(last);

        LoosePath q;
        try {
            q = connect_along_berge_path(host, clusters, *berge, sets, eps, options);
        } catch (const std::exception & error) {
            throw AssemblyError(Stage::connection, "Q_" + std::to_string(i + 1) + ": " + error.what());
        }
        Vertex start = q.vertices.front(), end = q.vertices.back();
        for (std::size_t a = 0; a < from.anchors.size(); ++a)
            if (from.junctions[from.anchors[a]] == start)
                exit_anchor[i] = from.anchors[a];
        for (std::size_t a = 0; a < to.anchors.size(); ++a)
            if (to.junctions[to.anchors[a]] == end)
                entry_anchor[next] = to.anchors[a];
        for (Vertex v : q.vertices)
            if (v != start && v != end) {
                used[v] = 1;
                ++pool_use[part[v]];
            }
        for (std::size_t c = 0; c < clusters.size(); ++c)
            if (pool_use[c] > 2 * (i + 1))
                throw std::logic_error("connectors took more than 2i vertices from one cluster pool");
        connectors[i] = q.edges;
        report.connector_edges.push_back(q.edges.size());
    }

    // splice
    std::vector<EdgeIndex> edges;
    for (std::size_t i = 0; i < f; ++i) {
        const auto & lp = long_paths[i];
        if (entry_anchor[i] >= exit_anchor[i])
            throw AssemblyError(Stage::validation, "entry and exit of P_" + std::to_string(i + 1) + " out of order");
        for (std::size_t t = entry_anchor[i]; t < exit_anchor[i]; ++t)
            edges.push_back(host_class.original[lp.path.edges[t]]);
        for (EdgeIndex e : connectors[i])
            edges.push_back(host_class.original[e]);
    }
    try {
        report.cycle = make_cycle(graph, edges);
    } catch (const std::invalid_argument & error) {
        throw AssemblyError(Stage::validation, error.what());
    }
    for (EdgeIndex e : report.cycle.edges)
        if (coloring[e] != color)
            throw AssemblyError(Stage::validation, "cycle edge has the wrong color");
    for (std::size_t len : report.long_path_edges)
        report.edge_bound += static_cast<double>(len) - 2 * zm;
    return report;
}

} // namespace hrl::loose
