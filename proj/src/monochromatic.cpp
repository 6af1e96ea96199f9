#include <hrl/monochromatic.hpp>
#include <hrl/parallel.hpp>
#include <hrl/rng.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrl::mono {

McResult mc(const Hypergraph & graph, const Coloring & coloring)
{
    coloring.check_against(graph);
    McResult out;
    for (Color c = 1; c <= coloring.r(); ++c) {
        auto decomposition = components(graph, coloring, c);
        if (const auto * big = decomposition.largest(); big && big->size() > out.value) {
            out.value = big->size();
            out.witness_color = c;
            out.witness_component = *big;
        }
    }
    if (out.value == 0 && graph.n() > 0) {
        out.value = 1;
        out.witness_color = 1;
        out.witness_component = {0};
    }
    out.lower_bound = out.value;
    return out;
}

namespace {

/// Union-find without path compression so merges can be undone in LIFO order.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

    Vertex find(Vertex v) const
    {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }

    /// Merges and returns the size of the resulting set.
    std::size_t unite(Vertex a, Vertex b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return size_[a];
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        return size_[a];
    }

    std::size_t mark() const { return log_.size(); }

    void rollback(std::size_t mark)
    {
        while (log_.size() > mark) {
            Vertex child = log_.back();
            log_.pop_back();
            Vertex root = parent_[child];
            size_[root] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<Vertex> parent_;
    std::vector<std::size_t> size_;
    std::vector<Vertex> log_;
};

/// Edges in decreasing overlap with the vertices already covered by earlier
/// edges (ties: smaller index).
std::vector<EdgeIndex> overlap_order(const Hypergraph & graph)
{
    std::size_t m = graph.num_edges();
    std::vector<EdgeIndex> order;
    if (m == 0)
        return order;
    std::vector<char> placed(m, 0), covered(graph.n(), 0);
    std::vector<std::size_t> overlap(m, 0);
    EdgeIndex next = 0;
    for (std::size_t step = 0; step < m; ++step) {
        if (step > 0) {
            next = m;
            for (EdgeIndex e = 0; e < m; ++e)
                if (!placed[e] && (next == m || overlap[e] > overlap[next]))
                    next = e;
        }
        placed[next] = 1;
        order.push_back(next);
        for (Vertex v : graph.edge(next)) {
            if (covered[v])
                continue;
            covered[v] = 1;
            for (EdgeIndex f : graph.incident(v))
                ++overlap[f];
        }
    }
    return order;
}

void atomic_min(std::atomic<std::size_t> & target, std::size_t value)
{
    std::size_t current = target.load();
    while (value < current && !target.compare_exchange_weak(current, value)) {
    }
}

class ExactSearch {
public:
    ExactSearch(const Hypergraph & graph, std::size_t r, const SearchBudget & budget) :
        graph_(graph), r_(r), budget_(budget), order_(overlap_order(graph))
    {
        if (budget_.wall_clock.count() > 0)
            deadline_ = std::chrono::steady_clock::now() + budget_.wall_clock;
    }

    McResult run()
    {
        std::size_t m = order_.size();
        if (m == 0 || r_ == 1) {
            McResult out = mc(graph_, Coloring::uniform(std::max<std::size_t>(r_, 1), m));
            out.coloring = Coloring::uniform(std::max<std::size_t>(r_, 1), m);
            return out;
        }

        incumbent_.store(graph_.n() + 1);
        auto prefixes = make_prefixes();
        std::size_t workers = worker_count(budget_.shards);
        parallel_for(prefixes.size(), workers, [&](std::size_t i) {
            Worker worker(*this);
            worker.run_prefix(prefixes[i]);
        });

        McResult out;
        out.nodes = nodes_.load();
        std::size_t best = incumbent_.load();
        bool complete = !stopped_.load();
        if (complete) {
            // Replay sequentially for the first optimal coloring in search
            // order so the certificate is independent of scheduling.
            Worker worker(*this);
            auto first = worker.first_at_most(best);
            if (!first)
                throw std::logic_error("mc_r_exact: optimal value not reproducible");
            best_assignment_ = *first;
        }
        if (best_assignment_.empty()) {
            out.status = SearchStatus::incomplete;
            out.value = graph_.n();
            out.lower_bound = std::min(aborted_min_.load(), graph_.n());
            return out;
        }
        auto coloring = to_coloring(best_assignment_);
        out = mc(graph_, coloring);
        out.coloring = std::move(coloring);
        out.nodes = nodes_.load();
        out.status = complete ? SearchStatus::complete : SearchStatus::incomplete;
        out.lower_bound = complete ? out.value : std::min(out.value, aborted_min_.load());
        return out;
    }

private:
    struct Prefix {
        std::vector<Color> colors;
    };

    std::vector<Prefix> make_prefixes() const
    {
        std::size_t m = order_.size();
        std::size_t target = std::max<std::size_t>(4 * budget_.shards, 2);
        std::vector<Prefix> level{Prefix{}};
        std::size_t depth = 0;
        while (depth < m && (depth < 2 || level.size() < target)) {
            std::vector<Prefix> next;
            for (const auto & p : level) {
                Color used = p.colors.empty() ? 0 : *std::max_element(p.colors.begin(), p.colors.end());
                for (Color c = 1; c <= std::min<std::size_t>(r_, used + 1); ++c) {
                    Prefix q = p;
                    q.colors.push_back(c);
                    next.push_back(std::move(q));
                }
            }
            level = std::move(next);
            ++depth;
        }
        return level;
    }

    Coloring to_coloring(const std::vector<Color> & assignment) const
    {
        std::vector<Color> colors(order_.size());
        for (std::size_t pos = 0; pos < order_.size(); ++pos)
            colors[order_[pos]] = assignment[pos];
        return Coloring(r_, std::move(colors));
    }

    bool out_of_budget()
    {
        if (stopped_.load(std::memory_order_relaxed))
            return true;
        if (nodes_.load(std::memory_order_relaxed) >= budget_.max_nodes
            || (deadline_ && std::chrono::steady_clock::now() >= *deadline_)) {
            stopped_.store(true);
            return true;
        }
        return false;
    }

    class Worker {
    public:
        explicit Worker(ExactSearch & search) : s_(search), assignment_(search.order_.size(), 0)
        {
            for (std::size_t c = 0; c < s_.r_; ++c)
                forests_.emplace_back(s_.graph_.n());
        }

        void run_prefix(const Prefix & prefix)
        {
            std::vector<std::size_t> marks;
            std::size_t current = 0;
            Color used = 0;
            for (std::size_t pos = 0; pos < prefix.colors.size(); ++pos) {
                Color c = prefix.colors[pos];
                marks.push_back(forests_[c - 1].mark());
                current = std::max(current, add_edge(pos, c));
                assignment_[pos] = c;
                used = std::max(used, c);
            }
            if (s_.stopped_.load())
                atomic_min(s_.aborted_min_, current);
            else
                descend(prefix.colors.size(), used, current);
        }

        /// First complete assignment in search order with mc <= bound.
        std::optional<std::vector<Color>> first_at_most(std::size_t bound)
        {
            threshold_ = bound + 1;
            find_first_ = true;
            descend(0, 0, 0);
            return found_;
        }

    private:
        std::size_t add_edge(std::size_t pos, Color c)
        {
            auto vs = s_.graph_.edge(s_.order_[pos]);
            auto & forest = forests_[c - 1];
            std::size_t size = 0;
            for (std::size_t i = 1; i < vs.size(); ++i)
                size = forest.unite(vs[0], vs[i]);
            return vs.size() == 1 ? 1 : size;
        }

        std::size_t limit() const { return find_first_ ? threshold_ : s_.incumbent_.load(std::memory_order_relaxed); }

        void descend(std::size_t pos, Color used, std::size_t current)
        {
            if (find_first_) {
                if (found_)
                    return;
            } else {
                if (++local_nodes_ >= 256) {
                    s_.nodes_.fetch_add(local_nodes_);
                    local_nodes_ = 0;
                }
                if (s_.out_of_budget()) {
                    atomic_min(s_.aborted_min_, current);
                    return;
                }
            }
            if (current >= limit())
                return;
            if (pos == s_.order_.size()) {
                if (find_first_) {
                    found_ = assignment_;
                    return;
                }
                std::lock_guard lock(s_.best_mutex_);
                if (current < s_.incumbent_.load()) {
                    s_.incumbent_.store(current);
                    s_.best_assignment_ = assignment_;
                }
                return;
            }
            Color top = static_cast<Color>(std::min<std::size_t>(s_.r_, used + 1));
            for (Color c = 1; c <= top; ++c) {
                auto & forest = forests_[c - 1];
                std::size_t mark = forest.mark();
                std::size_t next = std::max(current, add_edge(pos, c));
                assignment_[pos] = c;
                descend(pos + 1, std::max(used, c), next);
                forest.rollback(mark);
                if (find_first_ ? found_.has_value() : s_.stopped_.load(std::memory_order_relaxed)) {
                    if (!find_first_)
                        atomic_min(s_.aborted_min_, current);
                    break;
                }
            }
            if (!find_first_ && pos == 0)
                s_.nodes_.fetch_add(local_nodes_), local_nodes_ = 0;
        }

        ExactSearch & s_;
        std::vector<RollbackUnionFind> forests_;
        std::vector<Color> assignment_;
        std::uint64_t local_nodes_ = 0;
        bool find_first_ = false;
        std::size_t threshold_ = 0;
        std::optional<std::vector<Color>> found_;

    public:
        ~Worker()
        {
            if (local_nodes_)
                s_.nodes_.fetch_add(local_nodes_);
        }
    };

    const Hypergraph & graph_;
    std::size_t r_;
    SearchBudget budget_;
    std::vector<EdgeIndex> order_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;

    std::atomic<std::size_t> incumbent_{0};
    std::atomic<std::size_t> aborted_min_{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
    std::mutex best_mutex_;
    std::vector<Color> best_assignment_;
};

} // namespace

McResult mc_r_exact(const Hypergraph & graph, std::size_t r, const SearchBudget & budget)
{
    if (r == 0)
        throw std::invalid_argument("mc_r needs r >= 1");
    if (budget.shards == 0 || budget.max_nodes == 0)
        throw std::invalid_argument("search budget values must be positive");
    return ExactSearch(graph, r, budget).run();
}

McResult mc_r_brute_force(const Hypergraph & graph, std::size_t r)
{
    if (r == 0)
        throw std::invalid_argument("mc_r needs r >= 1");
    std::size_t m = graph.num_edges();
    std::vector<Color> colors(m, 1);
    McResult best;
    best.value = std::numeric_limits<std::size_t>::max();
    while (true) {
        Coloring coloring(r, colors);
        auto result = mc(graph, coloring);
        ++best.nodes;
        if (result.value < best.value) {
            auto nodes = best.nodes;
            best = std::move(result);
            best.coloring = coloring;
            best.nodes = nodes;
        }
        std::size_t i = 0;
        while (i < m && colors[i] == r)
            colors[i++] = 1;
        if (i == m)
            break;
        ++colors[i];
    }
    best.lower_bound = best.value;
    return best;
}

namespace {

/// Components of every color class with a size histogram, supporting cheap
/// evaluation of single-edge recolorings.
class LocalState {
public:
    LocalState(const Hypergraph & graph, std::size_t r, std::vector<Color> colors) :
        g_(graph), r_(r), colors_(std::move(colors)), root_(r, std::vector<Vertex>(graph.n())),
        size_(r, std::vector<std::size_t>(graph.n(), 0)), histogram_(graph.n() + 1, 0), stamp_(graph.n(), 0)
    {
        for (Color c = 1; c <= r_; ++c)
            rebuild(c, +1);
    }

    struct Score {
        std::size_t largest = 0;
        std::uint64_t squares = 0;
        auto operator<=>(const Score &) const = default;
    };

    Score score() const { return {largest(), squares_}; }
    const std::vector<Color> & colors() const { return colors_; }

    std::size_t largest() const
    {
        for (std::size_t s = histogram_.size() - 1; s > 0; --s)
            if (histogram_[s] > 0)
                return s;
        return 0;
    }

    /// Score after recoloring e to `target`, plus whether the component
    /// structure changes.
    std::pair<Score, bool> evaluate(EdgeIndex e, Color target)
    {
        delta_.clear();
        Color source = colors_[e];
        auto vs = g_.edge(e);

        // merge in the target color
        std::vector<Vertex> roots;
        for (Vertex v : vs) {
            Vertex root = root_[target - 1][v];
            if (std::find(roots.begin(), roots.end(), root) == roots.end())
                roots.push_back(root);
        }
        bool changes = roots.size() > 1;
        if (changes) {
            std::size_t merged = 0;
            for (Vertex root : roots) {
                merged += size_[target - 1][root];
                delta_.emplace_back(size_[target - 1][root], -1);
            }
            delta_.emplace_back(merged, +1);
        }

        // possible split in the source color
        auto pieces = split_sizes(e, source);
        if (pieces.size() > 1) {
            changes = true;
            delta_.emplace_back(size_[source - 1][root_[source - 1][vs[0]]], -1);
            for (std::size_t p : pieces)
                delta_.emplace_back(p, +1);
        }

        std::int64_t squares = static_cast<std::int64_t>(squares_);
        for (auto [s, d] : delta_)
            squares += d * static_cast<std::int64_t>(s * s);
        std::size_t best = 0;
        for (std::size_t s = histogram_.size() - 1; s > 0 && best == 0; --s) {
            std::int64_t count = histogram_[s];
            for (auto [t, d] : delta_)
                if (t == s)
                    count += d;
            if (count > 0)
                best = s;
        }
        return {{best, static_cast<std::uint64_t>(squares)}, changes};
    }

    void apply(EdgeIndex e, Color target, bool structural)
    {
        Color source = colors_[e];
        if (!structural) {
            colors_[e] = target;
            return;
        }
        rebuild(source, -1);
        rebuild(target, -1);
        colors_[e] = target;
        rebuild(source, +1);
        rebuild(target, +1);
    }

    /// Random (color, vertex) inside a largest component.
    std::pair<Color, Vertex> pick_in_largest(SplitMix64 & rng) const
    {
        std::size_t top = largest();
        std::vector<std::pair<Color, Vertex>> candidates;
        for (Color c = 1; c <= r_; ++c)
            for (Vertex v = 0; v < g_.n(); ++v)
                if (size_[c - 1][root_[c - 1][v]] == top)
                    candidates.emplace_back(c, v);
        return candidates[uniform_below(rng, candidates.size())];
    }

    /// Random color-c edge through v, if any.
    std::optional<EdgeIndex> pick_edge(Color c, Vertex v, SplitMix64 & rng) const
    {
        std::vector<EdgeIndex> options;
        for (EdgeIndex e : g_.incident(v))
            if (colors_[e] == c)
                options.push_back(e);
        if (options.empty())
            return std::nullopt;
        return options[uniform_below(rng, options.size())];
    }

private:
    void rebuild(Color c, int sign)
    {
        auto & root = root_[c - 1];
        auto & size = size_[c - 1];
        if (sign < 0) {
            for (Vertex v = 0; v < g_.n(); ++v)
                if (root[v] == v) {
                    --histogram_[size[v]];
                    squares_ -= size[v] * size[v];
                }
            return;
        }
        UnionFind uf(g_.n());
        for (EdgeIndex e = 0; e < g_.num_edges(); ++e) {
            if (colors_[e] != c)
                continue;
            auto vs = g_.edge(e);
            for (std::size_t i = 1; i < vs.size(); ++i)
                uf.unite(vs[0], vs[i]);
        }
        std::fill(size.begin(), size.end(), 0);
        for (Vertex v = 0; v < g_.n(); ++v) {
            root[v] = uf.find(v);
            ++size[root[v]];
        }
        for (Vertex v = 0; v < g_.n(); ++v)
            if (root[v] == v) {
                ++histogram_[size[v]];
                squares_ += size[v] * size[v];
            }
    }

    /// Sizes of the pieces the color-c component through e falls into once e
    /// leaves color c. One entry when it stays connected.
    std::vector<std::size_t> split_sizes(EdgeIndex removed, Color c)
    {
        auto vs = g_.edge(removed);
        ++epoch_;
        std::vector<std::size_t> pieces;
        std::size_t reached_of_edge = 0;
        auto mark = [&](Vertex v) {
            stamp_[v] = epoch_;
            if (std::find(vs.begin(), vs.end(), v) != vs.end())
                ++reached_of_edge;
        };
        for (Vertex start : vs) {
            if (stamp_[start] == epoch_)
                continue;
            std::size_t piece = 0;
            std::vector<Vertex> queue{start};
            mark(start);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                ++piece;
                for (EdgeIndex f : g_.incident(u)) {
                    if (f == removed || colors_[f] != c)
                        continue;
                    for (Vertex w : g_.edge(f))
                        if (stamp_[w] != epoch_) {
                            mark(w);
                            queue.push_back(w);
                        }
                }
                if (pieces.empty() && reached_of_edge == vs.size())
                    return {size_[c - 1][root_[c - 1][vs[0]]]};
            }
            pieces.push_back(piece);
        }
        return pieces;
    }

    const Hypergraph & g_;
    std::size_t r_;
    std::vector<Color> colors_;
    std::vector<std::vector<Vertex>> root_;
    std::vector<std::vector<std::size_t>> size_;
    std::vector<std::int64_t> histogram_;
    std::uint64_t squares_ = 0;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<std::pair<std::size_t, std::int64_t>> delta_;
};

std::vector<Color> initial_coloring(const Hypergraph & graph, std::size_t r, std::size_t restart, SplitMix64 & rng)
{
    std::vector<Color> colors(graph.num_edges());
    if (restart % 2 == 0 || r == 1) {
        for (auto & c : colors)
            c = static_cast<Color>(1 + uniform_below(rng, r));
        return colors;
    }
    // vertex-partition coloring: r shuffled near-equal parts, each edge takes
    // the smallest part it misses (random color if it meets all of them)
    auto order = all_vertices(graph.n());
    shuffle(std::span<Vertex>(order), rng);
    std::vector<std::size_t> part(graph.n());
    for (std::size_t i = 0; i < order.size(); ++i)
        part[order[i]] = i * r / std::max<std::size_t>(graph.n(), 1);
    std::vector<char> hit(r);
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Vertex v : graph.edge(e))
            hit[part[v]] = 1;
        auto missed = static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
        colors[e] = missed < r ? static_cast<Color>(missed + 1) : static_cast<Color>(1 + uniform_below(rng, r));
    }
    return colors;
}

} // namespace

McResult mc_r_localsearch(const Hypergraph & graph, std::size_t r, std::size_t restarts, std::uint64_t seed,
    const LocalSearchOptions & options)
{
    if (r == 0)
        throw std::invalid_argument("mc_r needs r >= 1");
    std::size_t m = graph.num_edges();
    std::uint64_t tolerance = options.plateau_tolerance ? options.plateau_tolerance : 2 * static_cast<std::uint64_t>(m);

    std::optional<std::vector<Color>> best_colors;
    std::size_t best_value = std::numeric_limits<std::size_t>::max();
    std::uint64_t moves = 0;
    for (std::size_t restart = 0; restart < std::max<std::size_t>(restarts, 1); ++restart) {
        auto rng = derive_stream(seed, restart);
        LocalState state(graph, r, initial_coloring(graph, r, restart, rng));
        auto record = [&] {
            if (state.largest() < best_value) {
                best_value = state.largest();
                best_colors = state.colors();
            }
        };
        record();
        std::uint64_t stagnant = 0;
        while (r > 1 && m > 0 && stagnant < tolerance) {
            ++moves;
            auto [color, vertex] = state.pick_in_largest(rng);
            auto edge = state.pick_edge(color, vertex, rng);
            if (!edge) {
                ++stagnant;
                continue;
            }
            auto current = state.score();
            std::optional<std::tuple<LocalState::Score, Color, bool>> best_move;
            for (Color c = 1; c <= r; ++c) {
                if (c == color)
                    continue;
                auto [score, structural] = state.evaluate(*edge, c);
                if (!best_move || score < std::get<0>(*best_move))
                    best_move = std::tuple{score, c, structural};
            }
            auto [score, target, structural] = *best_move;
            if (score < current) {
                state.apply(*edge, target, structural);
                stagnant = 0;
                record();
            } else {
                if (score == current)
                    state.apply(*edge, target, structural);
                ++stagnant;
            }
        }
    }

    Coloring coloring(r, best_colors ? std::move(*best_colors) : std::vector<Color>(m, 1));
    McResult out = mc(graph, coloring);
    out.coloring = std::move(coloring);
    out.nodes = moves;
    out.lower_bound = 0;
    out.status = SearchStatus::incomplete;
    return out;
}

HighDegreeSubgraph high_degree_subgraph(const Hypergraph & graph, double eps, double eta)
{
    std::size_t n = graph.n(), k = graph.k();
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("eta must lie in (0, 1)");
    if (!(eps >= 0.0))
        throw std::invalid_argument("eps must be non-negative");
    if (k < 2 || n < k)
        throw std::invalid_argument("need n >= k >= 2");
    double eps_window = std::pow(1.0 - std::pow(0.5, 1.0 / static_cast<double>(k - 1)), 1.0 / (1.0 - eta));
    if (eps > eps_window)
        throw std::invalid_argument("eps exceeds (1 - (1/2)^(1/(k-1)))^(1/(1-eta)) = " + std::to_string(eps_window));
    auto total = static_cast<double>(binomial_coefficient(n, k));
    if (static_cast<double>(graph.num_edges()) < (1.0 - eps) * total - 1e-9 * total)
        throw std::invalid_argument("hypergraph has fewer than (1 - eps) C(n, k) edges");

    constexpr double slack = 1e-9;
    HighDegreeSubgraph out;
    auto full_degree = static_cast<double>(binomial_coefficient(n - 1, k - 1));
    out.degree_threshold = (1.0 - std::pow(eps, eta)) * full_degree;
    out.size_guarantee = (1.0 - std::pow(eps, 1.0 - eta)) * static_cast<double>(n);

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<double>(graph.vertex_degree(v)) >= out.degree_threshold - slack * full_degree)
            keep.push_back(v);
    out.subgraph = induced_subgraph(graph, keep);

    if (static_cast<double>(keep.size()) < out.size_guarantee - slack * static_cast<double>(n))
        throw std::logic_error("high-degree subgraph keeps " + std::to_string(keep.size()) + " vertices, fewer than "
            + std::to_string(out.size_guarantee));
    out.min_degree = min_degree(out.subgraph.graph);
    if (out.size_guarantee >= static_cast<double>(k * k) && keep.size() >= k) {
        out.min_degree_checked = true;
        auto reference = static_cast<double>(binomial_coefficient(keep.size() - 1, k - 1));
        double floor = (1.0 - 2.0 * static_cast<double>(k) * std::pow(eps, eta)) * reference;
        if (static_cast<double>(out.min_degree) < floor - slack * reference)
            throw std::logic_error("high-degree subgraph has minimum degree " + std::to_string(out.min_degree)
                + " below the guaranteed " + std::to_string(floor));
    }
    return out;
}

OneCoreCheck one_core_bound_check(const Hypergraph & graph, const Coloring & coloring, double eps)
{
    coloring.check_against(graph);
    std::size_t k = graph.k();
    if (coloring.r() <= k)
        throw std::invalid_argument("1-core bound needs k + l colors with l >= 1");
    if (!(eps >= 0.0))
        throw std::invalid_argument("eps must be non-negative");
    std::size_t ell = coloring.r() - k;

    OneCoreCheck out;
    out.per_color.assign(coloring.r(), 0);
    std::vector<std::vector<char>> covered(coloring.r(), std::vector<char>(graph.n(), 0));
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e)
        for (Vertex v : graph.edge(e)) {
            auto & slot = covered[coloring[e] - 1][v];
            if (!slot) {
                slot = 1;
                ++out.per_color[coloring[e] - 1];
            }
        }
    for (Color c = 1; c <= coloring.r(); ++c)
        if (out.per_color[c - 1] > out.largest) {
            out.largest = out.per_color[c - 1];
            out.color = c;
        }
    out.bound = (static_cast<double>(k) / static_cast<double>(k + ell) - std::sqrt(eps)) * static_cast<double>(graph.n());
    out.pass = static_cast<double>(out.largest) >= out.bound - 1e-9 * static_cast<double>(graph.n());
    return out;
}

} // namespace hrl::mono
