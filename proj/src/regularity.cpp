#include <hrl/generators.hpp>
#include <hrl/regularity.hpp>
#include <hrl/rng.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrl::reg {

namespace {

constexpr double tolerance = 1e-9;

std::size_t ceil_tol(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::ceil(x - tolerance)); }

/// Transversal edges of a set tuple, as positions inside each set.
struct TupleEdges {
    std::size_t k = 0;
    std::vector<std::size_t> sizes;
    /// k positions per edge, in set order
    std::vector<std::uint32_t> flat;

    std::size_t count() const { return k == 0 ? 0 : flat.size() / k; }
    double product() const
    {
        double out = 1;
        for (auto s : sizes)
            out *= static_cast<double>(s);
        return out;
    }
};

TupleEdges collect(const Hypergraph & graph, const Partition & sets)
{
    std::size_t k = graph.k();
    if (sets.size() != k)
        throw std::invalid_argument("need exactly k sets");
    std::vector<std::int64_t> set_of(graph.n(), -1);
    std::vector<std::uint32_t> position(graph.n(), 0);
    TupleEdges out;
    out.k = k;
    for (std::size_t i = 0; i < k; ++i) {
        out.sizes.push_back(sets[i].size());
        for (std::size_t a = 0; a < sets[i].size(); ++a) {
            Vertex v = sets[i][a];
            if (v >= graph.n())
                throw std::invalid_argument("vertex out of range");
            if (set_of[v] != -1)
                throw std::invalid_argument("sets must be pairwise disjoint");
            set_of[v] = static_cast<std::int64_t>(i);
            position[v] = static_cast<std::uint32_t>(a);
        }
    }
    std::vector<std::uint32_t> slot(k);
    std::vector<char> hit(k);
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (Vertex v : graph.edge(e)) {
            auto s = set_of[v];
            if (s < 0 || hit[s]) {
                ok = false;
                break;
            }
            hit[s] = 1;
            slot[s] = position[v];
        }
        if (ok)
            out.flat.insert(out.flat.end(), slot.begin(), slot.end());
    }
    return out;
}

std::uint64_t count_inside(const TupleEdges & t, const std::vector<std::vector<char>> & member)
{
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < t.count(); ++e) {
        bool inside = true;
        for (std::size_t i = 0; i < t.k && inside; ++i)
            inside = member[i][t.flat[e * t.k + i]];
        out += inside;
    }
    return out;
}

Partition to_sets(const Partition & sets, const std::vector<std::vector<char>> & member)
{
    Partition out(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t a = 0; a < sets[i].size(); ++a)
            if (member[i][a])
                out[i].push_back(sets[i][a]);
    return out;
}

void check_eps_p(double eps, double p)
{
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("eps must lie in (0, 1]");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("p must lie in (0, 1]");
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F && f)
{
    if (k > n)
        return;
    std::vector<std::size_t> current(k);
    std::iota(current.begin(), current.end(), std::size_t{0});
    while (true) {
        if (!f(current))
            return;
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j)
            current[j] = current[j - 1] + 1;
    }
}

} // namespace

DensityRecord density(const Hypergraph & graph, const Partition & sets, double p)
{
    if (!(p > 0.0))
        throw std::invalid_argument("p must be positive");
    auto t = collect(graph, sets);
    DensityRecord out;
    out.edges = t.count();
    out.product = t.product();
    out.dp = out.product == 0 ? 0.0 : static_cast<double>(out.edges) / (p * out.product);
    return out;
}

RegularityVerdict regularity_falsifier(const Hypergraph & graph, const Partition & sets, double eps, double p,
    std::uint64_t budget, std::uint64_t seed)
{
    check_eps_p(eps, p);
    if (budget == 0)
        throw std::invalid_argument("falsifier budget must be at least 1");
    auto t = collect(graph, sets);
    std::size_t k = t.k;
    double full = t.product();
    RegularityVerdict out;
    if (full == 0)
        return out;
    out.density = static_cast<double>(t.count()) / (p * full);
    double need = eps * full;

    auto judge = [&](std::uint64_t edges, double product) {
        double d = static_cast<double>(edges) / (p * product);
        return std::pair{d, std::abs(d - out.density)};
    };
    auto fail = [&](const std::vector<std::vector<char>> & member, double d, double deviation) {
        out.pass = false;
        out.witness = to_sets(sets, member);
        out.witness_density = d;
        out.deviation = deviation;
        auto recount = density(graph, *out.witness, p);
        if (!(std::abs(recount.dp - out.density) > eps))
            throw std::logic_error("falsifier witness does not reproduce on recount");
    };

    std::size_t total_bits = std::accumulate(t.sizes.begin(), t.sizes.end(), std::size_t{0});
    if (total_bits < 63 && (std::uint64_t{1} << total_bits) <= budget) {
        out.exhaustive = true;
        std::vector<std::uint64_t> mask(k, 1);
        std::size_t last = t.sizes[k - 1];
        std::vector<std::uint64_t> per_last(last);
        // odometer over nonempty masks of the first k-1 sets
        while (true) {
            std::fill(per_last.begin(), per_last.end(), 0);
            for (std::size_t e = 0; e < t.count(); ++e) {
                bool inside = true;
                for (std::size_t i = 0; i + 1 < k && inside; ++i)
                    inside = (mask[i] >> t.flat[e * k + i]) & 1;
                if (inside)
                    ++per_last[t.flat[e * k + k - 1]];
            }
            double head = 1;
            for (std::size_t i = 0; i + 1 < k; ++i)
                head *= std::popcount(mask[i]);
            for (std::uint64_t w = 1; w < (std::uint64_t{1} << last); ++w) {
                ++out.checked;
                double product = head * std::popcount(w);
                if (product < need - tolerance * full)
                    continue;
                std::uint64_t edges = 0;
                for (std::size_t a = 0; a < last; ++a)
                    if ((w >> a) & 1)
                        edges += per_last[a];
                auto [d, deviation] = judge(edges, product);
                if (deviation > eps + tolerance) {
                    std::vector<std::vector<char>> member(k);
                    mask[k - 1] = w;
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t a = 0; a < t.sizes[i]; ++a)
                            member[i].push_back(static_cast<char>((mask[i] >> a) & 1));
                    fail(member, d, deviation);
                    return out;
                }
            }
            std::size_t i = 0;
            while (i + 1 < k && ++mask[i] == (std::uint64_t{1} << t.sizes[i])) {
                mask[i] = 1;
                ++i;
            }
            if (i + 1 >= k)
                break;
        }
        return out;
    }

    // structured candidates: one set split by transversal degree
    std::vector<std::vector<std::uint64_t>> degree(k);
    for (std::size_t i = 0; i < k; ++i)
        degree[i].assign(t.sizes[i], 0);
    for (std::size_t e = 0; e < t.count(); ++e)
        for (std::size_t i = 0; i < k; ++i)
            ++degree[i][t.flat[e * k + i]];
    std::vector<std::vector<std::vector<char>>> candidates;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> order(t.sizes[i]);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[i][a] > degree[i][b]; });
        for (std::size_t size : {(t.sizes[i] + 1) / 2, std::max<std::size_t>(ceil_tol(eps * t.sizes[i]), 1)}) {
            for (int top = 0; top < 2; ++top) {
                std::vector<std::vector<char>> member(k);
                for (std::size_t j = 0; j < k; ++j)
                    member[j].assign(t.sizes[j], 1);
                std::fill(member[i].begin(), member[i].end(), 0);
                for (std::size_t a = 0; a < size; ++a)
                    member[i][order[top ? a : t.sizes[i] - 1 - a]] = 1;
                candidates.push_back(std::move(member));
            }
        }
    }
    auto evaluate = [&](const std::vector<std::vector<char>> & member) {
        ++out.checked;
        double product = 1;
        for (const auto & m : member)
            product *= static_cast<double>(std::count(m.begin(), m.end(), 1));
        if (product == 0 || product < need - tolerance * full)
            return false;
        auto [d, deviation] = judge(count_inside(t, member), product);
        if (deviation > eps + tolerance) {
            fail(member, d, deviation);
            return true;
        }
        return false;
    };
    for (const auto & member : candidates) {
        if (out.checked >= budget)
            return out;
        if (evaluate(member))
            return out;
    }
    double root = std::pow(eps, 1.0 / static_cast<double>(k));
    for (std::uint64_t sample = 0; out.checked < budget; ++sample) {
        auto rng = derive_stream(seed, sample);
        std::vector<std::vector<char>> member(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t size = sample % 2 == 0 ? (t.sizes[i] + 1) / 2
                                               : std::min(t.sizes[i], std::max<std::size_t>(ceil_tol(root * t.sizes[i]), 1));
            std::vector<std::size_t> order(t.sizes[i]);
            std::iota(order.begin(), order.end(), std::size_t{0});
            shuffle(std::span<std::size_t>(order), rng);
            member[i].assign(t.sizes[i], 0);
            for (std::size_t a = 0; a < size; ++a)
                member[i][order[a]] = 1;
        }
        if (evaluate(member))
            return out;
    }
    return out;
}

UniformityReport upper_uniformity_check(const Hypergraph & graph, double eta, double p, double D, std::size_t starts,
    std::uint64_t seed)
{
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("p must lie in (0, 1]");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("eta must lie in (0, 1]");
    std::size_t n = graph.n(), k = graph.k();
    std::size_t size = std::max<std::size_t>(ceil_tol(eta * static_cast<double>(n)), 1);
    UniformityReport out;
    if (k * size > n)
        return out;

    auto record = [&](const std::vector<std::int64_t> & slot, std::uint64_t edges, const std::vector<std::size_t> & sizes) {
        ++out.checked;
        double product = 1;
        for (auto s : sizes)
            product *= static_cast<double>(s);
        double dp = static_cast<double>(edges) / (p * product);
        if (dp > out.max_dp || out.worst.empty()) {
            out.max_dp = std::max(out.max_dp, dp);
            out.worst.assign(k, {});
            for (Vertex v = 0; v < n; ++v)
                if (slot[v] >= 0)
                    out.worst[slot[v]].push_back(v);
        }
    };
    auto transversal_count = [&](const std::vector<std::int64_t> & slot) {
        std::uint64_t edges = 0;
        std::vector<char> hit(k);
        for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
            std::fill(hit.begin(), hit.end(), 0);
            std::size_t distinct = 0;
            for (Vertex v : graph.edge(e))
                if (slot[v] >= 0 && !hit[slot[v]]) {
                    hit[slot[v]] = 1;
                    ++distinct;
                }
            edges += distinct == k;
        }
        return edges;
    };

    double assignments = std::pow(static_cast<double>(k + 1), static_cast<double>(n));
    if (assignments <= 2e6) {
        out.exhaustive = true;
        std::vector<std::int64_t> slot(n, -1);
        std::vector<std::size_t> sizes(k, 0);
        // odometer over slot values -1..k-1 per vertex
        while (true) {
            bool admissible = std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s >= size; });
            if (admissible)
                record(slot, transversal_count(slot), sizes);
            std::size_t v = 0;
            while (v < n) {
                if (slot[v] >= 0)
                    --sizes[slot[v]];
                if (++slot[v] == static_cast<std::int64_t>(k)) {
                    slot[v] = -1;
                    ++v;
                    continue;
                }
                ++sizes[slot[v]];
                break;
            }
            if (v == n)
                break;
        }
        out.pass = out.max_dp <= D;
        return out;
    }

    for (std::size_t start = 0; start < std::max<std::size_t>(starts, 1); ++start) {
        auto rng = derive_stream(seed, start);
        auto order = all_vertices(n);
        shuffle(std::span<Vertex>(order), rng);
        std::vector<std::int64_t> slot(n, -1);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t a = 0; a < size; ++a)
                slot[order[i * size + a]] = static_cast<std::int64_t>(i);
        std::vector<std::size_t> sizes(k, size);

        for (int round = 0; round < 20; ++round) {
            // gain of each outside vertex per slot, and each member's share
            std::vector<std::vector<std::uint64_t>> gain(k, std::vector<std::uint64_t>(n, 0));
            std::vector<std::uint64_t> share(n, 0);
            std::uint64_t edges = 0;
            std::vector<char> hit(k);
            for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
                std::fill(hit.begin(), hit.end(), 0);
                std::size_t distinct = 0, outside = 0;
                Vertex loose_vertex = 0;
                for (Vertex v : graph.edge(e)) {
                    if (slot[v] < 0) {
                        ++outside;
                        loose_vertex = v;
                    } else if (!hit[slot[v]]) {
                        hit[slot[v]] = 1;
                        ++distinct;
                    }
                }
                if (distinct == k) {
                    ++edges;
                    for (Vertex v : graph.edge(e))
                        ++share[v];
                } else if (outside == 1 && distinct == k - 1) {
                    auto missing = std::find(hit.begin(), hit.end(), 0) - hit.begin();
                    ++gain[missing][loose_vertex];
                }
            }
            record(slot, edges, sizes);
            std::int64_t best = 0;
            std::optional<std::pair<Vertex, Vertex>> swap;
            for (std::size_t i = 0; i < k; ++i) {
                std::optional<Vertex> in, out_vertex;
                for (Vertex v = 0; v < n; ++v) {
                    if (slot[v] < 0 && (!in || gain[i][v] > gain[i][*in]))
                        in = v;
                    if (slot[v] == static_cast<std::int64_t>(i) && (!out_vertex || share[v] < share[*out_vertex]))
                        out_vertex = v;
                }
                if (!in || !out_vertex)
                    continue;
                auto delta = static_cast<std::int64_t>(gain[i][*in]) - static_cast<std::int64_t>(share[*out_vertex]);
                if (delta > best) {
                    best = delta;
                    swap = std::pair{*in, *out_vertex};
                }
            }
            if (!swap)
                break;
            slot[swap->first] = slot[swap->second];
            slot[swap->second] = -1;
        }
    }
    out.pass = out.max_dp <= D;
    return out;
}

double chernoff_bound(double mean, double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.5))
        throw std::invalid_argument("Chernoff bound needs 0 <= gamma <= 3/2");
    if (!(mean >= 0.0))
        throw std::invalid_argument("mean must be non-negative");
    return 2.0 * std::exp(-gamma * gamma * mean / 3.0);
}

double chernoff_deviation_frequency(std::uint64_t trials, double prob, double gamma, std::uint64_t runs,
    std::uint64_t seed)
{
    if (runs == 0)
        throw std::invalid_argument("need at least one run");
    double mean = static_cast<double>(trials) * prob;
    std::uint64_t deviations = 0;
    for (std::uint64_t run = 0; run < runs; ++run) {
        auto rng = derive_stream(seed, run);
        auto x = static_cast<double>(binomial(rng, trials, prob));
        deviations += std::abs(x - mean) >= gamma * mean;
    }
    return static_cast<double>(deviations) / static_cast<double>(runs);
}

namespace {

double irregular_fraction(const std::vector<ColorClass> & classes, const Partition & partition, std::size_t k,
    double eps, double p, std::uint64_t budget, std::uint64_t seed, std::size_t & tuples)
{
    std::size_t irregular = 0;
    tuples = 0;
    for_each_subset(partition.size(), k, [&](const std::vector<std::size_t> & pick) {
        Partition sets;
        for (auto i : pick)
            sets.push_back(partition[i]);
        bool bad = false;
        for (const auto & cls : classes)
            if (!regularity_falsifier(cls.graph, sets, eps, p, budget, derive_seed(seed, tuples)).pass) {
                bad = true;
                break;
            }
        irregular += bad;
        ++tuples;
        return true;
    });
    return tuples == 0 ? 0.0 : static_cast<double>(irregular) / static_cast<double>(tuples);
}

} // namespace

RefinedPartition refine_partition(const Hypergraph & graph, const Coloring & coloring, std::size_t t, double eps,
    double p, std::size_t restarts, std::uint64_t seed, std::uint64_t falsifier_budget)
{
    coloring.check_against(graph);
    check_eps_p(eps, p);
    std::size_t n = graph.n(), k = graph.k();
    if (t == 0 || t > n)
        throw std::invalid_argument("need 1 <= t <= n");
    RefinedPartition best;
    if (t == n || t < k) {
        best.partition = gen::equipartition(n, t);
        best.degenerate = true;
        best.tuples = t < k ? 0 : static_cast<std::size_t>(binomial_coefficient(t, k));
        return best;
    }
    std::vector<ColorClass> classes;
    for (Color c = 1; c <= coloring.r(); ++c)
        classes.push_back(color_class(graph, coloring, c));

    bool have = false;
    for (std::size_t restart = 0; restart < std::max<std::size_t>(restarts, 1); ++restart) {
        auto rng = derive_stream(seed, restart);
        auto partition = gen::random_equipartition(n, t, derive_seed(seed, 1000 + restart));
        std::size_t tuples = 0;
        double score = irregular_fraction(classes, partition, k, eps, p, falsifier_budget, seed, tuples);
        for (std::size_t move = 0; move < std::min<std::size_t>(n, 40) && score > 0; ++move) {
            auto a = uniform_below(rng, t), b = uniform_below(rng, t);
            if (a == b)
                continue;
            auto ia = uniform_below(rng, partition[a].size()), ib = uniform_below(rng, partition[b].size());
            std::swap(partition[a][ia], partition[b][ib]);
            double next = irregular_fraction(classes, partition, k, eps, p, falsifier_budget, seed, tuples);
            if (next < score)
                score = next;
            else
                std::swap(partition[a][ia], partition[b][ib]);
        }
        if (!have || score < best.irregular_fraction) {
            have = true;
            best.partition = partition;
            best.irregular_fraction = score;
            best.tuples = tuples;
        }
    }
    for (auto & part : best.partition)
        std::sort(part.begin(), part.end());
    return best;
}

ClusterGraph build_cluster_graph(const Hypergraph & graph, const Coloring & coloring, const Partition & partition,
    double eps, double p, Gate gate, std::uint64_t falsifier_budget, std::uint64_t seed)
{
    coloring.check_against(graph);
    check_eps_p(eps, p);
    check_partition(partition, graph.n(), false);
    std::size_t k = graph.k(), r = coloring.r(), t = partition.size();
    auto part = part_of(partition, graph.n());

    std::map<std::vector<Vertex>, std::vector<std::uint64_t>> counts;
    std::vector<Vertex> tuple;
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        tuple.clear();
        for (Vertex v : graph.edge(e)) {
            if (part[v] < 0)
                break;
            tuple.push_back(static_cast<Vertex>(part[v]));
        }
        if (tuple.size() != k)
            continue;
        std::sort(tuple.begin(), tuple.end());
        if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end())
            continue;
        auto & slot = counts[tuple];
        if (slot.empty())
            slot.assign(r, 0);
        ++slot[coloring[e] - 1];
    }

    std::vector<ColorClass> classes;
    if (gate == Gate::falsifier)
        for (Color c = 1; c <= r; ++c)
            classes.push_back(color_class(graph, coloring, c));

    ClusterGraph out;
    std::vector<std::vector<Vertex>> edges;
    std::vector<Color> colors;
    double threshold = 1.0 / (2.0 * static_cast<double>(r)) - eps;
    std::uint64_t rank = 0;
    for_each_subset(t, k, [&](const std::vector<std::size_t> & pick) {
        std::vector<Vertex> clusters(pick.begin(), pick.end());
        ClusterEdge record;
        record.tuple = clusters;
        auto it = counts.find(clusters);
        record.color_counts = it == counts.end() ? std::vector<std::uint64_t>(r, 0) : it->second;
        double product = 1;
        for (Vertex c : clusters)
            product *= static_cast<double>(partition[c].size());
        std::uint64_t total = 0;
        for (Color c = 1; c <= r; ++c) {
            total += record.color_counts[c - 1];
            if (record.color_counts[c - 1] > record.color_counts[record.majority - 1])
                record.majority = c;
        }
        record.majority_dp = static_cast<double>(record.color_counts[record.majority - 1]) / (p * product);
        record.total_dp = static_cast<double>(total) / (p * product);
        if (record.majority_dp * static_cast<double>(r) < record.total_dp * (1 - tolerance))
            throw std::logic_error("majority color below average");

        bool admit = record.majority_dp >= threshold - tolerance;
        if (admit && gate == Gate::falsifier) {
            Partition sets;
            for (Vertex c : clusters)
                sets.push_back(partition[c]);
            for (const auto & cls : classes)
                if (!regularity_falsifier(cls.graph, sets, eps, p, falsifier_budget, derive_seed(seed, rank)).pass) {
                    admit = false;
                    break;
                }
        }
        ++rank;
        if (admit) {
            edges.push_back(clusters);
            colors.push_back(record.majority);
            out.edges.push_back(std::move(record));
        } else {
            out.rejected.push_back(clusters);
        }
        return true;
    });
    // subsets come out in lexicographic order, which is the canonical order
    out.graph = Hypergraph(k, t, std::move(edges));
    out.coloring = Coloring(r, std::move(colors));
    return out;
}

TupleComponent regular_tuple_component(const Hypergraph & graph, const Partition & parts, double eps,
    std::uint64_t budget, std::uint64_t seed)
{
    if (!(eps > 0.0 && eps < 1.0 / 3.0))
        throw std::invalid_argument("eps must lie in (0, 1/3)");
    std::size_t k = graph.k();
    if (parts.size() != k)
        throw std::invalid_argument("need exactly k parts");
    check_partition(parts, graph.n(), false);
    auto t = collect(graph, parts);

    std::vector<std::size_t> need(k);
    for (std::size_t i = 0; i < k; ++i)
        need[i] = std::max<std::size_t>(ceil_tol(eps * static_cast<double>(parts[i].size())), 1);

    TupleComponent out;
    std::size_t last = parts[k - 1].size();
    std::size_t words = (last + 63) / 64;
    // prefix index over the first k-1 parts -> reachable positions of the last
    std::vector<std::size_t> radix(k, 1);
    for (std::size_t i = 1; i + 1 < k; ++i)
        radix[i] = radix[i - 1] * parts[i - 1].size();
    std::size_t prefixes = k == 1 ? 1 : radix[k - 2] * parts[k - 2].size();
    std::vector<std::uint64_t> reach(prefixes * words, 0);
    for (std::size_t e = 0; e < t.count(); ++e) {
        std::size_t index = 0;
        for (std::size_t i = 0; i + 1 < k; ++i)
            index += t.flat[e * k + i] * radix[i];
        std::uint32_t w = t.flat[e * k + k - 1];
        reach[index * words + w / 64] |= std::uint64_t{1} << (w % 64);
    }

    // checks one family of position subsets for the first k-1 parts
    std::vector<std::uint64_t> covered(words);
    auto probe = [&](const std::vector<std::vector<std::size_t>> & chosen) -> bool {
        std::fill(covered.begin(), covered.end(), 0);
        std::vector<std::size_t> digit(k - 1, 0);
        while (true) {
            std::size_t index = 0;
            for (std::size_t i = 0; i + 1 < k; ++i)
                index += chosen[i][digit[i]] * radix[i];
            for (std::size_t w = 0; w < words; ++w)
                covered[w] |= reach[index * words + w];
            std::size_t i = 0;
            while (i + 1 < k && ++digit[i] == chosen[i].size()) {
                digit[i] = 0;
                ++i;
            }
            if (i + 1 >= k)
                break;
        }
        std::size_t reached = 0;
        for (auto word : covered)
            reached += std::popcount(word);
        if (last - reached < need[k - 1])
            return false;
        Partition witness(k);
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (auto a : chosen[i])
                witness[i].push_back(parts[i][a]);
        for (std::size_t a = 0; a < last && witness[k - 1].size() < need[k - 1]; ++a)
            if (!((covered[a / 64] >> (a % 64)) & 1))
                witness[k - 1].push_back(parts[k - 1][a]);
        out.counterexample = std::move(witness);
        return true;
    };

    double families = 1;
    for (std::size_t i = 0; i + 1 < k; ++i)
        families *= static_cast<double>(binomial_coefficient(parts[i].size(), need[i])) * static_cast<double>(need[i]);
    if (families <= static_cast<double>(budget)) {
        out.exhaustive = true;
        std::vector<std::vector<std::size_t>> chosen(k - 1);
        auto recurse = [&](auto & self, std::size_t i) -> bool {
            if (i + 1 == k)
                return probe(chosen);
            bool found = false;
            for_each_subset(parts[i].size(), need[i], [&](const std::vector<std::size_t> & pick) {
                chosen[i] = pick;
                found = self(self, i + 1);
                return !found;
            });
            return found;
        };
        if (k >= 2 && recurse(recurse, 0))
            return out;
    } else {
        std::uint64_t samples = std::min<std::uint64_t>(budget, 100000);
        std::vector<std::vector<std::size_t>> chosen(k - 1);
        for (std::uint64_t s = 0; s < samples; ++s) {
            auto rng = derive_stream(seed, s);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                std::vector<std::size_t> order(parts[i].size());
                std::iota(order.begin(), order.end(), std::size_t{0});
                shuffle(std::span<std::size_t>(order), rng);
                chosen[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need[i]));
            }
            if (probe(chosen))
                return out;
        }
    }

    // the hypothesis held: the largest component of the k-partite part
    std::vector<std::vector<Vertex>> transversal;
    for (std::size_t e = 0; e < t.count(); ++e) {
        std::vector<Vertex> edge;
        for (std::size_t i = 0; i < k; ++i)
            edge.push_back(parts[i][t.flat[e * k + i]]);
        transversal.push_back(std::move(edge));
    }
    Hypergraph partite(k, graph.n(), std::move(transversal));
    auto part = part_of(parts, graph.n());
    double best_ratio = -1;
    for (const auto & comp : components(partite)) {
        std::vector<std::size_t> hits(k, 0);
        for (Vertex v : comp)
            ++hits[part[v]];
        double ratio = 2;
        for (std::size_t i = 0; i < k; ++i)
            ratio = std::min(ratio, static_cast<double>(hits[i]) / static_cast<double>(parts[i].size()));
        if (ratio > best_ratio) {
            best_ratio = ratio;
            out.component = comp;
            out.intersections = hits;
        }
    }
    bool large = out.component.has_value();
    for (std::size_t i = 0; i < k && large; ++i)
        large = static_cast<double>(out.intersections[i])
            >= (1 - eps) * static_cast<double>(parts[i].size()) - tolerance;
    if (!large) {
        if (out.exhaustive)
            throw std::logic_error("hypothesis verified but no component meets every part in (1 - eps)|V_i|");
        out.component.reset();
    }
    return out;
}

} // namespace hrl::reg
