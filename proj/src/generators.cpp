#include <hrl/generators.hpp>
#include <hrl/rng.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrl::gen {

namespace {

// Above this many k-sets, random_hypergraph switches from per-rank coin flips
// to geometric skipping.
constexpr std::uint64_t enumeration_limit = std::uint64_t{1} << 22;

// Largest complete hypergraph near_complete will materialise.
constexpr std::uint64_t near_complete_limit = std::uint64_t{1} << 26;

void check_uniformity(std::size_t k, std::size_t n)
{
    if (k < 2)
        throw std::invalid_argument("uniformity k must be at least 2");
    if (n < k)
        throw std::invalid_argument("need n >= k (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
}

void check_probability(double p, const char * name)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

/// Calls f on every k-subset of [0, n) in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F && f)
{
    if (k > n)
        return;
    std::vector<Vertex> current(k);
    std::iota(current.begin(), current.end(), Vertex{0});
    while (true) {
        f(current);
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

std::vector<std::vector<Vertex>> all_subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(binomial_coefficient(n, k));
    for_each_subset(n, k, [&](const std::vector<Vertex> & s) { out.push_back(s); });
    return out;
}

} // namespace

std::vector<Vertex> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank)
{
    if (rank >= binomial_coefficient(n, k))
        throw std::invalid_argument("subset rank out of range");
    std::vector<Vertex> out;
    out.reserve(k);
    Vertex next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex v = next;; ++v) {
            std::uint64_t with_v = binomial_coefficient(n - v - 1, k - i - 1);
            if (rank < with_v) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= with_v;
        }
    }
    return out;
}

Hypergraph complete(std::size_t k, std::size_t n)
{
    check_uniformity(k, n);
    return Hypergraph(k, n, all_subsets(n, k));
}

Hypergraph random_hypergraph(std::size_t k, std::size_t n, double p, std::uint64_t seed)
{
    if (k < 2)
        throw std::invalid_argument("uniformity k must be at least 2");
    check_probability(p, "p");
    if (n < k)
        return Hypergraph(k, n, {});

    std::uint64_t total = binomial_coefficient(n, k);
    std::vector<std::vector<Vertex>> edges;
    if (total <= enumeration_limit) {
        std::uint64_t rank = 0;
        for_each_subset(n, k, [&](const std::vector<Vertex> & s) {
            auto stream = derive_stream(seed, rank++);
            if (bernoulli(stream, p))
                edges.push_back(s);
        });
    } else {
        SplitMix64 rng(derive_seed(seed, 0xA11CE));
        std::uint64_t rank = 0;
        while (true) {
            std::uint64_t skip = geometric_failures(rng, p, total - rank);
            rank += skip;
            if (rank >= total)
                break;
            edges.push_back(unrank_subset(n, k, rank));
            ++rank;
        }
    }
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph near_complete(std::size_t k, std::size_t n, double eps, DeletionMode mode, std::uint64_t seed)
{
    check_uniformity(k, n);
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must lie in [0, 1)");
    std::uint64_t total = binomial_coefficient(n, k);
    if (total > near_complete_limit)
        throw std::invalid_argument("C(n, k) too large to materialise");

    // ceil((1 - eps) C) = C - floor(eps C); the slack absorbs representation
    // error in eps (0.1 * 20 must give 2, not 1).
    auto deletions = static_cast<std::uint64_t>(std::floor(eps * static_cast<double>(total) + 1e-9));
    auto subsets = all_subsets(n, k);
    std::vector<char> removed(subsets.size(), 0);

    if (mode == DeletionMode::uniform_random) {
        std::vector<std::size_t> order(subsets.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        SplitMix64 rng(derive_seed(seed, 0xDE1E7E));
        // partial Fisher-Yates: the first `deletions` slots are a uniform sample
        for (std::size_t i = 0; i < deletions; ++i) {
            auto j = i + static_cast<std::size_t>(uniform_below(rng, order.size() - i));
            std::swap(order[i], order[j]);
            removed[order[i]] = 1;
        }
    } else {
        std::uint64_t done = 0;
        for (Vertex hub = 0; hub < n && done < deletions; ++hub)
            for (std::size_t i = 0; i < subsets.size() && done < deletions; ++i)
                if (!removed[i] && std::binary_search(subsets[i].begin(), subsets[i].end(), hub)) {
                    removed[i] = 1;
                    ++done;
                }
    }

    std::vector<std::vector<Vertex>> kept;
    kept.reserve(subsets.size() - deletions);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (!removed[i])
            kept.push_back(std::move(subsets[i]));
    return Hypergraph(k, n, std::move(kept));
}

PartitionedColoring extremal_component_coloring(std::size_t k, std::size_t n)
{
    check_uniformity(k, n);
    if (n % (k + 1) != 0)
        throw std::invalid_argument("extremal component coloring needs (k+1) | n");
    std::size_t block = n / (k + 1);

    PartitionedColoring out;
    out.graph = complete(k, n);
    out.parts = equipartition(n, k + 1);
    std::vector<Color> colors;
    colors.reserve(out.graph.num_edges());
    std::vector<char> hit(k + 1);
    for (EdgeIndex e = 0; e < out.graph.num_edges(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Vertex v : out.graph.edge(e))
            hit[v / block] = 1;
        // k vertices cannot meet all k+1 parts
        auto missed = std::find(hit.begin(), hit.end(), 0) - hit.begin();
        colors.push_back(static_cast<Color>(missed + 1));
    }
    out.coloring = Coloring(k + 1, std::move(colors));
    return out;
}

CycleColoring extremal_cycle_coloring(std::size_t k, std::size_t n)
{
    check_uniformity(k, n);
    if (n % (2 * k - 1) != 0)
        throw std::invalid_argument("extremal cycle coloring needs (2k-1) | n");
    std::size_t red_size = (2 * k - 2) * n / (2 * k - 1);

    CycleColoring out;
    out.graph = complete(k, n);
    out.red_set = all_vertices(red_size);
    std::vector<Color> colors;
    colors.reserve(out.graph.num_edges());
    for (EdgeIndex e = 0; e < out.graph.num_edges(); ++e)
        colors.push_back(out.graph.edge(e).back() < red_size ? 1 : 2);
    out.coloring = Coloring(2, std::move(colors));
    return out;
}

KPartite k_partite(std::span<const std::size_t> sizes, double density, std::uint64_t seed)
{
    if (sizes.size() < 2)
        throw std::invalid_argument("k-partite hypergraph needs k >= 2 parts");
    check_probability(density, "density");
    KPartite out;
    std::size_t n = 0;
    for (std::size_t s : sizes) {
        std::vector<Vertex> part(s);
        std::iota(part.begin(), part.end(), static_cast<Vertex>(n));
        out.parts.push_back(std::move(part));
        n += s;
    }

    std::size_t k = sizes.size();
    std::vector<std::vector<Vertex>> edges;
    if (std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 0; })) {
        // odometer over transversals; blocks are increasing so this is lex order
        std::vector<std::size_t> digit(k, 0);
        std::uint64_t rank = 0;
        while (true) {
            auto stream = derive_stream(seed, rank++);
            if (bernoulli(stream, density)) {
                std::vector<Vertex> e(k);
                for (std::size_t i = 0; i < k; ++i)
                    e[i] = out.parts[i][digit[i]];
                edges.push_back(std::move(e));
            }
            std::size_t i = k;
            while (i > 0 && ++digit[i - 1] == sizes[i - 1]) {
                digit[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
    }
    out.graph = Hypergraph(k, n, std::move(edges));
    return out;
}

Partition equipartition(std::size_t n, std::size_t t)
{
    if (t == 0 || t > n)
        throw std::invalid_argument("equipartition needs 1 <= t <= n");
    Partition parts(t);
    std::size_t base = n / t, extra = n % t;
    Vertex next = 0;
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t size = base + (i < extra ? 1 : 0);
        for (std::size_t j = 0; j < size; ++j)
            parts[i].push_back(next++);
    }
    return parts;
}

Partition random_equipartition(std::size_t n, std::size_t t, std::uint64_t seed)
{
    auto parts = equipartition(n, t);
    auto order = all_vertices(n);
    SplitMix64 rng(derive_seed(seed, 0x9A27));
    shuffle(std::span<Vertex>(order), rng);
    std::size_t next = 0;
    for (auto & part : parts) {
        for (auto & v : part)
            v = order[next++];
        std::sort(part.begin(), part.end());
    }
    return parts;
}

bool is_equipartition(const Partition & partition, std::size_t n)
{
    try {
        check_partition(partition, n, true);
    } catch (const std::invalid_argument &) {
        return false;
    }
    auto [lo, hi] = std::minmax_element(partition.begin(), partition.end(),
        [](const auto & a, const auto & b) { return a.size() < b.size(); });
    return partition.empty() || hi->size() - lo->size() <= 1;
}

} // namespace hrl::gen
