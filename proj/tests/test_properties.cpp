#include <cmath>
#include "oracles.hpp"

#include <hrl/bounds.hpp>
#include <hrl/generators.hpp>
#include <hrl/io.hpp>
#include <hrl/loose.hpp>
#include <hrl/monochromatic.hpp>
#include <hrl/regularity.hpp>
#include <hrl/rng.hpp>

#include <doctest.h>

#include <sstream>

using namespace hrl;

namespace {

/// Random small colored hypergraphs, edges listed in a random order.
struct Sample {
    std::size_t k, n, r;
    std::vector<std::vector<Vertex>> edges;
    std::vector<Color> colors;
};

Sample draw(std::uint64_t seed, std::size_t max_n = 9, std::size_t max_edges = 14)
{
    auto rng = derive_stream(seed, 0);
    Sample s;
    s.k = 2 + uniform_below(rng, 3);
    s.n = s.k + uniform_below(rng, max_n - s.k + 1);
    s.r = 1 + uniform_below(rng, 4);
    std::set<std::vector<Vertex>> seen;
    std::size_t want = uniform_below(rng, max_edges + 1);
    for (std::size_t tries = 0; tries < 10 * want && seen.size() < want; ++tries) {
        auto order = all_vertices(s.n);
        shuffle(std::span<Vertex>(order), rng);
        std::vector<Vertex> e(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s.k));
        auto key = e;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) {
            s.edges.push_back(e);
            s.colors.push_back(static_cast<Color>(1 + uniform_below(rng, s.r)));
        }
    }
    return s;
}

struct Built {
    Hypergraph graph;
    Coloring coloring;
};

Built build(const Sample & s, const std::vector<Vertex> * relabel = nullptr, const std::vector<Color> * recolor = nullptr)
{
    auto edges = s.edges;
    if (relabel)
        for (auto & e : edges)
            for (auto & v : e)
                v = (*relabel)[v];
    auto built = Hypergraph::build(s.k, s.n, edges);
    std::vector<Color> colors(s.colors.size());
    for (std::size_t i = 0; i < s.colors.size(); ++i)
        colors[built.canonical_index[i]] = recolor ? (*recolor)[s.colors[i] - 1] : s.colors[i];
    return {built.graph, Coloring(s.r, colors)};
}

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("mc is invariant under vertex relabeling and color permutation")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto s = draw(seed);
            auto rng = derive_stream(seed, 1);
            auto relabel = all_vertices(s.n);
            shuffle(std::span<Vertex>(relabel), rng);
            std::vector<Color> recolor;
            for (Color c = 1; c <= s.r; ++c)
                recolor.push_back(c);
            shuffle(std::span<Color>(recolor), rng);
            auto a = build(s), b = build(s, &relabel, &recolor);
            CHECK(mono::mc(a.graph, a.coloring).value == mono::mc(b.graph, b.coloring).value);
        }
    }

    TEST_CASE("adding an edge never shrinks mc")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto s = draw(seed);
            if (s.edges.empty())
                continue;
            auto whole = build(s);
            auto smaller = s;
            smaller.edges.pop_back();
            smaller.colors.pop_back();
            auto part = build(smaller);
            CHECK(mono::mc(part.graph, part.coloring).value <= mono::mc(whole.graph, whole.coloring).value);
        }
    }

    TEST_CASE("mc_r is non-increasing in r and exact search matches the oracle")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto s = draw(seed, 7, 7);
            auto g = build(s).graph;
            std::size_t previous = g.n() + 1;
            for (std::size_t r = 1; r <= 3; ++r) {
                auto exact = mono::mc_r_exact(g, r);
                CHECK(exact.value <= previous);
                CHECK(exact.value == oracle::mc_r(g, r));
                previous = exact.value;
            }
        }
    }

    TEST_CASE("loose cycles stay loose under rotation and reversal")
    {
        auto g = gen::complete(3, 9);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto found = loose::longest_loose_cycle_heuristic(g, std::nullopt, 2, seed);
            REQUIRE(found.cycle);
            auto edges = found.cycle->edges;
            auto rng = derive_stream(seed, 2);
            std::rotate(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, edges.size())),
                edges.end());
            CHECK(loose::is_loose_cycle(g, edges));
            std::reverse(edges.begin(), edges.end());
            CHECK(loose::is_loose_cycle(g, edges));
            auto cycle = loose::make_cycle(g, edges);
            CHECK(cycle.vertices.size() == 2 * edges.size());
        }
    }

    TEST_CASE("transversal counts split additively")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto g = gen::random_hypergraph(3, 15, 0.3, seed);
            Partition sets{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9}, {10, 11, 12, 13, 14}};
            Partition left = sets, right = sets;
            left[0] = {0, 1, 2};
            right[0] = {3, 4, 5};
            CHECK(reg::density(g, sets, 1).edges == reg::density(g, left, 1).edges + reg::density(g, right, 1).edges);
        }
    }

    TEST_CASE("I/O round-trips any edge order")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto s = draw(seed);
            auto b = build(s);
            std::ostringstream text;
            text << s.k << ' ' << s.n << ' ' << s.edges.size() << '\n';
            for (const auto & e : s.edges) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    text << (i ? " " : "") << e[i];
                text << '\n';
            }
            std::istringstream in(text.str());
            auto loaded = io::parse_hypergraph(in);
            CHECK(loaded.graph == b.graph);
            std::ostringstream colors;
            colors << s.r << ' ' << s.colors.size() << '\n';
            for (auto c : s.colors)
                colors << c << '\n';
            std::istringstream cin(colors.str());
            CHECK(io::parse_coloring(cin, loaded) == b.coloring);
        }
    }

    TEST_CASE("Berge paths chain through their core vertices")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto s = draw(seed, 10, 10);
            auto g = build(s).graph;
            auto rng = derive_stream(seed, 3);
            Vertex u = static_cast<Vertex>(uniform_below(rng, s.n)), v = static_cast<Vertex>(uniform_below(rng, s.n));
            auto path = loose::shortest_berge_path(g, u, v);
            if (!path)
                continue;
            for (std::size_t i = 0; i < path->edges.size(); ++i) {
                const auto & e = path->edge_sets[i];
                CHECK(std::count(e.begin(), e.end(), path->core[i]) == 1);
                CHECK(std::count(e.begin(), e.end(), path->core[i + 1]) == 1);
            }
        }
    }

    TEST_CASE("fg_q is non-decreasing in r")
    {
        for (std::uint64_t k = 2; k <= 6; ++k) {
            std::uint64_t previous = 0;
            for (std::uint64_t r = 2; r <= 200; ++r) {
                auto q = bounds::fg_q(k, r);
                CHECK(q >= previous);
                previous = q;
            }
        }
    }
}
