#include <cmath>
#include "oracles.hpp"

#include <hrl/core.hpp>
#include <hrl/generators.hpp>
#include <hrl/rng.hpp>

#include <doctest.h>

using namespace hrl;

namespace {

Hypergraph random_small(std::size_t k, std::size_t n, double p, std::uint64_t seed)
{
    return gen::random_hypergraph(k, n, p, seed);
}

std::set<std::set<Vertex>> as_sets(const std::vector<std::vector<Vertex>> & comps)
{
    std::set<std::set<Vertex>> out;
    for (const auto & c : comps)
        out.insert(std::set<Vertex>(c.begin(), c.end()));
    return out;
}

} // namespace

TEST_SUITE("core")
{
    TEST_CASE("edges are stored canonically")
    {
        auto built = Hypergraph::build(3, 5, {{4, 2, 0}, {1, 0, 3}, {0, 1, 2}});
        CHECK(built.graph.edge_list() == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 4}});
        CHECK(built.canonical_index == std::vector<EdgeIndex>{2, 1, 0});
        CHECK(built.graph.find_edge(std::vector<Vertex>{3, 1, 0}) == EdgeIndex{1});
        CHECK_FALSE(built.graph.contains_edge(std::vector<Vertex>{0, 3, 4}));
    }

    TEST_CASE("malformed edges are rejected")
    {
        CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    }

    TEST_CASE("incidence lists match the edges")
    {
        auto g = random_small(3, 9, 0.4, 3);
        for (Vertex v = 0; v < g.n(); ++v) {
            std::size_t count = 0;
            for (EdgeIndex e = 0; e < g.num_edges(); ++e)
                count += std::count(g.edge(e).begin(), g.edge(e).end(), v);
            CHECK(g.vertex_degree(v) == count);
            for (auto e : g.incident(v))
                CHECK(std::count(g.edge(e).begin(), g.edge(e).end(), v) == 1);
        }
    }

    TEST_CASE("coloring must align with the graph")
    {
        auto g = gen::complete(3, 4);
        CHECK_NOTHROW(Coloring(2, {1, 2, 1, 2}).check_against(g));
        CHECK_THROWS_AS(Coloring(2, {1, 2, 1}).check_against(g), std::invalid_argument);
        CHECK_THROWS_AS(Coloring(2, {1, 2, 3, 1}), std::invalid_argument);
        CHECK_THROWS_AS(Coloring(2, {0, 1, 1, 1}), std::invalid_argument);
    }

    TEST_CASE("union-find merges and counts")
    {
        UnionFind uf(6);
        uf.unite(0, 1);
        uf.unite(2, 3);
        uf.unite(1, 3);
        CHECK(uf.find(0) == uf.find(2));
        CHECK(uf.size_of(3) == 4);
        CHECK(uf.size_of(5) == 1);
    }

    TEST_CASE("components agree with the closure oracle")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            std::size_t k = 2 + seed % 3;
            auto g = random_small(k, 12, 0.02 + 0.01 * static_cast<double>(seed % 7), seed);
            auto expected = oracle::components(g.n(), oracle::edges_of(g));
            auto got = as_sets(components(g));
            CHECK(got == std::set<std::set<Vertex>>(expected.begin(), expected.end()));
        }
    }

    TEST_CASE("color components omit or keep isolated vertices")
    {
        Hypergraph g(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
        Coloring chi(2, {1, 2, 1});
        auto red = components(g, chi, 1);
        CHECK(red.components.size() == 2);
        CHECK(red.covered == std::vector<Vertex>{0, 1, 2, 4, 5, 6});
        CHECK(red.largest_size() == 3);
        auto with = components_with_singletons(g, chi, 2);
        CHECK(with.components.size() == 5);
        CHECK(with.largest_size() == 3);
    }

    TEST_CASE("shadow graph holds every covered pair")
    {
        Hypergraph g(3, 5, {{0, 1, 2}, {2, 3, 4}});
        auto s = shadow_graph(g);
        CHECK(s.k() == 2);
        CHECK(s.num_edges() == 6);
        CHECK(s.contains_edge(std::vector<Vertex>{3, 4}));
        CHECK_FALSE(s.contains_edge(std::vector<Vertex>{1, 3}));
    }

    TEST_CASE("one-core and induced subgraphs relabel consistently")
    {
        Hypergraph g(3, 8, {{1, 3, 5}, {3, 5, 7}});
        auto core = one_core(g);
        CHECK(core.vertices == std::vector<Vertex>{1, 3, 5, 7});
        CHECK(core.graph.n() == 4);
        CHECK(core.graph.num_edges() == 2);
        std::vector<Vertex> keep{1, 3, 5};
        auto sub = induced_subgraph(g, keep);
        CHECK(sub.graph.num_edges() == 1);
        CHECK(sub.edges == std::vector<EdgeIndex>{0});
    }

    TEST_CASE("link graph and degrees")
    {
        auto g = gen::complete(3, 6);
        auto link = link_graph(g, 0);
        CHECK(link.graph.k() == 2);
        CHECK(link.graph.num_edges() == 10);
        CHECK(degree(g, 0) == 10);
        std::vector<Vertex> ground{1, 2, 3};
        CHECK(degree(g, 0, ground) == 3);
        CHECK(min_degree(g) == 10);
        Coloring chi(2, std::vector<Color>(g.num_edges(), 2));
        auto colored = link_graph(g, 5, &chi);
        REQUIRE(colored.coloring);
        CHECK(colored.coloring->size() == 10);
    }

    TEST_CASE("binomial coefficients match Pascal's triangle")
    {
        for (std::size_t n = 0; n <= 40; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(binomial_coefficient(n, k) == oracle::choose(n, k));
        CHECK_THROWS_AS(binomial_coefficient(200, 100), std::overflow_error);
    }

    TEST_CASE("partitions are validated")
    {
        CHECK_NOTHROW(check_partition({{0, 1}, {2}}, 3, true));
        CHECK_THROWS_AS(check_partition({{0, 1}, {1}}, 3, false), std::invalid_argument);
        CHECK_THROWS_AS(check_partition({{0, 1}}, 3, true), std::invalid_argument);
        CHECK_THROWS_AS(check_partition({{0, 3}}, 3, false), std::invalid_argument);
        CHECK_THROWS_AS(check_partition({{0}, {}}, 3, false), std::invalid_argument);
        CHECK(part_of({{2}, {0}}, 3) == std::vector<std::int64_t>{1, -1, 0});
    }
}

TEST_SUITE("rng")
{
    TEST_CASE("streams are reproducible and distinct")
    {
        auto a = derive_stream(9, 3), b = derive_stream(9, 3), c = derive_stream(9, 4);
        auto x = a(), y = b(), z = c();
        CHECK(x == y);
        CHECK(x != z);
        CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    }

    TEST_CASE("uniform_below stays in range and hits every value")
    {
        auto rng = derive_stream(1, 0);
        std::vector<int> seen(7, 0);
        for (int i = 0; i < 7000; ++i) {
            auto v = uniform_below(rng, 7);
            REQUIRE(v < 7);
            ++seen[v];
        }
        for (int count : seen)
            CHECK(count > 800);
    }

    TEST_CASE("binomial sampler has the right mean")
    {
        auto rng = derive_stream(2, 0);
        double total = 0;
        for (int i = 0; i < 4000; ++i)
            total += static_cast<double>(binomial(rng, 1000, 0.03));
        CHECK(total / 4000 == doctest::Approx(30).epsilon(0.03));
        CHECK(binomial(rng, 50, 0.0) == 0);
        CHECK(binomial(rng, 50, 1.0) == 50);
    }

    TEST_CASE("geometric failures have mean (1-p)/p")
    {
        auto rng = derive_stream(3, 0);
        double total = 0;
        for (int i = 0; i < 20000; ++i)
            total += static_cast<double>(geometric_failures(rng, 0.2, 1000000));
        CHECK(total / 20000 == doctest::Approx(4.0).epsilon(0.05));
    }
}
