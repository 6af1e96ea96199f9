#include <cmath>
#include "oracles.hpp"

#include <hrl/generators.hpp>

#include <doctest.h>

using namespace hrl;

TEST_SUITE("generators")
{
    TEST_CASE("complete hypergraph has every k-set")
    {
        auto g = gen::complete(4, 9);
        CHECK(g.num_edges() == oracle::choose(9, 4));
        CHECK(g.edge(0)[0] == 0);
    }

    TEST_CASE("unrank_subset enumerates lexicographically")
    {
        std::set<std::vector<Vertex>> seen;
        std::vector<Vertex> previous;
        for (std::uint64_t r = 0; r < oracle::choose(7, 3); ++r) {
            auto s = gen::unrank_subset(7, 3, r);
            CHECK(std::is_sorted(s.begin(), s.end()));
            if (r > 0)
                CHECK(previous < s);
            previous = s;
            seen.insert(s);
        }
        CHECK(seen.size() == 35);
    }

    TEST_CASE("random hypergraph is reproducible and has about p C(n,k) edges")
    {
        auto a = gen::random_hypergraph(3, 30, 0.2, 5);
        auto b = gen::random_hypergraph(3, 30, 0.2, 5);
        auto c = gen::random_hypergraph(3, 30, 0.2, 6);
        CHECK(a == b);
        CHECK_FALSE(a == c);
        double mean = 0.2 * 4060;
        CHECK(std::abs(static_cast<double>(a.num_edges()) - mean) < 5 * std::sqrt(mean));
        CHECK(gen::random_hypergraph(3, 10, 0.0, 1).num_edges() == 0);
        CHECK(gen::random_hypergraph(3, 10, 1.0, 1).num_edges() == 120);
    }

    TEST_CASE("large sparse instances use skipping and stay reproducible")
    {
        auto a = gen::random_hypergraph(3, 400, 0.001, 9);
        CHECK(a == gen::random_hypergraph(3, 400, 0.001, 9));
        double mean = 0.001 * 10586800.0;
        CHECK(std::abs(static_cast<double>(a.num_edges()) - mean) < 5 * std::sqrt(mean));
    }

    TEST_CASE("near-complete removes exactly the requested share")
    {
        auto g = gen::near_complete(3, 12, 0.1, gen::DeletionMode::uniform_random, 1);
        CHECK(g.num_edges() == static_cast<std::size_t>(std::ceil(0.9 * 220)));
        auto star = gen::near_complete(3, 12, 0.1, gen::DeletionMode::adversarial_star, 1);
        CHECK(star.num_edges() == g.num_edges());
        CHECK(star.vertex_degree(0) < g.vertex_degree(0) + 1);
        CHECK(star.vertex_degree(0) == 55 - 22);
    }

    TEST_CASE("extremal component coloring misses its own part")
    {
        auto ext = gen::extremal_component_coloring(3, 12);
        CHECK(ext.parts.size() == 4);
        for (EdgeIndex e = 0; e < ext.graph.num_edges(); ++e) {
            Color c = ext.coloring[e];
            for (Vertex v : ext.graph.edge(e))
                CHECK(std::find(ext.parts[c - 1].begin(), ext.parts[c - 1].end(), v) == ext.parts[c - 1].end());
        }
        CHECK_THROWS_AS(gen::extremal_component_coloring(3, 10), std::invalid_argument);
    }

    TEST_CASE("extremal cycle coloring has a red clique on S")
    {
        auto ext = gen::extremal_cycle_coloring(3, 10);
        CHECK(ext.red_set.size() == 8);
        for (EdgeIndex e = 0; e < ext.graph.num_edges(); ++e) {
            bool inside = std::all_of(ext.graph.edge(e).begin(), ext.graph.edge(e).end(), [](Vertex v) { return v < 8; });
            CHECK(ext.coloring[e] == (inside ? 1u : 2u));
        }
        CHECK_THROWS_AS(gen::extremal_cycle_coloring(3, 11), std::invalid_argument);
    }

    TEST_CASE("k-partite instances only have transversal edges")
    {
        std::vector<std::size_t> sizes{3, 4, 5};
        auto inst = gen::k_partite(sizes, 1.0, 1);
        CHECK(inst.graph.num_edges() == 60);
        CHECK(oracle::transversal_count(inst.graph, inst.parts) == 60);
        auto sparse = gen::k_partite(sizes, 0.5, 2);
        CHECK(sparse.graph.num_edges() == oracle::transversal_count(sparse.graph, sparse.parts));
    }

    TEST_CASE("equipartitions")
    {
        auto p = gen::equipartition(10, 3);
        CHECK(p[0].size() == 4);
        CHECK(p[2].size() == 3);
        CHECK(gen::is_equipartition(p, 10));
        auto q = gen::random_equipartition(10, 3, 4);
        CHECK(gen::is_equipartition(q, 10));
        CHECK(q == gen::random_equipartition(10, 3, 4));
        CHECK_FALSE(gen::is_equipartition({{0, 1, 2}, {3}}, 4));
    }
}
