#include <cmath>
#include "oracles.hpp"

#include <hrl/generators.hpp>
#include <hrl/loose.hpp>
#include <hrl/regularity.hpp>
#include <hrl/rng.hpp>

#include <doctest.h>

using namespace hrl;

TEST_SUITE("regularity")
{
    TEST_CASE("density counts transversal edges")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = gen::random_hypergraph(3, 12, 0.4, seed);
            Partition sets{{0, 1, 2}, {3, 4, 5, 6}, {7, 8}};
            auto d = reg::density(g, sets, 0.4);
            CHECK(d.edges == oracle::transversal_count(g, sets));
            CHECK(d.product == 24);
            CHECK(d.dp == doctest::Approx(static_cast<double>(d.edges) / (0.4 * 24)));
        }
        CHECK_THROWS_AS(reg::density(gen::complete(3, 6), {{0, 1}, {1, 2}, {3}}, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(reg::density(gen::complete(3, 6), {{0}, {1}, {2}}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(reg::density(gen::complete(3, 6), {{0}, {1}}, 0.5), std::invalid_argument);
    }

    TEST_CASE("complete tuples are regular")
    {
        std::vector<std::size_t> sizes{4, 4, 4};
        auto inst = gen::k_partite(sizes, 1.0, 1);
        auto verdict = reg::regularity_falsifier(inst.graph, inst.parts, 0.1, 1.0, 1 << 14);
        CHECK(verdict.pass);
        CHECK(verdict.exhaustive);
        CHECK(verdict.density == doctest::Approx(1.0));
    }

    TEST_CASE("exhaustive verdicts agree with the subset oracle")
    {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            std::vector<std::size_t> sizes{3, 3, 3};
            auto inst = gen::k_partite(sizes, 0.5, seed);
            for (double eps : {0.2, 0.4}) {
                auto verdict = reg::regularity_falsifier(inst.graph, inst.parts, eps, 0.5, 1 << 10);
                REQUIRE(verdict.exhaustive);
                CHECK(verdict.pass == !oracle::has_irregular_subtuple(inst.graph, inst.parts, eps, 0.5));
                if (verdict.witness) {
                    auto d = reg::density(inst.graph, *verdict.witness, 0.5);
                    CHECK(std::abs(d.dp - verdict.density) > eps);
                }
            }
        }
    }

    TEST_CASE("sampling mode finds a planted half-empty tuple")
    {
        // first half of part 0 sees every edge, second half none
        std::vector<std::vector<Vertex>> edges;
        for (Vertex a = 0; a < 10; ++a)
            for (Vertex b = 20; b < 40; ++b)
                for (Vertex c = 40; c < 60; ++c)
                    edges.push_back({a, b, c});
        Hypergraph g(3, 60, edges);
        Partition sets{all_vertices(20), {}, {}};
        for (Vertex v = 20; v < 40; ++v)
            sets[1].push_back(v);
        for (Vertex v = 40; v < 60; ++v)
            sets[2].push_back(v);
        auto verdict = reg::regularity_falsifier(g, sets, 0.2, 1.0, 200, 3);
        CHECK_FALSE(verdict.exhaustive);
        CHECK_FALSE(verdict.pass);
        REQUIRE(verdict.witness);
        CHECK(verdict.deviation > 0.2);
    }

    TEST_CASE("upper uniformity exhaustive on tiny graphs matches the maximum")
    {
        auto g = gen::complete(3, 7);
        auto report = reg::upper_uniformity_check(g, 0.25, 1.0, 1.5);
        CHECK(report.exhaustive);
        CHECK(report.pass);
        CHECK(report.max_dp == doctest::Approx(1.0));
        auto strict = reg::upper_uniformity_check(g, 0.25, 0.5, 1.5);
        CHECK_FALSE(strict.pass);
        CHECK(strict.max_dp == doctest::Approx(2.0));
    }

    TEST_CASE("upper uniformity on a random graph")
    {
        auto g = gen::random_hypergraph(3, 45, 0.3, 8);
        auto report = reg::upper_uniformity_check(g, 0.2, 0.3, 2.0, 4, 8);
        CHECK_FALSE(report.exhaustive);
        CHECK(report.pass);
        CHECK(report.worst.size() == 3);
        auto d = reg::density(g, report.worst, 0.3);
        CHECK(d.dp <= report.max_dp + 1e-12);
    }

    TEST_CASE("Chernoff bound and Monte Carlo frequency")
    {
        CHECK(reg::chernoff_bound(100, 0.5) == doctest::Approx(2 * std::exp(-25.0 / 3)));
        CHECK(reg::chernoff_bound(0, 1.0) == doctest::Approx(2.0));
        CHECK_THROWS_AS(reg::chernoff_bound(10, 1.6), std::invalid_argument);
        CHECK_THROWS_AS(reg::chernoff_bound(10, -0.1), std::invalid_argument);
        CHECK_THROWS_AS(reg::chernoff_bound(-1, 0.5), std::invalid_argument);
        double freq = reg::chernoff_deviation_frequency(400, 0.05, 0.3, 4000, 2);
        CHECK(freq <= reg::chernoff_bound(20, 0.3));
        CHECK(freq == reg::chernoff_deviation_frequency(400, 0.05, 0.3, 4000, 2));
    }

    TEST_CASE("refined partitions are equipartitions")
    {
        auto g = gen::random_hypergraph(3, 15, 0.5, 1);
        auto rng = derive_stream(1, 9);
        std::vector<Color> colors(g.num_edges());
        for (auto & c : colors)
            c = static_cast<Color>(1 + uniform_below(rng, 2));
        Coloring chi(2, colors);
        auto refined = reg::refine_partition(g, chi, 5, 0.3, 0.5, 2, 4, 64);
        CHECK(gen::is_equipartition(refined.partition, 15));
        CHECK(refined.tuples == 10);
        CHECK(refined.irregular_fraction >= 0);
        CHECK(refined.irregular_fraction <= 1);
        auto again = reg::refine_partition(g, chi, 5, 0.3, 0.5, 2, 4, 64);
        CHECK(again.partition == refined.partition);
        auto singletons = reg::refine_partition(g, chi, 15, 0.3, 0.5, 1, 4);
        CHECK(singletons.degenerate);
        CHECK(singletons.irregular_fraction == 0);
    }

    TEST_CASE("cluster graph uses majority colors")
    {
        auto ext = gen::extremal_component_coloring(3, 12);
        auto parts = ext.parts;
        auto cluster = reg::build_cluster_graph(ext.graph, ext.coloring, parts, 0.05, 1.0);
        CHECK(cluster.graph.n() == 4);
        CHECK(cluster.graph.num_edges() + cluster.rejected.size() == 4);
        for (EdgeIndex e = 0; e < cluster.graph.num_edges(); ++e) {
            const auto & rec = cluster.edges[e];
            CHECK(std::vector<Vertex>(cluster.graph.edge(e).begin(), cluster.graph.edge(e).end()) == rec.tuple);
            CHECK(cluster.coloring[e] == rec.majority);
            CHECK(rec.majority_dp * 4 >= rec.total_dp - 1e-12);
        }
        auto gated = reg::build_cluster_graph(ext.graph, ext.coloring, parts, 0.05, 1.0, reg::Gate::falsifier, 1 << 12);
        CHECK(gated.graph.num_edges() <= cluster.graph.num_edges());
    }

    TEST_CASE("regular tuple component on dense tripartite graphs")
    {
        double eps = 1.0 / 3.0 - 1e-6;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            std::vector<std::size_t> sizes{9, 9, 9};
            auto inst = gen::k_partite(sizes, 0.97, seed);
            auto result = reg::regular_tuple_component(inst.graph, inst.parts, eps);
            REQUIRE(result.exhaustive);
            if (result.counterexample) {
                CHECK(oracle::transversal_count(inst.graph, *result.counterexample) == 0);
                continue;
            }
            REQUIRE(result.component);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(static_cast<double>(result.intersections[i]) >= (1 - eps) * 9 - 1e-9);
        }
    }

    TEST_CASE("regular tuple counterexample on a split tripartite graph")
    {
        std::vector<std::vector<Vertex>> edges;
        for (Vertex a = 0; a < 3; ++a)
            for (Vertex b = 6; b < 9; ++b)
                for (Vertex c = 12; c < 15; ++c)
                    edges.push_back({a, b, c});
        Hypergraph g(3, 18, edges);
        Partition parts{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}, {12, 13, 14, 15, 16, 17}};
        auto result = reg::regular_tuple_component(g, parts, 0.3);
        REQUIRE(result.counterexample);
        CHECK(loose::spans_no_edge(g, *result.counterexample));
        CHECK_THROWS_AS(reg::regular_tuple_component(g, parts, 0.34), std::invalid_argument);
    }
}
