#include <cmath>
#include "oracles.hpp"

#include <hrl/generators.hpp>
#include <hrl/monochromatic.hpp>
#include <hrl/rng.hpp>

#include <doctest.h>

using namespace hrl;

namespace {

Coloring random_coloring(std::size_t r, std::size_t m, std::uint64_t seed)
{
    auto rng = derive_stream(seed, 0);
    std::vector<Color> colors(m);
    for (auto & c : colors)
        c = static_cast<Color>(1 + uniform_below(rng, r));
    return Coloring(r, colors);
}

} // namespace

TEST_SUITE("monochromatic")
{
    TEST_CASE("mc matches the oracle and its witness is a real component")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto g = gen::random_hypergraph(3, 10, 0.3, seed);
            auto chi = random_coloring(3, g.num_edges(), seed);
            auto result = mono::mc(g, chi);
            CHECK(result.value == oracle::mc(g, chi.colors(), 3));
            auto comps = components(g, chi, result.witness_color);
            if (g.num_edges() > 0)
                CHECK(std::find(comps.components.begin(), comps.components.end(), result.witness_component)
                    != comps.components.end());
        }
    }

    TEST_CASE("edgeless graph gives a single vertex")
    {
        Hypergraph g(3, 4, {});
        auto result = mono::mc(g, Coloring(2, {}));
        CHECK(result.value == 1);
    }

    TEST_CASE("exact search equals brute force and the oracle on small graphs")
    {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            auto g = gen::random_hypergraph(3, 7, 0.2, 100 + seed);
            if (g.num_edges() > 8)
                continue;
            for (std::size_t r : {2u, 3u}) {
                auto exact = mono::mc_r_exact(g, r);
                CHECK(exact.status == mono::SearchStatus::complete);
                CHECK(exact.value == mono::mc_r_brute_force(g, r).value);
                CHECK(exact.value == oracle::mc_r(g, r));
                REQUIRE(exact.coloring);
                CHECK(mono::mc(g, *exact.coloring).value == exact.value);
            }
        }
    }

    TEST_CASE("Gyarfas values on complete graphs")
    {
        CHECK(mono::mc_r_exact(gen::complete(3, 5), 3).value == 5);
        CHECK(mono::mc_r_exact(gen::complete(3, 4), 4).value == 3);
        CHECK(mono::mc_r_exact(gen::complete(2, 5), 2).value == 5);
    }

    TEST_CASE("sharding does not change value or certificate")
    {
        auto g = gen::complete(3, 6);
        auto one = mono::mc_r_exact(g, 4);
        mono::SearchBudget budget;
        budget.shards = 8;
        auto many = mono::mc_r_exact(g, 4, budget);
        CHECK(one.value == many.value);
        CHECK(one.coloring == many.coloring);
        CHECK(one.witness_component == many.witness_component);
    }

    TEST_CASE("node budget yields a certified lower bound")
    {
        auto g = gen::complete(3, 6);
        mono::SearchBudget budget;
        budget.max_nodes = 50;
        auto partial = mono::mc_r_exact(g, 4, budget);
        CHECK(partial.status == mono::SearchStatus::incomplete);
        auto full = mono::mc_r_exact(g, 4);
        CHECK(partial.lower_bound <= full.value);
        CHECK(full.value <= partial.value);
    }

    TEST_CASE("local search returns an upper bound on mc_r")
    {
        auto g = gen::complete(3, 6);
        auto exact = mono::mc_r_exact(g, 4).value;
        auto found = mono::mc_r_localsearch(g, 4, 5, 1);
        REQUIRE(found.coloring);
        CHECK(found.value >= exact);
        CHECK(mono::mc(g, *found.coloring).value == found.value);
        CHECK(found.value == mono::mc_r_localsearch(g, 4, 5, 1).value);
    }

    TEST_CASE("local search reaches kn/(k+1) on K^3_8 with four colors")
    {
        auto found = mono::mc_r_localsearch(gen::complete(3, 8), 4, 6, 2);
        CHECK(found.value <= 7);
        CHECK(found.value >= 6);
    }

    TEST_CASE("high-degree subgraph keeps its guarantees")
    {
        auto g = gen::near_complete(3, 20, 0.02, gen::DeletionMode::adversarial_star, 1);
        auto hd = mono::high_degree_subgraph(g, 0.02, 0.5);
        CHECK(static_cast<double>(hd.subgraph.vertices.size()) >= hd.size_guarantee - 1e-9);
        if (hd.min_degree_checked)
            CHECK(static_cast<double>(hd.min_degree) >= hd.degree_threshold - 1e-9);
        CHECK_THROWS_AS(mono::high_degree_subgraph(g, 0.02, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(mono::high_degree_subgraph(g, 0.5, 0.5), std::invalid_argument);
    }

    TEST_CASE("one-core check needs more than k colors")
    {
        auto ext = gen::extremal_component_coloring(3, 8);
        auto check = mono::one_core_bound_check(ext.graph, ext.coloring, 1e-8);
        CHECK(check.pass);
        CHECK(check.largest == 6);
        CHECK(check.per_color.size() == 4);
        auto three = Coloring(3, std::vector<Color>(ext.graph.num_edges(), 1));
        CHECK_THROWS_AS(mono::one_core_bound_check(ext.graph, three, 1e-8), std::invalid_argument);
    }
}
