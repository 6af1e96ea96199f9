#include <cmath>
#include "oracles.hpp"

#include <hrl/bounds.hpp>

#include <doctest.h>

using namespace hrl::bounds;

namespace {

Params kn(std::uint64_t k, std::uint64_t n)
{
    Params p;
    p.k = k;
    p.n = n;
    return p;
}

Rational q(const char * text) { return parse_rational(text); }

} // namespace

TEST_SUITE("bounds")
{
    TEST_CASE("rational parsing is exact")
    {
        CHECK(q("1e-6") == Rational(1, 1000000));
        CHECK(q("0.25") == Rational(1, 4));
        CHECK(q("-1/3") == Rational(-1, 3));
        CHECK(q("2.5E2") == Rational(250));
        CHECK(to_string(q("6/4")) == "3/2");
        CHECK_THROWS_AS(q("abc"), std::invalid_argument);
        CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
    }

    TEST_CASE("Gyarfas thresholds")
    {
        CHECK(*mc_threshold("1.1b", kn(3, 12)).value.exact == 9);
        CHECK(*mc_threshold("1.1a", kn(3, 7)).value.exact == 7);
        CHECK_THROWS_AS(mc_threshold("1.1b", kn(2, 12)), OutOfValidity);
        CHECK_THROWS_AS(mc_threshold("1.1a", kn(5, 4)), OutOfValidity);
    }

    TEST_CASE("Gyarfas-Haxell thresholds")
    {
        Params p;
        p.n = 7;
        CHECK(*mc_threshold("7.2-5col", p).value.exact == 5);
        p.n = 12;
        CHECK(*mc_threshold("7.2-6col", p).value.exact == 8);
        p.k = 4;
        CHECK_THROWS_AS(mc_threshold("7.2-5col", p), OutOfValidity);
    }

    TEST_CASE("near-complete k colors with exact cube root")
    {
        auto p = kn(3, 100);
        p.eps = q("1e-6");
        auto value = mc_threshold("4.1", p).value;
        REQUIRE(value.exact);
        CHECK(*value.exact == 92);
        p.eps = q("1/4096");
        CHECK_THROWS_AS(mc_threshold("4.1", p), OutOfValidity);
        p.eps = q("0");
        CHECK_THROWS_AS(mc_threshold("4.1", p), OutOfValidity);
    }

    TEST_CASE("k+1 colors and the edge-count corollary")
    {
        auto p = kn(3, 1000);
        p.eps = q("1e-30");
        auto five = mc_threshold("5.1", p).value;
        CHECK(five.to_double() == doctest::Approx(750.0 - std::sqrt(27e-30) * 1000));
        p.eps = q("1e-40");
        auto cor = mc_threshold("cor5.2", p).value;
        REQUIRE(cor.exact);
        CHECK(*cor.exact == Rational(750) - Rational(2) * 9 * Rational(1, 10000000000LL) * 1000);
        p.eps = q("1e-20");
        CHECK_THROWS_AS(mc_threshold("cor5.2", p), OutOfValidity);
        CHECK_NOTHROW(mc_threshold("5.1", p));
        p.eps = q("1e-10");
        CHECK_THROWS_AS(mc_threshold("5.1", p), OutOfValidity);
    }

    TEST_CASE("Furedi-Gyarfas q")
    {
        CHECK(fg_q(3, 7) == 2);
        CHECK(fg_q(3, 8) == 3);
        CHECK(fg_q(2, 2) == 1);
        for (std::uint64_t r = 2; r <= 10; ++r) {
            CHECK(fg_q(2, r) == r - 1);
            Params p;
            p.k = 2;
            p.r = r;
            p.n = 360;
            CHECK(*mc_threshold("7.1", p).value.exact == Rational(360, r - 1));
        }
        for (std::uint64_t k = 2; k <= 5; ++k)
            for (std::uint64_t r = 2; r <= 60; ++r) {
                auto qq = fg_q(k, r);
                std::uint64_t upper = 0, lower = 0, pu = 1, pl = 1;
                for (std::uint64_t j = 0; j < k; ++j) {
                    upper += pu;
                    lower += pl;
                    pu *= qq;
                    pl *= qq - 1;
                }
                CHECK(r <= upper);
                CHECK(r > lower);
            }
    }

    TEST_CASE("cycle threshold")
    {
        CHECK(*cycle_threshold(3, 10, 0).value.exact == 8);
        CHECK(*cycle_threshold(2, 10, 0).value.exact == Rational(20, 3));
        auto clamped = cycle_threshold(3, 10, 1);
        CHECK(clamped.degenerate);
        CHECK(*clamped.value.exact == 0);
        CHECK_THROWS_AS(cycle_threshold(3, 10, -1), OutOfValidity);
    }

    TEST_CASE("binomial inequality evaluated exactly")
    {
        auto check = binom_inequality_check(100, 3, q("0.01"), 50);
        CHECK(check.holds);
        CHECK(check.lambda == Rational(1, 2));
        CHECK(check.lhs == Rational(oracle::choose(49, 2)) - Rational(1, 100) * oracle::choose(99, 2));
        auto zero = binom_inequality_check(100, 3, 0, 50);
        CHECK(zero.lhs == zero.rhs);
        CHECK(zero.lhs == oracle::choose(49, 2));
        CHECK(binom_inequality_check(40, 3, q("0.05"), 40).holds);
        CHECK_THROWS_AS(binom_inequality_check(100, 3, q("0.01"), 8), OutOfValidity);
    }

    TEST_CASE("one-core threshold")
    {
        auto a = one_core_threshold(3, 1, q("1e-40"), 8);
        REQUIRE(a.value.exact);
        CHECK(a.value.to_double() == doctest::Approx(6.0));
        auto b = one_core_threshold(2, 2, q("1e-40"), 8);
        CHECK(b.value.to_double() == doctest::Approx(4.0));
        CHECK_THROWS_AS(one_core_threshold(3, 1, Rational(1, 16777216), 8), OutOfValidity);
    }

    TEST_CASE("two-part one-core threshold")
    {
        auto all_a = lemma64_threshold(3, q("1e-60"), 1000, 1000, 0);
        CHECK(all_a.value.to_double() == doctest::Approx(1000.0).epsilon(1e-6));
        auto mixed = lemma64_threshold(3, q("1e-9"), 1000, 600, 400);
        // independent re-derivation in long double
        long double eps = 1e-9L;
        long double first = (1 - 8 * std::pow(eps, 1.0L / 6)) * 1000;
        long double second = 600 - std::sqrt(eps) * 1000
            + (2.0L / 3 - std::sqrt(3.0L) * std::pow(eps, 1.0L / 12) / 4) * 400;
        CHECK(mixed.value.to_double() == doctest::Approx(static_cast<double>(std::min(first, second))));
        CHECK_THROWS_AS(lemma64_threshold(3, q("1e-9"), 1000, 0, 1000), OutOfValidity);
        CHECK_THROWS_AS(lemma64_threshold(3, q("1e-9"), 1000, 600, 300), OutOfValidity);
        CHECK_THROWS_AS(lemma64_threshold(3, q("1e-8"), 1000, 600, 400), OutOfValidity);
    }

    TEST_CASE("thresholds are monotone in n")
    {
        for (const auto & id : mc_theorem_ids()) {
            Params p;
            p.k = 3;
            p.r = 5;
            p.eps = q("1e-40");
            double previous = -1;
            for (std::uint64_t n = 3; n < 40; ++n) {
                p.n = n;
                auto v = mc_threshold(id, p).value.to_double();
                CHECK(v >= previous);
                previous = v;
            }
        }
    }

    TEST_CASE("extremal constructions meet the 1.1b threshold on divisible n")
    {
        for (std::uint64_t k = 3; k <= 5; ++k)
            for (std::uint64_t n = k + 1; n <= 40; n += k + 1)
                if (n >= k)
                    CHECK(*mc_threshold("1.1b", kn(k, n)).value.exact == Rational(k * n / (k + 1)));
    }
}
