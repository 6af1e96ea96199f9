#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrl::bounds {

using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

/// Parameters outside a formula's validity window.
class OutOfValidity : public std::domain_error {
public:
    OutOfValidity(const std::string & formula, const std::string & constraint) :
        std::domain_error("out of validity for " + formula + ": requires " + constraint), constraint_(constraint)
    {
    }
    const std::string & constraint() const { return constraint_; }

private:
    std::string constraint_;
};

/// Exact when every root taken along the way was rational.
struct Number {
    std::optional<Rational> exact;
    Real approx = 0;

    Number() = default;
    Number(const Rational & q);
    static Number real(const Real & x);
    double to_double() const;
};

Number operator+(const Number & a, const Number & b);
Number operator-(const Number & a, const Number & b);
Number operator*(const Number & a, const Number & b);
Number operator/(const Number & a, const Number & b);
/// x^(1/degree); exact when numerator and denominator are perfect powers.
Number root(const Number & x, unsigned degree);

struct Params {
    std::optional<std::uint64_t> k, r, n, ell;
    std::optional<Rational> eps, alpha;
    /// |A| and |B|
    std::optional<std::uint64_t> a, b;
};

struct BoundSpec {
    std::string theorem;
    Params params;
    Number value;
    bool degenerate = false;
    std::string window;
};

/// Accepts integers, decimals with optional exponent ("1e-6", "0.25") and
/// fractions ("1/3"), all converted exactly.
Rational parse_rational(const std::string & text);
std::string to_string(const Rational & q);

/// 1.1a, 1.1b, 4.1, 5.1, cor5.2, 7.1, 7.2-5col, 7.2-6col
const std::vector<std::string> & mc_theorem_ids();
BoundSpec mc_threshold(const std::string & theorem, const Params & params);

/// Smallest q >= 1 with r <= q^(k-1) + ... + q + 1.
std::uint64_t fg_q(std::uint64_t k, std::uint64_t r);

/// ((2k-2)/(2k-1) - α) n, clamped at 0 and flagged degenerate when negative.
BoundSpec cycle_threshold(std::uint64_t k, std::uint64_t n, const Rational & alpha);

struct BinomCheck {
    bool holds = false;
    Rational lhs, rhs;
    Rational lambda;
};

/// C(|U|-1, k-1) - ε C(n-1, k-1) >= (1 - kε/λ^(k-1)) C(|U|-1, k-1) with
/// λ = |U|/n, evaluated exactly.
BinomCheck binom_inequality_check(std::uint64_t n, std::uint64_t k, const Rational & eps, std::uint64_t u);

/// (k/(k+ℓ) - √ε) n
BoundSpec one_core_threshold(std::uint64_t k, std::uint64_t ell, const Rational & eps, std::uint64_t n);

/// min{(1 - 8 ε^(1/2k)) n, |A| - √ε n + ((k-1)/k - √k ε^(1/4k) / 2^(k-1)) |B|}
BoundSpec lemma64_threshold(std::uint64_t k, const Rational & eps, std::uint64_t n, std::uint64_t a, std::uint64_t b);

/// Every id above plus cycle, one-core and lemma6.4 by name.
BoundSpec evaluate(const std::string & theorem, const Params & params);
std::vector<std::string> all_theorem_ids();

} // namespace hrl::bounds
