#include <hrl/bounds.hpp>

#include <algorithm>
#include <regex>

namespace hrl::bounds {

namespace {

using boost::multiprecision::cpp_int;

Real to_real(const Rational & q)
{
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

cpp_int ipow(const cpp_int & base, std::uint64_t e)
{
    cpp_int out = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        out *= base;
    return out;
}

/// floor(x^(1/n)) for x >= 0
cpp_int iroot(const cpp_int & x, unsigned n)
{
    if (x < 2 || n == 1)
        return x;
    cpp_int y = cpp_int(1) << (msb(x) / n + 1);
    while (true) {
        cpp_int z = ((n - 1) * y + x / ipow(y, n - 1)) / n;
        if (z >= y)
            return y;
        y = z;
    }
}

std::optional<cpp_int> exact_root(const cpp_int & x, unsigned n)
{
    auto y = iroot(x, n);
    if (ipow(y, n) == x)
        return y;
    return std::nullopt;
}

Rational integer(std::uint64_t v) { return Rational(cpp_int(v)); }

std::uint64_t need(const std::optional<std::uint64_t> & v, const std::string & formula, const std::string & name)
{
    if (!v)
        throw OutOfValidity(formula, name + " to be given");
    return *v;
}

Rational need(const std::optional<Rational> & v, const std::string & formula, const std::string & name)
{
    if (!v)
        throw OutOfValidity(formula, name + " to be given");
    return *v;
}

void require(bool ok, const std::string & formula, const std::string & constraint)
{
    if (!ok)
        throw OutOfValidity(formula, constraint);
}

BoundSpec make(const std::string & theorem, const Params & params, Number value, const std::string & window)
{
    BoundSpec out;
    out.theorem = theorem;
    out.params = params;
    out.value = std::move(value);
    out.window = window;
    return out;
}

} // namespace

Number::Number(const Rational & q) : exact(q), approx(to_real(q)) {}

Number Number::real(const Real & x)
{
    Number out;
    out.approx = x;
    return out;
}

double Number::to_double() const { return approx.convert_to<double>(); }

Number operator+(const Number & a, const Number & b)
{
    if (a.exact && b.exact)
        return Number(*a.exact + *b.exact);
    return Number::real(a.approx + b.approx);
}

Number operator-(const Number & a, const Number & b)
{
    if (a.exact && b.exact)
        return Number(*a.exact - *b.exact);
    return Number::real(a.approx - b.approx);
}

Number operator*(const Number & a, const Number & b)
{
    if (a.exact && b.exact)
        return Number(*a.exact * *b.exact);
    return Number::real(a.approx * b.approx);
}

Number operator/(const Number & a, const Number & b)
{
    if (a.exact && b.exact)
        return Number(*a.exact / *b.exact);
    return Number::real(a.approx / b.approx);
}

Number root(const Number & x, unsigned degree)
{
    if (x.approx < 0)
        throw std::domain_error("root of a negative number");
    if (x.exact) {
        auto num = exact_root(boost::multiprecision::numerator(*x.exact), degree);
        auto den = exact_root(boost::multiprecision::denominator(*x.exact), degree);
        if (num && den)
            return Number(Rational(*num, *den));
    }
    if (x.approx == 0)
        return Number(Rational(0));
    return Number::real(pow(x.approx, Real(1) / Real(degree)));
}

Rational parse_rational(const std::string & text)
{
    static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, fraction)) {
        cpp_int den(m[2].str());
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(cpp_int(m[1].str()), den);
    }
    if (std::regex_match(text, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
        std::string digits = m[2].str() + m[3].str();
        // cpp_int reads a leading zero as an octal prefix
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
        cpp_int value(digits.empty() ? "0" : digits);
        long long exponent = m[4].matched ? std::stoll(m[4].str()) : 0;
        exponent -= static_cast<long long>(m[3].length());
        if (exponent < -100000 || exponent > 100000)
            throw std::invalid_argument("exponent too large in '" + text + "'");
        Rational out(value);
        cpp_int scale = ipow(10, static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent));
        if (exponent < 0)
            out /= Rational(scale);
        else
            out *= Rational(scale);
        return m[1].str() == "-" ? -out : out;
    }
    throw std::invalid_argument("not a number: '" + text + "'");
}

std::string to_string(const Rational & q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

const std::vector<std::string> & mc_theorem_ids()
{
    static const std::vector<std::string> ids{"1.1a", "1.1b", "4.1", "5.1", "cor5.2", "7.1", "7.2-5col", "7.2-6col"};
    return ids;
}

std::uint64_t fg_q(std::uint64_t k, std::uint64_t r)
{
    if (k < 2 || r < 2)
        throw OutOfValidity("fg_q", "k >= 2 and r >= 2");
    for (std::uint64_t q = 1;; ++q) {
        cpp_int sum = 0;
        for (std::uint64_t j = 0; j < k; ++j)
            sum += ipow(q, j);
        if (cpp_int(r) <= sum)
            return q;
    }
}

BoundSpec mc_threshold(const std::string & theorem, const Params & params)
{
    const std::string & f = theorem;
    if (theorem == "1.1a" || theorem == "1.1b") {
        auto k = need(params.k, f, "k");
        auto n = need(params.n, f, "n");
        require(k >= 3 && n >= k, f, "n >= k >= 3");
        Rational value = theorem == "1.1a" ? integer(n) : integer(k) * integer(n) / integer(k + 1);
        return make(theorem, params, Number(value), "n >= k >= 3");
    }
    if (theorem == "4.1") {
        auto k = need(params.k, f, "k");
        auto n = need(params.n, f, "n");
        auto eps = need(params.eps, f, "eps");
        require(k >= 3, f, "k >= 3");
        require(eps > 0 && eps * Rational(ipow(16, k)) < 1, f, "0 < eps < 16^-k");
        auto value = (Number(1) - Number(8) * root(Number(eps), static_cast<unsigned>(k))) * Number(integer(n));
        return make(theorem, params, value, "k >= 3, 0 < eps < 16^-k");
    }
    if (theorem == "5.1") {
        auto k = need(params.k, f, "k");
        auto n = need(params.n, f, "n");
        auto eps = need(params.eps, f, "eps");
        require(k >= 3, f, "k >= 3");
        require(eps > 0 && eps * Rational(ipow(k, 5 * k) * ipow(2, 8 * k)) < 1, f, "0 < eps < k^-5k 2^-8k");
        auto value = (Number(integer(k) / integer(k + 1)) - root(Number(Rational(ipow(k, k)) * eps), 2))
            * Number(integer(n));
        return make(theorem, params, value, "k >= 3, 0 < eps < k^-5k 2^-8k");
    }
    if (theorem == "cor5.2") {
        auto k = need(params.k, f, "k");
        auto n = need(params.n, f, "n");
        auto eps = need(params.eps, f, "eps");
        require(k >= 3, f, "k >= 3");
        require(eps > 0 && eps * Rational(ipow(k, 10 * k + 2) * ipow(2, 16 * k + 2)) < 1, f,
            "0 < eps < k^-(10k+2) 2^-(16k+2)");
        // 2 k^((k+1)/2) = 2 sqrt(k^(k+1))
        auto coefficient = Number(2) * root(Number(Rational(ipow(k, k + 1))), 2);
        auto value = (Number(integer(k) / integer(k + 1)) - coefficient * root(Number(eps), 4)) * Number(integer(n));
        return make(theorem, params, value, "k >= 3, 0 < eps < k^-(10k+2) 2^-(16k+2)");
    }
    if (theorem == "7.1") {
        auto k = need(params.k, f, "k");
        auto r = need(params.r, f, "r");
        auto n = need(params.n, f, "n");
        require(k >= 2 && r >= 2, f, "k >= 2 and r >= 2");
        return make(theorem, params, Number(integer(n) / integer(fg_q(k, r))), "k >= 2, r >= 2");
    }
    if (theorem == "7.2-5col" || theorem == "7.2-6col") {
        auto n = need(params.n, f, "n");
        require(!params.k || *params.k == 3, f, "k = 3");
        Rational value = theorem == "7.2-5col" ? Rational(5 * cpp_int(n), 7) : Rational(2 * cpp_int(n), 3);
        return make(theorem, params, Number(value), "k = 3");
    }
    throw std::invalid_argument("unknown theorem id '" + theorem + "'");
}

BoundSpec cycle_threshold(std::uint64_t k, std::uint64_t n, const Rational & alpha)
{
    require(k >= 2, "cycle", "k >= 2");
    require(alpha >= 0, "cycle", "alpha >= 0");
    Params params;
    params.k = k;
    params.n = n;
    params.alpha = alpha;
    Rational value = (Rational(cpp_int(2 * k - 2), cpp_int(2 * k - 1)) - alpha) * integer(n);
    auto out = make("cycle", params, Number(value), "k >= 2, alpha >= 0");
    if (value < 0) {
        out.value = Number(Rational(0));
        out.degenerate = true;
    }
    return out;
}

BinomCheck binom_inequality_check(std::uint64_t n, std::uint64_t k, const Rational & eps, std::uint64_t u)
{
    const std::string f = "binomial inequality";
    require(n >= k && k >= 2, f, "n >= k >= 2");
    require(u >= k * k, f, "|U| >= k^2");
    require(u <= n, f, "|U| <= n");
    require(eps >= 0 && eps <= 1, f, "0 <= eps <= 1");
    auto choose = [](std::uint64_t a, std::uint64_t b) {
        cpp_int out = 1;
        for (std::uint64_t i = 0; i < b; ++i)
            out = out * (a - i) / (i + 1);
        return Rational(out);
    };
    BinomCheck out;
    out.lambda = Rational(cpp_int(u), cpp_int(n));
    Rational small = choose(u - 1, k - 1);
    out.lhs = small - eps * choose(n - 1, k - 1);
    Rational power = 1;
    for (std::uint64_t i = 0; i + 1 < k; ++i)
        power *= out.lambda;
    out.rhs = (1 - integer(k) * eps / power) * small;
    out.holds = out.lhs >= out.rhs;
    return out;
}

BoundSpec one_core_threshold(std::uint64_t k, std::uint64_t ell, const Rational & eps, std::uint64_t n)
{
    const std::string f = "one-core";
    require(k >= 2, f, "k >= 2");
    require(ell >= 1, f, "ell >= 1");
    require(eps > 0 && eps * Rational(ipow(256, k)) < 1, f, "0 < eps < 256^-k");
    Params params;
    params.k = k;
    params.ell = ell;
    params.eps = eps;
    params.n = n;
    auto value = (Number(integer(k) / integer(k + ell)) - root(Number(eps), 2)) * Number(integer(n));
    return make(f, params, value, "k >= 2, ell >= 1, 0 < eps < 256^-k");
}

BoundSpec lemma64_threshold(std::uint64_t k, const Rational & eps, std::uint64_t n, std::uint64_t a, std::uint64_t b)
{
    const std::string f = "lemma6.4";
    require(k >= 2, f, "k >= 2");
    require(eps > 0 && eps * Rational(ipow(512, k)) <= 1, f, "0 < eps <= 512^-k");
    require(a + b == n, f, "|A| + |B| = n");
    auto sqrt_eps = root(Number(eps), 2);
    auto nn = Number(integer(n));
    require((sqrt_eps * nn).approx < Real(a), f, "|A| > sqrt(eps) n");
    Params params;
    params.k = k;
    params.eps = eps;
    params.n = n;
    params.a = a;
    params.b = b;
    auto first = (Number(1) - Number(8) * root(Number(eps), static_cast<unsigned>(2 * k))) * nn;
    auto factor = Number(integer(k - 1) / integer(k))
        - root(Number(integer(k)), 2) * root(Number(eps), static_cast<unsigned>(4 * k))
            / Number(Rational(ipow(2, k - 1)));
    auto second = Number(integer(a)) - sqrt_eps * nn + factor * Number(integer(b));
    bool first_smaller = first.exact && second.exact ? *first.exact <= *second.exact : first.approx <= second.approx;
    return make(f, params, first_smaller ? first : second, "k >= 2, 0 < eps <= 512^-k, |A| > sqrt(eps) n, |A| + |B| = n");
}

std::vector<std::string> all_theorem_ids()
{
    auto out = mc_theorem_ids();
    out.insert(out.end(), {"cycle", "one-core", "lemma6.4"});
    return out;
}

BoundSpec evaluate(const std::string & theorem, const Params & params)
{
    if (theorem == "cycle")
        return cycle_threshold(need(params.k, theorem, "k"), need(params.n, theorem, "n"),
            params.alpha.value_or(Rational(0)));
    if (theorem == "one-core")
        return one_core_threshold(need(params.k, theorem, "k"), need(params.ell, theorem, "ell"),
            need(params.eps, theorem, "eps"), need(params.n, theorem, "n"));
    if (theorem == "lemma6.4")
        return lemma64_threshold(need(params.k, theorem, "k"), need(params.eps, theorem, "eps"),
            need(params.n, theorem, "n"), need(params.a, theorem, "|A|"), need(params.b, theorem, "|B|"));
    return mc_threshold(theorem, params);
}

} // namespace hrl::bounds
