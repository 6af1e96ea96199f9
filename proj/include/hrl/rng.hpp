#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace hrl {

/// SplitMix64 (Steele, Lea, Flood 2014). Pure 64-bit integer arithmetic, so
/// the stream is identical on every platform. Satisfies
/// UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// SplitMix64 output finalizer as a stateless hash.
std::uint64_t mix64(std::uint64_t x);

/// Independent stream number `index` of master `seed`. Used for per-trial,
/// per-rank and per-shard randomness so results do not depend on scheduling.
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(SplitMix64 & rng);

/// Unbiased uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(SplitMix64 & rng, std::uint64_t bound);

bool bernoulli(SplitMix64 & rng, double p);

/// Number of failures before the first success of a Bernoulli(p) sequence,
/// saturating at `cap`.
std::uint64_t geometric_failures(SplitMix64 & rng, double p, std::uint64_t cap);

/// Exact Bin(trials, p) sample by geometric skipping; O(trials * p) expected.
std::uint64_t binomial(SplitMix64 & rng, std::uint64_t trials, double p);

template <typename T>
void shuffle(std::span<T> items, SplitMix64 & rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace hrl
