#include <hrl/rng.hpp>

#include <cmath>

namespace hrl {

std::uint64_t mix64(std::uint64_t x)
{
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return mix64(seed ^ mix64(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index)
{
    return SplitMix64(derive_seed(seed, index));
}

double uniform01(SplitMix64 & rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(SplitMix64 & rng, std::uint64_t bound)
{
    // Lemire's multiply-shift with rejection of the biased low region.
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

bool bernoulli(SplitMix64 & rng, double p)
{
    if (p <= 0.0)
        return false;
    if (p >= 1.0)
        return true;
    return uniform01(rng) < p;
}

std::uint64_t geometric_failures(SplitMix64 & rng, double p, std::uint64_t cap)
{
    if (p >= 1.0)
        return 0;
    if (p <= 0.0)
        return cap;
    double u = 1.0 - uniform01(rng); // (0, 1]
    double skip = std::floor(std::log(u) / std::log1p(-p));
    if (!(skip < static_cast<double>(cap)))
        return cap;
    return static_cast<std::uint64_t>(skip);
}

std::uint64_t binomial(SplitMix64 & rng, std::uint64_t trials, double p)
{
    if (p <= 0.0 || trials == 0)
        return 0;
    if (p >= 1.0)
        return trials;
    std::uint64_t successes = 0;
    std::uint64_t position = 0;
    while (true) {
        std::uint64_t skip = geometric_failures(rng, p, trials - position);
        position += skip;
        if (position >= trials)
            break;
        ++successes;
        ++position;
    }
    return successes;
}

} // namespace hrl
