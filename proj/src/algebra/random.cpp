#include "fewnomial/random.hpp"

#include "fewnomial/errors.hpp"

#include <cstdlib>
#include <string>

namespace fewnomial {

long Rng::uniform(long lo, long hi)
{
    if (hi < lo) throw InvalidInput("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

long Rng::uniform_nonzero(long lo, long hi)
{
    if (lo == 0 && hi == 0) throw InvalidInput("no nonzero value in range");
    long v;
    do {
        v = uniform(lo, hi);
    } while (v == 0);
    return v;
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("FEWNOMIAL_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput("FEWNOMIAL_SEED must be a nonnegative integer");
        }
    }
    return 20260101;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    // splitmix64 finalizer over the combined value.
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace fewnomial
