#pragma once

// Seeded randomness with a fixed integer mapping, so that results agree across
// standard library implementations (std distributions are not portable).

#include "fewnomial/rational.hpp"

#include <cstdint>
#include <random>

namespace fewnomial {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi] by rejection sampling.
    long uniform(long lo, long hi);
    /// Uniform on [lo, hi] minus {0}.
    long uniform_nonzero(long lo, long hi);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Seed used when none is given: $FEWNOMIAL_SEED if set, else 20260101.
std::uint64_t default_seed();

/// Derives an independent stream seed from a base seed and an index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

} // namespace fewnomial
