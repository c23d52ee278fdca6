#pragma once

#include <cstdint>
#include <random>

#include "padicup/linalg.hpp"

namespace padicup {

/// Seeded random source. mt19937_64 output is fixed by the standard, and the
/// bounded draws below avoid the implementation-defined distributions, so a
/// seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    /// Integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Stream-splitting helper: a seed for sub-generator `stream` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Random rational n/d * p^k with small n, d and |k| <= max_shift; zero
/// appears with probability about 1/16.
ExactRational random_rational(Rng& rng, const Prime& p, int max_shift = 3);

PVector random_vector(Rng& rng, const Prime& p, std::size_t n, int max_shift = 3);

}  // namespace padicup
