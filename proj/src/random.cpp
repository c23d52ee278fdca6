#include "padicup/random.hpp"

namespace padicup {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ExactRational random_rational(Rng& rng, const Prime& p, int max_shift) {
    if (rng.below(16) == 0)
        return 0;
    const long num = static_cast<long>(rng.between(-60, 60));
    const long den = static_cast<long>(rng.between(1, 60));
    if (num == 0)
        return 0;
    const auto shift = rng.between(-max_shift, max_shift);
    return ExactRational(num, den) * prime_power(p, shift);
}

PVector random_vector(Rng& rng, const Prime& p, std::size_t n, int max_shift) {
    std::vector<ExactRational> entries(n);
    for (auto& x : entries)
        x = random_rational(rng, p, max_shift);
    return PVector(p, std::move(entries));
}

}  // namespace padicup
