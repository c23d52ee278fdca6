#pragma once

// Fixtures and independent oracles shared by the unit and acceptance suites.
// Oracles here use plain integer arithmetic and must not call into the
// library routine they are used to check.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "padicup/banach.hpp"
#include "padicup/random.hpp"

namespace padicup::testing {

inline const Prime p2{2};
inline const Prime p3{3};
inline const Prime p5{5};
inline const Prime p7{7};
inline const Prime p13{13};
inline const std::vector<Prime> kPrimes{p2, p3, p5, p7, p13};

/// Valuation of num/den by repeated division on machine integers.
inline std::optional<std::int64_t> brute_valuation(long long num, long long den, long long p) {
    if (num == 0)
        return std::nullopt;
    std::int64_t v = 0;
    num = num < 0 ? -num : num;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

/// [[24/25, 7/25], [-7/25, 24/25]]: 7-adic unit entries except 7/25.
inline PMatrix rotation_matrix(const Prime& p = p7) {
    return PMatrix(p, 2, {ExactRational(24, 25), ExactRational(7, 25), ExactRational(-7, 25), ExactRational(24, 25)});
}

/// Columns of rotation_matrix: {(24/25, -7/25), (7/25, 24/25)}.
inline OrthonormalBasis rotation_basis(const Prime& p = p7) {
    return validate_onb(p, {PVector(p, {ExactRational(24, 25), ExactRational(-7, 25)}),
                            PVector(p, {ExactRational(7, 25), ExactRational(24, 25)})});
}

inline PVector vec(const Prime& p, std::initializer_list<ExactRational> xs) { return PVector(p, std::vector(xs)); }

/// Non-orthogonal unimodular system: tau = columns of [[1, p], [0, 1]].
/// Norms are 1 on both sides but the functionals are not the transposes.
inline BiorthogonalSystem triangular_system(const Prime& p) {
    const ExactRational pp(static_cast<long>(p.value()));
    PMatrix t(p, 2, {1, pp, 0, 1});
    PMatrix f(p, 2, {1, -pp, 0, 1});
    return validate_system(p, t, f);
}

/// Random nonzero subset masks etc. are drawn from this.
inline Rng test_rng(std::uint64_t stream) { return Rng(derive_seed(0x5eed, stream)); }

}  // namespace padicup::testing
