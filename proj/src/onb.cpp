#include "padicup/onb.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "padicup/errors.hpp"
#include "padicup/random.hpp"

namespace padicup {

OrthonormalBasis OrthonormalBasis::standard(Prime prime, std::size_t n) {
    std::vector<PVector> vectors;
    vectors.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        vectors.push_back(PVector::unit(prime, n, j));
    return OrthonormalBasis(prime, std::move(vectors));
}

OrthonormalBasis validate_onb(Prime prime, std::vector<PVector> vectors) {
    const std::size_t n = vectors.size();
    if (n == 0)
        throw ValidationError({"basis is empty"});

    std::vector<std::string> violations;
    bool shape_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (vectors[j].prime() != prime) {
            violations.push_back("tau_" + std::to_string(j + 1) + ": prime " +
                                 std::to_string(vectors[j].prime().value()) + " differs from " +
                                 std::to_string(prime.value()));
            shape_ok = false;
        }
        if (vectors[j].size() != n) {
            violations.push_back("tau_" + std::to_string(j + 1) + ": length " + std::to_string(vectors[j].size()) +
                                 " but basis has " + std::to_string(n) + " vectors");
            shape_ok = false;
        }
    }
    if (!shape_ok)
        throw ValidationError(std::move(violations));

    for (std::size_t j = 0; j < n; ++j) {
        const UltraNorm norm = sup_norm(vectors[j]);
        if (norm > UltraNorm::one())
            violations.push_back("tau_" + std::to_string(j + 1) + ": norm bound |tau_j| <= 1 fails (|tau_" +
                                 std::to_string(j + 1) + "| = " + norm.to_string(prime) + ")");
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
            const ExactRational g = inner_product(vectors[j], vectors[k]);
            const ExactRational want = j == k ? 1 : 0;
            if (g != want)
                violations.push_back("orthonormality fails: <tau_" + std::to_string(j + 1) + ", tau_" +
                                     std::to_string(k + 1) + "> = " + g.to_string() + ", expected " +
                                     want.to_string());
        }
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return OrthonormalBasis(prime, std::move(vectors));
}

std::vector<ExactRational> fourier_coefficients(const OrthonormalBasis& basis, const PVector& x) {
    if (x.size() != basis.size())
        throw UsageError("vector length " + std::to_string(x.size()) + " does not match basis dimension " +
                         std::to_string(basis.size()));
    std::vector<ExactRational> out;
    out.reserve(basis.size());
    for (const auto& tau : basis.vectors())
        out.push_back(inner_product(x, tau));
    return out;
}

UltraNorm parseval_norm(const OrthonormalBasis& basis, const PVector& x) {
    UltraNorm best = UltraNorm::zero();
    for (const auto& c : fourier_coefficients(basis, x))
        best = max(best, padic_abs(c, basis.prime()));
    return best;
}

ExactRational parseval_inner_product(const OrthonormalBasis& basis, const PVector& x, const PVector& y) {
    const auto cx = fourier_coefficients(basis, x);
    const auto cy = fourier_coefficients(basis, y);
    ExactRational acc = 0;
    for (std::size_t j = 0; j < cx.size(); ++j)
        acc += cx[j] * cy[j];
    return acc;
}

PMatrix change_of_basis(const OrthonormalBasis& from, const OrthonormalBasis& to) {
    if (from.prime() != to.prime() || from.size() != to.size())
        throw UsageError("bases differ in prime or dimension");
    // V = Omega T^T, so V tau_j = Omega e_j = omega_j.
    return to.matrix() * from.matrix().transpose();
}

OrthonormalBasis apply_unitary_to_onb(const PMatrix& v, const OrthonormalBasis& basis) {
    if (v.prime() != basis.prime() || v.size() != basis.size())
        throw UsageError("operator and basis differ in prime or dimension");
    if (!is_unitary(v))
        throw UsageError("operator is not unitary");
    std::vector<PVector> image;
    image.reserve(basis.size());
    for (const auto& tau : basis.vectors())
        image.push_back(v * tau);
    return validate_onb(basis.prime(), std::move(image));
}

namespace {

constexpr int kDrawBudget = 64;

PMatrix random_permutation(Rng& rng, const Prime& p, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    PMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i)
        m(perm[i], i) = 1;
    return m;
}

PMatrix random_signs(Rng& rng, const Prime& p, std::size_t n) {
    PMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = rng.coin() ? 1 : -1;
    return m;
}

// [[a, b], [-b, a]] in the plane (i, j) with (a, b) = (m^2 - k^2, 2mk) / (m^2 + k^2).
PMatrix random_rotation(Rng& rng, const Prime& p, std::size_t n) {
    const auto pl = static_cast<long>(p.value() < 1000 ? p.value() : 1);
    for (int attempt = 0; attempt < kDrawBudget; ++attempt) {
        const long m = static_cast<long>(rng.between(1, 9));
        long k = static_cast<long>(rng.between(1, 9));
        if (rng.coin())
            k *= pl;
        const long hyp = m * m + k * k;
        if (static_cast<std::uint64_t>(hyp) % p.value() == 0)
            continue;
        const ExactRational a(m * m - k * k, hyp);
        const ExactRational b(2 * m * k, hyp);
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i)
            ++j;
        PMatrix r = PMatrix::identity(p, n);
        r(i, i) = a;
        r(j, j) = a;
        r(i, j) = b;
        r(j, i) = -b;
        return r;
    }
    throw std::runtime_error("random_unitary: no admissible Pythagorean pair within retry budget");
}

// (I - S)(I + S)^-1 for antisymmetric integral S with det(I + S) a p-adic unit.
// Returns the identity when no admissible S is drawn; the factor is optional.
PMatrix random_cayley(Rng& rng, const Prime& p, std::size_t n) {
    const ExactRational scale = rng.coin() ? ExactRational(static_cast<long>(p.value() < 1000 ? p.value() : 1)) : 1;
    for (int attempt = 0; attempt < kDrawBudget / 4; ++attempt) {
        PMatrix s(p, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const ExactRational v = ExactRational(static_cast<long>(rng.between(-2, 2))) * scale;
                s(i, j) = v;
                s(j, i) = -v;
            }
        PMatrix plus = PMatrix::identity(p, n);
        PMatrix minus = PMatrix::identity(p, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                plus(i, j) += s(i, j);
                minus(i, j) -= s(i, j);
            }
        const auto v = valuation(determinant(plus), p);
        if (!v || *v != 0)
            continue;
        return minus * invert(plus);
    }
    return PMatrix::identity(p, n);
}

}  // namespace

PMatrix random_unitary(Prime prime, std::size_t n, std::uint64_t seed) {
    if (n == 0)
        throw UsageError("dimension must be at least 1");
    Rng rng(seed);
    PMatrix u = PMatrix::identity(prime, n);
    const std::size_t factors = n + 2;
    for (std::size_t f = 0; f < factors; ++f) {
        const auto kind = n == 1 ? rng.below(2) : rng.below(4);
        switch (kind) {
        case 0:
            u = random_signs(rng, prime, n) * u;
            break;
        case 1:
            u = random_permutation(rng, prime, n) * u;
            break;
        case 2:
            u = random_rotation(rng, prime, n) * u;
            break;
        default:
            u = random_cayley(rng, prime, n) * u;
            break;
        }
    }
    if (!is_unitary(u))
        throw std::logic_error("random_unitary produced a non-unitary product");
    return u;
}

OrthonormalBasis random_onb(Prime prime, std::size_t n, std::uint64_t seed) {
    return apply_unitary_to_onb(random_unitary(prime, n, seed), OrthonormalBasis::standard(prime, n));
}

}  // namespace padicup
