#pragma once

#include <cstdint>
#include <vector>

#include "padicup/linalg.hpp"

namespace padicup {

/// Orthonormal basis of Q^n under the standard bilinear form and the p-adic
/// sup norm: <tau_j, tau_k> = delta_jk and |tau_j| <= 1 (hence = 1).
/// Only obtainable through validate_onb, so every instance is valid.
class OrthonormalBasis {
public:
    static OrthonormalBasis standard(Prime prime, std::size_t n);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    const std::vector<PVector>& vectors() const noexcept { return vectors_; }
    const PVector& operator[](std::size_t j) const { return vectors_[j]; }

    /// Matrix whose j-th column is tau_j.
    PMatrix matrix() const { return PMatrix::from_columns(vectors_); }

    friend bool operator==(const OrthonormalBasis&, const OrthonormalBasis&) = default;

private:
    OrthonormalBasis(Prime prime, std::vector<PVector> vectors) : prime_(prime), vectors_(std::move(vectors)) {}
    friend OrthonormalBasis validate_onb(Prime prime, std::vector<PVector> vectors);

    Prime prime_;
    std::vector<PVector> vectors_;
};

/// Checks n vectors of length n against both defining conditions and reports
/// every failure in a ValidationError. Linear independence is implied by the
/// Gram condition and is not checked separately.
OrthonormalBasis validate_onb(Prime prime, std::vector<PVector> vectors);

/// (<x, tau_j>)_j.
std::vector<ExactRational> fourier_coefficients(const OrthonormalBasis& basis, const PVector& x);

/// max_j |<x, tau_j>|; equals sup_norm(x) for any orthonormal basis.
UltraNorm parseval_norm(const OrthonormalBasis& basis, const PVector& x);

/// sum_j <x, tau_j><tau_j, y>; equals <x, y>.
ExactRational parseval_inner_product(const OrthonormalBasis& basis, const PVector& x, const PVector& y);

/// Matrix of V : x -> sum_j <x, tau_j> omega_j, the unitary with V tau_j = omega_j.
PMatrix change_of_basis(const OrthonormalBasis& from, const OrthonormalBasis& to);

/// {V tau_j}, revalidated. Throws UsageError when V is not unitary.
OrthonormalBasis apply_unitary_to_onb(const PMatrix& v, const OrthonormalBasis& basis);

/// Seed-deterministic unitary built as a product of permutations, sign
/// flips, Pythagorean plane rotations and Cayley transforms, all with
/// p-integral entries. Throws std::runtime_error if the retry budget for
/// degenerate draws runs out.
PMatrix random_unitary(Prime prime, std::size_t n, std::uint64_t seed);

/// apply_unitary_to_onb(random_unitary(prime, n, seed), standard basis).
OrthonormalBasis random_onb(Prime prime, std::size_t n, std::uint64_t seed);

}  // namespace padicup
