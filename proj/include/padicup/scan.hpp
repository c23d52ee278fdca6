#pragma once

#include <cstdint>
#include <vector>

#include "padicup/banach.hpp"

namespace padicup {

/// Precomputed absolute values for fast evaluation of the uncertainty
/// inequality over many (M, N) pairs of one instance. Subsets are bit masks
/// (bit i = index i), so the dimension is limited to 63.
///
/// For a Hilbert pair the coefficient functionals are <., tau_j> and
/// <., omega_k> and the cross table is |<tau_j, omega_k>|; for a Banach pair
/// they are f_j, g_k and |g_k(tau_j)|.
class SubsetScanner {
public:
    static SubsetScanner hilbert(const OrthonormalBasis& tau, const OrthonormalBasis& omega);
    static SubsetScanner banach(const BiorthogonalSystem& first, const BiorthogonalSystem& second);

    struct Profile {
        UltraNorm norm = UltraNorm::zero();
        std::vector<UltraNorm> first;   // |<x, tau_j>| or |f_j(x)|
        std::vector<UltraNorm> second;  // |<x, omega_k>| or |g_k(x)|
    };

    struct Result {
        UltraNorm coherence = UltraNorm::zero();
        ExactRational bound_constant;
        UltraNorm lhs_norm = UltraNorm::zero();
        ExactRational rhs_value;
        bool holds = false;
    };

    const Prime& prime() const noexcept { return prime_; }
    std::size_t size() const noexcept { return n_; }

    UltraNorm cross(std::size_t j, std::size_t k) const { return cross_[j * n_ + k]; }
    UltraNorm coherence(std::uint64_t m_mask, std::uint64_t n_mask) const;
    /// Mask of every k with cross(j, k) < 1 for all j in M; the admissible N
    /// for this M are exactly its submasks.
    std::uint64_t admissible_partners(std::uint64_t m_mask) const;

    Profile profile(const PVector& x) const;
    /// Requires coherence(m_mask, n_mask) < 1.
    Result evaluate(std::uint64_t m_mask, std::uint64_t n_mask, const Profile& x) const;

private:
    SubsetScanner(Prime prime, std::size_t n) : prime_(prime), n_(n) {}

    Prime prime_;
    std::size_t n_;
    std::vector<UltraNorm> cross_;
    PMatrix first_rows_{prime_, 1};
    PMatrix second_rows_{prime_, 1};
};

}  // namespace padicup
