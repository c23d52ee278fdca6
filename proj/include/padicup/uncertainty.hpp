#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicup/onb.hpp"

namespace padicup {

/// Subset of {0, ..., n-1}, stored sorted. Files and reports use 1-based
/// indices; conversion happens at the edges (from_one_based, to_string).
class IndexSubset {
public:
    IndexSubset(std::size_t n, std::vector<std::size_t> members);

    static IndexSubset empty(std::size_t n) { return IndexSubset(n, {}); }
    static IndexSubset full(std::size_t n);
    /// Bit i of mask selects index i. Requires n <= 63.
    static IndexSubset from_mask(std::size_t n, std::uint64_t mask);
    static IndexSubset from_one_based(std::size_t n, const std::vector<std::int64_t>& indices);

    std::size_t ambient() const noexcept { return n_; }
    /// Cardinality o(S).
    std::size_t size() const noexcept { return members_.size(); }
    bool is_empty() const noexcept { return members_.empty(); }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    bool contains(std::size_t i) const;
    IndexSubset complement() const;
    std::uint64_t mask() const;

    /// 1-based, e.g. "{1,3}" or "{}".
    std::string to_string() const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    std::size_t n_;
    std::vector<std::size_t> members_;
};

/// Both sides of the uncertainty inequality, evaluated exactly.
struct UncertaintyReport {
    UltraNorm coherence = UltraNorm::zero();
    ExactRational bound_constant;  // 1 / (1 - coherence)
    UltraNorm lhs_norm = UltraNorm::zero();  // |x|
    ExactRational rhs_value;
    bool holds = false;
    UltraNorm operator_norm_pnvpm = UltraNorm::zero();  // |P_N V P_M|

    friend bool operator==(const UncertaintyReport&, const UncertaintyReport&) = default;
};

/// The coherence hypothesis (strictly below 1) is not met, so the inequality
/// says nothing. Distinct from a falsified inequality.
class HypothesisViolated : public std::domain_error {
public:
    explicit HypothesisViolated(UltraNorm coherence)
        : std::domain_error("coherence hypothesis violated (coherence >= 1)"), coherence_(coherence) {}

    UltraNorm coherence() const noexcept { return coherence_; }

private:
    UltraNorm coherence_;
};

/// P_S x = sum_{j in S} <x, tau_j> tau_j.
PVector project(const OrthonormalBasis& basis, const IndexSubset& s, const PVector& x);

/// max_{j in S} |<x, tau_j>|, Zero for S empty.
UltraNorm restricted_max(const OrthonormalBasis& basis, const IndexSubset& s, const PVector& x);

/// max_{j in M, k in N} |<tau_j, omega_k>|, Zero when M or N is empty.
UltraNorm coherence(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                    const IndexSubset& n);

/// Matrix of P_S.
PMatrix projection_matrix(const OrthonormalBasis& basis, const IndexSubset& s);

/// Matrix of V : x -> sum_k <x, omega_k> tau_k.
PMatrix transfer_operator(const OrthonormalBasis& tau, const OrthonormalBasis& omega);

/// |P_N V P_M|, never larger than coherence(tau, omega, M, N).
UltraNorm pnvpm_norm(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                     const IndexSubset& n);

/// Evaluates
///   |x| <= 1/(1 - c) * max(max_{j in M^c} |<x, tau_j>|, max_{k in N^c} |<x, omega_k>|)
/// with c = coherence(tau, omega, M, N). Throws HypothesisViolated if c >= 1.
UncertaintyReport check_uncertainty(const OrthonormalBasis& tau, const OrthonormalBasis& omega,
                                    const IndexSubset& m, const IndexSubset& n, const PVector& x);

/// True iff the only x with <x, tau_j> = 0 (j outside M) and <x, omega_k> = 0
/// (k outside N) is x = 0, decided by exact elimination.
bool support_annihilation_check(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                                const IndexSubset& n);

/// -sum_j |c_j|^2 log |c_j|^2 with c_j = <x, tau_j>, computed in double as
/// sum_j p^(-2 v_j) * 2 v_j * log p. Diagnostic only; not exact.
/// Throws MembershipError unless |x| = 1 and every c_j is nonzero.
double padic_shannon_entropy(const OrthonormalBasis& basis, const PVector& x);

}  // namespace padicup
