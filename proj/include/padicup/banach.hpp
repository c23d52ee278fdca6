#pragma once

#include <cstdint>

#include "padicup/uncertainty.hpp"

namespace padicup {

/// Basis {tau_j} of Q^n (columns of basis_matrix) together with its coordinate
/// functionals {f_j} (rows of functional_matrix), with |tau_j| <= 1 and
/// |f_j| <= 1. A functional phi is a row vector; phi(x) is the row-column product.
class BiorthogonalSystem {
public:
    /// (zeta_j, e_j): coordinate functionals of the canonical basis.
    static BiorthogonalSystem canonical(Prime prime, std::size_t n);
    /// (tau_j^T, tau_j): the system induced by an inner-product orthonormal basis.
    static BiorthogonalSystem from_onb(const OrthonormalBasis& basis);

    const Prime& prime() const noexcept { return basis_.prime(); }
    std::size_t size() const noexcept { return basis_.size(); }
    const PMatrix& basis_matrix() const noexcept { return basis_; }
    const PMatrix& functional_matrix() const noexcept { return functionals_; }

    PVector basis_vector(std::size_t j) const { return basis_.column(j); }
    PVector functional(std::size_t j) const { return functionals_.row(j); }
    /// f_j(x).
    ExactRational apply(std::size_t j, const PVector& x) const;

    /// True when the functionals are the transposes of the basis vectors.
    bool is_inner_product_induced() const { return functionals_ == basis_.transpose(); }

    friend bool operator==(const BiorthogonalSystem&, const BiorthogonalSystem&) = default;

private:
    BiorthogonalSystem(PMatrix basis, PMatrix functionals)
        : basis_(std::move(basis)), functionals_(std::move(functionals)) {}
    friend BiorthogonalSystem validate_system(Prime prime, PMatrix basis_matrix, PMatrix functional_matrix);

    PMatrix basis_;
    PMatrix functionals_;
};

/// Checks f_j(tau_k) = delta_jk, |tau_j| <= 1 and |f_j| <= 1, reporting every
/// failure in a ValidationError.
BiorthogonalSystem validate_system(Prime prime, PMatrix basis_matrix, PMatrix functional_matrix);

/// max_j |phi(tau_j)|, which equals the canonical max-entry norm of phi.
UltraNorm functional_norm(const BiorthogonalSystem& system, const PVector& phi);

/// The invertible isometry V = sum_j omega_j f_j with V tau_j = omega_j and
/// g_j = f_j V^-1. Throws std::logic_error if either identity fails.
PMatrix characterize_pair(const BiorthogonalSystem& first, const BiorthogonalSystem& second);

/// max_{j in S} |f_j(x)|.
UltraNorm restricted_max(const BiorthogonalSystem& system, const IndexSubset& s, const PVector& x);

/// max_{j in M, k in N} |g_k(tau_j)|.
UltraNorm cross_coherence(const BiorthogonalSystem& first, const BiorthogonalSystem& second, const IndexSubset& m,
                          const IndexSubset& n);

/// P_S = sum_{j in S} tau_j f_j.
PMatrix projection_matrix(const BiorthogonalSystem& system, const IndexSubset& s);

/// V = sum_k tau_k g_k (x -> sum_k g_k(x) tau_k).
PMatrix transfer_operator(const BiorthogonalSystem& first, const BiorthogonalSystem& second);

/// |P_N V P_M| for the operators above.
UltraNorm pnvpm_norm(const BiorthogonalSystem& first, const BiorthogonalSystem& second, const IndexSubset& m,
                     const IndexSubset& n);

/// |x| <= 1/(1 - c) max(max_{j in M^c} |f_j(x)|, max_{k in N^c} |g_k(x)|),
/// c = cross_coherence(first, second, M, N). Throws HypothesisViolated if c >= 1.
UncertaintyReport check_nonarch_uncertainty(const BiorthogonalSystem& first, const BiorthogonalSystem& second,
                                            const IndexSubset& m, const IndexSubset& n, const PVector& x);

/// Interchanged form:
///   |x| <= 1/(1 - c') max(max_{k in M^c} |g_k(x)|, max_{j in N^c} |f_j(x)|)
/// with c' = max_{j in M, k in N} |f_k(omega_j)|. The index roles in c' are
/// the ones under which the bound is a theorem; see the README for the
/// counterexample to the other pairing.
UncertaintyReport check_nonarch_uncertainty_swapped(const BiorthogonalSystem& first,
                                                    const BiorthogonalSystem& second, const IndexSubset& m,
                                                    const IndexSubset& n, const PVector& x);

/// True iff f_j(x) = 0 (j outside M) and g_k(x) = 0 (k outside N) force x = 0.
bool banach_support_annihilation(const BiorthogonalSystem& first, const BiorthogonalSystem& second,
                                 const IndexSubset& m, const IndexSubset& n);

/// Seed-deterministic system (A, A^-1) with A = U1 D L U2: U1, U2 random
/// unitaries, D a diagonal of p-adic units, L unit lower triangular with
/// p-integral entries. For n >= 2 the result is generically not induced by
/// an inner-product basis.
BiorthogonalSystem random_system(Prime prime, std::size_t n, std::uint64_t seed);

}  // namespace padicup
