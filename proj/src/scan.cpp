#include "padicup/scan.hpp"

#include "padicup/errors.hpp"

namespace padicup {

SubsetScanner SubsetScanner::hilbert(const OrthonormalBasis& tau, const OrthonormalBasis& omega) {
    if (tau.prime() != omega.prime() || tau.size() != omega.size())
        throw UsageError("bases differ in prime or dimension");
    const std::size_t n = tau.size();
    if (n > 63)
        throw UsageError("subset scanning supports at most 63 dimensions");
    SubsetScanner s(tau.prime(), n);
    s.cross_.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            s.cross_.push_back(padic_abs(inner_product(tau[j], omega[k]), tau.prime()));
    s.first_rows_ = tau.matrix().transpose();
    s.second_rows_ = omega.matrix().transpose();
    return s;
}

SubsetScanner SubsetScanner::banach(const BiorthogonalSystem& first, const BiorthogonalSystem& second) {
    if (first.prime() != second.prime() || first.size() != second.size())
        throw UsageError("systems differ in prime or dimension");
    const std::size_t n = first.size();
    if (n > 63)
        throw UsageError("subset scanning supports at most 63 dimensions");
    SubsetScanner s(first.prime(), n);
    s.cross_.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const PVector tau_j = first.basis_vector(j);
        for (std::size_t k = 0; k < n; ++k)
            s.cross_.push_back(padic_abs(second.apply(k, tau_j), first.prime()));
    }
    s.first_rows_ = first.functional_matrix();
    s.second_rows_ = second.functional_matrix();
    return s;
}

UltraNorm SubsetScanner::coherence(std::uint64_t m_mask, std::uint64_t n_mask) const {
    UltraNorm best = UltraNorm::zero();
    for (std::size_t j = 0; j < n_; ++j) {
        if (!(m_mask >> j & 1))
            continue;
        for (std::size_t k = 0; k < n_; ++k)
            if (n_mask >> k & 1)
                best = max(best, cross(j, k));
    }
    return best;
}

std::uint64_t SubsetScanner::admissible_partners(std::uint64_t m_mask) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < n_; ++k) {
        bool ok = true;
        for (std::size_t j = 0; j < n_ && ok; ++j)
            if (m_mask >> j & 1)
                ok = cross(j, k) < UltraNorm::one();
        if (ok)
            out |= std::uint64_t{1} << k;
    }
    return out;
}

SubsetScanner::Profile SubsetScanner::profile(const PVector& x) const {
    if (x.size() != n_ || x.prime() != prime_)
        throw UsageError("vector does not match the instance");
    Profile out;
    out.norm = sup_norm(x);
    const PVector a = first_rows_ * x;
    const PVector b = second_rows_ * x;
    for (std::size_t i = 0; i < n_; ++i) {
        out.first.push_back(padic_abs(a[i], prime_));
        out.second.push_back(padic_abs(b[i], prime_));
    }
    return out;
}

SubsetScanner::Result SubsetScanner::evaluate(std::uint64_t m_mask, std::uint64_t n_mask, const Profile& x) const {
    Result r;
    r.coherence = coherence(m_mask, n_mask);
    if (r.coherence >= UltraNorm::one())
        throw UsageError("evaluate called outside the coherence hypothesis");
    UltraNorm tail = UltraNorm::zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(m_mask >> i & 1))
            tail = max(tail, x.first[i]);
        if (!(n_mask >> i & 1))
            tail = max(tail, x.second[i]);
    }
    r.bound_constant = ExactRational(1) / (ExactRational(1) - ultranorm_to_rational(r.coherence, prime_));
    r.lhs_norm = x.norm;
    r.rhs_value = r.bound_constant * ultranorm_to_rational(tail, prime_);
    r.holds = ultranorm_to_rational(r.lhs_norm, prime_) <= r.rhs_value;
    return r;
}

}  // namespace padicup
