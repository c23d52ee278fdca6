#include "padicup/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "padicup/errors.hpp"

namespace padicup {

IndexSubset::IndexSubset(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw UsageError("index subset has repeated members");
    if (!members_.empty() && members_.back() >= n_)
        throw UsageError("index " + std::to_string(members_.back() + 1) + " outside {1.." + std::to_string(n_) + "}");
}

IndexSubset IndexSubset::full(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = i;
    return IndexSubset(n, std::move(all));
}

IndexSubset IndexSubset::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 63)
        throw UsageError("mask subsets support at most 63 indices");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i))
            members.push_back(i);
    return IndexSubset(n, std::move(members));
}

IndexSubset IndexSubset::from_one_based(std::size_t n, const std::vector<std::int64_t>& indices) {
    std::vector<std::size_t> members;
    members.reserve(indices.size());
    for (auto i : indices) {
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw UsageError("index " + std::to_string(i) + " outside {1.." + std::to_string(n) + "}");
        members.push_back(static_cast<std::size_t>(i - 1));
    }
    return IndexSubset(n, std::move(members));
}

bool IndexSubset::contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

IndexSubset IndexSubset::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n_; ++i)
        if (!contains(i))
            rest.push_back(i);
    return IndexSubset(n_, std::move(rest));
}

std::uint64_t IndexSubset::mask() const {
    std::uint64_t m = 0;
    for (auto i : members_)
        m |= std::uint64_t{1} << i;
    return m;
}

std::string IndexSubset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(members_[i] + 1);
    }
    return out + "}";
}

namespace {

void require_compatible(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                        const IndexSubset& n) {
    if (tau.prime() != omega.prime() || tau.size() != omega.size())
        throw UsageError("bases differ in prime or dimension");
    if (m.ambient() != tau.size() || n.ambient() != tau.size())
        throw UsageError("index subsets do not match the basis dimension");
}

void require_subset(const OrthonormalBasis& basis, const IndexSubset& s) {
    if (s.ambient() != basis.size())
        throw UsageError("index subset does not match the basis dimension");
}

// sum_{j in S} a_j b_j^T, as (columns a_j) * (rows b_j)
PMatrix outer_sum(const Prime& p, std::size_t n, const std::vector<PVector>& a, const std::vector<PVector>& b,
                  const IndexSubset& s) {
    PMatrix left(p, n);
    PMatrix right(p, n);
    for (auto j : s.members())
        for (std::size_t r = 0; r < n; ++r) {
            left(r, j) = a[j][r];
            right(j, r) = b[j][r];
        }
    return left * right;
}

}  // namespace

PVector project(const OrthonormalBasis& basis, const IndexSubset& s, const PVector& x) {
    require_subset(basis, s);
    PVector out = PVector::zero(basis.prime(), basis.size());
    for (auto j : s.members())
        out += inner_product(x, basis[j]) * basis[j];
    return out;
}

UltraNorm restricted_max(const OrthonormalBasis& basis, const IndexSubset& s, const PVector& x) {
    require_subset(basis, s);
    UltraNorm best = UltraNorm::zero();
    for (auto j : s.members())
        best = max(best, padic_abs(inner_product(x, basis[j]), basis.prime()));
    return best;
}

UltraNorm coherence(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                    const IndexSubset& n) {
    require_compatible(tau, omega, m, n);
    UltraNorm best = UltraNorm::zero();
    for (auto j : m.members())
        for (auto k : n.members())
            best = max(best, padic_abs(inner_product(tau[j], omega[k]), tau.prime()));
    return best;
}

PMatrix projection_matrix(const OrthonormalBasis& basis, const IndexSubset& s) {
    require_subset(basis, s);
    return outer_sum(basis.prime(), basis.size(), basis.vectors(), basis.vectors(), s);
}

PMatrix transfer_operator(const OrthonormalBasis& tau, const OrthonormalBasis& omega) {
    if (tau.prime() != omega.prime() || tau.size() != omega.size())
        throw UsageError("bases differ in prime or dimension");
    return outer_sum(tau.prime(), tau.size(), tau.vectors(), omega.vectors(), IndexSubset::full(tau.size()));
}

UltraNorm pnvpm_norm(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                     const IndexSubset& n) {
    require_compatible(tau, omega, m, n);
    if (m.is_empty() || n.is_empty())
        return UltraNorm::zero();
    const PMatrix pn = projection_matrix(tau, n);
    const PMatrix pm = projection_matrix(tau, m);
    return operator_norm(pn * (transfer_operator(tau, omega) * pm));
}

UncertaintyReport check_uncertainty(const OrthonormalBasis& tau, const OrthonormalBasis& omega,
                                    const IndexSubset& m, const IndexSubset& n, const PVector& x) {
    const UltraNorm c = coherence(tau, omega, m, n);
    if (c >= UltraNorm::one())
        throw HypothesisViolated(c);
    const Prime& p = tau.prime();

    UncertaintyReport report;
    report.coherence = c;
    report.bound_constant = ExactRational(1) / (ExactRational(1) - ultranorm_to_rational(c, p));
    report.lhs_norm = sup_norm(x);
    const UltraNorm tail = max(restricted_max(tau, m.complement(), x), restricted_max(omega, n.complement(), x));
    report.rhs_value = report.bound_constant * ultranorm_to_rational(tail, p);
    report.holds = ultranorm_to_rational(report.lhs_norm, p) <= report.rhs_value;
    report.operator_norm_pnvpm = pnvpm_norm(tau, omega, m, n);
    return report;
}

bool support_annihilation_check(const OrthonormalBasis& tau, const OrthonormalBasis& omega, const IndexSubset& m,
                                const IndexSubset& n) {
    const UltraNorm c = coherence(tau, omega, m, n);
    if (c >= UltraNorm::one())
        throw HypothesisViolated(c);
    std::vector<std::vector<ExactRational>> rows;
    const IndexSubset m_out = m.complement();
    const IndexSubset n_out = n.complement();
    for (auto j : m_out.members()) {
        const auto e = tau[j].entries();
        rows.emplace_back(e.begin(), e.end());
    }
    for (auto k : n_out.members()) {
        const auto e = omega[k].entries();
        rows.emplace_back(e.begin(), e.end());
    }
    return nullspace(std::move(rows), tau.size()).empty();
}

double padic_shannon_entropy(const OrthonormalBasis& basis, const PVector& x) {
    if (sup_norm(x) != UltraNorm::one())
        throw MembershipError("entropy requires |x| = 1");
    const double p = static_cast<double>(basis.prime().value());
    const double log_p = std::log(p);
    double total = 0.0;
    for (const auto& c : fourier_coefficients(basis, x)) {
        const auto v = valuation(c, basis.prime());
        if (!v)
            throw MembershipError("entropy requires every coefficient <x, tau_j> to be nonzero");
        const double vj = static_cast<double>(*v);
        total += std::pow(p, -2.0 * vj) * 2.0 * vj * log_p;
    }
    return total;
}

}  // namespace padicup
