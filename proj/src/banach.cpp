#include "padicup/banach.hpp"

#include <string>

#include "padicup/errors.hpp"
#include "padicup/random.hpp"

namespace padicup {

namespace {

void require_compatible(const BiorthogonalSystem& a, const BiorthogonalSystem& b, const IndexSubset& m,
                        const IndexSubset& n) {
    if (a.prime() != b.prime() || a.size() != b.size())
        throw UsageError("systems differ in prime or dimension");
    if (m.ambient() != a.size() || n.ambient() != a.size())
        throw UsageError("index subsets do not match the system dimension");
}

ExactRational row_times_column(const PMatrix& rows, std::size_t i, const PMatrix& cols, std::size_t j) {
    mpq_class acc;
    for (std::size_t k = 0; k < rows.size(); ++k)
        acc += rows(i, k).value() * cols(k, j).value();
    return ExactRational(std::move(acc));
}

ExactRational row_times_vector(const PMatrix& rows, std::size_t i, const PVector& x) {
    mpq_class acc;
    for (std::size_t k = 0; k < rows.size(); ++k)
        acc += rows(i, k).value() * x[k].value();
    return ExactRational(std::move(acc));
}

// sum_{j in S} (column j of cols) (row j of rows)
PMatrix column_row_sum(const PMatrix& cols, const PMatrix& rows, const IndexSubset& s) {
    const std::size_t n = cols.size();
    PMatrix left(cols.prime(), n);
    PMatrix right(cols.prime(), n);
    for (auto j : s.members())
        for (std::size_t r = 0; r < n; ++r) {
            left(r, j) = cols(r, j);
            right(j, r) = rows(j, r);
        }
    return left * right;
}

UltraNorm max_row_norm(const PMatrix& m, std::size_t i) {
    UltraNorm best = UltraNorm::zero();
    for (std::size_t k = 0; k < m.size(); ++k)
        best = max(best, padic_abs(m(i, k), m.prime()));
    return best;
}

UltraNorm max_column_norm(const PMatrix& m, std::size_t j) {
    UltraNorm best = UltraNorm::zero();
    for (std::size_t k = 0; k < m.size(); ++k)
        best = max(best, padic_abs(m(k, j), m.prime()));
    return best;
}

UncertaintyReport make_report(const Prime& p, UltraNorm c, UltraNorm tail, UltraNorm lhs, UltraNorm pnvpm) {
    UncertaintyReport report;
    report.coherence = c;
    report.bound_constant = ExactRational(1) / (ExactRational(1) - ultranorm_to_rational(c, p));
    report.lhs_norm = lhs;
    report.rhs_value = report.bound_constant * ultranorm_to_rational(tail, p);
    report.holds = ultranorm_to_rational(lhs, p) <= report.rhs_value;
    report.operator_norm_pnvpm = pnvpm;
    return report;
}

}  // namespace

BiorthogonalSystem BiorthogonalSystem::canonical(Prime prime, std::size_t n) {
    return BiorthogonalSystem(PMatrix::identity(prime, n), PMatrix::identity(prime, n));
}

BiorthogonalSystem BiorthogonalSystem::from_onb(const OrthonormalBasis& basis) {
    PMatrix t = basis.matrix();
    PMatrix f = t.transpose();
    return BiorthogonalSystem(std::move(t), std::move(f));
}

ExactRational BiorthogonalSystem::apply(std::size_t j, const PVector& x) const {
    if (x.size() != size() || x.prime() != prime())
        throw UsageError("vector does not match the system");
    return row_times_vector(functionals_, j, x);
}

BiorthogonalSystem validate_system(Prime prime, PMatrix basis_matrix, PMatrix functional_matrix) {
    std::vector<std::string> violations;
    if (basis_matrix.prime() != prime || functional_matrix.prime() != prime)
        violations.push_back("matrices do not carry prime " + std::to_string(prime.value()));
    if (basis_matrix.size() != functional_matrix.size())
        violations.push_back("basis is " + std::to_string(basis_matrix.size()) + "-dimensional but " +
                             std::to_string(functional_matrix.size()) + " functionals were given");
    if (!violations.empty())
        throw ValidationError(std::move(violations));

    const std::size_t n = basis_matrix.size();
    for (std::size_t j = 0; j < n; ++j) {
        const UltraNorm norm = max_column_norm(basis_matrix, j);
        if (norm > UltraNorm::one())
            violations.push_back("tau_" + std::to_string(j + 1) + ": norm bound |tau_j| <= 1 fails (|tau_" +
                                 std::to_string(j + 1) + "| = " + norm.to_string(prime) + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const UltraNorm norm = max_row_norm(functional_matrix, j);
        if (norm > UltraNorm::one())
            violations.push_back("f_" + std::to_string(j + 1) + ": norm bound |f_j| <= 1 fails (|f_" +
                                 std::to_string(j + 1) + "| = " + norm.to_string(prime) + ")");
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const ExactRational v = row_times_column(functional_matrix, j, basis_matrix, k);
            const ExactRational want = j == k ? 1 : 0;
            if (v != want)
                violations.push_back("biorthogonality fails: f_" + std::to_string(j + 1) + "(tau_" +
                                     std::to_string(k + 1) + ") = " + v.to_string() + ", expected " +
                                     want.to_string());
        }
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return BiorthogonalSystem(std::move(basis_matrix), std::move(functional_matrix));
}

UltraNorm functional_norm(const BiorthogonalSystem& system, const PVector& phi) {
    if (phi.size() != system.size() || phi.prime() != system.prime())
        throw UsageError("functional does not match the system");
    UltraNorm best = UltraNorm::zero();
    for (std::size_t j = 0; j < system.size(); ++j)
        best = max(best, padic_abs(inner_product(phi, system.basis_vector(j)), system.prime()));
    return best;
}

PMatrix characterize_pair(const BiorthogonalSystem& first, const BiorthogonalSystem& second) {
    if (first.prime() != second.prime() || first.size() != second.size())
        throw UsageError("systems differ in prime or dimension");
    PMatrix v = second.basis_matrix() * first.functional_matrix();
    if (!is_isometry(v))
        throw std::logic_error("characterize_pair: V is not an invertible isometry");
    if (v * first.basis_matrix() != second.basis_matrix())
        throw std::logic_error("characterize_pair: V tau_j != omega_j");
    if (first.functional_matrix() * invert(v) != second.functional_matrix())
        throw std::logic_error("characterize_pair: f_j V^-1 != g_j");
    return v;
}

UltraNorm restricted_max(const BiorthogonalSystem& system, const IndexSubset& s, const PVector& x) {
    if (s.ambient() != system.size())
        throw UsageError("index subset does not match the system dimension");
    UltraNorm best = UltraNorm::zero();
    for (auto j : s.members())
        best = max(best, padic_abs(system.apply(j, x), system.prime()));
    return best;
}

UltraNorm cross_coherence(const BiorthogonalSystem& first, const BiorthogonalSystem& second, const IndexSubset& m,
                          const IndexSubset& n) {
    require_compatible(first, second, m, n);
    UltraNorm best = UltraNorm::zero();
    for (auto j : m.members())
        for (auto k : n.members())
            best = max(best, padic_abs(row_times_column(second.functional_matrix(), k, first.basis_matrix(), j),
                                       first.prime()));
    return best;
}

PMatrix projection_matrix(const BiorthogonalSystem& system, const IndexSubset& s) {
    if (s.ambient() != system.size())
        throw UsageError("index subset does not match the system dimension");
    return column_row_sum(system.basis_matrix(), system.functional_matrix(), s);
}

PMatrix transfer_operator(const BiorthogonalSystem& first, const BiorthogonalSystem& second) {
    if (first.prime() != second.prime() || first.size() != second.size())
        throw UsageError("systems differ in prime or dimension");
    return column_row_sum(first.basis_matrix(), second.functional_matrix(), IndexSubset::full(first.size()));
}

UltraNorm pnvpm_norm(const BiorthogonalSystem& first, const BiorthogonalSystem& second, const IndexSubset& m,
                     const IndexSubset& n) {
    require_compatible(first, second, m, n);
    if (m.is_empty() || n.is_empty())
        return UltraNorm::zero();
    const PMatrix pn = projection_matrix(first, n);
    const PMatrix pm = projection_matrix(first, m);
    return operator_norm(pn * (transfer_operator(first, second) * pm));
}

UncertaintyReport check_nonarch_uncertainty(const BiorthogonalSystem& first, const BiorthogonalSystem& second,
                                            const IndexSubset& m, const IndexSubset& n, const PVector& x) {
    const UltraNorm c = cross_coherence(first, second, m, n);
    if (c >= UltraNorm::one())
        throw HypothesisViolated(c);
    const UltraNorm tail = max(restricted_max(first, m.complement(), x), restricted_max(second, n.complement(), x));
    return make_report(first.prime(), c, tail, sup_norm(x), pnvpm_norm(first, second, m, n));
}

UncertaintyReport check_nonarch_uncertainty_swapped(const BiorthogonalSystem& first,
                                                    const BiorthogonalSystem& second, const IndexSubset& m,
                                                    const IndexSubset& n, const PVector& x) {
    require_compatible(first, second, m, n);
    UltraNorm c = UltraNorm::zero();
    for (auto j : m.members())
        for (auto k : n.members())
            c = max(c, padic_abs(row_times_column(first.functional_matrix(), k, second.basis_matrix(), j),
                                 first.prime()));
    if (c >= UltraNorm::one())
        throw HypothesisViolated(c);
    const UltraNorm tail = max(restricted_max(second, m.complement(), x), restricted_max(first, n.complement(), x));
    return make_report(first.prime(), c, tail, sup_norm(x), pnvpm_norm(second, first, m, n));
}

bool banach_support_annihilation(const BiorthogonalSystem& first, const BiorthogonalSystem& second,
                                 const IndexSubset& m, const IndexSubset& n) {
    const UltraNorm c = cross_coherence(first, second, m, n);
    if (c >= UltraNorm::one())
        throw HypothesisViolated(c);
    std::vector<std::vector<ExactRational>> rows;
    const auto push_row = [&rows](const PMatrix& f, std::size_t i) {
        std::vector<ExactRational> row(f.size());
        for (std::size_t k = 0; k < f.size(); ++k)
            row[k] = f(i, k);
        rows.push_back(std::move(row));
    };
    const IndexSubset m_out = m.complement();
    const IndexSubset n_out = n.complement();
    for (auto j : m_out.members())
        push_row(first.functional_matrix(), j);
    for (auto k : n_out.members())
        push_row(second.functional_matrix(), k);
    return nullspace(std::move(rows), first.size()).empty();
}

namespace {

// Small rational whose numerator and denominator are both prime to p.
ExactRational random_unit(Rng& rng, const Prime& p) {
    for (;;) {
        const long num = static_cast<long>(rng.between(1, 12)) * (rng.coin() ? 1 : -1);
        const long den = static_cast<long>(rng.between(1, 12));
        const ExactRational u(num, den);
        if (valuation(u, p) == 0)
            return u;
    }
}

// Small rational with nonnegative valuation.
ExactRational random_integral(Rng& rng, const Prime& p) {
    if (rng.below(4) == 0)
        return 0;
    ExactRational v = random_unit(rng, p);
    if (rng.coin())
        v *= prime_power(p, rng.between(1, 2));
    return v;
}

}  // namespace

BiorthogonalSystem random_system(Prime prime, std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0));
    PMatrix d(prime, n);
    PMatrix l = PMatrix::identity(prime, n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = random_unit(rng, prime);
        for (std::size_t j = 0; j < i; ++j)
            l(i, j) = random_integral(rng, prime);
    }
    const PMatrix a = random_unitary(prime, n, derive_seed(seed, 1)) * d * l *
                      random_unitary(prime, n, derive_seed(seed, 2));
    return validate_system(prime, a, invert(a));
}

}  // namespace padicup
