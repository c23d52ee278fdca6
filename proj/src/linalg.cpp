#include "padicup/linalg.hpp"

#include <string>
#include <utility>

#include "padicup/errors.hpp"

namespace padicup {

namespace {

void require_same(const Prime& a, const Prime& b) {
    if (a != b)
        throw UsageError("prime mismatch: " + std::to_string(a.value()) + " vs " + std::to_string(b.value()));
}

void require_size(std::size_t a, std::size_t b) {
    if (a != b)
        throw UsageError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

PVector::PVector(Prime prime, std::vector<ExactRational> entries) : prime_(prime), entries_(std::move(entries)) {
    if (entries_.empty())
        throw UsageError("vector must have at least one entry");
}

PVector PVector::zero(Prime prime, std::size_t n) { return PVector(prime, std::vector<ExactRational>(n)); }

PVector PVector::unit(Prime prime, std::size_t n, std::size_t index) {
    PVector v = zero(prime, n);
    v.entries_.at(index) = 1;
    return v;
}

bool PVector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero())
            return false;
    return true;
}

PVector& PVector::operator+=(const PVector& rhs) {
    require_same(prime_, rhs.prime_);
    require_size(size(), rhs.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    return *this;
}

PVector& PVector::operator-=(const PVector& rhs) {
    require_same(prime_, rhs.prime_);
    require_size(size(), rhs.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    return *this;
}

PVector operator*(const ExactRational& scale, PVector v) {
    for (auto& x : v.entries_)
        x *= scale;
    return v;
}

PMatrix::PMatrix(Prime prime, std::size_t n) : prime_(prime), n_(n), data_(n * n) {
    if (n == 0)
        throw UsageError("matrix must be at least 1x1");
}

PMatrix::PMatrix(Prime prime, std::size_t n, std::vector<ExactRational> row_major)
    : prime_(prime), n_(n), data_(std::move(row_major)) {
    if (n == 0)
        throw UsageError("matrix must be at least 1x1");
    require_size(data_.size(), n * n);
}

PMatrix PMatrix::identity(Prime prime, std::size_t n) {
    PMatrix m(prime, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

PMatrix PMatrix::from_columns(std::span<const PVector> columns) {
    if (columns.empty())
        throw UsageError("no columns");
    const std::size_t n = columns.size();
    PMatrix m(columns.front().prime(), n);
    for (std::size_t j = 0; j < n; ++j) {
        require_same(m.prime_, columns[j].prime());
        require_size(columns[j].size(), n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

PMatrix PMatrix::from_rows(std::span<const PVector> rows) { return from_columns(rows).transpose(); }

PVector PMatrix::row(std::size_t i) const {
    std::vector<ExactRational> out(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    return PVector(prime_, std::move(out));
}

PVector PMatrix::column(std::size_t j) const {
    std::vector<ExactRational> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = (*this)(i, j);
    return PVector(prime_, std::move(out));
}

PMatrix PMatrix::transpose() const {
    PMatrix t(prime_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

PMatrix operator*(const PMatrix& a, const PMatrix& b) {
    require_same(a.prime_, b.prime_);
    require_size(a.n_, b.n_);
    const std::size_t n = a.n_;

    // Clear denominators per row of a and per column of b, multiply over Z,
    // then canonicalize each entry once.
    std::vector<mpz_class> row_den(n, 1), col_den(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            mpz_lcm(row_den[i].get_mpz_t(), row_den[i].get_mpz_t(), a(i, k).value().get_den_mpz_t());
            mpz_lcm(col_den[i].get_mpz_t(), col_den[i].get_mpz_t(), b(k, i).value().get_den_mpz_t());
        }
    std::vector<mpz_class> ai(n * n), bi(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const mpq_class& x = a(i, k).value();
            if (sgn(x) != 0) {
                mpz_divexact(ai[i * n + k].get_mpz_t(), row_den[i].get_mpz_t(), x.get_den_mpz_t());
                ai[i * n + k] *= x.get_num();
            }
            const mpq_class& y = b(k, i).value();
            if (sgn(y) != 0) {
                mpz_divexact(bi[k * n + i].get_mpz_t(), col_den[i].get_mpz_t(), y.get_den_mpz_t());
                bi[k * n + i] *= y.get_num();
            }
        }

    PMatrix c(a.prime_, n);
    mpz_class acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(ai[i * n + k]) != 0 && sgn(bi[k * n + j]) != 0)
                    mpz_addmul(acc.get_mpz_t(), ai[i * n + k].get_mpz_t(), bi[k * n + j].get_mpz_t());
            if (sgn(acc) == 0)
                continue;
            mpq_class q(acc, row_den[i] * col_den[j]);
            q.canonicalize();
            c(i, j) = ExactRational(std::move(q));
        }
    return c;
}

UltraNorm sup_norm(const PVector& v) {
    UltraNorm best = UltraNorm::zero();
    for (const auto& x : v.entries())
        best = max(best, padic_abs(x, v.prime()));
    return best;
}

ExactRational inner_product(const PVector& u, const PVector& v) {
    require_same(u.prime(), v.prime());
    require_size(u.size(), v.size());
    mpq_class acc;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc += u[i].value() * v[i].value();
    return ExactRational(std::move(acc));
}

bool cauchy_schwarz_check(const PVector& u, const PVector& v) {
    return padic_abs(inner_product(u, v), u.prime()) <= sup_norm(u) * sup_norm(v);
}

PVector matvec(const PMatrix& a, const PVector& v) {
    require_same(a.prime(), v.prime());
    require_size(a.size(), v.size());
    const std::size_t n = a.size();
    std::vector<ExactRational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class acc;
        for (std::size_t j = 0; j < n; ++j)
            acc += a(i, j).value() * v[j].value();
        out[i] = ExactRational(std::move(acc));
    }
    return PVector(a.prime(), std::move(out));
}

UltraNorm operator_norm(const PMatrix& a) {
    UltraNorm best = UltraNorm::zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            best = max(best, padic_abs(a(i, j), a.prime()));
    return best;
}

PMatrix invert(const PMatrix& a) {
    const std::size_t n = a.size();
    PMatrix work = a;
    PMatrix inv = PMatrix::identity(a.prime(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(col, j), work(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const ExactRational scale = ExactRational(1) / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col).is_zero())
                continue;
            const ExactRational factor = work(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

ExactRational determinant(const PMatrix& a) {
    const std::size_t n = a.size();
    PMatrix work = a;
    ExactRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(work(col, j), work(pivot, j));
            det = -det;
        }
        det *= work(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work(r, col).is_zero())
                continue;
            const ExactRational factor = work(r, col) / work(col, col);
            for (std::size_t j = col; j < n; ++j)
                work(r, j) -= factor * work(col, j);
        }
    }
    return det;
}

std::vector<std::vector<ExactRational>> nullspace(std::vector<std::vector<ExactRational>> rows,
                                                  std::size_t columns) {
    for (const auto& r : rows)
        require_size(r.size(), columns);

    // Reduced row echelon form; pivot_of[c] is the row owning column c.
    std::vector<std::ptrdiff_t> pivot_of(columns, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        const ExactRational scale = ExactRational(1) / rows[rank][col];
        for (auto& x : rows[rank])
            x *= scale;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            const ExactRational factor = rows[r][col];
            for (std::size_t j = 0; j < columns; ++j)
                rows[r][j] -= factor * rows[rank][j];
        }
        pivot_of[col] = static_cast<std::ptrdiff_t>(rank);
        ++rank;
    }

    std::vector<std::vector<ExactRational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (pivot_of[free] >= 0)
            continue;
        std::vector<ExactRational> v(columns);
        v[free] = 1;
        for (std::size_t c = 0; c < columns; ++c)
            if (pivot_of[c] >= 0)
                v[c] = -rows[static_cast<std::size_t>(pivot_of[c])][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_isometry(const PMatrix& a) {
    if (operator_norm(a) > UltraNorm::one())
        return false;
    try {
        return operator_norm(invert(a)) <= UltraNorm::one();
    } catch (const SingularMatrixError&) {
        return false;
    }
}

bool is_unitary(const PMatrix& a) {
    return is_isometry(a) && a.transpose() * a == PMatrix::identity(a.prime(), a.size());
}

}  // namespace padicup
