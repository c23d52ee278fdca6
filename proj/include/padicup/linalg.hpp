#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "padicup/rational.hpp"

namespace padicup {

/// Dense vector over Q carrying the prime that defines its norm.
class PVector {
public:
    PVector(Prime prime, std::vector<ExactRational> entries);

    static PVector zero(Prime prime, std::size_t n);
    /// Canonical basis vector e_index (0-based).
    static PVector unit(Prime prime, std::size_t n, std::size_t index);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const ExactRational> entries() const noexcept { return entries_; }

    const ExactRational& operator[](std::size_t i) const { return entries_[i]; }
    ExactRational& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const;

    PVector& operator+=(const PVector& rhs);
    PVector& operator-=(const PVector& rhs);
    friend PVector operator+(PVector lhs, const PVector& rhs) { return lhs += rhs; }
    friend PVector operator-(PVector lhs, const PVector& rhs) { return lhs -= rhs; }
    friend PVector operator*(const ExactRational& scale, PVector v);

    friend bool operator==(const PVector&, const PVector&) = default;

private:
    Prime prime_;
    std::vector<ExactRational> entries_;
};

/// Dense square matrix over Q, row-major.
class PMatrix {
public:
    /// n x n zero matrix.
    PMatrix(Prime prime, std::size_t n);
    PMatrix(Prime prime, std::size_t n, std::vector<ExactRational> row_major);

    static PMatrix identity(Prime prime, std::size_t n);
    static PMatrix from_columns(std::span<const PVector> columns);
    static PMatrix from_rows(std::span<const PVector> rows);

    const Prime& prime() const noexcept { return prime_; }
    std::size_t size() const noexcept { return n_; }

    const ExactRational& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
    ExactRational& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

    PVector row(std::size_t i) const;
    PVector column(std::size_t j) const;
    PMatrix transpose() const;

    friend PMatrix operator*(const PMatrix& a, const PMatrix& b);
    friend bool operator==(const PMatrix&, const PMatrix&) = default;

private:
    Prime prime_;
    std::size_t n_;
    std::vector<ExactRational> data_;
};

/// max_j |v_j|_p; Zero iff v = 0.
UltraNorm sup_norm(const PVector& v);

/// Bilinear form sum_j u_j v_j. Throws UsageError on prime or length mismatch.
ExactRational inner_product(const PVector& u, const PVector& v);

/// |<u, v>| <= |u| |v|. Always true for the standard form; exposed so the
/// bound can be exercised directly.
bool cauchy_schwarz_check(const PVector& u, const PVector& v);

PVector matvec(const PMatrix& a, const PVector& v);
inline PVector operator*(const PMatrix& a, const PVector& v) { return matvec(a, v); }

/// Operator norm induced by the coordinate sup norm. Over a non-Archimedean
/// field this is the largest entry: each column A e_j attains |A e_j| and the
/// ultrametric inequality bounds |Ax| by max_j |A e_j| |x_j|.
UltraNorm operator_norm(const PMatrix& a);

/// Exact Gauss-Jordan inverse. Throws SingularMatrixError.
PMatrix invert(const PMatrix& a);

ExactRational determinant(const PMatrix& a);

/// Basis of {x : rows x = 0}, each row of length `columns`. Empty when the
/// only solution is x = 0.
std::vector<std::vector<ExactRational>> nullspace(std::vector<std::vector<ExactRational>> rows,
                                                  std::size_t columns);

/// |Ax| = |x| for all x. Decided as: A invertible, |A| <= 1 and |A^-1| <= 1.
bool is_isometry(const PMatrix& a);

/// Invertible isometry that also preserves the bilinear form (A^T A = I).
bool is_unitary(const PMatrix& a);

}  // namespace padicup
