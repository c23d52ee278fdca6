#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padicup {

/// Exact rational number in canonical form (positive denominator, numerator
/// and denominator coprime). Backed by GMP's mpq_class.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(long num, long den);
    explicit ExactRational(mpq_class value);

    /// Parses "num/den" or "num" in base 10. Only the numerator may carry a
    /// leading minus sign; the denominator must be a nonzero run of digits.
    /// Non-canonical input such as "2/4" is accepted and reduced.
    static ExactRational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    /// "num/den", or "num" when the denominator is 1.
    std::string to_string() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// A rational prime, checked deterministically at construction.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Symbolic non-Archimedean absolute value: either zero or p^e for an integer
/// exponent e. Totally ordered with Zero below every power of p.
class UltraNorm {
public:
    static constexpr UltraNorm zero() noexcept { return UltraNorm(); }
    static constexpr UltraNorm power(std::int64_t exponent) noexcept { return UltraNorm(exponent); }
    static constexpr UltraNorm one() noexcept { return UltraNorm(0); }

    constexpr bool is_zero() const noexcept { return !exponent_.has_value(); }

    /// Exponent e of p^e. Throws std::logic_error for Zero.
    std::int64_t exponent() const;

    /// "p^e" (for example "7^-1"), or "0".
    std::string to_string(const Prime& p) const;

    friend constexpr bool operator==(const UltraNorm&, const UltraNorm&) = default;
    friend constexpr std::strong_ordering operator<=>(const UltraNorm& a, const UltraNorm& b) noexcept {
        if (a.is_zero() || b.is_zero())
            return b.is_zero() <=> a.is_zero();
        return *a.exponent_ <=> *b.exponent_;
    }

    friend constexpr UltraNorm operator*(const UltraNorm& a, const UltraNorm& b) noexcept {
        if (a.is_zero() || b.is_zero())
            return zero();
        return power(*a.exponent_ + *b.exponent_);
    }

private:
    constexpr UltraNorm() = default;
    constexpr explicit UltraNorm(std::int64_t e) : exponent_(e) {}

    std::optional<std::int64_t> exponent_;
};

constexpr UltraNorm max(const UltraNorm& a, const UltraNorm& b) noexcept { return a < b ? b : a; }

/// p-adic valuation. std::nullopt stands for +infinity (x = 0).
std::optional<std::int64_t> valuation(const ExactRational& x, const Prime& p);

UltraNorm padic_abs(const ExactRational& x, const Prime& p);

/// Zero -> 0, p^e -> the exact rational p^e.
ExactRational ultranorm_to_rational(const UltraNorm& n, const Prime& p);

/// Exact integer power p^e for any integer e.
ExactRational prime_power(const Prime& p, std::int64_t e);

}  // namespace padicup
