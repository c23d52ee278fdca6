#include "padicup/rational.hpp"

#include <array>
#include <stdexcept>

#include "padicup/errors.hpp"

namespace padicup {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

ExactRational::ExactRational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
    const auto fail = [&](const char* why) {
        return ParseError("", "malformed rational \"" + std::string(text) + "\": " + why);
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            throw fail("denominator must be a nonempty run of digits");
    }
    std::string_view magnitude = num;
    if (!magnitude.empty() && magnitude.front() == '-')
        magnitude.remove_prefix(1);
    if (!all_digits(magnitude))
        throw fail("numerator must be an optionally negated run of digits");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw fail("zero denominator");
    return ExactRational(mpq_class(n, d));
}

std::string ExactRational::to_string() const {
    if (value_.get_den() == 1)
        return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero rational");
    value_ /= rhs.value_;
    return *this;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t UltraNorm::exponent() const {
    if (!exponent_)
        throw std::logic_error("exponent of the zero norm");
    return *exponent_;
}

std::string UltraNorm::to_string(const Prime& p) const {
    if (!exponent_)
        return "0";
    return std::to_string(p.value()) + "^" + std::to_string(*exponent_);
}

std::optional<std::int64_t> valuation(const ExactRational& x, const Prime& p) {
    if (x.is_zero())
        return std::nullopt;
    const mpz_class prime(static_cast<unsigned long>(p.value()));
    mpz_class rest;
    mpz_class num = abs(x.numerator());
    mpz_class den = x.denominator();
    const auto up = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
    const auto down = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
    return up - down;
}

UltraNorm padic_abs(const ExactRational& x, const Prime& p) {
    const auto v = valuation(x, p);
    return v ? UltraNorm::power(-*v) : UltraNorm::zero();
}

ExactRational prime_power(const Prime& p, std::int64_t e) {
    mpz_class magnitude;
    const auto abs_e = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_ui_pow_ui(magnitude.get_mpz_t(), static_cast<unsigned long>(p.value()), abs_e);
    if (e >= 0)
        return ExactRational(mpq_class(magnitude));
    return ExactRational(mpq_class(mpz_class(1), magnitude));
}

ExactRational ultranorm_to_rational(const UltraNorm& n, const Prime& p) {
    if (n.is_zero())
        return ExactRational(0);
    return prime_power(p, n.exponent());
}

}  // namespace padicup
