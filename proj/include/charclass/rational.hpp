#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals, factorials and Bernoulli numbers.
 *
 * Rational is a value type over GMP's mpq. It is kept in canonical form at
 * all times: denominator positive, numerator and denominator coprime, zero
 * stored as 0/1. Equality is therefore structural.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace charclass {

using BigInt = mpz_class;

/// Raised by Rational division (and inversion) when the divisor is zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a "num/den" string cannot be parsed.
class RationalParseError : public std::invalid_argument {
public:
    explicit RationalParseError(const std::string& text)
        : std::invalid_argument("malformed rational '" + text + "'") {}
};

class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(static_cast<long>(value)) {}
    Rational(long value) : value_(value) {}
    Rational(long long value);
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    /// Parses "num/den" or "num" (optional leading sign on the numerator).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;

    /// "num/den", denominator omitted when it is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Integer power; negative exponents invert (throws DivisionByZero on 0).
    Rational pow(int exponent) const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// k! for k >= 0.
BigInt factorial(unsigned k);

/// Binomial coefficient C(n, k).
BigInt binomial(unsigned n, unsigned k);

/// Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(unsigned k);

/// Least common multiple of the denominators, 1 for an empty range.
template <typename Range>
BigInt common_denominator(const Range& values) {
    BigInt result = 1;
    for (const Rational& v : values) {
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.denominator().get_mpz_t());
    }
    return result;
}

}  // namespace charclass
