#pragma once

/**
 * @file series.hpp
 * @brief Truncated univariate formal power series over Rational.
 *
 * A Series of order N stores c_0..c_N; everything from z^{N+1} on is
 * discarded. Binary operations truncate to the smaller order of the two
 * operands.
 */

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "charclass/rational.hpp"

namespace charclass {

/// Raised when inverting or taking the log of a series whose constant term
/// does not allow it, or exponentiating one with nonzero constant term.
class SeriesDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Series {
public:
    /// Zero series of the given truncation order.
    explicit Series(std::size_t order = 0);
    Series(std::initializer_list<Rational> coefficients, std::size_t order);
    Series(std::vector<Rational> coefficients, std::size_t order);

    static Series one(std::size_t order);
    /// The series z (zero when order is 0).
    static Series variable(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Series truncated(std::size_t order) const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator*=(const Rational& scalar);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    Series operator-() const;

    friend bool operator==(const Series&, const Series&) = default;

    /// Integer power; negative exponents go through inverse().
    Series pow(int exponent) const;

    /// The series f(c*z).
    Series rescaled(const Rational& factor) const;

    std::string to_string(const std::string& var = "z") const;

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; requires c_0 != 0.
Series inverse(const Series& a);

/// exp(a); requires c_0 == 0.
Series exp(const Series& a);

/// log(a); requires c_0 == 1.
Series log(const Series& a);

/// sqrt(z)/tanh(sqrt(z)) to order N.
Series l_genus_series(std::size_t order);

/// (sqrt(z)/2)/sinh(sqrt(z)/2) to order N.
Series ahat_genus_series(std::size_t order);

}  // namespace charclass
