#include "charclass/series.hpp"

#include <algorithm>

namespace charclass {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::initializer_list<Rational> coefficients, std::size_t order)
    : Series(std::vector<Rational>(coefficients), order) {}

Series::Series(std::vector<Rational> coefficients, std::size_t order) : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1);
}

Series Series::one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::truncated(std::size_t order) const {
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1), order);
}

Series& Series::operator+=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

Series& Series::operator*=(const Series& rhs) {
    const std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

Series& Series::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series Series::pow(int exponent) const {
    Series base = exponent < 0 ? inverse(*this) : *this;
    Series result = one(order());
    for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= base;
    return result;
}

Series Series::rescaled(const Rational& factor) const {
    Series s = *this;
    Rational power = 1;
    for (auto& c : s.coeffs_) {
        c *= power;
        power *= factor;
    }
    return s;
}

std::string Series::to_string(const std::string& var) const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string mag = c.abs().to_string();
        std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
        if (out.empty()) {
            out = c.sign() < 0 ? "-" + term : term;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

Series inverse(const Series& a) {
    if (a[0].is_zero()) throw SeriesDomainError("series inverse: constant term is zero");
    const std::size_t n = a.order();
    const Rational inv0 = a[0].inverse();
    std::vector<Rational> b(n + 1);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc * inv0;
    }
    return Series(std::move(b), n);
}

// f = exp(a) satisfies f' = a' f, so k f_k = sum_{j=1}^k j a_j f_{k-j}.
Series exp(const Series& a) {
    if (!a[0].is_zero()) throw SeriesDomainError("series exp: constant term must be zero");
    const std::size_t n = a.order();
    std::vector<Rational> f(n + 1);
    f[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * a[j] * f[k - j];
        f[k] = acc / Rational(static_cast<long>(k));
    }
    return Series(std::move(f), n);
}

// g = log(a) satisfies a g' = a', so k g_k = k a_k - sum_{j=1}^{k-1} j g_j a_{k-j}.
Series log(const Series& a) {
    if (a[0] != Rational(1)) throw SeriesDomainError("series log: constant term must be one");
    const std::size_t n = a.order();
    std::vector<Rational> g(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * a[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * g[j] * a[k - j];
        g[k] = acc / Rational(static_cast<long>(k));
    }
    return Series(std::move(g), n);
}

namespace {

// Coefficients of exp(t) up to t^{2N+1}, as the series variable t.
Series exponential_in_t(std::size_t order) { return exp(Series::variable(2 * order + 1)); }

// cosh(t) and sinh(t)/t with t^2 renamed to z.
Series cosh_in_z(std::size_t order) {
    const Series e = exponential_in_t(order);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = e[2 * k];
    return Series(std::move(c), order);
}

Series sinh_over_t_in_z(std::size_t order) {
    const Series e = exponential_in_t(order);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = e[2 * k + 1];
    return Series(std::move(c), order);
}

}  // namespace

Series l_genus_series(std::size_t order) {
    return cosh_in_z(order) * inverse(sinh_over_t_in_z(order));
}

Series ahat_genus_series(std::size_t order) {
    // sinh(t/2)/(t/2) is sinh(t)/t evaluated at z/4.
    return inverse(sinh_over_t_in_z(order).rescaled(Rational(1L, 4L)));
}

}  // namespace charclass
