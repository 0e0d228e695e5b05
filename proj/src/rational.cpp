#include "charclass/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace charclass {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long long value) {
    value_ = mpq_class(BigInt(std::to_string(value)));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw RationalParseError(std::string(text));
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw DivisionByZero();
    if (negative) n = -n;
    return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(int exponent) const {
    const Rational base = exponent < 0 ? inverse() : *this;
    unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), e);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt factorial(unsigned k) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), k);
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

// Akiyama-Tanigawa; it yields B_1 = +1/2, flipped below.
Rational bernoulli(unsigned k) {
    std::vector<Rational> row(k + 1);
    for (unsigned m = 0; m <= k; ++m) {
        row[m] = Rational(1L, static_cast<long>(m + 1));
        for (unsigned j = m; j >= 1; --j) {
            row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
        }
    }
    return k == 1 ? -row[0] : row[0];
}

}  // namespace charclass
