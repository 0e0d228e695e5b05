#pragma once

/**
 * @file graded_ring.hpp
 * @brief Truncated graded-commutative rings over Q with even-degree generators.
 *
 * A RingPresentation is a list of generators g_i of positive even degree with
 * nilpotency relations g_i^{e_i} = 0, plus a cutoff on total degree. The
 * ring is the free commutative algebra modulo exactly those relations, so
 * H*(HP^n) = Q[z]/(z^{n+1}) and H*(S^4 x HP^n) = Q[u,z]/(u^2, z^{n+1}).
 *
 * RingElement stores a sparse map from exponent vectors to nonzero
 * coefficients. Monomials are ordered lexicographically by generator
 * declaration order; this order is used for the canonical text form.
 */

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charclass/rational.hpp"

namespace charclass {

/// Raised on presentation mismatches, odd-degree generators, non-units, ...
class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponents = std::vector<int>;

struct Generator {
    std::string name;
    int degree;
    int nilpotency;  // g^nilpotency == 0

    friend bool operator==(const Generator&, const Generator&) = default;
};

class RingPresentation {
public:
    /// Throws RingError for odd or non-positive degrees, nilpotency < 1,
    /// duplicate names, or a negative top degree.
    RingPresentation(std::vector<Generator> generators, int top_degree);

    static std::shared_ptr<const RingPresentation> make(std::vector<Generator> generators, int top_degree);

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t rank() const { return generators_.size(); }
    int top_degree() const { return top_degree_; }

    /// Index of the named generator; throws RingError if absent.
    std::size_t index_of(const std::string& name) const;

    int degree(const Exponents& e) const;
    /// True when e respects every nilpotency bound and the degree cutoff.
    bool admits(const Exponents& e) const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

private:
    std::vector<Generator> generators_;
    int top_degree_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

class RingElement {
public:
    using Terms = std::map<Exponents, Rational>;

    /// The zero element.
    explicit RingElement(PresentationPtr ring);

    static RingElement zero(PresentationPtr ring) { return RingElement(std::move(ring)); }
    static RingElement constant(PresentationPtr ring, const Rational& c);
    static RingElement one(PresentationPtr ring) { return constant(std::move(ring), 1); }
    /// c times the monomial e; zero if e is killed by the relations.
    static RingElement monomial(PresentationPtr ring, Exponents e, const Rational& c = 1);
    static RingElement generator(PresentationPtr ring, const std::string& name);

    const PresentationPtr& presentation() const { return ring_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);
    RingElement& operator*=(const Rational& scalar);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
    friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
    RingElement operator-() const;

    /// Equal presentations (structurally) and equal terms.
    friend bool operator==(const RingElement& a, const RingElement& b);

    RingElement pow(unsigned exponent) const;

    /// Canonical text form, e.g. "1 + 2/3*z + z^2" or "-12*u*z^2".
    std::string to_string() const;

private:
    void require_same_ring(const RingElement& other) const;
    void add_term(const Exponents& e, const Rational& c);

    PresentationPtr ring_;
    Terms terms_;
};

/// Multiplicative inverse of a unit (nonzero constant term).
RingElement inverse(const RingElement& a);

/// Sum of the terms of exact cohomological degree d.
RingElement homogeneous_part(const RingElement& a, int degree);

/// Coefficient of the fundamental monomial.
Rational integrate(const RingElement& a, const Exponents& fundamental);

/// Maps an element of a factor ring into a product ring whose generators
/// contain the factor's generators starting at position offset.
RingElement embed(const RingElement& a, PresentationPtr target, std::size_t offset);

}  // namespace charclass
