#pragma once

/**
 * @file surgery.hpp
 * @brief Normal invariants of D^4 x HP^n and their characteristic numbers.
 *
 * A normal invariant is described rationally by its stable vector bundle xi
 * over S^4 smash HP^n_+, whose Pontryagin character is
 *
 *     ph(xi) = lambda * u * (A + B z + C z^n)      (B only for n = 2)
 *
 * in H*(S^4 x HP^n) = Q[u,z]/(u^2, z^{n+1}). Everything below is evaluated
 * inside that ring: the glued manifold M' has p(TM') = p(S^4 x HP^n) p(xi)^{-1},
 * its signature and A-hat genus are integrals of the L- and A-hat classes,
 * and the surgery obstruction is (sign(M') - sign(S^4 x HP^n)) / 8.
 *
 * lambda is a formal nonzero rational scale; no integrality is asserted.
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charclass/graded_ring.hpp"
#include "charclass/manifolds.hpp"
#include "charclass/rational.hpp"

namespace charclass {

class SurgeryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by solve_bundle when no admissible direction has nonzero A-hat.
class InconsistentSolution : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct NormalInvariantParams {
    int n = 2;
    Rational A;
    Rational B;  // only meaningful for n = 2
    Rational C;
    Rational lambda = 1;

    /// Throws SurgeryError unless n >= 2, lambda != 0, and B == 0 for n != 2.
    void validate() const;
};

/// (A, B, C); B is always zero away from n = 2.
using ParamVector = std::array<Rational, 3>;

struct BundleSolution {
    NormalInvariantParams params;
    Rational sigma;
    Rational a_hat;
    std::optional<Rational> p1_cubed;  // n = 2 only
    std::vector<ParamVector> kernel_basis;
    bool admissible = false;  // sigma == 0
    bool nontrivial = false;  // a_hat != 0
};

/// S^4 x HP^n with generators (u, z).
ManifoldModel base_manifold(int n);

/// p(xi) = 1 + lambda A u [- 6 lambda B u z] + lambda (2n+1)! (-1)^n C u z^n.
RingElement xi_total_class(const NormalInvariantParams& params);

/// The same class obtained by inverting the Pontryagin character.
RingElement xi_total_class_via_character(const NormalInvariantParams& params);

/// Total Pontryagin class of the glued manifold M'.
RingElement glued_tangent_class(const NormalInvariantParams& params);

/// sign(M') = integral of L(TS^4) L(THP^n) L(-xi).
Rational glued_signature(const NormalInvariantParams& params);

/// sigma = (sign(M') - sign(S^4 x HP^n)) / 8.
Rational surgery_obstruction(const NormalInvariantParams& params);

/// Integral of A-hat(TS^4) A-hat(THP^n) A-hat(-xi).
Rational a_hat_total_space(const NormalInvariantParams& params);

/// Integral of p_1(TE)^3; n = 2 only.
Rational p1_cubed_total_space(const NormalInvariantParams& params);

/// Coefficients of 8 sigma in (A, B, C) at lambda = 1, read off the ring
/// computation at the basis vectors.
ParamVector sigma_functional(int n);

/// Coefficients of the total-space A-hat genus in (A, B, C) at lambda = 1.
ParamVector a_hat_functional(int n);

struct ObstructionCoefficients {
    Rational coeff_A;
    Rational coeff_C;
};

/// (-h_1, h_{n+1} (2n+1)! (-1)^{n+1}) with h_i the leading L coefficients;
/// n even and >= 2.
ObstructionCoefficients general_obstruction_coefficients(int n);

/// a_{n+1} (2n+1)! (-1)^{n+1}; n even and >= 2.
Rational general_a_hat_coefficient(int n);

/// Basis of {x : f . x = 0} for the given linear functionals, as primitive
/// integer vectors whose first nonzero entry is positive.
std::vector<ParamVector> kernel_basis(const std::vector<ParamVector>& functionals);

/// Scales v to a primitive integer vector with positive leading entry.
ParamVector primitive(const ParamVector& v);

/// Finds parameters with sigma = 0 and nonzero A-hat.
///
/// n = 2 works over (A, B, C); even n >= 4 over (A, C). The kernel basis
/// spans {sigma = 0} in the respective parameter space. With
/// require_section (n = 2 only) the representative additionally has A = 0
/// and equals (0, -s_C, s_B) for 8 sigma = s_A A + s_B B + s_C C, which is
/// (0, 496/63, 28/45).
BundleSolution solve_bundle(int n, bool require_section);

/// Evaluates every characteristic number for given parameters; the kernel
/// basis is the sigma kernel for that n.
BundleSolution evaluate_bundle(const NormalInvariantParams& params);

}  // namespace charclass
