#pragma once

/**
 * @file manifolds.hpp
 * @brief Rational cohomology models of S^k, HP^n and their products.
 */

#include <stdexcept>
#include <string>
#include <string_view>

#include "charclass/graded_ring.hpp"
#include "charclass/rational.hpp"

namespace charclass {

class ManifoldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ManifoldModel {
    std::string name;
    int dimension = 0;
    PresentationPtr presentation;
    RingElement tangent_pontryagin;
    Exponents fundamental;
};

/// The one-point manifold: no generators, p = 1, fundamental class 1.
ManifoldModel point_model();

/// HP^n: Q[z]/(z^{n+1}), |z| = 4, p = (1+z)^{2n+2} (1+4z)^{-1}.
ManifoldModel hp_model(int n);

/// S^k for k a positive multiple of 4: Q[u]/(u^2), |u| = k, p = 1.
ManifoldModel sphere_model(int k);

/// M1 x M2 with generators of M1 first; p(M1 x M2) = p(M1) p(M2).
ManifoldModel product_model(const ManifoldModel& first, const ManifoldModel& second);

/// "hp:<n>", "s:<k>", "point", or "product:<desc>,<desc>[,...]".
ManifoldModel parse_descriptor(std::string_view descriptor);

/// Integral of the L-class.
Rational signature(const ManifoldModel& manifold);

/// Integral of the A-hat class.
Rational a_hat_genus(const ManifoldModel& manifold);

RingElement l_class(const ManifoldModel& manifold);
RingElement ahat_class(const ManifoldModel& manifold);

}  // namespace charclass
