#include "charclass/surgery.hpp"

#include <algorithm>

#include "charclass/mult_seq.hpp"

namespace charclass {

namespace {

Rational signed_factorial(int n) {
    // (2n+1)! (-1)^n
    Rational f(factorial(static_cast<unsigned>(2 * n + 1)));
    return n % 2 == 0 ? f : -f;
}

Exponents uz(int z_power) { return {1, z_power}; }

Rational dot(const ParamVector& a, const ParamVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

NormalInvariantParams basis_params(int n, std::size_t index) {
    NormalInvariantParams p;
    p.n = n;
    ParamVector v{};
    v[index] = 1;
    p.A = v[0];
    p.B = v[1];
    p.C = v[2];
    return p;
}

// Product of the factor classes of S^4 and HP^n with the inverse class of xi.
Rational twisted_integral(const NormalInvariantParams& params, RingElement (*genus_class)(const ManifoldModel&),
                          std::shared_ptr<const GenusTable> (*table)(int)) {
    const ManifoldModel sphere = sphere_model(4);
    const ManifoldModel hp = hp_model(params.n);
    const ManifoldModel base = product_model(sphere, hp);
    const RingElement xi = xi_total_class(params);
    const RingElement integrand = embed(genus_class(sphere), base.presentation, 0) *
                                  embed(genus_class(hp), base.presentation, 1) *
                                  inverse(evaluate_genus(*table(base.presentation->top_degree() / 4), xi));
    return integrate(integrand, base.fundamental);
}

std::vector<ParamVector> constraints_for(int n) {
    std::vector<ParamVector> rows{sigma_functional(n)};
    if (n != 2) rows.push_back(ParamVector{0, 1, 0});
    return rows;
}

}  // namespace

void NormalInvariantParams::validate() const {
    if (n < 2) throw SurgeryError("normal invariants need n >= 2, got " + std::to_string(n));
    if (lambda.is_zero()) throw SurgeryError("lambda must be nonzero");
    if (n != 2 && !B.is_zero()) throw SurgeryError("B is only a parameter for n = 2");
}

ManifoldModel base_manifold(int n) { return product_model(sphere_model(4), hp_model(n)); }

RingElement xi_total_class(const NormalInvariantParams& params) {
    params.validate();
    const auto ring = base_manifold(params.n).presentation;
    const int n = params.n;
    RingElement p = RingElement::one(ring);
    p += RingElement::monomial(ring, uz(0), params.lambda * params.A);
    if (n == 2) p += RingElement::monomial(ring, uz(1), Rational(-6) * params.lambda * params.B);
    p += RingElement::monomial(ring, uz(n), params.lambda * signed_factorial(n) * params.C);
    return p;
}

RingElement xi_total_class_via_character(const NormalInvariantParams& params) {
    params.validate();
    const auto ring = base_manifold(params.n).presentation;
    const int n = params.n;
    std::vector<RingElement> ph(static_cast<std::size_t>(n + 1), RingElement::zero(ring));
    ph[0] += RingElement::monomial(ring, uz(0), params.lambda * params.A);
    if (n == 2) ph[1] += RingElement::monomial(ring, uz(1), params.lambda * params.B);
    ph[static_cast<std::size_t>(n)] += RingElement::monomial(ring, uz(n), params.lambda * params.C);
    return pont_classes_from_character(ph);
}

RingElement glued_tangent_class(const NormalInvariantParams& params) {
    const ManifoldModel base = base_manifold(params.n);
    return base.tangent_pontryagin * inverse(xi_total_class(params));
}

Rational glued_signature(const NormalInvariantParams& params) {
    params.validate();
    return twisted_integral(params, &l_class, &l_genus_table);
}

Rational surgery_obstruction(const NormalInvariantParams& params) {
    return (glued_signature(params) - signature(base_manifold(params.n))) * Rational(1L, 8L);
}

Rational a_hat_total_space(const NormalInvariantParams& params) {
    params.validate();
    return twisted_integral(params, &ahat_class, &ahat_genus_table);
}

Rational p1_cubed_total_space(const NormalInvariantParams& params) {
    params.validate();
    if (params.n != 2) throw SurgeryError("p1^3 is a characteristic number of the 12-dimensional total space; n must be 2");
    const RingElement p1 = homogeneous_part(glued_tangent_class(params), 4);
    return integrate(p1.pow(3), base_manifold(2).fundamental);
}

ParamVector sigma_functional(int n) {
    ParamVector f{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == 1 && n != 2) continue;
        f[i] = surgery_obstruction(basis_params(n, i)) * Rational(8);
    }
    return f;
}

ParamVector a_hat_functional(int n) {
    ParamVector f{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == 1 && n != 2) continue;
        f[i] = a_hat_total_space(basis_params(n, i));
    }
    return f;
}

ObstructionCoefficients general_obstruction_coefficients(int n) {
    // the closed form uses signature(HP^n) = 1, which needs n even
    if (n < 2 || n % 2 != 0) throw SurgeryError("obstruction coefficients are defined for even n >= 2, got " + std::to_string(n));
    const auto table = l_genus_table(n + 1);
    return {-leading_coefficient(*table, 1), -leading_coefficient(*table, n + 1) * signed_factorial(n)};
}

Rational general_a_hat_coefficient(int n) {
    if (n < 2 || n % 2 != 0) throw SurgeryError("the A-hat coefficient is defined for even n >= 2, got " + std::to_string(n));
    return -leading_coefficient(*ahat_genus_table(n + 1), n + 1) * signed_factorial(n);
}

ParamVector primitive(const ParamVector& v) {
    const BigInt den = common_denominator(v);
    BigInt g = 0;
    std::array<BigInt, 3> ints;
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational scaled = v[i] * Rational(den);
        ints[i] = scaled.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return v;
    const auto lead = std::find_if(ints.begin(), ints.end(), [](const BigInt& x) { return x != 0; });
    if (*lead < 0) g = -g;
    ParamVector out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = Rational(ints[i], g);
    return out;
}

std::vector<ParamVector> kernel_basis(const std::vector<ParamVector>& functionals) {
    std::vector<ParamVector> rows = functionals;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 3 && rank < rows.size(); ++col) {
        const auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                        [col](const ParamVector& r) { return !r[col].is_zero(); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        ParamVector& pr = rows[rank];
        const Rational inv = pr[col].inverse();
        for (auto& x : pr) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = 0; c < 3; ++c) rows[r][c] -= factor * pr[c];
        }
        pivot_columns.push_back(col);
        ++rank;
    }

    std::vector<ParamVector> basis;
    for (std::size_t free = 0; free < 3; ++free) {
        if (std::find(pivot_columns.begin(), pivot_columns.end(), free) != pivot_columns.end()) continue;
        ParamVector v{};
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_columns.size(); ++r) v[pivot_columns[r]] = -rows[r][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

BundleSolution evaluate_bundle(const NormalInvariantParams& params) {
    params.validate();
    BundleSolution s;
    s.params = params;
    s.sigma = surgery_obstruction(params);
    s.a_hat = a_hat_total_space(params);
    if (params.n == 2) s.p1_cubed = p1_cubed_total_space(params);
    s.kernel_basis = kernel_basis(constraints_for(params.n));
    s.admissible = s.sigma.is_zero();
    s.nontrivial = !s.a_hat.is_zero();
    return s;
}

BundleSolution solve_bundle(int n, bool require_section) {
    if (n < 2 || n % 2 != 0) throw SurgeryError("solve-bundle needs an even n >= 2, got " + std::to_string(n));
    if (require_section && n != 2) throw SurgeryError("a section with trivial normal bundle is only constructed for n = 2");

    const ParamVector sigma = sigma_functional(n);
    const ParamVector a_hat = a_hat_functional(n);
    const auto basis = kernel_basis(constraints_for(n));

    ParamVector chosen{};
    if (require_section) {
        chosen = ParamVector{0, -sigma[2], sigma[1]};
        const auto lead = std::find_if(chosen.begin(), chosen.end(), [](const Rational& x) { return !x.is_zero(); });
        if (lead != chosen.end() && lead->sign() < 0) {
            for (auto& x : chosen) x = -x;
        }
        if (dot(a_hat, chosen).is_zero()) throw InconsistentSolution("section direction has vanishing A-hat genus");
    } else {
        const auto it = std::find_if(basis.begin(), basis.end(), [&](const ParamVector& v) { return !dot(a_hat, v).is_zero(); });
        if (it == basis.end()) throw InconsistentSolution("every direction with vanishing obstruction has A-hat = 0");
        chosen = *it;
    }

    NormalInvariantParams params;
    params.n = n;
    params.A = chosen[0];
    params.B = chosen[1];
    params.C = chosen[2];
    BundleSolution s = evaluate_bundle(params);
    if (!s.admissible || !s.nontrivial) throw InconsistentSolution("solver representative failed the ring-level check");
    return s;
}

}  // namespace charclass
