#include <doctest.h>

#include <random>

#include "charclass/mult_seq.hpp"
#include "charclass/surgery.hpp"
#include "oracles.hpp"

using namespace charclass;

namespace {

NormalInvariantParams make(int n, Rational A, Rational B, Rational C, Rational lambda = 1) {
    NormalInvariantParams p;
    p.n = n;
    p.A = A;
    p.B = B;
    p.C = C;
    p.lambda = lambda;
    return p;
}

NormalInvariantParams random_params(std::mt19937& rng, int n) {
    return make(n, oracle::random_rational(rng), n == 2 ? oracle::random_rational(rng) : Rational(),
                oracle::random_rational(rng), oracle::random_nonzero(rng));
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make(2, 1, 0, 0, 0).validate(), SurgeryError);
    CHECK_THROWS_AS(make(1, 1, 0, 0).validate(), SurgeryError);
    CHECK_THROWS_AS(make(4, 1, 1, 0).validate(), SurgeryError);
    CHECK_NOTHROW(make(4, 1, 0, 1).validate());
    CHECK_THROWS_AS(xi_total_class(make(2, 1, 0, 0, 0)), SurgeryError);
}

TEST_CASE("total Pontryagin class of xi") {
    CHECK(xi_total_class(make(2, 1, 1, 1)).to_string() == "1 + u - 6*u*z + 120*u*z^2");
    CHECK(xi_total_class(make(2, 0, 0, 0, Rational(7, 3))) == RingElement::one(base_manifold(2).presentation));
    CHECK(Rational(oracle::factorial_by_loop(9)) == Rational(362880));
    CHECK(xi_total_class(make(4, 1, 0, 1)).to_string() == "1 + u + 362880*u*z^4");
    // (-1)^n for odd n
    CHECK(xi_total_class(make(3, 0, 0, 1)).to_string() == "1 - 5040*u*z^3");
}

TEST_CASE("both derivations of p(xi) agree") {
    CHECK(xi_total_class_via_character(make(2, 1, 1, 1)) == xi_total_class(make(2, 1, 1, 1)));
    CHECK(xi_total_class_via_character(make(2, 0, 0, 0)) == RingElement::one(base_manifold(2).presentation));
    std::mt19937 rng(51);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_params(rng, 2);
        CHECK(xi_total_class_via_character(p) == xi_total_class(p));
    }
    for (int n : {3, 4, 6}) {
        const auto p = random_params(rng, n);
        CHECK(xi_total_class_via_character(p) == xi_total_class(p));
    }
}

TEST_CASE("characteristic classes of -xi") {
    const auto p = make(2, Rational(2, 5), Rational(-3), Rational(4, 7), Rational(-2));
    const auto ring = base_manifold(2).presentation;
    const auto xi = xi_total_class(p);
    const auto l_minus = inverse(evaluate_genus(*l_genus_table(3), xi));
    const auto a_minus = inverse(evaluate_genus(*ahat_genus_table(3), xi));
    const auto& A = p.A;
    const auto& B = p.B;
    const auto& C = p.C;
    const auto& l = p.lambda;
    CHECK(l_minus == RingElement::one(ring) + RingElement::monomial(ring, {1, 0}, -l * A / Rational(3)) +
                         RingElement::monomial(ring, {1, 1}, l * Rational(14, 15) * B) +
                         RingElement::monomial(ring, {1, 2}, -l * Rational(496, 63) * C));
    CHECK(a_minus == RingElement::one(ring) + RingElement::monomial(ring, {1, 0}, l * A / Rational(24)) +
                         RingElement::monomial(ring, {1, 1}, -l * B / Rational(240)) +
                         RingElement::monomial(ring, {1, 2}, l * C / Rational(504)));
}

TEST_CASE("surgery obstruction examples") {
    CHECK(surgery_obstruction(make(2, 1, 0, 0)) == Rational(-1, 24));
    CHECK(glued_signature(make(2, 1, 0, 0)) == Rational(-1, 3));
    CHECK(surgery_obstruction(make(2, 0, Rational(496, 63), Rational(28, 45))) == Rational(0));
    CHECK(surgery_obstruction(make(2, 0, 0, 0, 5)) == Rational(0));
}

TEST_CASE("A-hat of the total space examples") {
    CHECK(a_hat_total_space(make(2, 0, 1, 0)) == Rational(1, 2880));
    // 496/(63*2880) + 28/(45*504) = 31/11340 + 14/11340
    const Rational expected = Rational(496, 63) * Rational(1, 2880) + Rational(28, 45) * Rational(1, 504);
    CHECK(expected == Rational(1, 252));
    CHECK(a_hat_total_space(make(2, 0, Rational(496, 63), Rational(28, 45))) == expected);
    CHECK(a_hat_total_space(make(2, 0, 0, 0, 3)) == Rational(0));
}

TEST_CASE("p1 cubed of the total space") {
    CHECK(p1_cubed_total_space(make(2, 1, 0, 0)) == Rational(-12));
    CHECK(p1_cubed_total_space(make(2, 0, 5, 7, 2)) == Rational(0));
    CHECK(p1_cubed_total_space(make(2, Rational(1, 2), 3, -1, 3)) == Rational(-18));
    CHECK(homogeneous_part(glued_tangent_class(make(2, 3, 1, 1, 2)), 4).to_string() == "2*z - 6*u");
    CHECK_THROWS_AS(p1_cubed_total_space(make(4, 1, 0, 0)), SurgeryError);
}

TEST_CASE("closed forms for n = 2 on random parameters") {
    std::mt19937 rng(53);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_params(rng, 2);
        CHECK(surgery_obstruction(p) * Rational(8) ==
              p.lambda * (-p.A / Rational(3) + Rational(28, 45) * p.B - Rational(496, 63) * p.C));
        CHECK(a_hat_total_space(p) == p.lambda * (p.B / Rational(2880) + p.C / Rational(504)));
        CHECK(p1_cubed_total_space(p) == Rational(-12) * p.lambda * p.A);
    }
}

TEST_CASE("obstruction and A-hat are linear") {
    std::mt19937 rng(57);
    for (int n : {2, 4}) {
        for (int i = 0; i < 20; ++i) {
            const auto x = random_params(rng, n);
            auto y = random_params(rng, n);
            y.lambda = x.lambda;
            const auto sum = make(n, x.A + y.A, x.B + y.B, x.C + y.C, x.lambda);
            CHECK(surgery_obstruction(sum) == surgery_obstruction(x) + surgery_obstruction(y));
            CHECK(a_hat_total_space(sum) == a_hat_total_space(x) + a_hat_total_space(y));
            auto scaled = x;
            scaled.lambda = x.lambda * Rational(3, 2);
            CHECK(surgery_obstruction(scaled) == surgery_obstruction(x) * Rational(3, 2));
            CHECK(a_hat_total_space(scaled) == a_hat_total_space(x) * Rational(3, 2));
        }
    }
}

TEST_CASE("functionals at n = 2") {
    CHECK(sigma_functional(2) == ParamVector{Rational(-1, 3), Rational(28, 45), Rational(-496, 63)});
    CHECK(a_hat_functional(2) == ParamVector{0, Rational(1, 2880), Rational(1, 504)});
}

TEST_CASE("general obstruction coefficients") {
    const auto c2 = general_obstruction_coefficients(2);
    CHECK(c2.coeff_A == Rational(-1, 3));
    CHECK(c2.coeff_C == Rational(-496, 63));
    for (int n : {2, 4, 6}) {
        const auto c = general_obstruction_coefficients(n);
        const auto f = sigma_functional(n);
        CHECK(c.coeff_A == f[0]);
        CHECK(c.coeff_C == f[2]);
    }
    const Rational h5 = leading_coefficient(*l_genus_table(5), 5);
    CHECK(general_obstruction_coefficients(4).coeff_C == -h5 * Rational(362880));
    CHECK_THROWS_AS(general_obstruction_coefficients(1), SurgeryError);
    CHECK_THROWS_AS(general_obstruction_coefficients(3), SurgeryError);
    // odd n: HP^n has signature 0, so the A column of the functional vanishes
    CHECK(sigma_functional(3)[0] == Rational(0));
}

TEST_CASE("general A-hat coefficient") {
    CHECK(general_a_hat_coefficient(2) == Rational(1, 504));
    for (int n : {2, 4, 6}) {
        CHECK_FALSE(general_a_hat_coefficient(n).is_zero());
        CHECK(general_a_hat_coefficient(n) == a_hat_total_space(make(n, 0, 0, 1)));
        CHECK(a_hat_total_space(make(n, 1, 0, 0)) == Rational(0));
    }
    CHECK_THROWS_AS(general_a_hat_coefficient(3), SurgeryError);
    CHECK_THROWS_AS(general_a_hat_coefficient(0), SurgeryError);
}

TEST_CASE("kernel basis and primitive vectors") {
    CHECK(primitive(ParamVector{Rational(-28, 15), -1, 0}) == ParamVector{28, 15, 0});
    CHECK(primitive(ParamVector{0, Rational(496, 63), Rational(28, 45)}) == ParamVector{0, 620, 49});
    CHECK(primitive(ParamVector{0, 0, 0}) == ParamVector{0, 0, 0});

    const auto basis = kernel_basis({sigma_functional(2)});
    CHECK(basis.size() == 2);
    CHECK(basis[0] == ParamVector{28, 15, 0});
    CHECK(basis[1] == ParamVector{496, 0, -21});
    CHECK(kernel_basis({ParamVector{0, 0, 0}}).size() == 3);
    CHECK(kernel_basis({ParamVector{1, 0, 0}, ParamVector{0, 1, 0}, ParamVector{0, 0, 1}}).empty());
    CHECK(kernel_basis({ParamVector{1, 2, 3}, ParamVector{2, 4, 6}}).size() == 2);
}

TEST_CASE("solve bundle n = 2") {
    const auto s = solve_bundle(2, false);
    CHECK(s.kernel_basis.size() == 2);
    CHECK(s.admissible);
    CHECK(s.nontrivial);
    CHECK(s.sigma == Rational(0));
    CHECK(s.params.A == Rational(28));
    CHECK(s.params.B == Rational(15));
    CHECK(s.a_hat == Rational(1, 192));
    CHECK(s.p1_cubed == Rational(-336));
    for (const auto& v : s.kernel_basis) CHECK(surgery_obstruction(make(2, v[0], v[1], v[2])) == Rational(0));
}

TEST_CASE("solve bundle n = 2 with a section") {
    const auto s = solve_bundle(2, true);
    CHECK(s.params.A == Rational(0));
    CHECK(s.params.B == Rational(496, 63));
    CHECK(s.params.C == Rational(28, 45));
    CHECK(s.sigma == Rational(0));
    CHECK(s.a_hat == Rational(1, 252));
    CHECK(s.p1_cubed == Rational(0));
    CHECK(s.kernel_basis.size() == 2);
}

TEST_CASE("solve bundle in pair mode") {
    for (int n : {4, 6}) {
        const auto s = solve_bundle(n, false);
        CHECK(s.kernel_basis.size() == 1);
        CHECK(s.params.B == Rational(0));
        CHECK_FALSE(s.params.C.is_zero());
        CHECK(s.sigma == Rational(0));
        CHECK_FALSE(s.a_hat.is_zero());
        CHECK_FALSE(s.p1_cubed.has_value());
        const auto c = general_obstruction_coefficients(n);
        CHECK(c.coeff_A * s.params.A + c.coeff_C * s.params.C == Rational(0));
    }
    const auto s4 = solve_bundle(4, false);
    CHECK(s4.params.A == Rational(130816));
    CHECK(s4.params.C == Rational(-11));
}

TEST_CASE("solve bundle preconditions") {
    CHECK_THROWS_AS(solve_bundle(3, false), SurgeryError);
    CHECK_THROWS_AS(solve_bundle(0, false), SurgeryError);
    CHECK_THROWS_AS(solve_bundle(4, true), SurgeryError);
}

TEST_CASE("evaluate bundle reports flags") {
    const auto s = evaluate_bundle(make(2, 1, 0, 0));
    CHECK_FALSE(s.admissible);
    CHECK_FALSE(s.nontrivial);
    CHECK(s.sigma == Rational(-1, 24));
    const auto t = evaluate_bundle(make(2, 28, 15, 0));
    CHECK(t.admissible);
    CHECK(t.nontrivial);
}
