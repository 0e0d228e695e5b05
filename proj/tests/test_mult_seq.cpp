#include <doctest.h>

#include <random>

#include "charclass/mult_seq.hpp"
#include "oracles.hpp"

using namespace charclass;

namespace {

PresentationPtr uz_ring(int n) { return RingPresentation::make({{"u", 4, 2}, {"z", 4, n + 1}}, 4 * n + 4); }

// 1 + random components in every degree 4i of Q[u,z]/(u^2, z^{n+1}).
RingElement random_total_class(std::mt19937& rng, const PresentationPtr& ring) {
    RingElement x = RingElement::one(ring);
    for (const auto& [e, ignored] : (RingElement::one(ring) + RingElement::generator(ring, "u") +
                                     RingElement::generator(ring, "z"))
                                        .pow(8)
                                        .terms()) {
        if (ring->degree(e) > 0) x += RingElement::monomial(ring, e, oracle::random_rational(rng, 9, 5));
    }
    return x;
}

PartitionPoly p(Partition partition, Rational c) { return PartitionPoly::monomial(std::move(partition), c); }

// Evaluates a polynomial in e_1..e_k at the elementary symmetric polynomials
// of `vars` variables, independently of PartitionPoly::evaluate.
oracle::Multi substitute_elementary(const PartitionPoly& poly, std::size_t vars) {
    oracle::Multi out;
    for (const auto& [partition, c] : poly.terms()) {
        oracle::Multi term = oracle::multi_const(vars, c);
        for (int index : partition) term = oracle::multi_mul(term, oracle::elementary(vars, index));
        oracle::multi_add(out, term);
    }
    return out;
}

}  // namespace

TEST_CASE("partitions in descending lexicographic order") {
    CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions(0) == std::vector<Partition>{{}});
    CHECK(partitions(6).size() == 11);
    CHECK(partitions(10).size() == 42);
}

TEST_CASE("partition polynomial basics") {
    const auto a = p({1, 2}, Rational(3));
    CHECK(a.terms().begin()->first == Partition{2, 1});
    CHECK(a.is_homogeneous(3));
    CHECK(a.multiplied(PartitionPoly::variable(1), 4) == p({2, 1, 1}, 3));
    CHECK(a.multiplied(PartitionPoly::variable(1), 3).is_zero());
    CHECK_THROWS_AS(PartitionPoly::monomial({0}), std::invalid_argument);
    CHECK((p({3}, Rational(62, 945)) + p({2, 1}, Rational(-13, 945)) + p({1, 1, 1}, Rational(2, 945))).to_string() ==
          "62/945*p3 - 13/945*p2*p1 + 2/945*p1^3");
}

TEST_CASE("newton power sums") {
    const auto s = newton_power_sums(4);
    CHECK(s[0] == PartitionPoly::variable(1));
    CHECK(s[1] == p({1, 1}, 1) + p({2}, -2));
    CHECK(s[3] == p({1, 1, 1, 1}, 1) + p({2, 1, 1}, -4) + p({2, 2}, 2) + p({3, 1}, 4) + p({4}, -4));
    CHECK_THROWS(newton_power_sums(0));
}

TEST_CASE("newton power sums agree with brute-force symmetric expansion") {
    const auto s = newton_power_sums(4);
    for (std::size_t vars = 1; vars <= 4; ++vars) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(substitute_elementary(s[static_cast<std::size_t>(k - 1)], vars) == oracle::power_sum(vars, k));
        }
    }
}

TEST_CASE("L genus table") {
    const auto t = genus_table(l_genus_series(3), 3);
    CHECK(t.K(1) == p({1}, Rational(1, 3)));
    CHECK(t.K(2) == p({2}, Rational(7, 45)) + p({1, 1}, Rational(-1, 45)));
    CHECK(t.K(3) == p({3}, Rational(62, 945)) + p({2, 1}, Rational(-13, 945)) + p({1, 1, 1}, Rational(2, 945)));
    CHECK(t.K(3).to_fraction_string() == "(62*p3 - 13*p2*p1 + 2*p1^3)/945");
    CHECK(t.K(1).to_fraction_string() == "p1/3");
}

TEST_CASE("A-hat genus table") {
    const auto t = genus_table(ahat_genus_series(3), 3);
    CHECK(t.K(1) == p({1}, Rational(-1, 24)));
    CHECK(t.K(2) == p({2}, Rational(-4, 5760)) + p({1, 1}, Rational(7, 5760)));
    CHECK(t.K(3) == p({3}, Rational(-16, 967680)) + p({2, 1}, Rational(44, 967680)) +
                        p({1, 1, 1}, Rational(-31, 967680)));
    CHECK(t.K(1).to_fraction_string() == "-p1/24");
    CHECK(t.K(2).to_fraction_string() == "(-4*p2 + 7*p1^2)/5760");
}

TEST_CASE("trivial genus") {
    const auto t = genus_table(Series::one(5), 5);
    for (int i = 1; i <= 5; ++i) CHECK(t.K(i).is_zero());
}

TEST_CASE("genus table preconditions") {
    CHECK_THROWS_AS(genus_table(Series({2, 1}, 3), 3), std::invalid_argument);
    CHECK_THROWS_AS(genus_table(l_genus_series(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(genus_table(l_genus_series(3), 3).K(4), std::out_of_range);
}

TEST_CASE("table invariants: homogeneity and single-root specialization") {
    for (const auto& q : {l_genus_series(8), ahat_genus_series(8)}) {
        const auto t = genus_table(q, 8);
        for (int i = 1; i <= 8; ++i) {
            CHECK(t.K(i).is_homogeneous(i));
            CHECK(t.K(i).coefficient(Partition(static_cast<std::size_t>(i), 1)) == q[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("cached tables grow on demand and agree with fresh ones") {
    const auto small = l_genus_table(2);
    CHECK(small->max_weight() >= 2);
    const auto big = l_genus_table(12);
    CHECK(big->max_weight() >= 12);
    const auto fresh = genus_table(l_genus_series(12), 12);
    for (int i = 1; i <= 12; ++i) CHECK(big->K(i) == fresh.K(i));
    CHECK(ahat_genus_table(3)->K(3) == genus_table(ahat_genus_series(3), 3).K(3));
}

TEST_CASE("evaluate genus on HP^2") {
    const auto ring = RingPresentation::make({{"z", 4, 3}}, 8);
    const auto z = RingElement::generator(ring, "z");
    const auto one = RingElement::one(ring);
    const auto tangent = one + z * Rational(2) + z * z * Rational(7);
    CHECK(evaluate_genus(*l_genus_table(2), tangent) == one + z * Rational(2, 3) + z * z);
    CHECK(evaluate_genus(*ahat_genus_table(2), tangent) == one - z * Rational(1, 12));
    CHECK(evaluate_genus(*l_genus_table(2), one) == one);
    CHECK(evaluate_genus(*ahat_genus_table(2), one) == one);
}

TEST_CASE("evaluate genus preconditions") {
    const auto ring = RingPresentation::make({{"z", 4, 4}}, 12);
    CHECK_THROWS_AS(evaluate_genus(genus_table(l_genus_series(2), 2), RingElement::one(ring)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_genus(*l_genus_table(3), RingElement::constant(ring, 2)), RingError);
}

TEST_CASE("genera are multiplicative") {
    std::mt19937 rng(41);
    const auto ring = uz_ring(3);
    for (const auto& table : {l_genus_table(4), ahat_genus_table(4)}) {
        for (int i = 0; i < 40; ++i) {
            const auto a = random_total_class(rng, ring), b = random_total_class(rng, ring);
            CHECK(evaluate_genus(*table, a * b) == evaluate_genus(*table, a) * evaluate_genus(*table, b));
        }
    }
}

TEST_CASE("splitting check: genus of (1+z)^{2n+2}(1+4z)^{-1}") {
    for (int n = 1; n <= 4; ++n) {
        const auto ring = RingPresentation::make({{"z", 4, n + 1}}, 4 * n);
        const auto z = RingElement::generator(ring, "z");
        const auto one = RingElement::one(ring);
        const auto tangent = (one + z).pow(static_cast<unsigned>(2 * n + 2)) * inverse(one + z * Rational(4));
        const auto order = static_cast<std::size_t>(n);
        for (const auto& q : {l_genus_series(order), ahat_genus_series(order)}) {
            const Series expected = q.pow(2 * n + 2) * inverse(q.rescaled(4));
            const auto genus = evaluate_genus(genus_table(q, n), tangent);
            for (int k = 0; k <= n; ++k) CHECK(genus.coefficient({k}) == expected[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("pontryagin character examples") {
    const auto s4 = RingPresentation::make({{"u", 4, 2}}, 4);
    const auto u = RingElement::generator(s4, "u");
    const auto ph = pont_character(RingElement::one(s4) + u, 1);
    CHECK(ph[0] == u);

    for (const auto& x : pont_character(RingElement::one(uz_ring(2)), 3)) CHECK(x.is_zero());

    const auto ring = uz_ring(2);
    const Rational A(2, 3), B(-5, 7), C(9, 4), lambda(-3);
    const auto total = RingElement::one(ring) + RingElement::monomial(ring, {1, 0}, lambda * A) +
                       RingElement::monomial(ring, {1, 1}, Rational(-6) * lambda * B) +
                       RingElement::monomial(ring, {1, 2}, Rational(120) * lambda * C);
    const auto character = pont_character(total, 3);
    CHECK(character[0] == RingElement::monomial(ring, {1, 0}, lambda * A));
    CHECK(character[1] == RingElement::monomial(ring, {1, 1}, lambda * B));
    CHECK(character[2] == RingElement::monomial(ring, {1, 2}, lambda * C));
}

TEST_CASE("pontryagin character on a product-rich ring") {
    // Q[x]/(x^3), |x| = 4: c_2 = -x, so s_4 = 2 c_2^2 = 2x^2 and ph_2 = x^2/12.
    const auto ring = RingPresentation::make({{"x", 4, 3}}, 8);
    const auto x = RingElement::generator(ring, "x");
    const auto ph = pont_character(RingElement::one(ring) + x, 2);
    CHECK(ph[0] == x);
    CHECK(ph[1] == x * x * Rational(1, 12));
}

TEST_CASE("pontryagin classes from character") {
    const auto ring = uz_ring(2);
    const Rational A(1, 2), B(3), C(-7, 11), lambda(5, 2);
    const std::vector<RingElement> ph{RingElement::monomial(ring, {1, 0}, lambda * A),
                                      RingElement::monomial(ring, {1, 1}, lambda * B),
                                      RingElement::monomial(ring, {1, 2}, lambda * C)};
    const auto total = pont_classes_from_character(ph);
    CHECK(homogeneous_part(total, 4) == RingElement::monomial(ring, {1, 0}, lambda * A));
    CHECK(homogeneous_part(total, 8) == RingElement::monomial(ring, {1, 1}, Rational(-6) * lambda * B));
    CHECK(homogeneous_part(total, 12) == RingElement::monomial(ring, {1, 2}, Rational(120) * lambda * C));

    const std::vector<RingElement> zero(3, RingElement::zero(ring));
    CHECK(pont_classes_from_character(zero) == RingElement::one(ring));

    CHECK_THROWS(pont_classes_from_character(std::vector<RingElement>{}));
    const std::vector<RingElement> misplaced{RingElement::monomial(ring, {1, 1}, 1)};
    CHECK_THROWS_AS(pont_classes_from_character(misplaced), RingError);
}

TEST_CASE("character inversion round trips") {
    std::mt19937 rng(43);
    const auto ring = uz_ring(3);
    for (int i = 0; i < 50; ++i) {
        const auto total = random_total_class(rng, ring);
        const auto ph = pont_character(total, 4);
        CHECK(pont_classes_from_character(ph) == total);
        CHECK(pont_character(pont_classes_from_character(ph), 4) == ph);
    }
    // also where products do not vanish
    const auto poly = RingPresentation::make({{"x", 4, 5}}, 16);
    for (int i = 0; i < 20; ++i) {
        RingElement total = RingElement::one(poly);
        for (int k = 1; k <= 4; ++k) total += RingElement::monomial(poly, {k}, oracle::random_rational(rng, 9, 5));
        CHECK(pont_classes_from_character(pont_character(total, 4)) == total);
    }
}

TEST_CASE("leading coefficients") {
    CHECK(leading_coefficient(*l_genus_table(3), 3) == Rational(62, 945));
    CHECK(leading_coefficient(*ahat_genus_table(3), 3) == Rational(-16, 967680));
    CHECK(leading_coefficient(*ahat_genus_table(1), 1) == Rational(-1, 24));
    for (int n = 1; n <= 6; ++n) {
        CHECK_FALSE(leading_coefficient(*ahat_genus_table(n), n).is_zero());
        CHECK_FALSE(leading_coefficient(*l_genus_table(n), n).is_zero());
    }
}
