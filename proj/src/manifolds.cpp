#include "charclass/manifolds.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "charclass/mult_seq.hpp"

namespace charclass {

ManifoldModel point_model() {
    auto ring = RingPresentation::make({}, 0);
    return {"point", 0, ring, RingElement::one(ring), {}};
}

ManifoldModel hp_model(int n) {
    if (n < 1) throw ManifoldError("HP^n requires n >= 1, got " + std::to_string(n));
    auto ring = RingPresentation::make({{"z", 4, n + 1}}, 4 * n);
    const auto one = RingElement::one(ring);
    const auto z = RingElement::generator(ring, "z");
    const auto tangent = (one + z).pow(static_cast<unsigned>(2 * n + 2)) * inverse(one + z * Rational(4));
    return {"HP" + std::to_string(n), 4 * n, ring, tangent, {n}};
}

ManifoldModel sphere_model(int k) {
    if (k < 4 || k % 4 != 0) {
        throw ManifoldError("sphere model needs a positive multiple of 4 as dimension, got " + std::to_string(k));
    }
    auto ring = RingPresentation::make({{"u", k, 2}}, k);
    return {"S" + std::to_string(k), k, ring, RingElement::one(ring), {1}};
}

ManifoldModel product_model(const ManifoldModel& first, const ManifoldModel& second) {
    std::vector<Generator> generators = first.presentation->generators();
    for (Generator g : second.presentation->generators()) {
        // HP^m x HP^n: the second factor's z becomes z'.
        while (std::any_of(generators.begin(), generators.end(), [&](const Generator& h) { return h.name == g.name; })) {
            g.name += "'";
        }
        generators.push_back(std::move(g));
    }
    auto ring = RingPresentation::make(std::move(generators), first.dimension + second.dimension);

    const auto tangent = embed(first.tangent_pontryagin, ring, 0) *
                         embed(second.tangent_pontryagin, ring, first.presentation->rank());
    Exponents fundamental = first.fundamental;
    fundamental.insert(fundamental.end(), second.fundamental.begin(), second.fundamental.end());
    return {first.name + " x " + second.name, first.dimension + second.dimension, ring, tangent, fundamental};
}

namespace {

int parse_positive(std::string_view text, std::string_view descriptor) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ManifoldError("unsupported manifold descriptor '" + std::string(descriptor) + "'");
    }
    return value;
}

ManifoldModel parse_factor(std::string_view factor, std::string_view descriptor) {
    if (factor == "point") return point_model();
    if (factor.starts_with("hp:")) return hp_model(parse_positive(factor.substr(3), descriptor));
    if (factor.starts_with("s:")) return sphere_model(parse_positive(factor.substr(2), descriptor));
    throw ManifoldError("unsupported manifold descriptor '" + std::string(descriptor) + "'");
}

void require_dimension(const ManifoldModel& m, const char* what) {
    if (m.dimension % 4 != 0) {
        throw ManifoldError(std::string(what) + " is only defined in dimensions divisible by 4; " + m.name +
                            " has dimension " + std::to_string(m.dimension));
    }
}

}  // namespace

ManifoldModel parse_descriptor(std::string_view descriptor) {
    constexpr std::string_view product_prefix = "product:";
    if (!descriptor.starts_with(product_prefix)) return parse_factor(descriptor, descriptor);

    std::string_view rest = descriptor.substr(product_prefix.size());
    std::vector<ManifoldModel> factors;
    while (true) {
        const auto comma = rest.find(',');
        factors.push_back(parse_factor(rest.substr(0, comma), descriptor));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (factors.size() < 2) throw ManifoldError("product descriptor needs at least two factors");
    ManifoldModel result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) result = product_model(result, factors[i]);
    return result;
}

RingElement l_class(const ManifoldModel& manifold) {
    return evaluate_genus(*l_genus_table(manifold.presentation->top_degree() / 4), manifold.tangent_pontryagin);
}

RingElement ahat_class(const ManifoldModel& manifold) {
    return evaluate_genus(*ahat_genus_table(manifold.presentation->top_degree() / 4), manifold.tangent_pontryagin);
}

Rational signature(const ManifoldModel& manifold) {
    require_dimension(manifold, "signature");
    return integrate(l_class(manifold), manifold.fundamental);
}

Rational a_hat_genus(const ManifoldModel& manifold) {
    require_dimension(manifold, "A-hat genus");
    return integrate(ahat_class(manifold), manifold.fundamental);
}

}  // namespace charclass
