#include "charclass/graded_ring.hpp"

#include <set>

namespace charclass {

RingPresentation::RingPresentation(std::vector<Generator> generators, int top_degree)
    : generators_(std::move(generators)), top_degree_(top_degree) {
    if (top_degree_ < 0) throw RingError("negative top degree");
    std::set<std::string> names;
    for (const auto& g : generators_) {
        if (g.degree <= 0 || g.degree % 2 != 0) {
            throw RingError("generator '" + g.name + "' must have positive even degree, got " +
                            std::to_string(g.degree));
        }
        if (g.nilpotency < 1) throw RingError("generator '" + g.name + "' has nilpotency < 1");
        if (g.name.empty() || !names.insert(g.name).second) {
            throw RingError("duplicate or empty generator name '" + g.name + "'");
        }
    }
}

PresentationPtr RingPresentation::make(std::vector<Generator> generators, int top_degree) {
    return std::make_shared<const RingPresentation>(std::move(generators), top_degree);
}

std::size_t RingPresentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) return i;
    }
    throw RingError("no generator named '" + name + "'");
}

int RingPresentation::degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) d += e[i] * generators_[i].degree;
    return d;
}

bool RingPresentation::admits(const Exponents& e) const {
    if (e.size() != generators_.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (e[i] < 0 || e[i] >= generators_[i].nilpotency) return false;
    }
    return degree(e) <= top_degree_;
}

RingElement::RingElement(PresentationPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw RingError("null ring presentation");
}

RingElement RingElement::constant(PresentationPtr ring, const Rational& c) {
    return monomial(std::move(ring), {}, c);
}

RingElement RingElement::monomial(PresentationPtr ring, Exponents e, const Rational& c) {
    RingElement x(std::move(ring));
    if (e.empty()) e.assign(x.ring_->rank(), 0);
    if (e.size() != x.ring_->rank()) throw RingError("exponent vector has wrong length");
    x.add_term(e, c);
    return x;
}

RingElement RingElement::generator(PresentationPtr ring, const std::string& name) {
    Exponents e(ring->rank(), 0);
    e[ring->index_of(name)] = 1;
    return monomial(std::move(ring), std::move(e));
}

Rational RingElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

Rational RingElement::constant_term() const { return coefficient(Exponents(ring_->rank(), 0)); }

void RingElement::require_same_ring(const RingElement& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
        throw RingError("ring elements belong to different presentations");
    }
}

void RingElement::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero() || !ring_->admits(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
    require_same_ring(rhs);
    RingElement product(ring_);
    Exponents e(ring_->rank());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            product.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement x = *this;
    for (auto& [e, c] : x.terms_) c = -c;
    return x;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
}

RingElement RingElement::pow(unsigned exponent) const {
    RingElement result = one(ring_);
    RingElement base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string RingElement::to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->generators()[i].name;
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const std::string mag = c.abs().to_string();
        const std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
        if (out.empty()) {
            out = c.sign() < 0 ? "-" + term : term;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

// a = c(1 + x) with x in the augmentation ideal, which is nilpotent, so
// 1/a = c^{-1} (1 - x + x^2 - ...) terminates.
RingElement inverse(const RingElement& a) {
    const Rational c = a.constant_term();
    if (c.is_zero()) throw RingError("ring inverse: element is not a unit");
    const RingElement one = RingElement::one(a.presentation());
    const RingElement x = a * c.inverse() - one;
    RingElement sum = one;
    RingElement term = one;
    for (;;) {
        term *= -x;
        if (term.is_zero()) break;
        sum += term;
    }
    return sum * c.inverse();
}

RingElement homogeneous_part(const RingElement& a, int degree) {
    RingElement part(a.presentation());
    for (const auto& [e, c] : a.terms()) {
        if (a.presentation()->degree(e) == degree) part += RingElement::monomial(a.presentation(), e, c);
    }
    return part;
}

Rational integrate(const RingElement& a, const Exponents& fundamental) {
    if (fundamental.size() != a.presentation()->rank()) throw RingError("fundamental monomial has wrong length");
    return a.coefficient(fundamental);
}

RingElement embed(const RingElement& a, PresentationPtr target, std::size_t offset) {
    const auto& source = *a.presentation();
    if (offset + source.rank() > target->rank()) throw RingError("embedding does not fit target ring");
    for (std::size_t i = 0; i < source.rank(); ++i) {
        const auto& g = source.generators()[i];
        const auto& h = target->generators()[offset + i];
        if (g.degree != h.degree || g.nilpotency > h.nilpotency) {
            throw RingError("embedding: generator '" + g.name + "' is incompatible with '" + h.name + "'");
        }
    }
    RingElement out(target);
    for (const auto& [e, c] : a.terms()) {
        Exponents f(target->rank(), 0);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        out += RingElement::monomial(target, std::move(f), c);
    }
    return out;
}

}  // namespace charclass
