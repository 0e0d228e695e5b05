#include "charclass/mult_seq.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace charclass {

int weight(const Partition& partition) { return std::accumulate(partition.begin(), partition.end(), 0); }

namespace {

void partitions_bounded(int remaining, int largest, Partition& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        partitions_bounded(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::string monomial_string(const Partition& partition, const std::string& var) {
    std::string out;
    for (std::size_t i = 0; i < partition.size();) {
        std::size_t j = i;
        while (j < partition.size() && partition[j] == partition[i]) ++j;
        if (!out.empty()) out += "*";
        out += var + std::to_string(partition[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

void append_signed(std::string& out, int sign, const std::string& term) {
    if (out.empty()) {
        out = sign < 0 ? "-" + term : term;
    } else {
        out += sign < 0 ? " - " : " + ";
        out += term;
    }
}

std::string coefficient_times(const std::string& magnitude, const std::string& mono) {
    if (mono.empty()) return magnitude;
    return magnitude == "1" ? mono : magnitude + "*" + mono;
}

}  // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition prefix;
    partitions_bounded(n, n, prefix, out);
    return out;
}

bool PartitionPoly::KeyOrder::operator()(const Partition& a, const Partition& b) const {
    const int wa = weight(a);
    const int wb = weight(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PartitionPoly PartitionPoly::constant(const Rational& c) { return monomial({}, c); }

PartitionPoly PartitionPoly::monomial(Partition partition, const Rational& c) {
    for (int part : partition) {
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(partition.begin(), partition.end(), std::greater<>());
    PartitionPoly p;
    p.add_term(partition, c);
    return p;
}

PartitionPoly PartitionPoly::variable(int index) { return monomial({index}); }

Rational PartitionPoly::coefficient(const Partition& partition) const {
    auto it = terms_.find(partition);
    return it == terms_.end() ? Rational() : it->second;
}

int PartitionPoly::max_weight() const { return terms_.empty() ? 0 : weight(terms_.rbegin()->first); }

bool PartitionPoly::is_homogeneous(int w) const {
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight(t.first) == w; });
}

PartitionPoly PartitionPoly::weight_part(int w) const {
    PartitionPoly p;
    for (const auto& [key, c] : terms_) {
        if (weight(key) == w) p.terms_.emplace(key, c);
    }
    return p;
}

PartitionPoly PartitionPoly::truncated(int max_w) const {
    PartitionPoly p;
    for (const auto& [key, c] : terms_) {
        if (weight(key) <= max_w) p.terms_.emplace(key, c);
    }
    return p;
}

void PartitionPoly::add_term(const Partition& partition, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(partition, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PartitionPoly& PartitionPoly::operator+=(const PartitionPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key, c);
    return *this;
}

PartitionPoly& PartitionPoly::operator-=(const PartitionPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
    return *this;
}

PartitionPoly& PartitionPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

PartitionPoly PartitionPoly::multiplied(const PartitionPoly& rhs, int max_w) const {
    PartitionPoly out;
    for (const auto& [a, ca] : terms_) {
        const int wa = weight(a);
        for (const auto& [b, cb] : rhs.terms_) {
            if (wa + weight(b) > max_w) break;  // rhs keys ascend by weight
            Partition merged;
            merged.reserve(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged), std::greater<>());
            out.add_term(merged, ca * cb);
        }
    }
    return out;
}

RingElement PartitionPoly::evaluate(const PresentationPtr& ring, std::span<const RingElement> values) const {
    RingElement result(ring);
    for (const auto& [key, c] : terms_) {
        RingElement term = RingElement::constant(ring, c);
        for (int index : key) {
            if (index > static_cast<int>(values.size())) {
                throw std::out_of_range("evaluate: no value for variable " + std::to_string(index));
            }
            term *= values[index - 1];
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

std::string PartitionPoly::to_string(const std::string& var) const {
    std::string out;
    for (const auto& [key, c] : terms_) {
        append_signed(out, c.sign(), coefficient_times(c.abs().to_string(), monomial_string(key, var)));
    }
    return out.empty() ? "0" : out;
}

std::string PartitionPoly::to_fraction_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::vector<Rational> coeffs;
    for (const auto& [key, c] : terms_) coeffs.push_back(c);
    const BigInt den = common_denominator(coeffs);
    std::string body;
    for (const auto& [key, c] : terms_) {
        const Rational scaled = c * Rational(den);
        append_signed(body, scaled.sign(), coefficient_times(scaled.abs().to_string(), monomial_string(key, var)));
    }
    if (den == 1) return body;
    if (terms_.size() > 1) body = "(" + body + ")";
    return body + "/" + den.get_str();
}

std::vector<PartitionPoly> newton_power_sums(int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("newton_power_sums: max weight must be >= 1");
    std::vector<PartitionPoly> s;
    s.reserve(static_cast<std::size_t>(max_weight));
    for (int k = 1; k <= max_weight; ++k) {
        PartitionPoly sk = PartitionPoly::variable(k) * Rational(static_cast<long>(k % 2 == 1 ? k : -k));
        for (int i = 1; i < k; ++i) {
            const Rational sign = i % 2 == 1 ? 1 : -1;
            sk += PartitionPoly::variable(i).multiplied(s[static_cast<std::size_t>(k - i - 1)], k) * sign;
        }
        s.push_back(std::move(sk));
    }
    return s;
}

GenusTable::GenusTable(Series source, int max_weight) : source_(std::move(source)) {
    if (max_weight < 0) throw std::invalid_argument("genus table: negative weight");
    if (source_[0] != Rational(1)) throw std::invalid_argument("genus table: series must have constant term 1");
    if (source_.order() < static_cast<std::size_t>(max_weight)) {
        throw std::invalid_argument("genus table: series order below requested weight");
    }
    if (max_weight == 0) return;

    const Series log_q = log(source_.truncated(static_cast<std::size_t>(max_weight)));
    const auto power_sums = newton_power_sums(max_weight);
    PartitionPoly exponent;
    for (int k = 1; k <= max_weight; ++k) exponent += power_sums[static_cast<std::size_t>(k - 1)] * log_q[k];

    // exp(X) = sum_m X^m / m!; X has no weight-0 part, so m <= max_weight.
    PartitionPoly total = PartitionPoly::constant(1);
    PartitionPoly power = PartitionPoly::constant(1);
    for (int m = 1; m <= max_weight; ++m) {
        power = power.multiplied(exponent, max_weight) * Rational(1L, static_cast<long>(m));
        total += power;
    }
    for (int i = 1; i <= max_weight; ++i) polys_.push_back(total.weight_part(i));
}

const PartitionPoly& GenusTable::K(int i) const {
    if (i < 1 || i > max_weight()) throw std::out_of_range("genus table: K index out of range");
    return polys_[static_cast<std::size_t>(i - 1)];
}

GenusTable genus_table(const Series& source, int max_weight) { return GenusTable(source, max_weight); }

namespace {

constexpr int default_table_weight = 10;

class TableCache {
public:
    explicit TableCache(Series (*series)(std::size_t)) : series_(series) {}

    std::shared_ptr<const GenusTable> get(int max_weight) {
        std::lock_guard lock(mutex_);
        if (!table_ || table_->max_weight() < max_weight) {
            const int w = std::max(max_weight, default_table_weight);
            table_ = std::make_shared<const GenusTable>(series_(static_cast<std::size_t>(w)), w);
        }
        return table_;
    }

private:
    Series (*series_)(std::size_t);
    std::mutex mutex_;
    std::shared_ptr<const GenusTable> table_;
};

}  // namespace

std::shared_ptr<const GenusTable> l_genus_table(int max_weight) {
    static TableCache cache(&l_genus_series);
    return cache.get(max_weight);
}

std::shared_ptr<const GenusTable> ahat_genus_table(int max_weight) {
    static TableCache cache(&ahat_genus_series);
    return cache.get(max_weight);
}

namespace {

std::vector<RingElement> pontryagin_components(const RingElement& total_class, int count) {
    std::vector<RingElement> p;
    p.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) p.push_back(homogeneous_part(total_class, 4 * i));
    return p;
}

void require_unit_constant(const RingElement& total_class, const char* what) {
    if (total_class.constant_term() != Rational(1)) {
        throw RingError(std::string(what) + ": total class must have constant term 1");
    }
}

}  // namespace

RingElement evaluate_genus(const GenusTable& table, const RingElement& total_class) {
    require_unit_constant(total_class, "evaluate_genus");
    const auto& ring = total_class.presentation();
    const int needed = ring->top_degree() / 4;
    if (table.max_weight() < needed) {
        throw std::invalid_argument("evaluate_genus: table weight " + std::to_string(table.max_weight()) +
                                    " does not reach ring degree " + std::to_string(ring->top_degree()));
    }
    const auto p = pontryagin_components(total_class, needed);
    RingElement result = RingElement::one(ring);
    for (int i = 1; i <= needed; ++i) result += table.K(i).evaluate(ring, p);
    return result;
}

// Rational Chern classes of the complexification: c_{2i} = (-1)^i p_i, odd
// ones vanish; ph_i = s_{2i}(c) / (2i)!.
std::vector<RingElement> pont_character(const RingElement& total_class, int max_weight) {
    require_unit_constant(total_class, "pont_character");
    if (max_weight < 1) throw std::invalid_argument("pont_character: max weight must be >= 1");
    const auto& ring = total_class.presentation();
    const auto p = pontryagin_components(total_class, max_weight);
    std::vector<RingElement> chern;
    for (int j = 1; j <= 2 * max_weight; ++j) {
        if (j % 2 == 1) {
            chern.push_back(RingElement::zero(ring));
        } else {
            const int i = j / 2;
            chern.push_back(i % 2 == 0 ? p[static_cast<std::size_t>(i - 1)] : -p[static_cast<std::size_t>(i - 1)]);
        }
    }
    const auto sums = newton_power_sums(2 * max_weight);
    std::vector<RingElement> ph;
    for (int i = 1; i <= max_weight; ++i) {
        ph.push_back(sums[static_cast<std::size_t>(2 * i - 1)].evaluate(ring, chern) *
                     Rational(BigInt(1), factorial(static_cast<unsigned>(2 * i))));
    }
    return ph;
}

// ph_i depends on p_i only through (-1)^{i+1} p_i / (2i-1)!; the rest is a
// polynomial in p_1..p_{i-1}, so p_i is solved for one weight at a time.
RingElement pont_classes_from_character(std::span<const RingElement> ph) {
    if (ph.empty()) throw std::invalid_argument("pont_classes_from_character: empty character");
    const auto& ring = ph.front().presentation();
    const int n = static_cast<int>(ph.size());
    for (int i = 1; i <= n; ++i) {
        const auto& component = ph[static_cast<std::size_t>(i - 1)];
        if (!(homogeneous_part(component, 4 * i) == component)) {
            throw RingError("pont_classes_from_character: ph_" + std::to_string(i) + " is not of degree " +
                            std::to_string(4 * i));
        }
    }
    RingElement total = RingElement::one(ring);
    for (int i = 1; i <= n; ++i) {
        const RingElement known = pont_character(total, i)[static_cast<std::size_t>(i - 1)];
        Rational scale(factorial(static_cast<unsigned>(2 * i - 1)));
        if (i % 2 == 0) scale = -scale;
        total += (ph[static_cast<std::size_t>(i - 1)] - known) * scale;
    }
    return total;
}

Rational leading_coefficient(const GenusTable& table, int n) { return table.K(n).coefficient({n}); }

}  // namespace charclass
