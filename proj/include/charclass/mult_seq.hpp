#pragma once

/**
 * @file mult_seq.hpp
 * @brief Multiplicative sequences, Newton power sums and the Pontryagin character.
 *
 * Polynomials in the Pontryagin classes p_1, p_2, ... are keyed by
 * partitions: the weakly decreasing list (l_1, l_2, ...) stands for the
 * monomial p_{l_1} p_{l_2} ..., of weight l_1 + l_2 + .... The same type is
 * reused for polynomials in elementary symmetric functions e_1, e_2, ....
 *
 * For a characteristic series Q(z) with Q(0) = 1 the genus table holds the
 * polynomials K_1..K_N with prod_j Q(x_j) = 1 + K_1 + K_2 + ... whenever
 * p_i is the i-th elementary symmetric function of the x_j. They are built
 * as the weight-graded expansion of exp(sum_k c_k s_k), where
 * log Q(z) = sum_k c_k z^k and s_k is the k-th power sum written in the p_i.
 */

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "charclass/graded_ring.hpp"
#include "charclass/rational.hpp"
#include "charclass/series.hpp"

namespace charclass {

using Partition = std::vector<int>;

int weight(const Partition& partition);

/// All partitions of n in descending lexicographic order, e.g. for n = 3:
/// (3), (2,1), (1,1,1).
std::vector<Partition> partitions(int n);

class PartitionPoly {
public:
    /// Keys are ordered so that iteration follows increasing weight and,
    /// within one weight, descending lexicographic partition order.
    struct KeyOrder {
        bool operator()(const Partition& a, const Partition& b) const;
    };
    using Terms = std::map<Partition, Rational, KeyOrder>;

    PartitionPoly() = default;

    static PartitionPoly constant(const Rational& c);
    /// c times the monomial indexed by the partition (sorted on entry).
    static PartitionPoly monomial(Partition partition, const Rational& c = 1);
    /// The single variable p_index.
    static PartitionPoly variable(int index);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& partition) const;

    /// Largest weight present (0 for constants and zero).
    int max_weight() const;
    bool is_homogeneous(int weight) const;
    PartitionPoly weight_part(int weight) const;
    /// Drops everything above the given weight.
    PartitionPoly truncated(int max_weight) const;

    PartitionPoly& operator+=(const PartitionPoly& rhs);
    PartitionPoly& operator-=(const PartitionPoly& rhs);
    PartitionPoly& operator*=(const Rational& scalar);
    friend PartitionPoly operator+(PartitionPoly a, const PartitionPoly& b) { return a += b; }
    friend PartitionPoly operator-(PartitionPoly a, const PartitionPoly& b) { return a -= b; }
    friend PartitionPoly operator*(PartitionPoly a, const Rational& s) { return a *= s; }
    friend PartitionPoly operator*(const Rational& s, PartitionPoly a) { return a *= s; }
    friend bool operator==(const PartitionPoly&, const PartitionPoly&) = default;

    /// Product, truncated at max_weight.
    PartitionPoly multiplied(const PartitionPoly& rhs, int max_weight) const;

    /// Substitutes ring elements for the variables (values[i] is variable
    /// i+1) and evaluates in the given ring. Throws std::out_of_range if a
    /// term uses a variable beyond values.
    RingElement evaluate(const PresentationPtr& ring, std::span<const RingElement> values) const;

    /// Terms in key order, coefficients kept separate, e.g.
    /// "62/945*p3 - 13/945*p2*p1 + 2/945*p1^3".
    std::string to_string(const std::string& var = "p") const;
    /// Common-denominator form, e.g. "(62*p3 - 13*p2*p1 + 2*p1^3)/945".
    std::string to_fraction_string(const std::string& var = "p") const;

private:
    void add_term(const Partition& partition, const Rational& c);
    Terms terms_;
};

/// s_1..s_N written in e_1..e_k via Newton's identities; element k-1 is s_k.
std::vector<PartitionPoly> newton_power_sums(int max_weight);

class GenusTable {
public:
    /// Builds K_1..K_N for a series with constant term 1 and order >= N.
    GenusTable(Series source, int max_weight);

    const Series& source() const { return source_; }
    int max_weight() const { return static_cast<int>(polys_.size()); }
    /// K_i for 1 <= i <= max_weight.
    const PartitionPoly& K(int i) const;
    const std::vector<PartitionPoly>& polys() const { return polys_; }

private:
    Series source_;
    std::vector<PartitionPoly> polys_;
};

GenusTable genus_table(const Series& source, int max_weight);

/// Cached tables for the L- and A-hat genera; safe to call concurrently.
std::shared_ptr<const GenusTable> l_genus_table(int max_weight);
std::shared_ptr<const GenusTable> ahat_genus_table(int max_weight);

/// 1 + sum K_i(p_1..p_i), with p_i the degree-4i part of total_class.
/// Requires constant term 1 and a table covering the ring's top degree.
RingElement evaluate_genus(const GenusTable& table, const RingElement& total_class);

/// ph_1..ph_N of the bundle with the given total Pontryagin class.
std::vector<RingElement> pont_character(const RingElement& total_class, int max_weight);

/// Total Pontryagin class with character ph_1..ph_N (ph[i-1] in degree 4i).
RingElement pont_classes_from_character(std::span<const RingElement> ph);

/// Coefficient of p_n in K_n.
Rational leading_coefficient(const GenusTable& table, int n);

}  // namespace charclass
