#pragma once

#include <vector>

#include "unicusp/linalg.hpp"
#include "unicusp/poly.hpp"

namespace unicusp {

// Truncated power series: coefficients of t^0 .. t^(M-1) for truncation
// order M >= 1. valuation() is the least index with nonzero coefficient,
// or M as the ">= M" sentinel.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order), Rational(0)) {}
    TruncSeries(const Poly& p, int order);

    int order() const { return static_cast<int>(c_.size()); }
    int valuation() const;
    bool is_zero() const { return valuation() == order(); }
    Rational coeff(int k) const {
        return (k < 0 || k >= order()) ? Rational(0) : c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, const Rational& v) { c_[static_cast<std::size_t>(k)] = v; }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncSeries truncated(int order) const;
    // Polynomial with the same coefficients below the truncation order.
    Poly to_poly() const { return Poly(c_); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rational& r) const;
    TruncSeries shifted(int k) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

// First `order` coefficients of num/den by exact long division;
// requires den(0) != 0.
TruncSeries series_expand(const Poly& num, const Poly& den, int order);

// k-subspace of truncated series in reduced valuation-echelon form:
// basis valuations strictly increase, each element is monic at its
// valuation and has zero coefficient at every other basis valuation.
class ValuedSubspace {
public:
    ValuedSubspace() = default;

    int order() const { return order_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<TruncSeries>& basis() const { return basis_; }
    std::vector<int> value_set() const;
    bool has_value(int v) const;
    // Basis element with the given valuation; throws if absent.
    const TruncSeries& element_at(int v) const;

    // Residual of s after full reduction against the basis; s is a member
    // of the span iff the residual is zero.
    TruncSeries reduce(const TruncSeries& s) const;
    bool contains(const TruncSeries& s) const { return reduce(s).is_zero(); }

    friend ValuedSubspace echelonize(const std::vector<TruncSeries>& spanning, int order);

private:
    int order_ = 0;
    std::vector<TruncSeries> basis_;
};

ValuedSubspace echelonize(const std::vector<TruncSeries>& spanning, int order);

}  // namespace unicusp
