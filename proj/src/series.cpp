#include "unicusp/series.hpp"

#include <algorithm>

#include "unicusp/error.hpp"

namespace unicusp {

TruncSeries::TruncSeries(const Poly& p, int order)
    : c_(static_cast<std::size_t>(order), Rational(0)) {
    int top = std::min(order - 1, p.degree());
    for (int k = 0; k <= top; ++k) c_[static_cast<std::size_t>(k)] = p.coeff(k);
}

int TruncSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return order();
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries r(order);
    int top = std::min(order, this->order());
    for (int k = 0; k < top; ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (int k = 0; k < order; ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (int k = 0; k < order; ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (int i = 0; i < order; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j < order; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& r) const {
    TruncSeries s(order());
    for (int k = 0; k < order(); ++k) s.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * r;
    return s;
}

TruncSeries TruncSeries::shifted(int k) const {
    TruncSeries s(order());
    for (int j = 0; j + k < order(); ++j) s.c_[static_cast<std::size_t>(j + k)] = coeff(j);
    return s;
}

TruncSeries series_expand(const Poly& num, const Poly& den, int order) {
    if (den.at_zero().is_zero())
        throw Error(ErrorKind::DenominatorVanishesAtZero, "series_expand denominator has t | den");
    TruncSeries q(order);
    Rational d0_inv = den.at_zero().inverse();
    for (int k = 0; k < order; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 0; j < k; ++j) {
            Rational qc = q.coeff(j);
            if (qc.is_zero()) continue;
            acc -= qc * den.coeff(k - j);
        }
        q.set_coeff(k, acc * d0_inv);
    }
    return q;
}

std::vector<int> ValuedSubspace::value_set() const {
    std::vector<int> v;
    v.reserve(basis_.size());
    for (const auto& b : basis_) v.push_back(b.valuation());
    return v;
}

bool ValuedSubspace::has_value(int v) const {
    for (const auto& b : basis_) {
        if (b.valuation() == v) return true;
    }
    return false;
}

const TruncSeries& ValuedSubspace::element_at(int v) const {
    for (const auto& b : basis_) {
        if (b.valuation() == v) return b;
    }
    throw Error(ErrorKind::InvalidInput, "no basis element at valuation " + std::to_string(v));
}

TruncSeries ValuedSubspace::reduce(const TruncSeries& s) const {
    TruncSeries r = s.truncated(order_);
    for (const auto& b : basis_) {
        Rational c = r.coeff(b.valuation());
        if (!c.is_zero()) r = r - b.scaled(c);
    }
    return r;
}

ValuedSubspace echelonize(const std::vector<TruncSeries>& spanning, int order) {
    for (const auto& s : spanning) {
        if (s.order() < order)
            throw Error(ErrorKind::InvalidInput, "echelonize input truncated below requested order");
    }
    MatQ m(static_cast<Eigen::Index>(spanning.size()), order);
    m.setConstant(Rational(0));
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        for (int k = 0; k < order; ++k) m(static_cast<Eigen::Index>(i), k) = spanning[i].coeff(k);
    }
    std::vector<Eigen::Index> pivots = reduced_row_echelon(m);
    ValuedSubspace v;
    v.order_ = order;
    v.basis_.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        TruncSeries b(order);
        for (int k = 0; k < order; ++k) b.set_coeff(k, m(static_cast<Eigen::Index>(i), k));
        v.basis_.push_back(std::move(b));
    }
    return v;
}

}  // namespace unicusp
