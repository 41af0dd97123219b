#include "unicusp/localring.hpp"

#include <algorithm>
#include <numeric>

#include "unicusp/error.hpp"

namespace unicusp {

std::shared_ptr<const CuspRing> CuspRing::build(const std::vector<Poly>& coords, int order_multiple) {
    if (coords.empty()) throw Error(ErrorKind::InvalidInput, "no coordinates");
    const Poly& f0 = coords[0];
    if (f0.is_zero() || !f0.at_zero().is_one())
        throw Error(ErrorKind::InvalidInput, "F_0 must satisfy F_0(0) = 1");

    std::vector<int> vals;
    for (std::size_t i = 1; i < coords.size(); ++i) {
        if (coords[i].is_zero()) throw Error(ErrorKind::InvalidInput, "zero coordinate");
        vals.push_back(coords[i].valuation());
    }
    int g = 0;
    for (int v : vals) g = std::gcd(g, v);
    if (g != 1)
        throw Error(ErrorKind::ClosureDiverges,
                    "coordinate valuations generate gcd " + std::to_string(g));

    auto ring = std::make_shared<CuspRing>();
    ring->semigroup_ = NumericalSemigroup::from_generators(vals);
    ring->beta_ = ring->semigroup_.conductor();
    const int beta = ring->beta_;
    const int order = std::max(order_multiple * beta, beta + 1);

    std::vector<TruncSeries> span;
    span.emplace_back(Poly::constant(Rational(1)), order);
    for (std::size_t i = 1; i < coords.size(); ++i) {
        span.push_back(series_expand(coords[i], f0, order));
    }
    for (int j = beta; j < order; ++j) {
        span.emplace_back(Poly::monomial(Rational(1), j), order);
    }
    ValuedSubspace e = echelonize(span, order);

    // k-algebra closure: multiply basis elements until the span stabilizes
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<TruncSeries> low;
        for (const auto& b : e.basis()) {
            if (b.valuation() < beta) low.push_back(b);
        }
        for (std::size_t i = 0; i < low.size() && !grew; ++i) {
            for (std::size_t j = i; j < low.size() && !grew; ++j) {
                TruncSeries prod = low[i] * low[j];
                TruncSeries res = e.reduce(prod);
                if (!res.is_zero()) {
                    std::vector<TruncSeries> enlarged = e.basis();
                    enlarged.push_back(res);
                    e = echelonize(enlarged, order);
                    grew = true;
                }
            }
        }
    }

    // value set below beta must be exactly S ∩ [0, beta)
    for (int v = 0; v < beta; ++v) {
        bool in_ring = e.has_value(v);
        if (in_ring != ring->semigroup_.contains(v))
            throw Error(ErrorKind::ClosureDiverges,
                        "closure value set disagrees with the coordinate semigroup at " +
                            std::to_string(v));
    }
    ring->basis_ = std::move(e);
    return ring;
}

std::vector<Poly> CuspRing::basis_below_conductor() const {
    std::vector<Poly> out;
    for (const auto& b : basis_.basis()) {
        if (b.valuation() < beta_) out.push_back(b.truncated(beta_).to_poly());
    }
    return out;
}

bool CuspRing::contains_series(const TruncSeries& s) const { return basis_.contains(s); }

bool CuspRing::contains(const RationalFunc& x) const {
    if (x.is_zero()) return true;
    if (!x.regular_at_zero()) throw Error(ErrorKind::PoleAtCusp, x.to_string());
    return contains_series(x.expand(order()));
}

LocalModule::LocalModule(std::shared_ptr<const CuspRing> ring, std::vector<RationalFunc> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "zero module generator");
        if (!g.regular_at_zero()) throw Error(ErrorKind::PoleAtCusp, g.to_string());
    }
    const int beta = ring_->beta();
    std::vector<TruncSeries> prods;
    for (const auto& g : gens_) {
        TruncSeries ge = g.expand(beta);
        for (const auto& b : ring_->basis().basis()) {
            if (b.valuation() >= beta) continue;
            prods.push_back(b.truncated(beta) * ge);
        }
    }
    span_ = echelonize(prods, beta);
}

std::vector<int> LocalModule::d_set() const {
    std::vector<int> d;
    for (int v : span_.value_set()) {
        if (!ring_->semigroup().contains(v)) d.push_back(v);
    }
    return d;
}

bool LocalModule::contains_series(const TruncSeries& s) const {
    return span_.contains(s.truncated(ring_->beta()));
}

bool LocalModule::contains(const RationalFunc& x) const {
    if (x.is_zero()) return true;
    if (!x.regular_at_zero()) throw Error(ErrorKind::PoleAtCusp, x.to_string());
    return contains_series(x.expand(ring_->beta()));
}

ValuedSubspace LocalModule::full_span(bool maximal_ideal_multiples) const {
    const int order = ring_->order();
    std::vector<TruncSeries> prods;
    for (const auto& g : gens_) {
        TruncSeries ge = g.expand(order);
        for (const auto& b : ring_->basis().basis()) {
            if (maximal_ideal_multiples && b.valuation() == 0) continue;
            prods.push_back(b * ge);
        }
    }
    return echelonize(prods, order);
}

bool LocalModule::is_free() const {
    ValuedSubspace f = full_span(false);
    ValuedSubspace mf = full_span(true);
    return f.dimension() - mf.dimension() == 1;
}

}  // namespace unicusp
