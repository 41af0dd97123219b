#pragma once

#include <memory>
#include <vector>

#include "unicusp/rationalfunc.hpp"
#include "unicusp/semigroup.hpp"
#include "unicusp/series.hpp"

namespace unicusp {

// Local ring O_P of the cusp, represented by its reduced valuation-echelon
// basis modulo t^(mult*beta): one polynomial element of degree < beta per
// valuation in S ∩ [0, beta), plus the conductor tail t^beta, t^(beta+1), ...
// Built as the full k-algebra closure of the coordinate ratios f_i/f_0; the
// closure's value set below beta is checked against the semigroup generated
// by the coordinate valuations.
class CuspRing {
public:
    // coords are the F_0..F_N of the parametrization, F_0(0) != 0.
    static std::shared_ptr<const CuspRing> build(const std::vector<Poly>& coords,
                                                 int order_multiple = 3);

    int beta() const { return beta_; }
    int order() const { return basis_.order(); }
    const NumericalSemigroup& semigroup() const { return semigroup_; }
    // Echelon basis including the conductor tail, at the full order.
    const ValuedSubspace& basis() const { return basis_; }
    // Elements of valuation < beta as polynomials of degree < beta.
    std::vector<Poly> basis_below_conductor() const;

    TruncSeries reduce(const TruncSeries& s) const { return basis_.reduce(s); }
    bool contains_series(const TruncSeries& s) const;
    bool contains(const RationalFunc& x) const;

private:
    int beta_ = 0;
    NumericalSemigroup semigroup_;
    ValuedSubspace basis_;
};

// Finitely generated O_P-module spanned by rational-function generators of
// nonnegative valuation at the cusp; D-set and local-degree bookkeeping
// happen modulo t^beta, the Nakayama freeness test at the ring's full order.
class LocalModule {
public:
    LocalModule(std::shared_ptr<const CuspRing> ring, std::vector<RationalFunc> gens);

    const CuspRing& ring() const { return *ring_; }
    const std::vector<RationalFunc>& generators() const { return gens_; }
    const ValuedSubspace& span() const { return span_; }  // mod t^beta

    // D = v(F_P) \ S, entries < beta; the local degree at the cusp is #D.
    std::vector<int> d_set() const;
    int local_degree() const { return static_cast<int>(d_set().size()); }

    // Membership x ∈ F_P; valid because every module in scope contains the
    // conductor tail (1 is among the generators).
    bool contains(const RationalFunc& x) const;
    bool contains_series(const TruncSeries& s) const;

    // Nakayama: free iff dim(F_P / m_P F_P) = 1, computed at the full order.
    bool is_free() const;

private:
    std::shared_ptr<const CuspRing> ring_;
    std::vector<RationalFunc> gens_;
    ValuedSubspace span_;  // mod t^beta

    ValuedSubspace full_span(bool maximal_ideal_multiples) const;
};

}  // namespace unicusp
