#pragma once

#include <string>

#include "unicusp/poly.hpp"
#include "unicusp/series.hpp"

namespace unicusp {

// Rational function num/den kept in reduced form (poly gcd cancelled),
// normalized so den(0) = 1 when the function is regular at t = 0.
class RationalFunc {
public:
    RationalFunc() : num_(Poly::constant(Rational(0))), den_(Poly::constant(Rational(1))) {}
    RationalFunc(Poly num, Poly den);
    static RationalFunc from_poly(const Poly& p) { return RationalFunc(p, Poly::constant(Rational(1))); }
    static RationalFunc one() { return from_poly(Poly::constant(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Valuation at t = 0 (negative means a pole at the cusp).
    int valuation_at_zero() const;
    bool regular_at_zero() const { return !is_zero() && valuation_at_zero() >= 0; }

    // Expansion at t = 0; requires regularity there.
    TruncSeries expand(int order) const;

    RationalFunc inverse() const;
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend bool operator==(const RationalFunc& a, const RationalFunc& b);

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
    void normalize();
};

}  // namespace unicusp
