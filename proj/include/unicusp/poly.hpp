#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "unicusp/rational.hpp"

namespace unicusp {

// Dense univariate polynomial over the rationals, coefficients by
// ascending degree with no trailing zeros. The zero polynomial is the
// empty sequence; deg(0) = -1 and val(0) = -1 are sentinels, callers
// validate nonzero where degrees enter formulas.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(const Rational& r);
    // c * t^k
    static Poly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int valuation() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<std::size_t>(k)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    Rational at_zero() const { return coeff(0); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& r) const;
    Poly shifted(int k) const;  // * t^k, k >= 0
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Field-coefficient division: a = q*b + r with deg r < deg b.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Remainder is zero; throws otherwise.
    static Poly exact_div(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic greatest common divisor; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly poly_lcm(const Poly& p, const Poly& q);

}  // namespace unicusp
