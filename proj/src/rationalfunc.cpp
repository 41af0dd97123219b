#include "unicusp/rationalfunc.hpp"

#include "unicusp/error.hpp"

namespace unicusp {

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    Rational d0 = den_.at_zero();
    Rational scale = d0.is_zero() ? den_.leading().inverse() : d0.inverse();
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

int RationalFunc::valuation_at_zero() const {
    if (is_zero()) return -1;
    return num_.valuation() - den_.valuation();
}

TruncSeries RationalFunc::expand(int order) const {
    if (is_zero()) return TruncSeries(order);
    if (den_.at_zero().is_zero()) throw Error(ErrorKind::PoleAtCusp, "pole at t = 0: " + to_string());
    return series_expand(num_, den_, order);
}

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero function");
    return RationalFunc(den_, num_);
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
}

std::string RationalFunc::to_string() const {
    if (den_ == Poly::constant(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace unicusp
