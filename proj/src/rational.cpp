#include "unicusp/rational.hpp"

#include "unicusp/error.hpp"

namespace unicusp {

Rational::Rational(const BigInt& num, const BigInt& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = Rational(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // cross-reduce through g = gcd(den_a, den_b)
    BigInt g = gcd(a.den_, b.den_);
    BigInt da = a.den_ / g, db = b.den_ / g;
    Rational r;
    r.num_ = a.num_ * db + b.num_ * da;
    r.den_ = a.den_ * db;
    r.normalize();
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    BigInt g1 = gcd(a.num_, b.den_);
    BigInt g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

}  // namespace unicusp
