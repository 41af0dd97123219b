#include "unicusp/poly.hpp"

#include "unicusp/error.hpp"

namespace unicusp {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& r) {
    Poly p;
    if (!r.is_zero()) p.c_ = {r};
    return p;
}

Poly Poly::monomial(const Rational& c, int k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Rational& r) const {
    if (r.is_zero()) return Poly();
    Poly p = *this;
    for (auto& c : p.c_) c *= r;
    return p;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return Poly();
    Poly p;
    p.c_.assign(c_.size() + static_cast<std::size_t>(k), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(leading().inverse());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    q = Poly();
    r = a;
    if (a.degree() < b.degree()) return;
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.leading() * lead_inv;
        q.c_[static_cast<std::size_t>(k)] = f;
        r = r - b.scaled(f).shifted(k);
    }
    q.trim();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division is not exact");
    return q;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = c_[i].to_string();
        } else {
            if (c_[i].is_one()) {
                term = var;
            } else if ((-c_[i]).is_one()) {
                term = "-" + var;
            } else {
                term = c_[i].to_string() + "*" + var;
            }
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    Poly a = p, b = q;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // monic remainders keep coefficient growth tame
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly quot, rem;
        Poly::divmod(a, b, quot, rem);
        a = b;
        b = rem.is_zero() ? rem : rem.monic();
    }
    return a;
}

Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    Poly g = poly_gcd(p, q);
    return Poly::exact_div(p * q, g).monic();
}

}  // namespace unicusp
