#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unicusp/error.hpp"
#include "unicusp/poly.hpp"
#include "unicusp/rational.hpp"
#include "unicusp/rationalfunc.hpp"

using namespace unicusp;

TEST_CASE("rational normalization and text form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(7, 1).to_string() == "7");
    CHECK(Rational(-3, 9).to_string() == "-1/3");
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(a.inverse() == Rational(2));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(a < Rational(2, 3));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("poly basics") {
    Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    Poly p{Rational(1), Rational(0), Rational(3)};  // 1 + 3t^2
    CHECK(p.degree() == 2);
    CHECK(p.valuation() == 0);
    CHECK(p.eval(Rational(2)) == Rational(13));
    CHECK(Poly::monomial(Rational(5), 3).valuation() == 3);
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "1 + 3*t^2");
}

TEST_CASE("poly multiplication and division") {
    Poly a{Rational(-1), Rational(0), Rational(1)};          // t^2 - 1
    Poly b{Rational(1), Rational(1)};                        // t + 1
    Poly c{Rational(-1), Rational(1)};                       // t - 1
    CHECK(a == b * c);
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(q == c);
    CHECK(r.is_zero());
    Poly::divmod(b, a, q, r);
    CHECK(q.is_zero());
    CHECK(r == b);
    CHECK(Poly::exact_div(a, c) == b);
    CHECK_THROWS_AS(Poly::exact_div(b, a), Error);
}

TEST_CASE("poly gcd: stated examples") {
    // (t^3 - t, t^2 - 1) -> t^2 - 1
    Poly p{Rational(0), Rational(-1), Rational(0), Rational(1)};
    Poly q{Rational(-1), Rational(0), Rational(1)};
    CHECK(poly_gcd(p, q) == q.monic());

    // coprime normal-form pair: gcd(h, t^r f) = 1 when h(0) != 0, gcd(f,h) = 1
    Poly h{Rational(1), Rational(2)};
    Poly trf = Poly{Rational(3), Rational(1)}.shifted(4);
    CHECK(poly_gcd(h, trf) == Poly::constant(Rational(1)));

    // gcd(p, 0) = monic(p); gcd(0, 0) = 0
    CHECK(poly_gcd(p, Poly()) == p.monic());
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("poly gcd divides both arguments exactly") {
    Poly g{Rational(2), Rational(0), Rational(1)};
    Poly a = g * Poly{Rational(1), Rational(5)};
    Poly b = g * Poly{Rational(-3), Rational(0), Rational(0), Rational(7)};
    Poly d = poly_gcd(a, b);
    CHECK(d.leading().is_one());
    Poly q, r;
    Poly::divmod(a, d, q, r);
    CHECK(r.is_zero());
    Poly::divmod(b, d, q, r);
    CHECK(r.is_zero());
    CHECK(d.degree() >= g.degree());
    // lcm * gcd relation up to scalars: deg lcm + deg gcd = deg a + deg b
    CHECK(poly_lcm(a, b).degree() + d.degree() == a.degree() + b.degree());
}

TEST_CASE("rational functions reduce and expand") {
    RationalFunc f(Poly{Rational(0), Rational(0), Rational(2)}, Poly{Rational(2), Rational(2)});
    // 2t^2 / (2 + 2t) = t^2/(1+t)
    CHECK(f.num() == Poly{Rational(0), Rational(0), Rational(1)});
    CHECK(f.den() == Poly{Rational(1), Rational(1)});
    CHECK(f.valuation_at_zero() == 2);
    TruncSeries s = f.expand(5);
    CHECK(s.coeff(2) == Rational(1));
    CHECK(s.coeff(3) == Rational(-1));
    CHECK(s.coeff(4) == Rational(1));

    RationalFunc pole(Poly{Rational(1)}, Poly{Rational(0), Rational(1)});
    CHECK(pole.valuation_at_zero() == -1);
    CHECK_THROWS_AS(pole.expand(4), Error);

    CHECK(f.inverse() * f == RationalFunc::one());
}
