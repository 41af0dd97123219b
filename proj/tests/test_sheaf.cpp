#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unicusp/classification.hpp"
#include "unicusp/error.hpp"
#include "unicusp/sheaf.hpp"

using namespace unicusp;

namespace {

Poly t_pow(int k) { return Poly::monomial(Rational(1), k); }

ParamCurve example32(SampleStream& st, bool a4_zero, Rational* out_a = nullptr) {
    Rational a1 = st.next_coefficient(), a2 = st.next_coefficient(), a3 = st.next_coefficient();
    Rational a4 = a4_zero ? Rational(0) : st.next_coefficient();
    if (out_a) {
        out_a[0] = a1;
        out_a[1] = a2;
        out_a[2] = a3;
        out_a[3] = a4;
    }
    return ParamCurve::validate({Poly{Rational(1), a1, a2, a3}, t_pow(4) + t_pow(6).scaled(a4),
                                 t_pow(5), t_pow(10), t_pow(11)});
}

ParamCurve case_ii(SampleStream& st) {
    return ParamCurve::validate(
        {Poly{Rational(1), st.next_coefficient(), st.next_coefficient()}, t_pow(3), t_pow(7), t_pow(8)});
}

}  // namespace

TEST_CASE("pencil normal form") {
    Poly h{Rational(2), Rational(3)};
    FractionalSheaf f = pencil(1, Poly{Rational(1)}, h);
    CHECK(f.generators().size() == 2);
    CHECK(f.generators()[0] == RationalFunc::one());
    CHECK(f.common_denominator().at_zero() == Rational(1));

    CHECK_THROWS_AS(pencil(0, Poly{Rational(1)}, h), Error);                      // r > 0
    CHECK_THROWS_AS(pencil(1, t_pow(1), h), Error);                               // f(0) = 0
    CHECK_THROWS_AS(pencil(1, Poly{Rational(1)}, t_pow(2)), Error);               // h(0) = 0
    CHECK_THROWS_AS(pencil(1, Poly{Rational(1), Rational(1)},
                           Poly{Rational(2), Rational(2)}), Error);               // common factor
}

TEST_CASE("degree_away matches Eq.-(5)-style counts") {
    // O<1, t/(a t + b)>: 1
    CHECK(degree_away(pencil(1, Poly{Rational(1)}, Poly{Rational(2), Rational(3)})) == 1);
    // O<1, t>: 1
    CHECK(degree_away(pencil(1, Poly{Rational(1)}, Poly{Rational(1)})) == 1);
    // O<1, t^alpha/h>, deg h <= alpha: alpha
    Poly h{Rational(1), Rational(2), Rational(-1), Rational(5)};
    CHECK(degree_away(pencil(4, Poly{Rational(1)}, h)) == 4);
    CHECK(degree_away(pencil(6, Poly{Rational(1)}, h)) == 6);
}

TEST_CASE("two-generator formula equals the general gcd formula and the split-root oracle") {
    SampleStream st(42);
    for (int trial = 0; trial < 50; ++trial) {
        // h with known rational roots c_i and multiplicities
        Poly h = Poly::constant(Rational(1));
        int away_at_roots = 0;
        int nroots = 1 + static_cast<int>(st.next_u64() % 3);
        for (int i = 0; i < nroots; ++i) {
            Rational c = st.next_coefficient();
            int mult = 1 + static_cast<int>(st.next_u64() % 2);
            for (int k = 0; k < mult; ++k) h = h * Poly{-c, Rational(1)};
            away_at_roots += mult;
        }
        int r = 1 + static_cast<int>(st.next_u64() % 4);
        Poly f = Poly{Rational(1), st.next_coefficient()};
        if (!poly_gcd(f, h).leading().is_one() || poly_gcd(f, h).degree() != 0) continue;
        FractionalSheaf sheaf = pencil(r, f, h);
        int oracle = away_at_roots + std::max(0, r + f.degree() - h.degree());
        int eq5 = h.degree() + std::max(0, r + f.degree() - h.degree());
        CHECK(degree_away(sheaf) == eq5);
        CHECK(degree_away(sheaf) == oracle);
    }
}

TEST_CASE("Example 3.2 degrees: 3 iff a4 = 0, else 4") {
    SampleStream st(1);
    ParamCurve c0 = example32(st, true);
    FractionalSheaf f = pencil(1, Poly{Rational(1)}, Poly{Rational(3), Rational(2)});
    CHECK(degree(f, c0) == 3);
    CHECK(!module_at_cusp(f, c0).is_free());

    ParamCurve c1 = example32(st, false);
    CHECK(degree(f, c1) == 4);
}

TEST_CASE("canonical sheaf of case (ii) has degree 6 = 2g - 2") {
    SampleStream st(2);
    ParamCurve c = case_ii(st);
    CanonicalModel m = canonical_model(c);
    std::vector<RationalFunc> gens;
    for (const auto& p : m.coords) gens.emplace_back(p, m.coords[0]);
    CHECK(degree(FractionalSheaf::make(gens), c) == 6);
}

TEST_CASE("h0: stated examples") {
    SampleStream st(3);
    ParamCurve c = case_ii(st);
    FractionalSheaf f = pencil(1, Poly{Rational(1)}, Poly{Rational(1)});  // O<1, t>
    GlobalSections sec = h0(f, c);
    CHECK(sec.dimension == 2);
    // constants only for O<1>
    FractionalSheaf trivial = FractionalSheaf::make({RationalFunc::one()});
    CHECK(h0(trivial, c).dimension == 1);
    // every section lies in the module at the cusp
    LocalModule mod = module_at_cusp(f, c);
    for (const auto& x : sec.basis) CHECK(mod.contains(x));
}

TEST_CASE("bpf_alpha_pencil: Example 3.2 denominator and degenerate cases") {
    Rational a1(2), a2(3), a3(5), a4(7);
    FractionalSheaf f = bpf_alpha_pencil(4, 2, 2, {a1, a2, a3, a4});
    const RationalFunc& z = f.generators()[1];
    CHECK(z.num() == t_pow(4));
    CHECK(z.den() == Poly{Rational(1), a1, a2 - a4, a3 - a1 * a4});

    // all a = 0: h = 1, sheaf O<1, t^alpha> of degree alpha
    FractionalSheaf f0 = bpf_alpha_pencil(4, 2, 2, {Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK(f0.generators()[1] == RationalFunc::from_poly(t_pow(4)));
    CHECK(degree_away(f0) == 4);
}

TEST_CASE("bpf_alpha_pencil recursion equals the series truncation oracle") {
    // h should be F0 * (F_alpha/t^alpha)^{-1} truncated below t^{ell+m}
    SampleStream st(4);
    for (auto [alpha, ell, m] : {std::tuple{4, 2, 2}, {5, 2, 2}, {5, 3, 1}, {6, 1, 3}, {8, 4, 2}}) {
        std::vector<Rational> a;
        for (int i = 0; i < ell * m; ++i) a.push_back(st.next_coefficient());
        FractionalSheaf f = bpf_alpha_pencil(alpha, ell, m, a);
        // rebuild F0 and F_alpha per the parametrization
        Poly f0 = Poly::constant(Rational(1));
        for (int i = 1; i <= ell + m - 1; ++i)
            f0 = f0 + Poly::monomial(a[static_cast<std::size_t>(i - 1)], i);
        Poly fa_over = Poly::constant(Rational(1));  // F_alpha / t^alpha
        for (int j = 1; j <= m - 1; ++j) {
            int idx = ell + (m - 1) + j;  // block 1 coefficients
            if (idx <= ell * m)
                fa_over = fa_over +
                          Poly::monomial(a[static_cast<std::size_t>(idx - 1)], ell + j - 1);
        }
        TruncSeries oracle = series_expand(f0, fa_over, ell + m);
        const Poly& h = f.generators()[1].den();
        for (int k = 0; k < ell + m; ++k) CHECK(h.coeff(k) == oracle.coeff(k));
    }
}

TEST_CASE("certify: Example 3.2 claims") {
    SampleStream st(5);
    Rational a[4];
    ParamCurve c0 = example32(st, true, a);
    FractionalSheaf pen = pencil(1, Poly{Rational(1)}, Poly{Rational(1), Rational(2)});

    PencilCertificate cert = certify(c0, pen, 3, true);
    CHECK(cert.degree == 3);
    CHECK(cert.h0 == 2);
    CHECK(cert.has_base_point());

    ParamCurve c1 = example32(st, false, a);
    CHECK_THROWS_AS(certify(c1, pen, 3, true), CertificateError);
    try {
        certify(c1, pen, 3, true);
    } catch (const CertificateError& e) {
        CHECK(e.check() == "degree");
        CHECK(e.observed() == "4");
    }

    // the base point free g^1_4 with the displayed h
    Poly h{Rational(1), a[0], a[1] - a[3], a[2] - a[0] * a[3]};
    FractionalSheaf bpf = pencil(4, Poly{Rational(1)}, h);
    PencilCertificate cf = certify(c1, bpf, 4, false);
    CHECK(cf.degree == 4);
    CHECK(cf.free_at_cusp);
}

TEST_CASE("degree invariance under z -> z - c and z -> 1/z") {
    SampleStream st(6);
    for (int trial = 0; trial < 50; ++trial) {
        ParamCurve c = (trial % 2 == 0) ? example32(st, trial % 4 == 0) : case_ii(st);
        int r = 1 + static_cast<int>(st.next_u64() % 2);
        Poly h{Rational(1), st.next_coefficient()};
        FractionalSheaf f = pencil(r, Poly{Rational(1)}, h);
        int d = degree(f, c);
        RationalFunc z = f.generators()[1];
        // z - c
        RationalFunc zc = z - RationalFunc::from_poly(Poly::constant(st.next_coefficient()));
        FractionalSheaf fc = FractionalSheaf::make({RationalFunc::one(), zc});
        CHECK(degree(fc, c) == d);
        // 1/z: normalization multiplies back by z and records the unit
        FractionalSheaf finv = FractionalSheaf::make({RationalFunc::one(), z.inverse()});
        CHECK(degree(finv, c) == d);
        CHECK(finv.normalization_unit().has_value());
    }
}
