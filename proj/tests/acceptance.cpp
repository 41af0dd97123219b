// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Arithmetic is exact, so every comparison is exact equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "unicusp/classification.hpp"
#include "unicusp/error.hpp"
#include "unicusp/ideal.hpp"
#include "unicusp/json_io.hpp"
#include "unicusp/sheaf.hpp"

using namespace unicusp;

namespace {

Poly t_pow(int k) { return Poly::monomial(Rational(1), k); }

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// genus-4 worked examples: curves and their expected slice data
struct SliceCase {
    const char* label;
    std::function<std::vector<Poly>(const Rational&, const Rational&)> coords;
    // the stated model coordinates (w : x : y : z); the listed generators
    // are written in these variables
    std::function<std::vector<Poly>(const Rational&, const Rational&)> model;
    int dim_i2;
    int dim_i3;
    // generator lists in (w, x, y, z): exponent tuples with coefficient
    // expressions over slots a, b
    std::vector<std::vector<std::pair<std::vector<int>, std::string>>> gens_i2;
    std::vector<std::vector<std::pair<std::vector<int>, std::string>>> gens_i3;
};

Form build_form(int n, const std::vector<std::pair<std::vector<int>, std::string>>& terms,
                const Rational& a, const Rational& b) {
    Form f;
    f.n = n;
    std::vector<std::string> vars = {"a", "b"};
    for (const auto& [e, expr] : terms) {
        f.exponents.push_back(e);
        f.coefficients.push_back(CoeffExpr::parse(expr, vars).eval({a, b}));
    }
    return f;
}

std::vector<SliceCase> section22_cases() {
    std::vector<SliceCase> cases;
    // case (ii): C = (1 + at + bt^2 : t^3 : t^7 : t^8)
    cases.push_back(
        {"(ii)",
         [](const Rational& a, const Rational& b) {
             return std::vector<Poly>{Poly{Rational(1), a, b}, t_pow(3), t_pow(7), t_pow(8)};
         },
         [](const Rational& a, const Rational& b) {
             return std::vector<Poly>{Poly{Rational(1), a, b}, Poly{Rational(0), Rational(1), a},
                                      t_pow(3), t_pow(4)};
         },
         1,
         7,
         {// b y^2 + x y - z w
          {{{0, 0, 2, 0}, "b"}, {{0, 1, 1, 0}, "1"}, {{1, 0, 0, 1}, "-1"}}},
         {// the seven stated cubics
          {{{0, 3, 0, 0}, "1"}, {{1, 1, 1, 0}, "-a"}, {{1, 1, 0, 1}, "2*b"}, {{0, 0, 3, 0}, "b^3"},
           {{1, 0, 2, 0}, "-a*b"}, {{1, 0, 1, 1}, "-b^2"}, {{2, 0, 1, 0}, "-1"}},
          {{{0, 2, 1, 0}, "1"}, {{1, 1, 0, 1}, "-1"}, {{0, 0, 3, 0}, "-b^2"}, {{1, 0, 1, 1}, "b"}},
          {{{0, 2, 0, 1}, "1"}, {{0, 0, 2, 1}, "-b^2"}, {{1, 0, 2, 0}, "-1"}, {{1, 0, 1, 1}, "-a"},
           {{1, 0, 0, 2}, "b"}},
          {{{0, 1, 2, 0}, "1"}, {{0, 0, 3, 0}, "b"}, {{1, 0, 1, 1}, "-1"}},
          {{{0, 1, 1, 1}, "1"}, {{0, 0, 2, 1}, "b"}, {{1, 0, 0, 2}, "-1"}},
          {{{0, 1, 0, 2}, "1"}, {{0, 0, 3, 0}, "-1"}, {{0, 0, 2, 1}, "-a"}},
          {{{1, 1, 1, 0}, "-1"}, {{1, 0, 2, 0}, "-b"}, {{2, 0, 0, 1}, "1"}}}});
    // case (iii): C = (1 + at + bt^2 : t^4 : t^5 : t^7 : t^8)
    cases.push_back(
        {"(iii)",
         [](const Rational& a, const Rational& b) {
             return std::vector<Poly>{Poly{Rational(1), a, b}, t_pow(4), t_pow(5), t_pow(7),
                                      t_pow(8)};
         },
         [](const Rational& a, const Rational& b) {
             return std::vector<Poly>{Poly{Rational(1), a, b}, t_pow(3), t_pow(4), t_pow(5)};
         },
         1,
         6,
         {{{{0, 0, 2, 0}, "1"}, {{0, 1, 0, 1}, "-1"}}},
         {{{{0, 2, 0, 1}, "1"}, {{0, 1, 2, 0}, "-1"}},
          {{{1, 1, 0, 1}, "1"}, {{1, 0, 2, 0}, "-1"}},
          {{{0, 1, 1, 1}, "-1"}, {{0, 0, 3, 0}, "1"}},
          {{{0, 0, 2, 1}, "1"}, {{0, 1, 0, 2}, "-1"}},
          {{{1, 0, 1, 1}, "1"}, {{0, 3, 0, 0}, "-1"}, {{0, 2, 1, 0}, "-a"}, {{0, 1, 2, 0}, "-b"}},
          {{{1, 0, 0, 2}, "1"}, {{0, 2, 1, 0}, "-1"}, {{0, 1, 2, 0}, "-a"}, {{0, 1, 1, 1}, "-b"}}}});
    // case (iv): C = (1 + at : t^4 : t^6 : t^7 : t^9 : t^10), slot b unused
    cases.push_back(
        {"(iv)",
         [](const Rational& a, const Rational&) {
             return std::vector<Poly>{Poly{Rational(1), a}, t_pow(4), t_pow(6), t_pow(7), t_pow(9),
                                      t_pow(10)};
         },
         [](const Rational& a, const Rational&) {
             return std::vector<Poly>{Poly{Rational(1), a}, t_pow(2), t_pow(3), t_pow(4)};
         },
         2,
         8,
         {{{{0, 0, 2, 0}, "1"}, {{0, 1, 0, 1}, "-1"}},
          {{{1, 0, 0, 1}, "1"}, {{0, 2, 0, 0}, "-1"}, {{0, 1, 1, 0}, "-a"}}},
         {{{{0, 1, 2, 0}, "1"}, {{0, 2, 0, 1}, "-1"}},
          {{{1, 1, 0, 1}, "1"}, {{0, 3, 0, 0}, "-1"}, {{0, 2, 1, 0}, "-a"}},
          {{{0, 0, 3, 0}, "1"}, {{0, 1, 1, 1}, "-1"}},
          {{{0, 0, 2, 1}, "1"}, {{0, 1, 0, 2}, "-1"}},
          {{{1, 0, 2, 0}, "1"}, {{0, 3, 0, 0}, "-1"}, {{0, 2, 1, 0}, "-a"}},
          {{{1, 0, 1, 1}, "1"}, {{0, 2, 1, 0}, "-1"}, {{0, 2, 0, 1}, "-a"}},
          {{{1, 0, 0, 2}, "1"}, {{0, 2, 0, 1}, "-1"}, {{0, 1, 1, 1}, "-a"}},
          {{{2, 0, 0, 1}, "1"}, {{1, 2, 0, 0}, "-1"}, {{1, 1, 1, 0}, "-a"}}}});
    return cases;
}

bool criterion_1(std::string& detail) {
    SampleStream st(1001);
    for (const auto& c : section22_cases()) {
        for (int sample = 0; sample < 5; ++sample) {
            Rational a = st.next_coefficient(), b = st.next_coefficient();
            CanonicalModel m = canonical_model(ParamCurve::validate(c.coords(a, b)));
            int d2 = in_basis(m, 2).dimension;
            int d3 = in_basis(m, 3).dimension;
            // the computed model spans the stated coordinates
            if (!models_equivalent(m.coords, c.model(a, b))) {
                detail = std::string(c.label) + ": model differs from the stated coordinates";
                return false;
            }
            if (d2 != c.dim_i2 || d3 != c.dim_i3) {
                detail = std::string(c.label) + ": dims (" + std::to_string(d2) + ", " +
                         std::to_string(d3) + ") != expected (" + std::to_string(c.dim_i2) + ", " +
                         std::to_string(c.dim_i3) + ")";
                return false;
            }
        }
    }
    detail = "cases (ii)/(iii)/(iv), dim I_2 and dim I_3 exact on 5 samples each";
    return true;
}

bool criterion_2(std::string& detail) {
    SampleStream st(1002);
    int checked = 0;
    for (const auto& c : section22_cases()) {
        for (int sample = 0; sample < 5; ++sample) {
            Rational a = st.next_coefficient(), b = st.next_coefficient();
            // the listed generators are written in the stated (w : x : y : z)
            CanonicalModel m;
            m.coords = c.model(a, b);
            IdealSlice i2 = in_basis(m, 2);
            IdealSlice i3 = in_basis(m, 3);
            for (const auto& gen : c.gens_i2) {
                Form f = build_form(2, gen, a, b);
                if (!in_span(i2, f) || !f.compose(m.coords).is_zero()) {
                    detail = std::string(c.label) + ": an I_2 generator is not in the span";
                    return false;
                }
                ++checked;
            }
            for (const auto& gen : c.gens_i3) {
                Form f = build_form(3, gen, a, b);
                if (!in_span(i3, f) || !f.compose(m.coords).is_zero()) {
                    detail = std::string(c.label) + ": an I_3 generator is not in the span";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " listed generators lie in the computed spans exactly";
    return true;
}

bool criterion_3(std::string& detail) {
    auto sii = NumericalSemigroup::from_generators({3, 7, 8});
    auto siii = NumericalSemigroup::from_generators({4, 5, 7});
    auto siv = NumericalSemigroup::from_generators({4, 6, 7, 9});
    bool ok = eta(sii) == 2 && sigma(sii) == 2 && eta(siii) == 1 && sigma(siii) == 2 &&
              shat(siii).second == 2 && eta(siv) == 2 && sigma(siv) == 2 && shat(siv).second == 1;
    detail = ok ? "eta/sigma/g' for cases (ii), (iii), (iv) all exact"
                : "a semigroup invariant disagrees";
    return ok;
}

bool criterion_4(std::string& detail) {
    auto cases = load_cases();
    SampleStream st(1004);
    for (const auto& rec : cases) {
        for (int sample = 0; sample < 3; ++sample) {
            const auto& alt = rec.alternatives[sample % rec.alternatives.size()];
            std::vector<Rational> slots;
            for (std::size_t k = 0; k < rec.slots.size(); ++k) slots.push_back(st.next_coefficient());
            std::vector<Poly> coords;
            for (const auto& tp : alt.curve) coords.push_back(tp.instantiate(slots));
            ParamCurve curve = ParamCurve::validate(std::move(coords));
            int sig = sigma(curve.semigroup());
            try {
                check_consistency(curve, sig + 1);
            } catch (const Error& e) {
                detail = "case (" + rec.id + "): " + e.what();
                return false;
            }
        }
    }
    detail = "formula = direct kernel dimension at n in {sigma, sigma+1}, all 23 cases x 3 samples";
    return true;
}

bool criterion_5(std::string& detail) {
    SampleStream st(1005);
    Rational a1 = st.next_coefficient(), a2 = st.next_coefficient(), a3 = st.next_coefficient();
    Rational a = st.next_coefficient(), b = st.next_coefficient();
    auto curve_with = [&](const Rational& a4) {
        return ParamCurve::validate({Poly{Rational(1), a1, a2, a3}, t_pow(4) + t_pow(6).scaled(a4),
                                     t_pow(5), t_pow(10), t_pow(11)});
    };
    ParamCurve c0 = curve_with(Rational(0));
    FractionalSheaf pen = pencil(1, Poly{Rational(1)}, Poly{b, a});
    PencilCertificate bp = certify(c0, pen, 3, true);
    if (bp.degree != 3 || !bp.has_base_point()) {
        detail = "a4 = 0 pencil is not a degree-3 base-point pencil";
        return false;
    }
    Rational a4 = st.next_coefficient();
    ParamCurve c1 = curve_with(a4);
    if (degree(pen, c1) != 4) {
        detail = "a4 != 0 pencil degree is not 4";
        return false;
    }
    FractionalSheaf bpf = pencil(4, Poly{Rational(1)}, Poly{Rational(1), a1, a2 - a4, a3 - a1 * a4});
    PencilCertificate fr = certify(c1, bpf, 4, false);
    if (!fr.free_at_cusp || fr.degree != 4) {
        detail = "the displayed g^1_4 is not free of degree 4";
        return false;
    }
    detail = "deg 3 with base point iff a4 = 0; deg 4 otherwise; displayed free g^1_4 verified";
    return true;
}

bool criterion_6(std::string& detail) {
    SampleStream st(1006);
    int points = 0;
    // Thm 3.3 subcases on free random samples
    struct OneGrid {
        const char* label;
        std::function<bool(int, int)> admit;  // (ell, m) for the subcase
    };
    std::vector<OneGrid> one_grids = {{"m=1", [](int ell, int m) { return m == 1 && ell >= 1; }},
                                      {"ell=1", [](int ell, int m) { return ell == 1 && m >= 1; }},
                                      {"m=2", [](int ell, int m) { return m == 2 && ell >= 1; }}};
    for (const auto& grid : one_grids) {
        for (int alpha = 2; alpha <= 8; ++alpha) {
            for (int ell = 1; ell <= alpha; ++ell) {
                for (int m = 1; ell + m <= alpha; ++m) {
                    if (!grid.admit(ell, m)) continue;
                    for (int sample = 0; sample < 5; ++sample) {
                        std::vector<Rational> a;
                        for (int i = 0; i < ell * m; ++i) a.push_back(st.next_coefficient());
                        OneBlockParams p{alpha, ell, m, a};
                        if (!models_equivalent(closed_form_canonical(p),
                                               canonical_model(build_one_block(p)).coords)) {
                            detail = std::string("one-block ") + grid.label + " (" +
                                     std::to_string(alpha) + "," + std::to_string(ell) + "," +
                                     std::to_string(m) + ") mismatch";
                            return false;
                        }
                        ++points;
                    }
                }
            }
        }
    }
    // Thm 3.4, both branches; m >= 2 shapes are projected onto the stratum
    // where the stated closed form is defined (the theorem's case selection)
    for (int branch : {1, 2}) {
        int branch_samples = 0;
        for (int alpha = 2; alpha <= 8; ++alpha) {
            for (int ell = 2; ell <= alpha; ++ell) {
                for (int m = 1; m <= 3; ++m) {
                    TwoBlockParams probe{alpha, ell, m, {}, branch};
                    if (alpha < std::max(ell, m + 1) || alpha == ell + m) continue;
                    int need = branch == 1 ? probe.u() + probe.v() : probe.u() + probe.v() - 1;
                    std::vector<Rational> a;
                    for (int i = 0; i < need; ++i) a.push_back(st.next_coefficient());
                    TwoBlockParams p{alpha, ell, m, a, branch};
                    try {
                        p.check();
                    } catch (const Error&) {
                        continue;
                    }
                    try {
                        TwoBlockParams q = two_block_model_stratum(p);
                        if (!models_equivalent(closed_form_canonical(q),
                                               canonical_model(build_two_block(q)).coords)) {
                            detail = "two-block branch " + std::to_string(branch) + " (" +
                                     std::to_string(alpha) + "," + std::to_string(ell) + "," +
                                     std::to_string(m) + ") mismatch";
                            return false;
                        }
                    } catch (const Error& e) {
                        detail = "two-block branch " + std::to_string(branch) + " (" +
                                 std::to_string(alpha) + "," + std::to_string(ell) + "," +
                                 std::to_string(m) + "): " + e.what();
                        return false;
                    }
                    ++points;
                    ++branch_samples;
                }
            }
        }
        if (branch_samples < 5) {
            detail = "fewer than 5 samples for a Thm 3.4 branch";
            return false;
        }
    }
    detail = std::to_string(points) + " grid samples cross-validated against the general algorithm";
    return true;
}

bool criterion_7(std::string& detail) {
    auto cases = load_cases();
    SummaryReport sum = verify_all(cases, 5, 42);
    int conditional_rows = 0;
    for (const auto& rep : sum.reports) {
        if (rep.conditional) ++conditional_rows;
    }
    if (!sum.all_passed()) {
        detail = std::to_string(sum.cases_failed) + " cases failed";
        for (const auto& rep : sum.reports) {
            if (!rep.passed && !rep.discrepancies.empty()) {
                detail += "; (" + rep.case_id + "): " + rep.discrepancies.front();
                break;
            }
        }
        return false;
    }
    detail = "verify_all(5, 42): " + std::to_string(sum.cases_passed) + "/23 passed, " +
             std::to_string(conditional_rows) + " conditional rows flagged";
    return true;
}

bool criterion_8(std::string& detail) {
    // (a) #K° = g and eta = 2g - beta on 200 random semigroups of genus <= 12
    SampleStream st(1008);
    int tested = 0;
    while (tested < 200) {
        std::vector<int> gens;
        int n = 2 + static_cast<int>(st.next_u64() % 3);
        for (int i = 0; i < n; ++i) gens.push_back(2 + static_cast<int>(st.next_u64() % 12));
        NumericalSemigroup s = NumericalSemigroup::from_generators({2, 3});
        try {
            s = NumericalSemigroup::from_generators(gens);
        } catch (const Error&) {
            continue;
        }
        if (s.genus() > 12) continue;
        ++tested;
        if (static_cast<int>(kset(s).below_conductor.size()) != s.genus() ||
            eta(s) != 2 * s.genus() - s.conductor()) {
            detail = "(a) K-set or eta identity failed";
            return false;
        }
    }
    // (b) canonical sheaf degree = 2g-2 and h0 = g on all table cases
    auto cases = load_cases();
    for (const auto& rec : cases) {
        const auto& alt = rec.alternatives[0];
        std::vector<Rational> slots;
        for (std::size_t k = 0; k < rec.slots.size(); ++k) slots.push_back(st.next_coefficient());
        std::vector<Poly> coords;
        for (const auto& tp : alt.curve) coords.push_back(tp.instantiate(slots));
        ParamCurve curve = ParamCurve::validate(std::move(coords));
        CanonicalModel m = canonical_model(curve);
        std::vector<RationalFunc> omega_gens;
        for (const auto& p : m.coords) omega_gens.emplace_back(p, m.coords[0]);
        FractionalSheaf omega = FractionalSheaf::make(omega_gens);
        if (degree(omega, curve) != 2 * curve.genus() - 2 ||
            h0(omega, curve).dimension != curve.genus()) {
            detail = "(b) canonical sheaf degree/h0 failed on case (" + rec.id + ")";
            return false;
        }
    }
    // (c) degree invariance under z -> z - c and z -> 1/z on 50 random pencils
    for (int trial = 0; trial < 50; ++trial) {
        Rational a1 = st.next_coefficient(), a2 = st.next_coefficient();
        ParamCurve curve = ParamCurve::validate(
            {Poly{Rational(1), a1, a2}, t_pow(3), t_pow(7), t_pow(8)});
        int r = 1 + static_cast<int>(st.next_u64() % 2);
        FractionalSheaf f = pencil(r, Poly{Rational(1)}, Poly{Rational(1), st.next_coefficient()});
        int d = degree(f, curve);
        RationalFunc z = f.generators()[1];
        RationalFunc zc = z - RationalFunc::from_poly(Poly::constant(st.next_coefficient()));
        if (degree(FractionalSheaf::make({RationalFunc::one(), zc}), curve) != d ||
            degree(FractionalSheaf::make({RationalFunc::one(), z.inverse()}), curve) != d) {
            detail = "(c) degree invariance failed";
            return false;
        }
    }
    // (d) Eq.(5) = general gcd formula = split-denominator oracle on 50 inputs
    for (int trial = 0; trial < 50; ++trial) {
        Poly h = Poly::constant(Rational(1));
        int away_at_roots = 0;
        for (int i = 0, nroots = 1 + static_cast<int>(st.next_u64() % 3); i < nroots; ++i) {
            Rational c = st.next_coefficient();
            int mult = 1 + static_cast<int>(st.next_u64() % 2);
            for (int k = 0; k < mult; ++k) h = h * Poly{-c, Rational(1)};
            away_at_roots += mult;
        }
        int r = 1 + static_cast<int>(st.next_u64() % 4);
        FractionalSheaf f = pencil(r, Poly{Rational(1)}, h);
        int eq5 = h.degree() + std::max(0, r - h.degree());
        int oracle = away_at_roots + std::max(0, r - h.degree());
        if (degree_away(f) != eq5 || degree_away(f) != oracle) {
            detail = "(d) degree-away formulas disagree";
            return false;
        }
    }
    // (e) a <-> b round trips on 100 random one-block parameter sets
    for (int trial = 0; trial < 100; ++trial) {
        int ell = 1 + static_cast<int>(st.next_u64() % 4);
        int m = 1 + static_cast<int>(st.next_u64() % 3);
        int alpha = ell + m + static_cast<int>(st.next_u64() % 3);
        std::vector<Rational> a;
        for (int i = 0; i < ell * m; ++i) a.push_back(st.next_coefficient());
        if (b_to_a(a_to_b({alpha, ell, m, a}), alpha, ell, m) != a) {
            detail = "(e) a<->b round trip failed";
            return false;
        }
    }
    // (f) truncation stability: local results identical at 3*beta and 4*beta
    for (int trial = 0; trial < 5; ++trial) {
        Rational a1 = st.next_coefficient(), a2 = st.next_coefficient(),
                 a3 = st.next_coefficient(), a4 = st.next_coefficient();
        std::vector<Poly> coords = {Poly{Rational(1), a1, a2, a3}, t_pow(4) + t_pow(6).scaled(a4),
                                    t_pow(5), t_pow(10), t_pow(11)};
        auto r3 = CuspRing::build(coords, 3);
        auto r4 = CuspRing::build(coords, 4);
        RationalFunc z(t_pow(1), Poly{Rational(1), st.next_coefficient()});
        LocalModule m3(r3, {RationalFunc::one(), z});
        LocalModule m4(r4, {RationalFunc::one(), z});
        if (m3.d_set() != m4.d_set() || m3.is_free() != m4.is_free()) {
            detail = "(f) truncation stability failed";
            return false;
        }
    }
    detail = "property suites (a)-(f) all hold";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1: section-2.2 ideal dimensions", criterion_1},
        {"2: section-2.2 explicit generators in computed spans", criterion_2},
        {"3: semigroup invariants eta/sigma/g'", criterion_3},
        {"4: dimension formula vs direct kernel, all 23 cases", criterion_4},
        {"5: Example 3.2 end-to-end pencils", criterion_5},
        {"6: closed-form canonical models vs general algorithm", criterion_6},
        {"7: Theorem 4.1 harness verify_all(5, 42)", criterion_7},
        {"8: property suites (a)-(f)", criterion_8},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << " [" << ms << " ms] — "
                  << detail << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    } else {
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    }
    return failures == 0 ? 0 : 1;
}
