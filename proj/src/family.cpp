#include "unicusp/family.hpp"

#include <algorithm>
#include <numeric>

#include "unicusp/error.hpp"

namespace unicusp {

namespace {

// a_0 = 1, a_k = 0 outside the supplied list.
Rational coeff_at(const std::vector<Rational>& a, int k) {
    if (k == 0) return Rational(1);
    if (k < 1 || k > static_cast<int>(a.size())) return Rational(0);
    return a[static_cast<std::size_t>(k - 1)];
}

// d_0 = 1, d_i = -sum_{j=1}^{i} a_j d_{i-j}  (coefficients of 1/F_0).
std::vector<Rational> inverse_series_coeffs(const std::vector<Rational>& a, int upto) {
    std::vector<Rational> d(static_cast<std::size_t>(upto) + 1, Rational(0));
    d[0] = Rational(1);
    for (int i = 1; i <= upto; ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) acc += coeff_at(a, j) * d[static_cast<std::size_t>(i - j)];
        d[static_cast<std::size_t>(i)] = -acc;
    }
    return d;
}

bool generated_by(const std::vector<int>& gens, int e) {
    std::vector<bool> reach(static_cast<std::size_t>(e) + 1, false);
    reach[0] = true;
    for (int i = 0; i <= e; ++i) {
        if (!reach[static_cast<std::size_t>(i)]) continue;
        for (int g : gens) {
            if (i + g <= e) reach[static_cast<std::size_t>(i + g)] = true;
        }
    }
    return reach[static_cast<std::size_t>(e)];
}

// Tail exponents: block candidates accumulate into the covered set as they
// are kept, the v-range candidates are checked against the covered set only
// (the stated tails list such values even when one is a sum of two others).
// Afterwards the two largest coordinate exponents are made consecutive:
// insert top-1 when it is a member of the target semigroup, else append
// top+1 (smooth point at infinity).
std::vector<int> build_tail(const NumericalSemigroup& star, std::vector<int> covered,
                            const std::vector<int>& block_candidates,
                            const std::vector<int>& v_candidates) {
    std::vector<int> tail;
    for (int e : block_candidates) {
        if (generated_by(covered, e)) continue;
        tail.push_back(e);
        covered.push_back(e);
    }
    for (int e : v_candidates) {
        if (generated_by(covered, e)) continue;
        tail.push_back(e);
    }
    std::vector<int> all = covered;
    all.insert(all.end(), tail.begin(), tail.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() >= 2) {
        int top = all[all.size() - 1];
        int second = all[all.size() - 2];
        const int beta = star.conductor();
        if (top - second > 1) {
            // only conductor-range exponents are guaranteed not to disturb
            // the value semigroup
            if (top - 1 >= beta) {
                tail.push_back(top - 1);
            } else if (top + 1 >= beta) {
                tail.push_back(top + 1);
            } else {
                tail.push_back(beta);
                tail.push_back(beta + 1);
            }
        }
    }
    std::sort(tail.begin(), tail.end());
    tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
    return tail;
}

}  // namespace

NumericalSemigroup OneBlockParams::star_semigroup() const {
    int beta = alpha + ell + m;
    std::vector<int> members = {0};
    for (int i = 0; i < ell; ++i) members.push_back(alpha + i);
    return NumericalSemigroup::from_members(beta, members);
}

void OneBlockParams::check() const {
    if (alpha < 2 || ell < 1 || m < 1)
        throw Error(ErrorKind::InvalidBlockParams, "need alpha >= 2, ell >= 1, m >= 1");
    if (ell + m > alpha)
        throw Error(ErrorKind::InvalidBlockParams,
                    "need ell + m <= alpha (otherwise S* is not additively closed)");
    if (static_cast<int>(a.size()) != ell * m)
        throw Error(ErrorKind::InvalidBlockParams,
                    "coefficient list must have length ell*m = " + std::to_string(ell * m));
    star_semigroup();  // validates closure
}

NumericalSemigroup TwoBlockParams::star_semigroup() const {
    int beta = alpha + m + ell + 1;
    std::vector<int> members = {0, alpha};
    for (int j = 1; j <= ell - 1; ++j) members.push_back(alpha + m + j);
    return NumericalSemigroup::from_members(beta, members);
}

void TwoBlockParams::check() const {
    if (alpha < 2 || ell < 2 || m < 1)
        throw Error(ErrorKind::InvalidBlockParams, "need alpha >= 2, ell >= 2, m >= 1");
    if (branch != 1 && branch != 2)
        throw Error(ErrorKind::InvalidBlockParams, "branch must be 1 or 2");
    int need = branch == 1 ? u() + v() : u() + v() - 1;
    if (static_cast<int>(a.size()) != need)
        throw Error(ErrorKind::InvalidBlockParams,
                    "coefficient list must have length " + std::to_string(need));
    try {
        star_semigroup();
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidBlockParams,
                    "S* is not additively closed for these (alpha, ell, m)");
    }
}

ParamCurve build_one_block(const OneBlockParams& p) {
    p.check();
    const int alpha = p.alpha, ell = p.ell, m = p.m;
    const int beta = alpha + ell + m;
    NumericalSemigroup star = p.star_semigroup();

    std::vector<Poly> coords;
    {
        std::vector<Rational> f0(static_cast<std::size_t>(ell + m), Rational(0));
        f0[0] = Rational(1);
        for (int i = 1; i <= ell + m - 1; ++i) f0[static_cast<std::size_t>(i)] = coeff_at(p.a, i);
        coords.emplace_back(std::vector<Rational>(f0));
    }
    for (int i = alpha; i <= alpha + ell - 2; ++i) {
        Poly f = Poly::monomial(Rational(1), i);
        for (int j = 1; j <= m - 1; ++j) {
            int idx = ell + (i - alpha + 1) * (m - 1) + j;
            f = f + Poly::monomial(coeff_at(p.a, idx), alpha + ell + j - 1);
        }
        coords.push_back(f);
    }
    coords.push_back(Poly::monomial(Rational(1), alpha + ell - 1));

    std::vector<int> covered;
    for (int i = 0; i < ell; ++i) covered.push_back(alpha + i);
    std::vector<int> v_candidates;
    for (int e = beta; e <= 2 * alpha - 1; ++e) v_candidates.push_back(e);
    if (ell <= m) {
        for (int e = 2 * alpha + 2 * ell - 1; e <= beta + alpha - 1; ++e) v_candidates.push_back(e);
    }
    for (int e : build_tail(star, covered, {}, v_candidates)) {
        coords.push_back(Poly::monomial(Rational(1), e));
    }

    ParamCurve curve = ParamCurve::validate(std::move(coords));
    if (!(curve.semigroup() == star))
        throw Error(ErrorKind::InvalidBlockParams,
                    "built curve has semigroup " + curve.semigroup().to_string() +
                        ", expected " + star.to_string());
    return curve;
}

std::pair<Poly, Poly> two_block_head(const TwoBlockParams& p) {
    const int u = p.u(), v = p.v(), n = p.ell + p.m;
    Poly f0, fa;
    if (p.branch == 1) {
        std::vector<Rational> c0(static_cast<std::size_t>(u) + 1, Rational(0));
        c0[0] = Rational(1);
        for (int i = 1; i <= u; ++i) c0[static_cast<std::size_t>(i)] = coeff_at(p.a, i);
        f0 = Poly(std::move(c0));
        fa = Poly::monomial(Rational(1), p.alpha);
        for (int i = 1; i <= v; ++i) fa = fa + Poly::monomial(coeff_at(p.a, u + i), p.alpha + i);
    } else {
        f0 = Poly::constant(Rational(1));
        for (int i = 1; i <= u - 1; ++i) f0 = f0 + Poly::monomial(coeff_at(p.a, i), i);
        f0 = f0 + Poly::monomial(coeff_at(p.a, u), n);
        fa = Poly::monomial(Rational(1), p.alpha);
        for (int i = 1; i <= v - 1; ++i) fa = fa + Poly::monomial(coeff_at(p.a, u + i), p.alpha + i);
        std::vector<Rational> d = inverse_series_coeffs(p.a, std::max(0, v - 1));
        Rational top = coeff_at(p.a, v);
        for (int j = 1; j <= v - 1; ++j) {
            top += coeff_at(p.a, j) * d[static_cast<std::size_t>(v - j)] -
                   d[static_cast<std::size_t>(j)] * coeff_at(p.a, n - j);
        }
        fa = fa + Poly::monomial(top, p.alpha + v);
    }
    return {f0, fa};
}

ParamCurve build_two_block(const TwoBlockParams& p) {
    p.check();
    const int alpha = p.alpha, ell = p.ell, m = p.m;
    const int beta = alpha + m + ell + 1;
    const int n = ell + m;
    NumericalSemigroup star = p.star_semigroup();

    auto [f0, fa] = two_block_head(p);
    std::vector<Poly> coords = {f0, fa};

    std::vector<int> covered = {alpha};
    std::vector<int> block_candidates;
    for (int e = alpha + m + 1; e <= beta - 2; ++e) block_candidates.push_back(e);
    std::vector<int> v_candidates;
    for (int e = beta; e <= 2 * alpha + m; ++e) v_candidates.push_back(e);
    if (ell <= m + 1) {
        for (int e = 2 * alpha + n; e <= 2 * (alpha + m) + 1; ++e) v_candidates.push_back(e);
    }
    for (int e : build_tail(star, covered, block_candidates, v_candidates)) {
        coords.push_back(Poly::monomial(Rational(1), e));
    }

    ParamCurve curve = ParamCurve::validate(std::move(coords));
    if (!(curve.semigroup() == star))
        throw Error(ErrorKind::InvalidBlockParams,
                    "built curve has semigroup " + curve.semigroup().to_string() +
                        ", expected " + star.to_string());
    return curve;
}

std::vector<std::vector<Rational>> a_to_b(const OneBlockParams& p) {
    p.check();
    const int ell = p.ell, m = p.m;
    std::vector<Rational> d = inverse_series_coeffs(p.a, ell + m);
    auto a = [&](int k) { return coeff_at(p.a, k); };
    std::vector<std::vector<Rational>> b(static_cast<std::size_t>(ell),
                                         std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int i = 1; i <= ell - 1; ++i) {
        for (int j = 1; j <= m - 1; ++j) {
            Rational acc(0);
            for (int s = 0; s <= ell - i; ++s) {
                Rational inner = d[static_cast<std::size_t>(ell - i + j - s)];
                for (int k = 0; k <= j - 1; ++k) {
                    inner += d[static_cast<std::size_t>(k)] * a(ell + (i + s) * (m - 1) + j - k);
                }
                acc += a(s) * inner;
            }
            b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = acc;
        }
        Rational acc(0);
        for (int s = 0; s <= ell - i; ++s) {
            Rational inner = d[static_cast<std::size_t>(ell + m - i - s)];
            for (int k = 1; k <= m - 1; ++k) {
                inner += d[static_cast<std::size_t>(k)] * a(ell + (i + s) * (m - 1) + m - k);
            }
            acc += a(s) * inner;
        }
        b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] = acc;
    }
    for (int j = 1; j <= m; ++j) {
        b[static_cast<std::size_t>(ell - 1)][static_cast<std::size_t>(j - 1)] =
            d[static_cast<std::size_t>(j)];
    }
    return b;
}

std::vector<Rational> b_to_a(const std::vector<std::vector<Rational>>& b, int alpha, int ell, int m) {
    if (static_cast<int>(b.size()) != ell)
        throw Error(ErrorKind::InvalidInput, "b must have ell rows");
    for (const auto& row : b) {
        if (static_cast<int>(row.size()) != m)
            throw Error(ErrorKind::InvalidInput, "b must have m columns");
    }
    std::vector<Rational> a(static_cast<std::size_t>(ell * m), Rational(0));
    auto aval = [&](int k) { return coeff_at(a, k); };
    auto aset = [&](int k, const Rational& v) { a[static_cast<std::size_t>(k - 1)] = v; };
    auto dval = [&](int k) {
        std::vector<Rational> d = inverse_series_coeffs(a, k);
        return d[static_cast<std::size_t>(k)];
    };
    // a_1..a_m from b_{ell,j} = d_j
    for (int j = 1; j <= m; ++j) {
        Rational acc = -b[static_cast<std::size_t>(ell - 1)][static_cast<std::size_t>(j - 1)];
        for (int k = 1; k <= j - 1; ++k) acc -= aval(k) * dval(j - k);
        aset(j, acc);
    }
    for (int i = ell - 1; i >= 1; --i) {
        // block i coefficients, j = 1..m-1
        for (int j = 1; j <= m - 1; ++j) {
            Rational acc = b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            acc -= dval(ell - i + j);
            for (int k = 1; k <= j - 1; ++k) acc -= dval(k) * aval(ell + i * (m - 1) + j - k);
            for (int s = 1; s <= ell - i; ++s) {
                Rational inner = dval(ell - i + j - s);
                for (int k = 0; k <= j - 1; ++k) {
                    inner += dval(k) * aval(ell + (i + s) * (m - 1) + j - k);
                }
                acc -= aval(s) * inner;
            }
            aset(ell + i * (m - 1) + j, acc);
        }
        // F_0 coefficient a_{ell+m-i}
        Rational acc = -b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)];
        for (int k = 1; k <= ell + m - i - 1; ++k) acc -= aval(k) * dval(ell + m - i - k);
        for (int k = 1; k <= m - 1; ++k) acc += dval(k) * aval(ell + i * (m - 1) + m - k);
        for (int s = 1; s <= ell - i; ++s) {
            Rational inner = dval(ell + m - i - s);
            for (int k = 1; k <= m - 1; ++k) {
                inner += dval(k) * aval(ell + (i + s) * (m - 1) + m - k);
            }
            acc += aval(s) * inner;
        }
        aset(ell + m - i, acc);
    }
    (void)alpha;
    return a;
}

namespace {

PencilCertificate certify_or_rethrow(const ParamCurve& curve, const FractionalSheaf& sheaf,
                                     int degree, bool base_point) {
    return certify(curve, sheaf, degree, base_point);
}

}  // namespace

GonalityClassification classify_one_block_on(const OneBlockParams& p, const ParamCurve& curve) {
    p.check();
    if (p.alpha == curve.beta())
        throw Error(ErrorKind::NearlyNormalOutOfTemplate, "alpha equals the conductor");
    if (p.m >= 3 && p.ell >= 2)
        throw Error(ErrorKind::UnsupportedFamily,
                    "gonality classification covers m = 1, ell = 1 or m = 2 only");
    GonalityClassification out;
    out.d_f = p.alpha;
    out.free_certificate =
        certify_or_rethrow(curve, bpf_alpha_pencil(p.alpha, p.ell, p.m, p.a), p.alpha, false);

    bool vanishing = true;
    if (p.m == 2) {
        for (int i = 2; i <= p.ell; ++i) {
            if (!coeff_at(p.a, p.ell + i).is_zero()) vanishing = false;
        }
    }
    out.criterion_vanishing = vanishing;
    if (p.m == 1 || p.ell == 1) {
        out.d_b = 3;
    } else {
        out.d_b = vanishing ? 3 : 4;
    }
    FractionalSheaf bp = pencil(1, Poly::constant(Rational(1)), Poly::constant(Rational(1)));
    out.base_point_certificate = certify_or_rethrow(curve, bp, out.d_b, true);
    return out;
}

GonalityClassification classify_one_block(const OneBlockParams& p) {
    return classify_one_block_on(p, build_one_block(p));
}

GonalityClassification classify_two_block_on(const TwoBlockParams& p, const ParamCurve& curve) {
    p.check();
    if (p.alpha == curve.beta())
        throw Error(ErrorKind::NearlyNormalOutOfTemplate, "alpha equals the conductor");
    if (eta(curve.semigroup()) == 0)
        throw Error(ErrorKind::UnsupportedFamily,
                    "Gorenstein two-block semigroups are outside the classification");
    GonalityClassification out;
    out.d_f = p.alpha;
    out.free_certificate =
        certify_or_rethrow(curve, two_block_free_pencil(curve), p.alpha, false);
    bool trigonal_form = (p.m == 1 && p.ell == 2);
    out.criterion_vanishing = trigonal_form;
    if (trigonal_form) {
        out.d_b = 3;
        out.base_point_certificate =
            certify_or_rethrow(curve, two_block_trigonal_pencil(curve), 3, true);
    } else {
        out.d_b = 4;
        FractionalSheaf bp = pencil(1, Poly::constant(Rational(1)), Poly::constant(Rational(1)));
        out.base_point_certificate = certify_or_rethrow(curve, bp, 4, true);
    }
    return out;
}

GonalityClassification classify_two_block(const TwoBlockParams& p) {
    return classify_two_block_on(p, build_two_block(p));
}

std::vector<Poly> closed_form_canonical(const OneBlockParams& p) {
    p.check();
    const int alpha = p.alpha, ell = p.ell, m = p.m;
    auto a = [&](int k) { return coeff_at(p.a, k); };
    std::vector<Poly> coords;
    if (m == 1) {
        Poly f0 = Poly::constant(Rational(1));
        for (int i = 1; i <= ell; ++i) f0 = f0 + Poly::monomial(a(i), i);
        coords.push_back(f0);
        for (int i = ell + 1; i <= alpha + ell - 1; ++i)
            coords.push_back(Poly::monomial(Rational(1), i));
        return coords;
    }
    if (ell == 1) {
        Poly f0 = Poly::constant(Rational(1));
        for (int i = 1; i <= m; ++i) f0 = f0 + Poly::monomial(a(i), i);
        coords.push_back(f0);
        for (int i = 1; i <= m - 1; ++i) {
            Poly h;
            for (int j = 0; j <= m - i; ++j) h = h + Poly::monomial(a(j), i + j);
            coords.push_back(h);
        }
        for (int i = m + 1; i <= alpha + m - 1; ++i)
            coords.push_back(Poly::monomial(Rational(1), i));
        return coords;
    }
    if (m == 2) {
        std::vector<Rational> d = inverse_series_coeffs(p.a, ell + 1);
        Poly f0 = Poly::constant(Rational(1));
        for (int i = 1; i <= ell + 1; ++i) f0 = f0 + Poly::monomial(a(i), i);
        coords.push_back(f0);
        // h_1 = t + sum_i b_{2(ell-i)+1} t^{i+1} with
        // b_{2i-1} = -sum_{j=0}^{ell-i} a_j (d_{ell-i-j+1} + a_{ell+i+j+1})
        auto b_odd = [&](int i) {
            Rational acc(0);
            for (int j = 0; j <= ell - i; ++j) {
                acc += a(j) * (d[static_cast<std::size_t>(ell - i - j + 1)] + a(ell + i + j + 1));
            }
            return -acc;
        };
        Poly h1 = Poly::monomial(Rational(1), 1);
        for (int i = 1; i <= ell; ++i) h1 = h1 + Poly::monomial(b_odd(ell - i + 1), i + 1);
        coords.push_back(h1);
        for (int i = ell + 2; i <= alpha + ell; ++i) {
            if (i >= alpha && i <= alpha + ell - 2) {
                // F_i from the parametrization (m = 2: one block coefficient)
                Poly f = Poly::monomial(Rational(1), i);
                f = f + Poly::monomial(a(ell + (i - alpha + 1) + 1), alpha + ell);
                coords.push_back(f);
            } else {
                coords.push_back(Poly::monomial(Rational(1), i));
            }
        }
        return coords;
    }
    throw Error(ErrorKind::UnsupportedFamily,
                "closed-form canonical model covers m = 1, ell = 1 or m = 2 only");
}

std::vector<Poly> closed_form_canonical(const TwoBlockParams& p) {
    p.check();
    const int alpha = p.alpha, n = p.ell + p.m;
    auto [f0, fa] = two_block_head(p);
    // e_i = [F_0]_i - sum_j [F_alpha]_{alpha+j} e_{i-j}
    const int emax = n;
    std::vector<Rational> e(static_cast<std::size_t>(emax) + 1, Rational(0));
    e[0] = Rational(1);
    for (int i = 1; i <= emax; ++i) {
        Rational acc = f0.coeff(i);
        for (int j = 1; j <= i; ++j) {
            Rational A = fa.coeff(alpha + j);
            if (!A.is_zero()) acc -= A * e[static_cast<std::size_t>(i - j)];
        }
        e[static_cast<std::size_t>(i)] = acc;
    }
    std::vector<Poly> coords = {f0};
    for (int i = p.ell; i <= n - 1; ++i) {
        if (i == alpha) {
            coords.push_back(fa);
            continue;
        }
        Poly h = Poly::monomial(Rational(1), i);
        for (int j = 1; j <= n - i; ++j) h = h + Poly::monomial(e[static_cast<std::size_t>(j)], i + j);
        coords.push_back(h);
    }
    for (int i = n + 1; i <= alpha + n - 1; ++i) {
        if (i == alpha) {
            coords.push_back(fa);
        } else {
            coords.push_back(Poly::monomial(Rational(1), i));
        }
    }
    return coords;
}

namespace {

struct FreePencilSearch {
    bool ok = false;
    Poly h;
    int blocked_position = -1;
    Rational blocked_residual;
};

FreePencilSearch search_free_alpha_pencil(const ParamCurve& curve) {
    const int alpha = curve.alpha();
    const int beta = curve.beta();
    const NumericalSemigroup& s = curve.semigroup();
    const CuspRing& ring = *curve.ring();

    std::vector<Rational> h(static_cast<std::size_t>(alpha) + 1, Rational(0));
    h[0] = Rational(1);
    std::vector<bool> assigned(static_cast<std::size_t>(alpha) + 1, false);

    auto residual_at = [&](int pos) {
        Poly hp{std::vector<Rational>(h)};
        TruncSeries z = series_expand(Poly::monomial(Rational(1), alpha), hp, beta);
        TruncSeries res = ring.basis().reduce(z.truncated(beta));
        return res.coeff(pos);
    };

    FreePencilSearch out;
    int last_killed = alpha;
    for (int pos = alpha + 1; pos < beta; ++pos) {
        if (s.contains(pos)) continue;
        bool solved = false;
        for (int k = std::min(alpha, pos - alpha); 2 * k > pos - alpha; --k) {
            if (k < 1 || assigned[static_cast<std::size_t>(k)]) continue;
            if (alpha + k <= last_killed) break;  // would disturb killed positions
            Rational save = h[static_cast<std::size_t>(k)];
            h[static_cast<std::size_t>(k)] = Rational(0);
            Rational r0 = residual_at(pos);
            h[static_cast<std::size_t>(k)] = Rational(1);
            Rational r1 = residual_at(pos);
            Rational slope = r1 - r0;
            if (slope.is_zero()) {
                h[static_cast<std::size_t>(k)] = save;
                if (r0.is_zero()) {
                    solved = true;
                    break;
                }
                continue;
            }
            h[static_cast<std::size_t>(k)] = -r0 / slope;
            assigned[static_cast<std::size_t>(k)] = true;
            solved = true;
            break;
        }
        if (!solved && residual_at(pos).is_zero()) solved = true;
        if (!solved) {
            out.blocked_position = pos;
            out.blocked_residual = residual_at(pos);
            return out;
        }
        last_killed = pos;
    }
    out.ok = true;
    out.h = Poly{std::vector<Rational>(h)};
    return out;
}

}  // namespace

std::optional<std::pair<int, Rational>> free_pencil_obstruction(const ParamCurve& curve) {
    FreePencilSearch search = search_free_alpha_pencil(curve);
    if (search.ok) return std::nullopt;
    return std::make_pair(search.blocked_position, search.blocked_residual);
}

FractionalSheaf two_block_free_pencil(const ParamCurve& curve) {
    FreePencilSearch search = search_free_alpha_pencil(curve);
    if (!search.ok)
        throw CertificateError("free_pencil_construction",
                               "unresolvable gap position " +
                                   std::to_string(search.blocked_position));
    FractionalSheaf f = pencil(curve.alpha(), Poly::constant(Rational(1)), search.h);
    RationalFunc z(Poly::monomial(Rational(1), curve.alpha()), search.h);
    if (!curve.ring()->contains(z))
        throw CertificateError("free_pencil_construction", "section left the local ring");
    return f;
}

namespace {

// Residual of p after reduction against the model's (echelon) coordinates.
Poly reduce_against_model(Poly p, const CanonicalModel& model) {
    for (const auto& c : model.coords) {
        Rational f = p.coeff(c.valuation());
        if (!f.is_zero()) p = p - c.scaled(f);
    }
    return p;
}

struct StratumObstruction {
    int head = 0;  // 0: F_0, 1: F_alpha
    int position = 0;
};

// First obstruction to h_0 = F_0 and h_alpha = F_alpha being global
// sections, or nullopt on the stratum.
std::optional<StratumObstruction> model_stratum_obstruction(const TwoBlockParams& p) {
    ParamCurve curve = build_two_block(p);
    CanonicalModel model = canonical_model(curve);
    auto [f0, fa] = two_block_head(p);
    Poly heads[2] = {f0, fa};
    for (int h = 0; h < 2; ++h) {
        Poly r = reduce_against_model(heads[h], model);
        if (!r.is_zero()) return StratumObstruction{h, r.valuation()};
    }
    return std::nullopt;
}

Rational obstruction_coefficient(const TwoBlockParams& p, const StratumObstruction& where) {
    ParamCurve curve = build_two_block(p);
    CanonicalModel model = canonical_model(curve);
    auto [f0, fa] = two_block_head(p);
    Poly r = reduce_against_model(where.head == 0 ? f0 : fa, model);
    return r.coeff(where.position);
}

}  // namespace

TwoBlockParams two_block_model_stratum(const TwoBlockParams& p) {
    p.check();
    TwoBlockParams cur = p;
    const int max_rounds = 2 * static_cast<int>(cur.a.size()) + 2;
    for (int round = 0; round < max_rounds; ++round) {
        std::optional<StratumObstruction> obs = model_stratum_obstruction(cur);
        if (!obs) return cur;
        bool adjusted = false;
        for (std::size_t k = 0; k < cur.a.size() && !adjusted; ++k) {
            Rational save = cur.a[k];
            auto eval = [&](long long v) {
                cur.a[k] = Rational(v);
                return obstruction_coefficient(cur, *obs);
            };
            Rational r0 = eval(0);
            Rational r1 = eval(1);
            Rational r2 = eval(2);
            cur.a[k] = save;
            Rational slope = r1 - r0;
            if (slope.is_zero() || r2 - r1 != slope) continue;  // not affine in this slot
            Rational solved = -r0 / slope;
            cur.a[k] = solved;
            if (!obstruction_coefficient(cur, *obs).is_zero()) {
                cur.a[k] = save;
                continue;
            }
            adjusted = true;
        }
        if (!adjusted)
            throw Error(ErrorKind::UnsupportedFamily,
                        "no affine slot resolves the closed-form model stratum");
    }
    throw Error(ErrorKind::UnsupportedFamily, "model stratum projection did not stabilize");
}

FractionalSheaf two_block_trigonal_pencil(const ParamCurve& curve) {
    const int alpha = curve.alpha();
    const int beta = curve.beta();
    const NumericalSemigroup& s = curve.semigroup();
    // S* = {0, alpha, alpha+2, alpha+4, ->}
    std::vector<int> expect = {0, alpha, alpha + 2};
    if (beta != alpha + 4 || s.members_below_conductor() != expect)
        throw Error(ErrorKind::UnsupportedFamily,
                    "trigonal two-block pencil requires S = {0, alpha, alpha+2, alpha+4, ->}");
    const CuspRing& ring = *curve.ring();
    const int order = ring.order();
    const TruncSeries& b_alpha = ring.basis().element_at(alpha);

    auto residual_at = [&](const Rational& c) {
        Poly h{std::vector<Rational>{Rational(1), c}};
        TruncSeries z = series_expand(Poly::monomial(Rational(1), 2), h, order);
        TruncSeries res = ring.basis().reduce(z * b_alpha);
        return res.coeff(alpha + 3);
    };
    Rational r0 = residual_at(Rational(0));
    Rational r1 = residual_at(Rational(1));
    Rational slope = r1 - r0;
    Rational c = slope.is_zero() ? Rational(0) : -r0 / slope;
    if (!residual_at(c).is_zero())
        throw CertificateError("trigonal_pencil_construction", "gap coefficient not killable");
    Poly h{std::vector<Rational>{Rational(1), c}};
    return pencil(2, Poly::constant(Rational(1)), h);
}

}  // namespace unicusp
