#include "unicusp/sheaf.hpp"

#include <algorithm>

#include "unicusp/error.hpp"
#include "unicusp/linalg.hpp"

namespace unicusp {

FractionalSheaf FractionalSheaf::make(std::vector<RationalFunc> gens) {
    if (gens.empty()) throw Error(ErrorKind::InvalidInput, "sheaf needs generators");
    for (const auto& g : gens) {
        if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "zero sheaf generator");
    }
    FractionalSheaf s;
    // generators are normalized to valuation >= 0 with 1 among them; when a
    // generator has a pole at the cusp, or none equals 1, the whole list is
    // scaled by the inverse of a minimal-valuation generator (degree is
    // invariant under such scaling) and the unit recorded
    bool has_one = std::any_of(gens.begin(), gens.end(),
                               [](const RationalFunc& g) { return g == RationalFunc::one(); });
    std::size_t min_idx = 0;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (gens[i].valuation_at_zero() < gens[min_idx].valuation_at_zero()) min_idx = i;
    }
    if (!has_one || gens[min_idx].valuation_at_zero() < 0) {
        RationalFunc unit = gens[min_idx].inverse();
        s.unit_ = unit;
        for (auto& g : gens) g = g * unit;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == RationalFunc::one()) {
            std::swap(gens[0], gens[i]);
            break;
        }
    }
    s.gens_ = std::move(gens);

    Poly h = Poly::constant(Rational(1));
    for (const auto& g : s.gens_) h = poly_lcm(h, g.den());
    Rational h0v = h.at_zero();
    if (h0v.is_zero())
        throw Error(ErrorKind::PoleAtCusp, "common denominator vanishes at the cusp");
    h = h.scaled(h0v.inverse());
    s.h_ = h;
    Poly g = Poly();
    for (const auto& gen : s.gens_) {
        Poly n = gen.num() * Poly::exact_div(h, gen.den());
        s.nums_.push_back(n);
        g = poly_gcd(g, n);
    }
    s.gcd_ = g;
    return s;
}

FractionalSheaf pencil(int r, const Poly& f, const Poly& h) {
    if (r <= 0) throw Error(ErrorKind::NormalFormViolation, "r > 0 required");
    if (f.is_zero() || f.at_zero().is_zero())
        throw Error(ErrorKind::NormalFormViolation, "f(0) != 0 required");
    if (h.is_zero() || h.at_zero().is_zero())
        throw Error(ErrorKind::NormalFormViolation, "h(0) != 0 required");
    if (poly_gcd(f, h).degree() != 0)
        throw Error(ErrorKind::NormalFormViolation, "gcd(f, h) = 1 required");
    return FractionalSheaf::make({RationalFunc::one(), RationalFunc(f.shifted(r), h)});
}

int degree_away(const FractionalSheaf& sheaf) {
    int deg_h = sheaf.common_denominator().degree();
    int max_num = -1;
    for (const auto& n : sheaf.numerators()) max_num = std::max(max_num, n.degree());
    int finite_part = deg_h - sheaf.numerator_gcd().degree();
    int infinity_part = std::max(0, max_num - deg_h);
    return finite_part + infinity_part;
}

LocalModule module_at_cusp(const FractionalSheaf& sheaf, const ParamCurve& curve) {
    return LocalModule(curve.ring(), sheaf.generators());
}

int degree(const FractionalSheaf& sheaf, const ParamCurve& curve) {
    return degree_away(sheaf) + module_at_cusp(sheaf, curve).local_degree();
}

GlobalSections h0(const FractionalSheaf& sheaf, const ParamCurve& curve) {
    const Poly& h = sheaf.common_denominator();
    const Poly& g = sheaf.numerator_gcd();
    int max_num = -1;
    for (const auto& n : sheaf.numerators()) max_num = std::max(max_num, n.degree());
    const int pole_at_infinity = std::max(0, max_num - h.degree());
    const int d_max = h.degree() - g.degree() + pole_at_infinity;

    LocalModule mod = module_at_cusp(sheaf, curve);
    const int beta = curve.beta();

    // residuals of t^k g / h against the module span, rows indexed by the
    // positions not in the span's value set
    MatQ m(beta, d_max + 1);
    m.setConstant(Rational(0));
    for (int k = 0; k <= d_max; ++k) {
        RationalFunc x(g.shifted(k), h);
        TruncSeries res = mod.span().reduce(x.expand(beta));
        for (int pos = 0; pos < beta; ++pos) m(pos, k) = res.coeff(pos);
    }
    MatQ ker = kernel_basis(m);

    // echelonize the section coefficients for a deterministic basis
    MatQ rows(ker.cols(), d_max + 1);
    for (Eigen::Index i = 0; i < ker.cols(); ++i) {
        for (Eigen::Index j = 0; j <= d_max; ++j) rows(i, j) = ker(j, i);
    }
    reduced_row_echelon(rows);

    GlobalSections out;
    out.dimension = static_cast<int>(rows.rows());
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        std::vector<Rational> coeffs;
        for (Eigen::Index j = 0; j <= d_max; ++j) coeffs.push_back(rows(i, j));
        Poly mpoly{std::vector<Rational>(coeffs)};
        out.basis.emplace_back(mpoly * g, h);
    }
    return out;
}

FractionalSheaf bpf_alpha_pencil(int alpha, int ell, int m, const std::vector<Rational>& a_in) {
    if (alpha < 2 || ell < 1 || m < 1 || ell + m > alpha)
        throw Error(ErrorKind::UnsupportedFamily,
                    "one-block parameters need alpha >= ell + m, ell >= 1, m >= 1");
    // a_k with a_0 = 1 and a_k = 0 beyond the supplied list (indices > ell*m)
    auto a = [&](int k) -> Rational {
        if (k == 0) return Rational(1);
        if (k < 1 || k > static_cast<int>(a_in.size())) return Rational(0);
        return a_in[static_cast<std::size_t>(k - 1)];
    };
    const int n = ell + m - 1;  // deg h
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
    b[0] = Rational(1);
    for (int i = 1; i <= ell - 1 && i <= n; ++i) b[static_cast<std::size_t>(i)] = a(i);
    for (int i = ell; i <= ell + m - 2; ++i) {
        Rational acc = a(i);
        for (int j = ell; j <= i; ++j) acc -= a(m + j) * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = acc;
    }
    if (n >= 1) {
        Rational acc = a(ell + m - 1);
        for (int j = 1; j <= m - 1; ++j) acc -= a(j + ell + m - 1) * b[static_cast<std::size_t>(m - j)];
        b[static_cast<std::size_t>(n)] = acc;
    }
    Poly h{std::vector<Rational>(b)};
    return pencil(alpha, Poly::constant(Rational(1)), h);
}

PencilCertificate certify(const ParamCurve& curve, const FractionalSheaf& sheaf, int claimed_degree,
                          bool needs_base_point) {
    PencilCertificate cert;
    cert.sheaf = sheaf;
    LocalModule mod = module_at_cusp(sheaf, curve);
    cert.d_set = mod.d_set();
    cert.degree_away = degree_away(sheaf);
    cert.degree = cert.degree_away + static_cast<int>(cert.d_set.size());
    cert.h0 = h0(sheaf, curve).dimension;
    cert.free_at_cusp = mod.is_free();
    if (cert.degree != claimed_degree)
        throw CertificateError("degree", std::to_string(cert.degree));
    if (cert.h0 != 2) throw CertificateError("h0", std::to_string(cert.h0));
    if (cert.free_at_cusp == needs_base_point)
        throw CertificateError("base_point", cert.free_at_cusp ? "free" : "non-free");
    return cert;
}

}  // namespace unicusp
