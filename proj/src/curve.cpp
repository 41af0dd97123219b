#include "unicusp/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "unicusp/error.hpp"
#include "unicusp/linalg.hpp"

namespace unicusp {

ParamCurve ParamCurve::validate(std::vector<Poly> coords, int order_multiple) {
    if (coords.size() < 2) throw Error(ErrorKind::InvalidInput, "need at least two coordinates");
    Rational f00 = coords[0].is_zero() ? Rational(0) : coords[0].at_zero();
    if (f00.is_zero()) throw Error(ErrorKind::BadBaseCoordinate, "F_0(0) = 0");
    if (!f00.is_one()) {
        Rational inv = f00.inverse();
        for (auto& c : coords) c = c.scaled(inv);
    }
    std::set<int> seen;
    std::vector<int> vals;
    for (std::size_t i = 1; i < coords.size(); ++i) {
        if (coords[i].is_zero()) throw Error(ErrorKind::InvalidInput, "zero coordinate");
        int v = coords[i].valuation();
        if (v < 1)
            throw Error(ErrorKind::InvalidInput,
                        "coordinate " + std::to_string(i) + " has valuation 0");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::DuplicateValuation, "valuation " + std::to_string(v) + " repeats");
        vals.push_back(v);
    }
    int g = 0;
    for (int v : vals) g = std::gcd(g, v);
    if (g != 1)
        throw Error(ErrorKind::NotUnicuspidalSemigroup,
                    "coordinate valuations have gcd " + std::to_string(g));

    ParamCurve c;
    c.coords_ = std::move(coords);
    c.ring_ = CuspRing::build(c.coords_, order_multiple);
    return c;
}

std::vector<int> CanonicalModel::valuations() const {
    std::vector<int> v;
    for (const auto& p : coords) v.push_back(p.valuation());
    return v;
}

CanonicalModel canonical_model(const ParamCurve& curve) {
    const int beta = curve.beta();
    const int g = curve.genus();
    if (g < 1) throw Error(ErrorKind::InvalidInput, "genus must be >= 1");
    std::vector<Poly> ring_basis = curve.ring()->basis_below_conductor();

    // rows: one residue condition per O_P basis element; columns: p_0..p_{beta-2}
    const int cols = beta - 1;
    MatQ m(static_cast<Eigen::Index>(ring_basis.size()), cols);
    m.setConstant(Rational(0));
    for (std::size_t r = 0; r < ring_basis.size(); ++r) {
        for (int k = 0; k < cols; ++k) {
            m(static_cast<Eigen::Index>(r), k) = ring_basis[r].coeff(beta - 1 - k);
        }
    }
    MatQ ker = kernel_basis(m);
    if (ker.cols() != g)
        throw Error(ErrorKind::InternalDimensionMismatch,
                    "canonical kernel has dimension " + std::to_string(ker.cols()) +
                        ", expected genus " + std::to_string(g));

    // valuation-echelon normal form
    MatQ rows(ker.cols(), cols);
    for (Eigen::Index i = 0; i < ker.cols(); ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) rows(i, j) = ker(j, i);
    }
    reduced_row_echelon(rows);

    CanonicalModel model;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        std::vector<Rational> coeffs;
        for (Eigen::Index j = 0; j < cols; ++j) coeffs.push_back(rows(i, j));
        Poly p{std::vector<Rational>(coeffs)};
        if (p.is_zero())
            throw Error(ErrorKind::InternalDimensionMismatch, "zero row in canonical basis");
        model.coords.push_back(std::move(p));
    }

    KSet k = kset(curve.semigroup());
    if (model.valuations() != k.below_conductor)
        throw Error(ErrorKind::InternalDimensionMismatch,
                    "canonical model valuations do not enumerate K°");
    if (model.coords.back() != Poly::monomial(Rational(1), beta - 2))
        throw Error(ErrorKind::InternalDimensionMismatch, "top coordinate is not t^(beta-2)");
    return model;
}

bool models_equivalent(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return false;
    int deg = -1;
    for (const auto& p : a) deg = std::max(deg, p.degree());
    for (const auto& p : b) deg = std::max(deg, p.degree());
    if (deg < 0) return true;
    const Eigen::Index cols = deg + 1;
    MatQ ma(static_cast<Eigen::Index>(a.size()), cols), mb(static_cast<Eigen::Index>(b.size()), cols);
    ma.setConstant(Rational(0));
    mb.setConstant(Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int k = 0; k <= a[i].degree(); ++k) ma(static_cast<Eigen::Index>(i), k) = a[i].coeff(k);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (int k = 0; k <= b[i].degree(); ++k) mb(static_cast<Eigen::Index>(i), k) = b[i].coeff(k);
    }
    return same_row_space(std::move(ma), std::move(mb));
}

std::vector<std::vector<Rational>> sample_points(const std::vector<Poly>& coords,
                                                 const std::vector<Rational>& t_values) {
    std::vector<std::vector<Rational>> out;
    for (const auto& t : t_values) {
        std::vector<Rational> raw;
        for (const auto& c : coords) raw.push_back(c.eval(t));
        if (!raw.empty() && !raw[0].is_zero()) {
            Rational inv = raw[0].inverse();
            for (auto& v : raw) v *= inv;
        }
        out.push_back(std::move(raw));
    }
    return out;
}

}  // namespace unicusp
