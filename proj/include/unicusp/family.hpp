#pragma once

#include <optional>
#include <vector>

#include "unicusp/curve.hpp"
#include "unicusp/sheaf.hpp"

namespace unicusp {

// One-block family: semigroup S* = {0, alpha, ..., alpha+ell-1, alpha+ell+m, ->},
// coefficient list a_1..a_{ell*m}.
struct OneBlockParams {
    int alpha = 0;
    int ell = 0;
    int m = 0;
    std::vector<Rational> a;

    NumericalSemigroup star_semigroup() const;
    void check() const;  // throws InvalidBlockParams
};

// Two-block family: S* = {0, alpha, alpha+m+1, ..., alpha+m+ell-1, alpha+m+ell+1, ->}
// with a single first block; branch selects between the two stated
// (F_0, F_alpha) alternatives.
struct TwoBlockParams {
    int alpha = 0;
    int ell = 0;
    int m = 0;
    std::vector<Rational> a;
    int branch = 1;

    int u() const { return std::max(ell, m + 1); }
    int v() const { return std::min(ell - 1, m); }
    NumericalSemigroup star_semigroup() const;
    void check() const;
};

ParamCurve build_one_block(const OneBlockParams& p);
ParamCurve build_two_block(const TwoBlockParams& p);

// The two parametrizing polynomials of Eq-(31) form (F_0 and F_alpha).
std::pair<Poly, Poly> two_block_head(const TwoBlockParams& p);

// Normal-form coefficients b_{i,j} (1 <= i <= ell, 1 <= j <= m) of the local
// ring basis built from the a-coefficients, and the inverse conversion.
std::vector<std::vector<Rational>> a_to_b(const OneBlockParams& p);
std::vector<Rational> b_to_a(const std::vector<std::vector<Rational>>& b, int alpha, int ell, int m);

struct GonalityClassification {
    int d_b = 0;  // smallest degree of a base-point pencil (per the family criteria)
    int d_f = 0;  // smallest degree of a base-point-free pencil (= alpha)
    PencilCertificate base_point_certificate;
    PencilCertificate free_certificate;
    bool criterion_vanishing = false;  // m = 2 block-coefficient criterion value
};

// d_b = 3 for m = 1 or ell = 1 (or m = 2 with a_{ell+i} = 0, 2 <= i <= ell),
// else 4; d_f = alpha. Certificates verified against the built curve.
GonalityClassification classify_one_block(const OneBlockParams& p);

// d_b = 3 iff S* = {0, alpha, alpha+2, alpha+4, ->} (m = 1, ell = 2), else 4;
// d_f = alpha.
GonalityClassification classify_two_block(const TwoBlockParams& p);

// Classification against an explicitly given curve with the same semigroup
// (used by the table harness, whose templates may differ from the builders'
// output in conductor-tail coordinates).
GonalityClassification classify_one_block_on(const OneBlockParams& p, const ParamCurve& curve);
GonalityClassification classify_two_block_on(const TwoBlockParams& p, const ParamCurve& curve);

// Closed-form canonical models (validated against canonical_model()).
std::vector<Poly> closed_form_canonical(const OneBlockParams& p);
std::vector<Poly> closed_form_canonical(const TwoBlockParams& p);

// Degree-alpha base-point-free pencil for a two-block curve: t^alpha/h with
// h solved coefficient-by-coefficient so that t^alpha/h ∈ O_P.
FractionalSheaf two_block_free_pencil(const ParamCurve& curve);

// Same search, reporting the blocking gap position and residual instead of
// throwing; nullopt when the pencil is constructible. The residual is an
// exact obstruction: it vanishes iff a degree-alpha cover of this shape
// exists (used by the table harness to solve onto a row's d_f stratum).
std::optional<std::pair<int, Rational>> free_pencil_obstruction(const ParamCurve& curve);

// Degree-3 base-point pencil O<1, t^2/h> for S* = {0, alpha, alpha+2, alpha+4}.
FractionalSheaf two_block_trigonal_pencil(const ParamCurve& curve);

// Projects sampled two-block coefficients onto the stratum where the stated
// closed-form canonical model is valid (h_0 = F_0 and h_alpha = F_alpha are
// honest global sections). For m = 1 every coefficient choice already lies
// on the stratum; for m >= 2 head coefficients are adjusted by exact affine
// solves, mirroring the case selection deferred to the theorem's supplement.
// Throws UnsupportedFamily when the projection does not resolve.
TwoBlockParams two_block_model_stratum(const TwoBlockParams& p);

}  // namespace unicusp
