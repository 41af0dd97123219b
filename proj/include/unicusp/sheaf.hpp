#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unicusp/curve.hpp"
#include "unicusp/rationalfunc.hpp"

namespace unicusp {

// Rank-1 torsion-free subsheaf O ⊆ F ⊆ K given by a finite generator list
// of rational functions; generators are normalized to valuation >= 0 at the
// cusp (scaling the whole list by the inverse of a minimal-valuation
// generator when needed; the unit is recorded), with 1 as first generator.
class FractionalSheaf {
public:
    static FractionalSheaf make(std::vector<RationalFunc> gens);

    const std::vector<RationalFunc>& generators() const { return gens_; }
    const Poly& common_denominator() const { return h_; }
    const std::vector<Poly>& numerators() const { return nums_; }
    const Poly& numerator_gcd() const { return gcd_; }
    const std::optional<RationalFunc>& normalization_unit() const { return unit_; }

private:
    std::vector<RationalFunc> gens_;
    Poly h_;                  // common denominator H, H(0) = 1
    std::vector<Poly> nums_;  // N_j with g_j = N_j / H
    Poly gcd_;                // gcd of all N_j (H included via the generator 1)
    std::optional<RationalFunc> unit_;
};

// Thm-style two-generator pencil O<1, t^r f/h> with r > 0, gcd(f,h) = 1,
// f(0) != 0 != h(0).
FractionalSheaf pencil(int r, const Poly& f, const Poly& h);

// Total degree over C \ {P}: deg H - deg gcd(N_j) + max(0, max_j deg N_j - deg H).
// For two-generator pencils this equals deg(h) + max{0, r + deg f - deg h}.
int degree_away(const FractionalSheaf& sheaf);

// The O_P-module generated by the sheaf generators at the curve's cusp.
LocalModule module_at_cusp(const FractionalSheaf& sheaf, const ParamCurve& curve);

// degree_away + #D at the cusp.
int degree(const FractionalSheaf& sheaf, const ParamCurve& curve);

struct GlobalSections {
    int dimension = 0;
    std::vector<RationalFunc> basis;
};

// Exact global sections: x = M * gcd(N_j) / H with M polynomial of degree
// bounded by the pole order at infinity, subject to x ∈ F_P.
GlobalSections h0(const FractionalSheaf& sheaf, const ParamCurve& curve);

// Base-point-free degree-alpha pencil O<1, t^alpha/h> of the one-block
// family, h built by the stated b_i recursion from the a-coefficients.
FractionalSheaf bpf_alpha_pencil(int alpha, int ell, int m, const std::vector<Rational>& a);

struct PencilCertificate {
    FractionalSheaf sheaf;
    int degree = 0;
    int degree_away = 0;
    std::vector<int> d_set;
    int h0 = 0;
    bool free_at_cusp = false;
    bool has_base_point() const { return !free_at_cusp; }
};

// Checks degree == claimed, h0 == 2 and freeness against the base-point
// claim; throws CertificateError naming the violated check otherwise.
PencilCertificate certify(const ParamCurve& curve, const FractionalSheaf& sheaf, int claimed_degree,
                          bool needs_base_point);

}  // namespace unicusp
