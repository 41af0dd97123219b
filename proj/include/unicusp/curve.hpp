#pragma once

#include <memory>
#include <vector>

#include "unicusp/localring.hpp"
#include "unicusp/poly.hpp"
#include "unicusp/semigroup.hpp"

namespace unicusp {

// Parametrized unicuspidal rational curve (f_0(t) : ... : f_N(t)), with
// f_0(0) = 1 after normalization, positive pairwise-distinct valuations on
// the other coordinates, and coordinate valuations generating a numerical
// semigroup. The cusp sits at t = 0, the point Q at infinity.
class ParamCurve {
public:
    static ParamCurve validate(std::vector<Poly> coords, int order_multiple = 3);

    const std::vector<Poly>& coords() const { return coords_; }
    const NumericalSemigroup& semigroup() const { return ring_->semigroup(); }
    int genus() const { return semigroup().genus(); }
    int beta() const { return ring_->beta(); }
    int alpha() const { return semigroup().multiplicity(); }
    const std::shared_ptr<const CuspRing>& ring() const { return ring_; }

private:
    std::vector<Poly> coords_;
    std::shared_ptr<const CuspRing> ring_;
};

// Canonical model coordinates: g polynomials of degree <= beta-2 in reduced
// valuation-echelon form, valuations enumerating K°, last coordinate t^(beta-2).
struct CanonicalModel {
    std::vector<Poly> coords;
    int genus() const { return static_cast<int>(coords.size()); }
    std::vector<int> valuations() const;
};

// H^0(omega) embedded with v(lambda) = -beta: the space of polynomials p of
// degree <= beta-2 with [t^(beta-1)](p * u) = 0 for every basis element u of
// O_P (residue pairing annihilator), output as the valuation-echelon basis.
CanonicalModel canonical_model(const ParamCurve& curve);

// k-span equality of two coordinate lists of the same length; sufficient for
// equality of the induced projective maps here (unit coordinate, gcd 1).
bool models_equivalent(const std::vector<Poly>& a, const std::vector<Poly>& b);

// Affine-chart samples (w = f_0): at each t, (1, f_1/f_0, ..., f_N/f_0);
// if f_0(t) = 0 the raw projective tuple is returned instead.
std::vector<std::vector<Rational>> sample_points(const std::vector<Poly>& coords,
                                                 const std::vector<Rational>& t_values);

}  // namespace unicusp
