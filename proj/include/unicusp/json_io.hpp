#pragma once

#include <string>
#include <vector>

#include "unicusp/classification.hpp"
#include "unicusp/curve.hpp"
#include "unicusp/family.hpp"
#include "unicusp/ideal.hpp"
#include "unicusp/sheaf.hpp"

namespace unicusp {

// Curve JSON: {"coords": [["1","2/3",...], ...]} with rationals as "p/q"
// strings by ascending degree.
std::vector<Poly> parse_curve_json(const std::string& text);
std::string curve_to_json(const std::vector<Poly>& coords);

// Sheaf JSON: {"gens": [{"num": [...], "den": [...]}]}.
std::vector<RationalFunc> parse_sheaf_json(const std::string& text);
std::string sheaf_to_json(const FractionalSheaf& sheaf);

// Family JSON: {"family": "one_block"|"two_block", "alpha":..., "ell":...,
// "m":..., "a": [...], "branch": 1|2}.
struct FamilyInput {
    bool two_block = false;
    OneBlockParams one;
    TwoBlockParams two;
};
FamilyInput parse_family_json(const std::string& text);

// Point-sample CSV with header "t,x0,...,xN".
std::string points_to_csv(const std::vector<Rational>& ts,
                          const std::vector<std::vector<Rational>>& points);

// Report serializers (stable field order; byte-identical for fixed inputs).
std::string report_to_json(const SummaryReport& summary);
std::string report_to_markdown(const SummaryReport& summary);
std::string certificate_to_json(const PencilCertificate& cert);

std::string read_file(const std::string& path);

}  // namespace unicusp
