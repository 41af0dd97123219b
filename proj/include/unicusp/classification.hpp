#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicusp/coeffexpr.hpp"
#include "unicusp/curve.hpp"
#include "unicusp/family.hpp"

namespace unicusp {

// Coordinate template: [exponent, coefficient-expression] terms.
struct TemplatePoly {
    std::vector<std::pair<int, CoeffExpr>> terms;
    Poly instantiate(const std::vector<Rational>& slot_values) const;
    std::string to_string(const std::vector<std::string>& slot_names) const;
};

std::string template_tuple_string(const std::vector<TemplatePoly>& coords,
                                  const std::vector<std::string>& slot_names);

struct FamilySpec {
    std::string kind;  // "one_block" | "two_block"
    int alpha = 0;
    int ell = 0;
    int m = 0;
    int branch = 1;
    std::vector<CoeffExpr> a;
};

struct CaseAlternative {
    std::vector<TemplatePoly> curve;
    std::vector<TemplatePoly> model;
    FamilySpec family;
};

// One row of the genus <= 6 classification table.
struct CaseRecord {
    std::string id;
    int genus = 0;
    std::vector<std::string> slots;
    NumericalSemigroup semigroup;
    int expected_db = 0;
    int expected_df = 0;
    std::optional<std::string> gonality_conditional;
    // Slot solved per sample so the instance lies on the row's d_f stratum
    // (rows whose degree-alpha cover exists only on an implicit locus).
    std::optional<std::string> df_solve_slot;
    std::optional<std::string> notes;
    std::vector<CaseAlternative> alternatives;
};

// Parses the embedded dataset (or an override file's contents); validates
// record count, genus vs. gap count and expected_df = alpha.
std::vector<CaseRecord> load_cases();
std::vector<CaseRecord> load_cases_from_text(const std::string& json_text);
const std::string& embedded_dataset_text();

struct SampleResult {
    int alternative = 0;
    int sample = 0;
    std::vector<Rational> slot_values;
    bool curve_valid = false;
    bool semigroup_ok = false;
    bool genus_ok = false;
    bool model_equivalent = false;
    int observed_db = -1;
    int observed_df = -1;
    bool db_cert_ok = false;
    bool df_cert_ok = false;
    bool ideal_consistency_ok = false;
    bool documented_conditional = false;
    std::vector<std::string> messages;
    bool hard_failure() const;
};

struct VerificationReport {
    std::string case_id;
    std::uint64_t seed = 0;
    int samples = 0;
    int expected_db = 0;
    int expected_df = 0;
    std::string curve_template;  // pretty form of the first alternative
    std::string model_template;
    std::vector<SampleResult> results;
    std::vector<std::string> discrepancies;
    bool passed = false;       // no hard failures
    bool conditional = false;  // at least one documented conditional flag
};

VerificationReport verify_case(const CaseRecord& record, int samples, std::uint64_t seed);

struct SummaryReport {
    std::uint64_t seed = 0;
    int samples = 0;
    int cases_total = 0;
    int cases_passed = 0;
    int cases_conditional = 0;
    int cases_failed = 0;
    std::vector<VerificationReport> reports;
    bool all_passed() const { return cases_failed == 0; }
};

SummaryReport verify_all(const std::vector<CaseRecord>& records, int samples, std::uint64_t seed);

// Deterministic 64-bit stream (splitmix64) for reproducible sampling.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    // Nonzero integer in [-1000, 1000], as a rational.
    Rational next_coefficient();

private:
    std::uint64_t state_;
};

}  // namespace unicusp
