#include "unicusp/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "unicusp/error.hpp"

namespace unicusp {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json must_parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
    }
}

Poly poly_from_strings(const ordered_json& arr) {
    std::vector<Rational> coeffs;
    for (const auto& c : arr) {
        if (c.is_string()) {
            coeffs.push_back(Rational::from_string(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coeffs.push_back(Rational(c.get<long long>()));
        } else {
            throw Error(ErrorKind::InvalidInput, "coefficients must be \"p/q\" strings or integers");
        }
    }
    return Poly(std::move(coeffs));
}

ordered_json poly_to_strings(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).to_string());
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

}  // namespace

std::vector<Poly> parse_curve_json(const std::string& text) {
    ordered_json j = must_parse(text);
    if (!j.contains("coords") || !j["coords"].is_array())
        throw Error(ErrorKind::InvalidInput, "curve JSON needs a \"coords\" array");
    std::vector<Poly> coords;
    for (const auto& c : j["coords"]) coords.push_back(poly_from_strings(c));
    return coords;
}

std::string curve_to_json(const std::vector<Poly>& coords) {
    ordered_json j;
    j["coords"] = ordered_json::array();
    for (const auto& c : coords) j["coords"].push_back(poly_to_strings(c));
    return j.dump(2);
}

std::vector<RationalFunc> parse_sheaf_json(const std::string& text) {
    ordered_json j = must_parse(text);
    if (!j.contains("gens") || !j["gens"].is_array())
        throw Error(ErrorKind::InvalidInput, "sheaf JSON needs a \"gens\" array");
    std::vector<RationalFunc> gens;
    for (const auto& g : j["gens"]) {
        Poly num = poly_from_strings(g.at("num"));
        Poly den = g.contains("den") ? poly_from_strings(g.at("den")) : Poly::constant(Rational(1));
        gens.emplace_back(num, den);
    }
    return gens;
}

std::string sheaf_to_json(const FractionalSheaf& sheaf) {
    ordered_json j;
    j["gens"] = ordered_json::array();
    for (const auto& g : sheaf.generators()) {
        ordered_json jg;
        jg["num"] = poly_to_strings(g.num());
        jg["den"] = poly_to_strings(g.den());
        j["gens"].push_back(jg);
    }
    j["common_denominator"] = poly_to_strings(sheaf.common_denominator());
    j["numerator_gcd"] = poly_to_strings(sheaf.numerator_gcd());
    return j.dump(2);
}

FamilyInput parse_family_json(const std::string& text) {
    ordered_json j = must_parse(text);
    std::string kind = j.at("family").get<std::string>();
    std::vector<Rational> a;
    if (j.contains("a")) {
        for (const auto& c : j["a"]) {
            if (c.is_string()) {
                a.push_back(Rational::from_string(c.get<std::string>()));
            } else {
                a.push_back(Rational(c.get<long long>()));
            }
        }
    }
    FamilyInput in;
    if (kind == "one_block") {
        in.two_block = false;
        in.one = OneBlockParams{j.at("alpha").get<int>(), j.at("ell").get<int>(),
                                j.at("m").get<int>(), a};
    } else if (kind == "two_block") {
        in.two_block = true;
        in.two = TwoBlockParams{j.at("alpha").get<int>(), j.at("ell").get<int>(),
                                j.at("m").get<int>(), a,
                                j.contains("branch") ? j["branch"].get<int>() : 1};
    } else {
        throw Error(ErrorKind::InvalidInput, "family must be one_block or two_block");
    }
    return in;
}

std::string points_to_csv(const std::vector<Rational>& ts,
                          const std::vector<std::vector<Rational>>& points) {
    std::ostringstream out;
    std::size_t width = points.empty() ? 0 : points[0].size();
    out << "t";
    for (std::size_t i = 0; i < width; ++i) out << ",x" << i;
    out << "\n";
    for (std::size_t r = 0; r < points.size(); ++r) {
        out << ts[r].to_string();
        for (const auto& v : points[r]) out << "," << v.to_string();
        out << "\n";
    }
    return out.str();
}

namespace {

ordered_json sample_to_json(const SampleResult& s) {
    ordered_json j;
    j["alternative"] = s.alternative + 1;
    j["sample"] = s.sample;
    ordered_json vals = ordered_json::array();
    for (const auto& v : s.slot_values) vals.push_back(v.to_string());
    j["slot_values"] = vals;
    j["curve_valid"] = s.curve_valid;
    j["semigroup_ok"] = s.semigroup_ok;
    j["genus_ok"] = s.genus_ok;
    j["model_equivalent"] = s.model_equivalent;
    j["observed_db"] = s.observed_db;
    j["observed_df"] = s.observed_df;
    j["db_certificate_ok"] = s.db_cert_ok;
    j["df_certificate_ok"] = s.df_cert_ok;
    j["ideal_consistency_ok"] = s.ideal_consistency_ok;
    j["documented_conditional"] = s.documented_conditional;
    j["messages"] = s.messages;
    return j;
}

}  // namespace

std::string report_to_json(const SummaryReport& summary) {
    ordered_json j;
    j["seed"] = summary.seed;
    j["samples"] = summary.samples;
    j["cases_total"] = summary.cases_total;
    j["cases_passed"] = summary.cases_passed;
    j["cases_conditional"] = summary.cases_conditional;
    j["cases_failed"] = summary.cases_failed;
    j["cases"] = ordered_json::array();
    for (const auto& rep : summary.reports) {
        ordered_json jc;
        jc["case"] = rep.case_id;
        jc["curve_template"] = rep.curve_template;
        jc["model_template"] = rep.model_template;
        jc["expected_db"] = rep.expected_db;
        jc["expected_df"] = rep.expected_df;
        jc["status"] = !rep.passed          ? "FAIL"
                       : rep.conditional    ? "PASS_WITH_CONDITIONS"
                                            : "PASS";
        jc["discrepancies"] = rep.discrepancies;
        jc["samples"] = ordered_json::array();
        for (const auto& s : rep.results) jc["samples"].push_back(sample_to_json(s));
        j["cases"].push_back(jc);
    }
    return j.dump(2);
}

std::string report_to_markdown(const SummaryReport& summary) {
    std::ostringstream out;
    out << "# Classification table verification\n\n";
    out << "- seed: " << summary.seed << ", samples per case: " << summary.samples << "\n";
    out << "- cases: " << summary.cases_total << ", passed: " << summary.cases_passed
        << " (of which conditional: " << summary.cases_conditional
        << "), failed: " << summary.cases_failed << "\n\n";
    out << "| case | C and C' | d_b | d_f | status | notes |\n";
    out << "|------|----------|-----|-----|--------|-------|\n";
    for (const auto& rep : summary.reports) {
        std::string status = !rep.passed          ? "FAIL"
                             : rep.conditional    ? "PASS_WITH_CONDITIONS"
                                                  : "PASS";
        std::string notes;
        for (const auto& s : rep.results) {
            for (const auto& m : s.messages) {
                if (s.documented_conditional || !rep.passed) {
                    if (!notes.empty()) notes += "; ";
                    notes += m;
                }
            }
            if (!notes.empty()) break;  // one representative note per case
        }
        out << "| (" << rep.case_id << ") | " << rep.curve_template << "<br>"
            << rep.model_template << " | " << rep.expected_db << " | " << rep.expected_df << " | "
            << status << " | " << notes << " |\n";
    }
    return out.str();
}

std::string certificate_to_json(const PencilCertificate& cert) {
    ordered_json j;
    j["degree"] = cert.degree;
    j["degree_away"] = cert.degree_away;
    j["d_set"] = cert.d_set;
    j["h0"] = cert.h0;
    j["free_at_cusp"] = cert.free_at_cusp;
    ordered_json gens = ordered_json::array();
    for (const auto& g : cert.sheaf.generators()) {
        ordered_json jg;
        jg["num"] = poly_to_strings(g.num());
        jg["den"] = poly_to_strings(g.den());
        gens.push_back(jg);
    }
    j["gens"] = gens;
    if (cert.sheaf.normalization_unit()) {
        j["normalization_unit"] = cert.sheaf.normalization_unit()->to_string();
    }
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace unicusp
