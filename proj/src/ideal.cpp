#include "unicusp/ideal.hpp"

#include <algorithm>

#include "unicusp/error.hpp"
#include "unicusp/linalg.hpp"

namespace unicusp {

Poly Form::compose(const std::vector<Poly>& model_coords) const {
    Poly acc;
    for (std::size_t t = 0; t < exponents.size(); ++t) {
        if (coefficients[t].is_zero()) continue;
        Poly term = Poly::constant(coefficients[t]);
        for (std::size_t v = 0; v < exponents[t].size(); ++v) {
            for (int e = 0; e < exponents[t][v]; ++e) term = term * model_coords[v];
        }
        acc = acc + term;
    }
    return acc;
}

std::string Form::to_string(const std::vector<std::string>& vars) const {
    std::string out;
    for (std::size_t t = 0; t < exponents.size(); ++t) {
        if (coefficients[t].is_zero()) continue;
        std::string mono;
        for (std::size_t v = 0; v < exponents[t].size(); ++v) {
            if (exponents[t][v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[v];
            if (exponents[t][v] > 1) mono += "^" + std::to_string(exponents[t][v]);
        }
        std::string coeff = coefficients[t].to_string();
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else if (coeff == "-1") {
            term = "-" + mono;
        } else {
            term = coeff + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

long long dim_formula(int g, int n, int eta, int g_prime) {
    long long binom = 1;
    for (int k = 1; k <= n; ++k) binom = binom * (g - 1 + k) / k;
    return binom - static_cast<long long>(n) * (2 * g - 2 - eta) - 1 + g_prime;
}

std::vector<std::vector<int>> monomials(int g, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(g), 0);
    // descending lex within the fixed total degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == g - 1) {
            cur[static_cast<std::size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, n);
    return out;
}

IdealSlice in_basis(const CanonicalModel& model, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n >= 1 required");
    const int g = model.genus();
    std::vector<std::vector<int>> monos = monomials(g, n);

    int deg_bound = 0;
    for (const auto& p : model.coords) deg_bound = std::max(deg_bound, p.degree());
    deg_bound *= n;

    MatQ m(deg_bound + 1, static_cast<Eigen::Index>(monos.size()));
    m.setConstant(Rational(0));
    for (std::size_t c = 0; c < monos.size(); ++c) {
        Poly prod = Poly::constant(Rational(1));
        for (int v = 0; v < g; ++v) {
            for (int e = 0; e < monos[c][static_cast<std::size_t>(v)]; ++e)
                prod = prod * model.coords[static_cast<std::size_t>(v)];
        }
        for (int k = 0; k <= prod.degree(); ++k) m(k, static_cast<Eigen::Index>(c)) = prod.coeff(k);
    }
    MatQ ker = kernel_basis(m);

    // reduced echelon over the grlex-ordered coefficients
    MatQ rows(ker.cols(), static_cast<Eigen::Index>(monos.size()));
    for (Eigen::Index i = 0; i < ker.cols(); ++i) {
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(monos.size()); ++j) rows(i, j) = ker(j, i);
    }
    reduced_row_echelon(rows);

    IdealSlice slice;
    slice.n = n;
    slice.dimension = static_cast<int>(rows.rows());
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        Form f;
        f.n = n;
        f.exponents = monos;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(monos.size()); ++j)
            f.coefficients.push_back(rows(i, j));
        slice.basis.push_back(std::move(f));
    }
    return slice;
}

bool in_span(const IdealSlice& slice, const Form& form) {
    if (form.n != slice.n) return false;
    if (slice.basis.empty()) {
        for (const auto& c : form.coefficients) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
    const auto& monos = slice.basis[0].exponents;
    // align the form's terms with the slice's monomial order
    std::vector<Rational> vec(monos.size(), Rational(0));
    for (std::size_t t = 0; t < form.exponents.size(); ++t) {
        auto it = std::find(monos.begin(), monos.end(), form.exponents[t]);
        if (it == monos.end()) {
            if (!form.coefficients[t].is_zero()) return false;
            continue;
        }
        vec[static_cast<std::size_t>(it - monos.begin())] += form.coefficients[t];
    }
    // reduce against the echelon basis
    for (const auto& b : slice.basis) {
        // pivot = first nonzero coefficient of b
        std::size_t piv = 0;
        while (piv < b.coefficients.size() && b.coefficients[piv].is_zero()) ++piv;
        if (piv == b.coefficients.size()) continue;
        Rational factor = vec[piv];
        if (factor.is_zero()) continue;
        for (std::size_t j = piv; j < vec.size(); ++j) vec[j] -= factor * b.coefficients[j];
    }
    for (const auto& c : vec) {
        if (!c.is_zero()) return false;
    }
    return true;
}

ConsistencyReport check_consistency(const ParamCurve& curve, int n_max) {
    ConsistencyReport rep;
    const NumericalSemigroup& s = curve.semigroup();
    rep.sigma = sigma(s);
    rep.eta = eta(s);
    rep.g_prime = shat(s).second;
    const int g = curve.genus();
    CanonicalModel model = canonical_model(curve);
    for (int n = 1; n <= n_max; ++n) {
        ConsistencyEntry e;
        e.n = n;
        e.formula = dim_formula(g, n, rep.eta, rep.g_prime);
        e.direct = in_basis(model, n).dimension;
        // for eta > 0 the h^1 term vanishes at every n >= 1 (g' <= g - eta);
        // for Gorenstein inputs it needs n >= 2 and positive canonical degree
        e.asserted = n >= rep.sigma && (rep.eta > 0 || (n >= 2 && g >= 2));
        e.match = e.formula == e.direct;
        if (e.asserted && !e.match)
            throw Error(ErrorKind::ConsistencyFailure,
                        "n = " + std::to_string(n) + ": formula " + std::to_string(e.formula) +
                            " != direct " + std::to_string(e.direct));
        rep.entries.push_back(e);
    }
    return rep;
}

std::vector<std::string> variable_names(int g) {
    static const char* base[] = {"w", "x", "y", "z", "u", "v"};
    std::vector<std::string> names;
    for (int i = 0; i < g; ++i) {
        if (i < 6) {
            names.emplace_back(base[i]);
        } else {
            names.push_back("x" + std::to_string(i));
        }
    }
    return names;
}

}  // namespace unicusp
