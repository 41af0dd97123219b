#pragma once

#include <string>
#include <vector>

#include "unicusp/curve.hpp"

namespace unicusp {

// Degree-n form in g variables: coefficients over the graded-lex monomial
// list (variables ordered by model coordinate index, earlier = bigger).
struct Form {
    int n = 0;
    std::vector<std::vector<int>> exponents;  // per term
    std::vector<Rational> coefficients;       // parallel to exponents

    // Substitute the model coordinates; the result is the zero polynomial
    // exactly when the form vanishes on the model curve.
    Poly compose(const std::vector<Poly>& model_coords) const;
    std::string to_string(const std::vector<std::string>& vars) const;
};

struct IdealSlice {
    int n = 0;
    int dimension = 0;
    std::vector<Form> basis;
};

// Thm-2.1-style count: binom(g+n-1, n) - n(2g-2-eta) - 1 + g'. Valid for
// n >= sigma (with eta > 0 or n >= 2 for the h^1 vanishing); callers guard.
long long dim_formula(int g, int n, int eta, int g_prime);

// All degree-n monomials in g variables, graded-lex (first variable most
// significant, descending).
std::vector<std::vector<int>> monomials(int g, int n);

// Exact kernel of the evaluation map Sym^n(model coords) -> k[t].
IdealSlice in_basis(const CanonicalModel& model, int n);

// Is a given form inside the computed slice's span?
bool in_span(const IdealSlice& slice, const Form& form);

struct ConsistencyEntry {
    int n = 0;
    long long formula = 0;
    long long direct = 0;
    bool asserted = false;  // n >= sigma and the h^1-vanishing guard holds
    bool match = false;
};

struct ConsistencyReport {
    int sigma = 0;
    int eta = 0;
    int g_prime = 0;
    std::vector<ConsistencyEntry> entries;
};

// Compares dim_formula with the direct kernel dimension for n = 1..n_max;
// asserts equality (ConsistencyFailure) only on asserted entries.
ConsistencyReport check_consistency(const ParamCurve& curve, int n_max);

// w, x, y, z, u, v then x6, x7, ... ; matches the g = 4 usage (w:x:y:z).
std::vector<std::string> variable_names(int g);

}  // namespace unicusp
