#pragma once

#include <map>
#include <string>
#include <vector>

#include "unicusp/rational.hpp"

namespace unicusp {

// Polynomial expression in named slot variables with rational constants,
// e.g. "2*a4", "a2 - a4^2", "(a1-a4)^2 + 2*a5". Used by the case templates.
class CoeffExpr {
public:
    CoeffExpr() = default;
    static CoeffExpr parse(const std::string& text, const std::vector<std::string>& var_names);
    static CoeffExpr constant(const Rational& r);
    static CoeffExpr variable(int index, int nvars);

    Rational eval(const std::vector<Rational>& values) const;
    bool is_zero() const { return terms_.empty(); }
    std::string to_string(const std::vector<std::string>& var_names) const;

    friend CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b);
    friend CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b);
    friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b);
    CoeffExpr pow(int e) const;

private:
    // exponent tuple -> coefficient
    std::map<std::vector<int>, Rational> terms_;
    int nvars_ = 0;
    void prune();
};

}  // namespace unicusp
