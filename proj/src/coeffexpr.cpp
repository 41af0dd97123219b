#include "unicusp/coeffexpr.hpp"

#include <algorithm>
#include <cctype>

#include "unicusp/error.hpp"

namespace unicusp {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorKind::InvalidInput, "expression '" + s + "': " + why);
    }

    CoeffExpr parse_expr() {
        CoeffExpr acc = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    CoeffExpr parse_term() {
        CoeffExpr acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    CoeffExpr parse_factor() {
        CoeffExpr base = parse_base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected after '^'");
            return base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    CoeffExpr parse_base() {
        skip_ws();
        if (eat('-')) {
            return CoeffExpr::constant(Rational(-1)) * parse_factor();
        }
        if (eat('(')) {
            CoeffExpr e = parse_expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (pos >= s.size()) fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
                ++pos;
            }
            return CoeffExpr::constant(Rational::from_string(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) fail("unknown variable '" + name + "'");
            return CoeffExpr::variable(static_cast<int>(it - vars.begin()),
                                       static_cast<int>(vars.size()));
        }
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
};

}  // namespace

CoeffExpr CoeffExpr::constant(const Rational& r) {
    CoeffExpr e;
    if (!r.is_zero()) e.terms_[{}] = r;
    return e;
}

CoeffExpr CoeffExpr::variable(int index, int nvars) {
    CoeffExpr e;
    e.nvars_ = nvars;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(index)] = 1;
    e.terms_[exps] = Rational(1);
    return e;
}

void CoeffExpr::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

Rational CoeffExpr::eval(const std::vector<Rational>& values) const {
    Rational acc(0);
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (v >= values.size())
                throw Error(ErrorKind::InvalidInput, "missing value for expression variable");
            term *= values[v].pow(exps[v]);
        }
        acc += term;
    }
    return acc;
}

CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b) {
    CoeffExpr r = a;
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
        }
    }
    r.prune();
    return r;
}

CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b) {
    return a + CoeffExpr::constant(Rational(-1)) * b;
}

CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
    CoeffExpr r;
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(static_cast<std::size_t>(std::max(ea.size(), eb.size())), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    r.prune();
    return r;
}

CoeffExpr CoeffExpr::pow(int e) const {
    CoeffExpr acc = CoeffExpr::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

CoeffExpr CoeffExpr::parse(const std::string& text, const std::vector<std::string>& var_names) {
    Parser p{text, 0, var_names};
    CoeffExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string CoeffExpr::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        std::string mono;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v < var_names.size() ? var_names[v] : "v" + std::to_string(v);
            if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
        }
        std::string term = mono.empty() ? coeff.to_string()
                           : coeff.is_one() ? mono
                           : (-coeff).is_one() ? "-" + mono
                                               : coeff.to_string() + "*" + mono;
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace unicusp
