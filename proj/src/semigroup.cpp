#include "unicusp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "unicusp/error.hpp"

namespace unicusp {

namespace {

// Additive closure of `gens` as a membership table on [0, bound].
std::vector<bool> closure_table(const std::vector<int>& gens, int bound) {
    std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
    in[0] = true;
    for (int i = 0; i <= bound; ++i) {
        if (!in[static_cast<std::size_t>(i)]) continue;
        for (int g : gens) {
            if (i + g <= bound) in[static_cast<std::size_t>(i + g)] = true;
        }
    }
    return in;
}

// Conductor of a closure table, or -1 when no run of `alpha` consecutive
// members fits under the bound.
int conductor_of_table(const std::vector<bool>& in, int alpha) {
    int run = 0;
    for (int i = 0; i < static_cast<int>(in.size()); ++i) {
        run = in[static_cast<std::size_t>(i)] ? run + 1 : 0;
        if (run == alpha) {
            int start = i - alpha + 1;
            // a run of alpha consecutive members pins everything beyond it;
            // the conductor is one past the last gap before the run
            int c = start;
            while (c > 0 && in[static_cast<std::size_t>(c - 1)]) --c;
            return c;
        }
    }
    return -1;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& gens) {
    if (gens.empty()) throw Error(ErrorKind::InvalidInput, "empty generator list");
    for (int g : gens) {
        if (g <= 0) throw Error(ErrorKind::InvalidInput, "generators must be positive");
    }
    int g = 0;
    for (int v : gens) g = std::gcd(g, v);
    if (g != 1) throw Error(ErrorKind::NotCofinite, "gcd of generators is " + std::to_string(g));

    int alpha = *std::min_element(gens.begin(), gens.end());
    int bound = 2 * (*std::max_element(gens.begin(), gens.end())) + 2;
    while (true) {
        std::vector<bool> table = closure_table(gens, bound);
        int c = conductor_of_table(table, alpha);
        if (c >= 0) {
            NumericalSemigroup s;
            s.conductor_ = c;
            s.member_.assign(table.begin(), table.begin() + c);
            s.compute_minimal_generators();
            return s;
        }
        bound *= 2;
    }
}

NumericalSemigroup NumericalSemigroup::from_members(int conductor, const std::vector<int>& members_below) {
    if (conductor < 0) throw Error(ErrorKind::InvalidInput, "negative conductor");
    NumericalSemigroup s;
    s.conductor_ = conductor;
    s.member_.assign(static_cast<std::size_t>(conductor), false);
    for (int m : members_below) {
        if (m < 0 || m >= conductor)
            throw Error(ErrorKind::InvalidInput, "member outside [0, conductor)");
        s.member_[static_cast<std::size_t>(m)] = true;
    }
    if (conductor > 0 && !s.member_[0])
        throw Error(ErrorKind::NotASemigroup, "0 must be a member");
    if (conductor > 0 && s.member_[static_cast<std::size_t>(conductor) - 1])
        throw Error(ErrorKind::NotASemigroup, "conductor - 1 must be a gap");
    for (int a = 0; a < conductor; ++a) {
        if (!s.member_[static_cast<std::size_t>(a)]) continue;
        for (int b = a; b < conductor; ++b) {
            if (!s.member_[static_cast<std::size_t>(b)]) continue;
            if (a + b < conductor && !s.member_[static_cast<std::size_t>(a + b)])
                throw Error(ErrorKind::NotASemigroup,
                            std::to_string(a) + " + " + std::to_string(b) + " is a gap");
        }
    }
    s.compute_minimal_generators();
    return s;
}

NumericalSemigroup NumericalSemigroup::parse(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (!t.empty() && t.front() == '{') {
        // "{0,a,b,...,c->}" explicit form: last listed value is the conductor
        if (t.size() < 4 || t.substr(t.size() - 3) != "->}")
            throw Error(ErrorKind::InvalidInput, "expected {0,...,c->} form");
        std::string inner = t.substr(1, t.size() - 4);
        std::vector<int> vals;
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            vals.push_back(std::stoi(item));
        }
        if (vals.empty()) throw Error(ErrorKind::InvalidInput, "empty member list");
        int conductor = vals.back();
        vals.pop_back();
        return from_members(conductor, vals);
    }
    std::vector<int> gens;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        gens.push_back(std::stoi(item));
    }
    return from_generators(gens);
}

bool NumericalSemigroup::contains(int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)];
}

int NumericalSemigroup::multiplicity() const {
    for (int n = 1; n < conductor_; ++n) {
        if (member_[static_cast<std::size_t>(n)]) return n;
    }
    return conductor_ == 0 ? 1 : conductor_;
}

int NumericalSemigroup::genus() const {
    int g = 0;
    for (int n = 1; n < conductor_; ++n) {
        if (!member_[static_cast<std::size_t>(n)]) ++g;
    }
    return g;
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> g;
    for (int n = 1; n < conductor_; ++n) {
        if (!member_[static_cast<std::size_t>(n)]) g.push_back(n);
    }
    return g;
}

std::vector<int> NumericalSemigroup::members_below_conductor() const {
    std::vector<int> m;
    for (int n = 0; n < conductor_; ++n) {
        if (member_[static_cast<std::size_t>(n)]) m.push_back(n);
    }
    return m;
}

void NumericalSemigroup::compute_minimal_generators() {
    generators_.clear();
    // candidates: members below beta + alpha; n is a generator iff it is not
    // a sum of two smaller nonzero members
    int alpha = multiplicity();
    int top = conductor_ + alpha;
    for (int n = 1; n < top; ++n) {
        if (!contains(n)) continue;
        bool decomposable = false;
        for (int a = 1; a <= n / 2 && !decomposable; ++a) {
            if (contains(a) && contains(n - a) && a != 0 && n - a != 0) decomposable = true;
        }
        if (!decomposable) generators_.push_back(n);
    }
}

std::string NumericalSemigroup::to_string() const {
    std::string out = "{";
    for (int m : members_below_conductor()) out += std::to_string(m) + ",";
    out += std::to_string(conductor_) + "->}";
    return out;
}

SemigroupInvariants invariants(const NumericalSemigroup& s) {
    SemigroupInvariants inv;
    inv.alpha = s.multiplicity();
    inv.beta = s.conductor();
    inv.gaps = s.gaps();
    inv.genus = static_cast<int>(inv.gaps.size());
    for (std::size_t i = 0; i < inv.gaps.size(); ++i) {
        inv.gap_sum += inv.gaps[i];
        inv.weight += inv.gaps[i] - static_cast<long long>(i) - 1;
    }
    return inv;
}

bool KSet::contains(int a, int conductor) const {
    if (a >= conductor) return true;
    if (a < 0) return false;
    return std::binary_search(below_conductor.begin(), below_conductor.end(), a);
}

KSet kset(const NumericalSemigroup& s) {
    KSet k;
    int beta = s.conductor();
    for (int a = 0; a < beta; ++a) {
        if (!s.contains(beta - 1 - a)) k.below_conductor.push_back(a);
    }
    if (static_cast<int>(k.below_conductor.size()) != s.genus())
        throw Error(ErrorKind::InternalDimensionMismatch, "#K° != genus");
    return k;
}

int eta(const NumericalSemigroup& s) {
    KSet k = kset(s);
    int count = 0;
    for (int a : k.below_conductor) {
        if (!s.contains(a)) ++count;
    }
    return count;
}

namespace {

// n-fold sums of K° ∪ [beta, bound], as a table on [0, bound].
std::vector<bool> k_sums(const std::vector<bool>& k_table, int n, int bound) {
    std::vector<bool> cur(static_cast<std::size_t>(bound) + 1, false);
    cur[0] = true;
    for (int rep = 0; rep < n; ++rep) {
        std::vector<bool> next(static_cast<std::size_t>(bound) + 1, false);
        for (int a = 0; a <= bound; ++a) {
            if (!cur[static_cast<std::size_t>(a)]) continue;
            for (int b = 0; a + b <= bound; ++b) {
                if (k_table[static_cast<std::size_t>(b)]) next[static_cast<std::size_t>(a + b)] = true;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::pair<NumericalSemigroup, int> shat(const NumericalSemigroup& s) {
    if (s.conductor() == 0) return {s, 0};
    KSet k = kset(s);
    std::vector<int> gens = k.below_conductor;
    gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
    gens.push_back(s.conductor());
    gens.push_back(s.conductor() + 1);
    NumericalSemigroup sh = NumericalSemigroup::from_generators(gens);
    return {sh, sh.genus()};
}

int sigma(const NumericalSemigroup& s) {
    int beta = s.conductor();
    if (beta == 0) return 1;
    int bound = 2 * beta + 2;
    KSet k = kset(s);
    std::vector<bool> k_table(static_cast<std::size_t>(bound) + 1, false);
    for (int a : k.below_conductor) k_table[static_cast<std::size_t>(a)] = true;
    for (int a = beta; a <= bound; ++a) k_table[static_cast<std::size_t>(a)] = true;

    NumericalSemigroup sh = shat(s).first;
    for (int n = 1; n <= beta + 1; ++n) {
        std::vector<bool> sums = k_sums(k_table, n, bound);
        bool equal = true;
        for (int a = 0; a < beta && equal; ++a) {
            bool lhs = sums[static_cast<std::size_t>(a)];
            // the generated semigroup <K> agrees with S-hat
            bool rhs = sh.contains(a);
            if (lhs != rhs) equal = false;
        }
        if (equal) return n;
    }
    throw Error(ErrorKind::InternalDimensionMismatch, "sigma did not stabilize");
}

bool is_nearly_normal(const NumericalSemigroup& s) {
    return s.multiplicity() == s.conductor();
}

bool is_gorenstein(const NumericalSemigroup& s) { return eta(s) == 0; }

}  // namespace unicusp
