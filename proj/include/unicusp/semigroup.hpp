#pragma once

#include <string>
#include <vector>

namespace unicusp {

// Numerical semigroup stored up to its conductor beta: membership table
// for [0, beta) plus the rule "everything >= beta is a member".
class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(const std::vector<int>& gens);
    // Explicit members below the conductor; validates additive closure,
    // 0 membership and minimality of the conductor.
    static NumericalSemigroup from_members(int conductor, const std::vector<int>& members_below);
    // Accepts "3,7,8" generator lists and "{0,3,6->}" explicit form.
    static NumericalSemigroup parse(const std::string& text);

    bool contains(int n) const;
    int conductor() const { return conductor_; }           // beta
    int multiplicity() const;                              // alpha
    int genus() const;                                     // number of gaps
    std::vector<int> gaps() const;
    std::vector<int> members_below_conductor() const;
    const std::vector<int>& generators() const { return generators_; }  // minimal generators

    bool operator==(const NumericalSemigroup& o) const {
        return conductor_ == o.conductor_ && member_ == o.member_;
    }

    std::string to_string() const;

private:
    int conductor_ = 0;
    std::vector<bool> member_;  // indices [0, conductor_)
    std::vector<int> generators_;
    void compute_minimal_generators();
};

struct SemigroupInvariants {
    int alpha = 0;
    int beta = 0;
    int genus = 0;
    std::vector<int> gaps;
    long long gap_sum = 0;   // the paper's w(S) = sum of gaps
    long long weight = 0;    // classical weight: sum (gap_i - i)
};

SemigroupInvariants invariants(const NumericalSemigroup& s);

// K = {a : (beta-1) - a not in S}, stored by its part below the conductor.
struct KSet {
    std::vector<int> below_conductor;  // K°, sorted ascending
    bool contains(int a, int conductor) const;
};

KSet kset(const NumericalSemigroup& s);

// #(K \ S) = #(K° \ S°)
int eta(const NumericalSemigroup& s);

// min { n >= 1 : n-fold sums of K generate <K> }
int sigma(const NumericalSemigroup& s);

// (S-hat = semigroup generated by K, its genus g')
std::pair<NumericalSemigroup, int> shat(const NumericalSemigroup& s);

// alpha == beta, i.e. S = {0} ∪ [g+1, ∞)
bool is_nearly_normal(const NumericalSemigroup& s);

bool is_gorenstein(const NumericalSemigroup& s);  // eta == 0

}  // namespace unicusp
