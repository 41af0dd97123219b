#pragma once

#include <Eigen/Core>
#include <vector>

#include "unicusp/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<unicusp::Rational> {
    using Real = unicusp::Rational;
    using NonInteger = unicusp::Rational;
    using Nested = unicusp::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
    static inline Real epsilon() { return unicusp::Rational(0); }
    static inline Real dummy_precision() { return unicusp::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace unicusp {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// In-place reduced row echelon form with deterministic first-nonzero
// pivoting (columns scanned left to right, pivot rows in order). Returns
// the pivot column indices; rows below the rank are zero.
std::vector<Eigen::Index> reduced_row_echelon(MatQ& m);

inline Eigen::Index rank_of(MatQ m) { return static_cast<Eigen::Index>(reduced_row_echelon(m).size()); }

// Columns span the right kernel {x : m x = 0}; basis is the canonical one
// obtained from the RREF with one free column per vector, echelonized so
// that vector k has a 1 at its free column and 0 at the other free columns.
MatQ kernel_basis(const MatQ& m);

// Exact span comparison of the row spaces of two matrices.
bool same_row_space(MatQ a, MatQ b);

}  // namespace unicusp
