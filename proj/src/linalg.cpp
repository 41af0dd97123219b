#include "unicusp/linalg.hpp"

namespace unicusp {

std::vector<Eigen::Index> reduced_row_echelon(MatQ& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        Rational inv = m(r, c).inverse();
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

MatQ kernel_basis(const MatQ& m) {
    MatQ e = m;
    std::vector<Eigen::Index> pivots = reduced_row_echelon(e);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    const Eigen::Index dim = cols - static_cast<Eigen::Index>(pivots.size());
    MatQ k(cols, dim);
    k.setConstant(Rational(0));
    Eigen::Index v = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        k(free_col, v) = Rational(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            k(pivots[pr], v) = -e(static_cast<Eigen::Index>(pr), free_col);
        }
        ++v;
    }
    return k;
}

bool same_row_space(MatQ a, MatQ b) {
    if (a.cols() != b.cols()) return false;
    std::vector<Eigen::Index> pa = reduced_row_echelon(a);
    std::vector<Eigen::Index> pb = reduced_row_echelon(b);
    if (pa != pb) return false;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(static_cast<Eigen::Index>(i), j) != b(static_cast<Eigen::Index>(i), j))
                return false;
        }
    }
    return true;
}

}  // namespace unicusp
