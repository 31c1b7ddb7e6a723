#include "linalg.hpp"

#include "errors.hpp"

namespace mirsym {

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rational inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b, bool* unique) {
    if (b.size() != a.rows) throw InvalidArgument("solve: dimension mismatch");
    Matrix aug(a.rows, a.cols + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // 0 = 1 row
    if (unique) *unique = pivots.size() == a.cols;
    std::vector<Rational> x(a.cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

std::vector<std::vector<Rational>> kernel_basis(Matrix a) {
    size_t cols = a.cols;
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mirsym
