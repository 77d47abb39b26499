#include "ipsf/rational_linalg.hpp"

#include <cstddef>

#include "ipsf/errors.hpp"

namespace ipsf::detail {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = m[r][c];
        for (std::size_t jc = c; jc < cols; ++jc) m[r][jc] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t jc = c; jc < cols; ++jc) m[i][jc] -= f * m[r][jc];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RationalVector solve_exact(RationalMatrix m, RationalVector rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw ValidationError("solve_exact: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ValidationError("solve_exact: matrix not square");
        m[i].push_back(rhs[i]);
    }
    auto pivots = rref(m);
    if (pivots.size() != n) throw NumericalError("solve_exact: singular system");
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = m[i][n];
    return x;
}

RationalVector nullspace_1d(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw ValidationError("nullspace_1d: matrix not square");
    }
    auto pivots = rref(m);
    if (pivots.size() + 1 != n) {
        throw NumericalError("nullspace_1d: kernel dimension is " +
                             std::to_string(n - pivots.size()) + ", expected 1");
    }
    // The one free column parameterizes the kernel.
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;

    RationalVector v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
    return v;
}

} // namespace ipsf::detail
