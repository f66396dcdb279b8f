#pragma once

#include "qcoh/rational.hpp"

#include <optional>
#include <vector>

namespace qcoh {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns pivot column per row rank order.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    m.resize(r);  // drop zero rows
    return pivots;
}

inline int rank(Mat m) { return (int)rref(m).size(); }

inline std::optional<Mat> invert(const Mat& a) {
    size_t n = a.size();
    Mat aug(n, Vec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != (int)n - 1) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (piv[i] != (int)i) return std::nullopt;
    Mat inv(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Vec matVec(const Mat& a, const Vec& x) {
    Vec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    return y;
}

struct LinearSolveResult {
    bool consistent = false;
    bool unique = false;
    int rank = 0;
    Vec solution;       // valid when consistent (a particular solution; the
                        // solution when unique)
    Vec residual;       // b - A*solution, recomputed exactly (all zero when
                        // consistent)
};

// Solve A x = b for possibly overdetermined A (rows >= cols typical).
inline LinearSolveResult solve_linear(const Mat& a, const Vec& b) {
    LinearSolveResult res;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    Mat aug(rows, Vec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    res.rank = 0;
    res.consistent = true;
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == (int)cols) {
            res.consistent = false;  // pivot in the rhs column
        } else {
            ++res.rank;
        }
    }
    if (!res.consistent) return res;
    res.unique = (res.rank == (int)cols);
    res.solution.assign(cols, 0);
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] < (int)cols) res.solution[piv[i]] = aug[i][cols];
    res.residual.assign(rows, 0);
    for (size_t i = 0; i < rows; ++i) {
        Rational acc = b[i];
        for (size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0 && res.solution[j] != 0) acc -= a[i][j] * res.solution[j];
        res.residual[i] = acc;
    }
    return res;
}

} // namespace qcoh
