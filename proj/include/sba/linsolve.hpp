#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace sba {

// Dense row-major matrix over Q(i).
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Gauss> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Gauss(1);
        return m;
    }
    static Matrix from(const std::vector<std::vector<Gauss>>& rowsv) {
        Matrix m(static_cast<int>(rowsv.size()), rowsv.empty() ? 0 : static_cast<int>(rowsv[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m(i, j) = rowsv[i][j];
        return m;
    }

    Gauss& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Gauss& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const Gauss& v = x(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        for (size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        for (size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
        return x;
    }
    friend Matrix operator*(const Gauss& s, Matrix x) {
        for (auto& v : x.a) v *= s;
        return x;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

struct Rref {
    Matrix m;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

inline Rref rref(Matrix m) {
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Gauss inv = Gauss(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Gauss f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

// Solution set of M x = b as particular + span(kernel).
struct AffineSolution {
    bool consistent = false;
    std::vector<Gauss> particular;
    std::vector<std::vector<Gauss>> kernel;
    std::vector<int> free_columns;  // column index carried by each kernel vector
    std::vector<int> pivot_columns;
};

inline AffineSolution solve_affine(const Matrix& M, const std::vector<Gauss>& b) {
    Matrix aug(M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug(i, j) = M(i, j);
        aug(i, M.cols) = b.empty() ? Gauss() : b[i];
    }
    Rref R = rref(aug);
    AffineSolution s;
    for (int c : R.pivots)
        if (c == M.cols) return s;
    s.consistent = true;
    s.pivot_columns = R.pivots;
    s.particular.assign(M.cols, Gauss());
    std::vector<bool> is_pivot(M.cols, false);
    for (size_t r = 0; r < R.pivots.size(); ++r) {
        is_pivot[R.pivots[r]] = true;
        s.particular[R.pivots[r]] = R.m(static_cast<int>(r), M.cols);
    }
    for (int f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Gauss> v(M.cols, Gauss());
        v[f] = Gauss(1);
        for (size_t r = 0; r < R.pivots.size(); ++r) v[R.pivots[r]] = -R.m(static_cast<int>(r), f);
        s.kernel.push_back(std::move(v));
        s.free_columns.push_back(f);
    }
    return s;
}

inline std::vector<std::vector<Gauss>> nullspace(const Matrix& M) {
    return solve_affine(M, {}).kernel;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Gauss(1);
    }
    Rref R = rref(aug);
    if (static_cast<int>(R.pivots.size()) < n || R.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = R.m(i, n + j);
    return inv;
}

// Is v in span of the given vectors?
inline bool in_span(const std::vector<std::vector<Gauss>>& basis, const std::vector<Gauss>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Matrix M(static_cast<int>(v.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) M(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
    return solve_affine(M, v).consistent;
}

}  // namespace sba
