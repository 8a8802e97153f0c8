#pragma once

#include <string>
#include <vector>

#include "bialgebra.hpp"

namespace sba {

// r = r^{ij} X_i (x) X_j stored as Tensor2; only parity-matched entries are allowed.

inline void require_even(const Tensor2& r, const Grading& g) {
    if (!is_even(r, g)) throw std::invalid_argument("r-matrix has entries mixing even and odd directions");
}

// r^_ij = (r^ij - (-1)^{|i||j|} r^ji) / 2
inline Tensor2 skew_part(const Tensor2& r, const Grading& g) {
    Tensor2 s(r.rows, r.cols);
    Gauss half(make_rational(1, 2));
    for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < r.cols; ++j) s(i, j) = half * (r(i, j) - Gauss(g.sign(i, j)) * r(j, i));
    return s;
}

// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] with the graded component formulas.
inline Tensor3 schouten_bracket(const Tensor2& r, const SuperAlgebra& A) {
    const Grading& g = A.grading;
    require_even(r, g);
    int n = A.n;
    Tensor3 w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (r(i, j).is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (r(k, l).is_zero()) continue;
                    Gauss rr = r(i, j) * r(k, l);
                    Gauss s13(psign(g[i] * (g[k] + g[l]) + g[j] * g[l]));
                    Gauss s23(psign((g[i] + g[j]) * (g[k] + g[l])));
                    for (int m = 0; m < n; ++m) {
                        if (!A(m, i, k).is_zero()) w(m, j, l) += s13 * rr * A(m, i, k);
                        if (!A(m, j, k).is_zero()) w(i, m, l) += s23 * rr * A(m, j, k);
                        if (!A(m, j, l).is_zero()) w(i, k, m) += s13 * rr * A(m, j, l);
                    }
                }
        }
    return w;
}

// Adjoint matrix of X_i acting on column vectors: (ad_i)_{ja} = f^j_{ia}.
inline Matrix ad_column(const SuperAlgebra& A, int i) {
    Matrix M(A.n, A.n);
    for (int j = 0; j < A.n; ++j)
        for (int a = 0; a < A.n; ++a) M(j, a) = A(j, i, a);
    return M;
}

// delta(X_i) = [X_i (x) 1 + 1 (x) X_i, r] as a matrix: ad_i r + (-1)^{|i||row|} r ad_i^T.
inline Tensor2 coboundary_image(const Tensor2& r, const SuperAlgebra& A, int i) {
    const Grading& g = A.grading;
    Matrix ad = ad_column(A, i);
    Matrix left = ad * r;
    Matrix right = r * ad.transpose();
    for (int j = 0; j < A.n; ++j)
        for (int k = 0; k < A.n; ++k) left(j, k) += Gauss(psign(g[i] * g[j])) * right(j, k);
    return left;
}

// Dual structure constants induced by r, read from the super-antisymmetric part of delta.
inline DualStructure coboundary_delta(const Tensor2& r, const SuperAlgebra& A, const std::string& name = "delta_r") {
    require_even(r, A.grading);
    const Grading& g = A.grading;
    DualStructure d(name, g);
    for (int i = 0; i < A.n; ++i) {
        Tensor2 t = skew_part(coboundary_image(r, A, i), g);
        for (int j = 0; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k) d.ft[(static_cast<size_t>(j) * A.n + k) * A.n + i] = Gauss(g.sign(j, k)) * t(j, k);
    }
    return d;
}

// Affine family of solutions r = particular + sum t_k direction_k.
struct CoboundarySolution {
    bool solvable = false;
    Tensor2 particular;
    std::vector<Tensor2> directions;
    std::vector<std::pair<int, int>> unknowns;  // (i, j) of each r^{ij} unknown
    int dimension() const { return solvable ? static_cast<int>(directions.size()) : -1; }
    Tensor2 at(const std::vector<Gauss>& t) const {
        Tensor2 r = particular;
        for (size_t k = 0; k < directions.size() && k < t.size(); ++k) r = r + t[k] * directions[k];
        return r;
    }
    // Membership of a concrete r in the affine family.
    bool contains(const Tensor2& r) const {
        if (!solvable) return false;
        std::vector<std::vector<Gauss>> basis;
        for (const auto& d : directions) {
            std::vector<Gauss> v;
            for (auto [i, j] : unknowns) v.push_back(d(i, j));
            basis.push_back(v);
        }
        std::vector<Gauss> diff;
        for (int i = 0; i < r.rows; ++i)
            for (int j = 0; j < r.cols; ++j) {
                bool known = std::find(unknowns.begin(), unknowns.end(), std::make_pair(i, j)) != unknowns.end();
                if (!known && !r(i, j).is_zero()) return false;
            }
        for (auto [i, j] : unknowns) diff.push_back(r(i, j) - particular(i, j));
        if (std::all_of(diff.begin(), diff.end(), [](const Gauss& x) { return x.is_zero(); })) return true;
        return !basis.empty() && in_span(basis, diff);
    }
};

// Solves delta_r = delta of the bialgebra exactly for an even r.
inline CoboundarySolution solve_coboundary(const SuperBialgebra& bi) {
    const SuperAlgebra& A = bi.base;
    const Grading& g = A.grading;
    int n = A.n;
    CoboundarySolution sol;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g[i] == g[j]) sol.unknowns.push_back({i, j});
    int u = static_cast<int>(sol.unknowns.size());
    Matrix M(n * n * n, u);
    std::vector<Gauss> rhs(static_cast<size_t>(n) * n * n);
    for (int c = 0; c < u; ++c) {
        Tensor2 e(n, n);
        e(sol.unknowns[c].first, sol.unknowns[c].second) = Gauss(1);
        for (int i = 0; i < n; ++i) {
            Tensor2 img = coboundary_image(e, A, i);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) M((i * n + j) * n + k, c) = img(j, k);
        }
    }
    for (int i = 0; i < n; ++i) {
        Tensor2 target = cocommutator(bi.dual, i);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) rhs[(static_cast<size_t>(i) * n + j) * n + k] = target(j, k);
    }
    AffineSolution s = solve_affine(M, rhs);
    if (!s.consistent) return sol;
    sol.solvable = true;
    sol.particular = Tensor2(n, n);
    for (int c = 0; c < u; ++c) sol.particular(sol.unknowns[c].first, sol.unknowns[c].second) = s.particular[c];
    for (const auto& kv : s.kernel) {
        Tensor2 d(n, n);
        for (int c = 0; c < u; ++c) d(sol.unknowns[c].first, sol.unknowns[c].second) = kv[c];
        sol.directions.push_back(std::move(d));
    }
    return sol;
}

// Roles swapped: the dual algebra with cobracket from the original brackets.
inline SuperBialgebra swap_roles(const SuperBialgebra& bi) {
    return {bi.dual.as_algebra(), DualStructure::from_algebra(bi.base)};
}

inline CoboundarySolution solve_coboundary_dual(const SuperBialgebra& bi) { return solve_coboundary(swap_roles(bi)); }

enum class Triangularity { Triangular, QuasiTriangular, NotGCYBE };

inline const char* to_string(Triangularity t) {
    switch (t) {
        case Triangularity::Triangular: return "triangular";
        case Triangularity::QuasiTriangular: return "quasi-triangular";
        case Triangularity::NotGCYBE: return "not-GCYBE";
    }
    return "?";
}

// Whether [x(x)1(x)1 + 1(x)x(x)1 + 1(x)1(x)x, w] vanishes for every basis x.
inline bool is_ad_invariant3(const Tensor3& w, const SuperAlgebra& A) {
    for (int x = 0; x < A.n; ++x)
        if (!act_on_tensor3(A, x, w).is_zero()) return false;
    return true;
}

inline Triangularity classify_triangularity(const Tensor2& r, const SuperAlgebra& A) {
    if (!is_super_skew(r, A.grading)) throw std::invalid_argument("classify_triangularity: r is not super skew-symmetric");
    Tensor3 w = schouten_bracket(r, A);
    if (w.is_zero()) return Triangularity::Triangular;
    return is_ad_invariant3(w, A) ? Triangularity::QuasiTriangular : Triangularity::NotGCYBE;
}

// Printable r in tensor notation.
inline std::string r_to_string(const Tensor2& r, const std::string& sym = "X") {
    std::string s;
    for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < r.cols; ++j) {
            const Gauss& c = r(i, j);
            if (c.is_zero()) continue;
            std::string basis = sym + std::to_string(i + 1) + "(x)" + sym + std::to_string(j + 1);
            std::string cs = to_string(c);
            if (!c.is_real() && sgn(c.re) != 0) cs = "(" + cs + ")";
            std::string term = c.is_one() ? basis : (c == Gauss(-1) ? "-" + basis : cs + " " + basis);
            if (s.empty()) s = term;
            else if (term[0] == '-') s += " - " + term.substr(1);
            else s += " + " + term;
        }
    return s.empty() ? "0" : s;
}

}  // namespace sba
