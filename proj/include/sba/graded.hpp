#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linsolve.hpp"

namespace sba {

// (-1)^e
inline int psign(int e) { return (e & 1) ? -1 : 1; }

struct Grading {
    std::vector<int> g;  // 0 even, 1 odd

    Grading() = default;
    explicit Grading(std::vector<int> v) : g(std::move(v)) {}
    static Grading standard22() { return Grading({0, 0, 1, 1}); }

    int size() const { return static_cast<int>(g.size()); }
    int operator[](int i) const { return g[i]; }
    // Koszul sign for moving index i past index j.
    int sign(int i, int j) const { return psign(g[i] * g[j]); }
    bool operator==(const Grading& o) const { return g == o.g; }
};

// Element of V (x) V stored densely: t(i,j) is the coefficient of X_i (x) X_j.
using Tensor2 = Matrix;

// Element of V (x) V (x) V.
struct Tensor3 {
    int n = 0;
    std::vector<Gauss> a;

    Tensor3() = default;
    explicit Tensor3(int dim) : n(dim), a(static_cast<size_t>(dim) * dim * dim) {}
    Gauss& operator()(int i, int j, int k) { return a[(static_cast<size_t>(i) * n + j) * n + k]; }
    const Gauss& operator()(int i, int j, int k) const { return a[(static_cast<size_t>(i) * n + j) * n + k]; }
    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const Gauss& x) { return x.is_zero(); });
    }
    Tensor3& operator+=(const Tensor3& o) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }
    friend Tensor3 operator-(Tensor3 x, const Tensor3& y) {
        for (size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
        return x;
    }
    friend Tensor3 operator*(const Gauss& s, Tensor3 x) {
        for (auto& v : x.a) v *= s;
        return x;
    }
    friend bool operator==(const Tensor3& x, const Tensor3& y) { return x.n == y.n && x.a == y.a; }
};

// (M^st)_{ij} = (-1)^{|i||j|} M_{ji}: odd-odd block picks up a sign, mixed blocks do not.
inline Matrix supertranspose(const Matrix& M, const Grading& g) {
    if (M.rows != M.cols || M.rows != g.size()) throw std::invalid_argument("supertranspose: shape");
    Matrix t(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) {
            t(i, j) = M(j, i);
            if (g[i] && g[j]) t(i, j) = -t(i, j);
        }
    return t;
}

inline Tensor2 graded_flip(const Tensor2& t, const Grading& g) {
    Tensor2 r(t.rows, t.cols);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j)
            if (!t(i, j).is_zero()) r(j, i) += Gauss(g.sign(i, j)) * t(i, j);
    return r;
}

// X_i ^ X_j = X_i (x) X_j - (-1)^{|i||j|} X_j (x) X_i
inline Tensor2 wedge(int i, int j, const Grading& g) {
    Tensor2 t(g.size(), g.size());
    t(i, j) += Gauss(1);
    t(j, i) -= Gauss(g.sign(i, j));
    return t;
}

inline bool is_super_skew(const Tensor2& t, const Grading& g) {
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j)
            if (t(i, j) != -(Gauss(g.sign(i, j)) * t(j, i))) return false;
    return true;
}

inline bool is_even(const Tensor2& t, const Grading& g) {
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j)
            if (g[i] != g[j] && !t(i, j).is_zero()) return false;
    return true;
}

// Sign of moving the graded word (x_0, x_1, x_2) into order perm.
inline int koszul_perm_sign(const std::array<int, 3>& idx, const std::array<int, 3>& perm, const Grading& g) {
    int s = 1;
    std::array<int, 3> p = perm;
    // bubble sort p back to identity, tracking the sign of each adjacent swap
    for (int pass = 0; pass < 3; ++pass)
        for (int k = 0; k < 2; ++k)
            if (p[k] > p[k + 1]) {
                s *= -g.sign(idx[p[k]], idx[p[k + 1]]);
                std::swap(p[k], p[k + 1]);
            }
    return s;
}

// Unnormalized super-antisymmetrizer of X_i (x) X_j (x) X_k.
inline Tensor3 wedge3(int i, int j, int k, const Grading& g) {
    Tensor3 t(g.size());
    std::array<int, 3> idx{i, j, k};
    std::array<int, 3> perm{0, 1, 2};
    do {
        int s = koszul_perm_sign(idx, perm, g);
        t(idx[perm[0]], idx[perm[1]], idx[perm[2]]) += Gauss(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return t;
}

// Super-antisymmetry under the two adjacent transpositions.
inline bool is_super_antisymmetric3(const Tensor3& t, const Grading& g) {
    int n = t.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (t(i, j, k) != -(Gauss(g.sign(i, j)) * t(j, i, k))) return false;
                if (t(i, j, k) != -(Gauss(g.sign(j, k)) * t(i, k, j))) return false;
            }
    return true;
}

struct WedgeTerm {
    int i, j, k;
    Gauss coeff;
};

// Expand a super-antisymmetric tensor in the basis X_i^X_j^X_k (i<=j<=k, no repeated even index).
// Returns nullopt when the tensor is not in the image of the antisymmetrizer.
inline std::optional<std::vector<WedgeTerm>> wedge3_decompose(const Tensor3& t, const Grading& g) {
    std::vector<WedgeTerm> out;
    Tensor3 rebuilt(t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = i; j < t.n; ++j)
            for (int k = j; k < t.n; ++k) {
                Tensor3 w = wedge3(i, j, k, g);
                if (w.is_zero()) continue;
                const Gauss& wk = w(i, j, k);
                if (wk.is_zero() || t(i, j, k).is_zero()) continue;
                Gauss c = t(i, j, k) / wk;
                out.push_back({i, j, k, c});
                rebuilt += c * w;
            }
    if (!(rebuilt == t)) return std::nullopt;
    return out;
}

inline std::string wedge3_to_string(const std::vector<WedgeTerm>& terms, const std::string& sym = "X") {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& w : terms) {
        std::string c = to_string(w.coeff);
        if (!w.coeff.is_real() && sgn(w.coeff.re) != 0) c = "(" + c + ")";
        std::string basis = sym + std::to_string(w.i + 1) + "^" + sym + std::to_string(w.j + 1) + "^" + sym +
                            std::to_string(w.k + 1);
        std::string term = w.coeff.is_one() ? basis : (w.coeff == Gauss(-1) ? "-" + basis : c + " " + basis);
        if (s.empty()) s = term;
        else if (term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s;
}

}  // namespace sba
