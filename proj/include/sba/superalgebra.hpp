#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graded.hpp"

namespace sba {

// Lie superalgebra given by structure constants [X_i, X_j] = f^k_{ij} X_k.
struct SuperAlgebra {
    std::string name;
    Grading grading;
    int n = 0;
    std::vector<Gauss> f;  // f[(k*n + i)*n + j] = f^k_{ij}
    std::map<std::string, Gauss> params;
    std::vector<std::string> notes;

    SuperAlgebra() = default;
    SuperAlgebra(std::string nm, Grading g) : name(std::move(nm)), grading(std::move(g)), n(grading.size()) {
        f.assign(static_cast<size_t>(n) * n * n, Gauss());
    }

    const Gauss& operator()(int k, int i, int j) const { return f[(static_cast<size_t>(k) * n + i) * n + j]; }
    Gauss& at(int k, int i, int j) { return f[(static_cast<size_t>(k) * n + i) * n + j]; }

    // Sets f^k_{ij} and its graded reflection f^k_{ji} = -(-1)^{|i||j|} f^k_{ij}.
    void set(int k, int i, int j, const Gauss& v) {
        at(k, i, j) = v;
        at(k, j, i) = -(Gauss(grading.sign(i, j)) * v);
    }

    bool is_abelian() const {
        for (const auto& x : f)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<Gauss> bracket(const std::vector<Gauss>& x, const std::vector<Gauss>& y) const {
        std::vector<Gauss> r(n);
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                Gauss xy = x[i] * y[j];
                for (int k = 0; k < n; ++k)
                    if (!(*this)(k, i, j).is_zero()) r[k] += xy * (*this)(k, i, j);
            }
        }
        return r;
    }

    std::vector<Gauss> basis(int i) const {
        std::vector<Gauss> e(n);
        e[i] = Gauss(1);
        return e;
    }
};

struct JacobiReport {
    bool pass = true;
    std::array<int, 4> witness{};  // (m, i, j, k), 0-based
    Gauss value;
};

// (-1)^{i(j+k)} f^m_{jl} f^l_{ki} + f^m_{il} f^l_{jk} + (-1)^{k(i+j)} f^m_{kl} f^l_{ij}
inline Gauss jacobi_sum(const SuperAlgebra& A, int m, int i, int j, int k) {
    const Grading& g = A.grading;
    Gauss s1, s2, s3;
    for (int l = 0; l < A.n; ++l) {
        s1 += A(m, j, l) * A(l, k, i);
        s2 += A(m, i, l) * A(l, j, k);
        s3 += A(m, k, l) * A(l, i, j);
    }
    return Gauss(psign(g[i] * (g[j] + g[k]))) * s1 + s2 + Gauss(psign(g[k] * (g[i] + g[j]))) * s3;
}

// First violation in lexicographic (m, i, j, k) order.
inline JacobiReport check_super_jacobi(const SuperAlgebra& A) {
    JacobiReport r;
    for (int m = 0; m < A.n; ++m)
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j)
                for (int k = 0; k < A.n; ++k) {
                    Gauss v = jacobi_sum(A, m, i, j, k);
                    if (!v.is_zero()) {
                        r.pass = false;
                        r.witness = {m, i, j, k};
                        r.value = v;
                        return r;
                    }
                }
    return r;
}

struct TensorReport {
    bool pass = true;
    std::vector<int> witness;
    std::string detail;
};

// Graded antisymmetry and the parity selection rule.
inline TensorReport check_antisymmetry(const SuperAlgebra& A) {
    const Grading& g = A.grading;
    for (int k = 0; k < A.n; ++k)
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) {
                const Gauss& v = A(k, i, j);
                if (v != -(Gauss(g.sign(i, j)) * A(k, j, i)))
                    return {false, {k, i, j}, "antisymmetry"};
                if (!v.is_zero() && ((g[i] + g[j] + g[k]) & 1))
                    return {false, {k, i, j}, "grading"};
            }
    return {};
}

// (Y^i)_{jk} = -f^i_{jk}
inline std::vector<Matrix> adjoint_reps(const SuperAlgebra& A) {
    std::vector<Matrix> Y;
    for (int i = 0; i < A.n; ++i) {
        Matrix m(A.n, A.n);
        for (int j = 0; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k) m(j, k) = -A(i, j, k);
        Y.push_back(std::move(m));
    }
    return Y;
}

// (ad X_i)^k_j = f^k_{ij}, as a matrix acting on coordinate columns.
inline Matrix ad_matrix(const SuperAlgebra& A, int i) {
    Matrix m(A.n, A.n);
    for (int k = 0; k < A.n; ++k)
        for (int j = 0; j < A.n; ++j) m(k, j) = A(k, i, j);
    return m;
}

using BilinearForm = Matrix;  // B(i,j) = <X_i, X_j>

inline bool is_supersymmetric(const BilinearForm& B, const Grading& g) {
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (B(i, j) != Gauss(g.sign(i, j)) * B(j, i)) return false;
    return true;
}

struct FormReport {
    bool pass = true;
    bool degenerate = false;
    bool supersymmetric = true;
    std::array<int, 3> witness{};
    Gauss lhs, rhs;
};

inline Gauss form_eval(const BilinearForm& B, const std::vector<Gauss>& x, const std::vector<Gauss>& y) {
    Gauss s;
    for (int i = 0; i < B.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < B.cols; ++j)
            if (!y[j].is_zero() && !B(i, j).is_zero()) s += x[i] * B(i, j) * y[j];
    }
    return s;
}

// <[x,y],z> = <x,[y,z]> on all basis triples.
inline FormReport check_ad_invariance(const SuperAlgebra& A, const BilinearForm& B) {
    FormReport r;
    r.degenerate = !inverse(B).has_value();
    r.supersymmetric = is_supersymmetric(B, A.grading);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k) {
                Gauss l = form_eval(B, A.bracket(A.basis(i), A.basis(j)), A.basis(k));
                Gauss rr = form_eval(B, A.basis(i), A.bracket(A.basis(j), A.basis(k)));
                if (l != rr) {
                    r.pass = false;
                    r.witness = {i, j, k};
                    r.lhs = l;
                    r.rhs = rr;
                    return r;
                }
            }
    return r;
}

struct QuadTerm {
    Gauss coeff;
    int i, j;  // coeff * X_i X_j, in this order
};

// C = B^{ij} X_i X_j with B^{ij} the entries of the inverse Gram matrix.
inline std::vector<QuadTerm> casimir_quadratic(const SuperAlgebra& A, const BilinearForm& B) {
    auto inv = inverse(B);
    if (!inv) throw std::invalid_argument("casimir_quadratic: degenerate form");
    std::vector<QuadTerm> out;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            if (!(*inv)(i, j).is_zero()) out.push_back({(*inv)(i, j), i, j});
    return out;
}

inline std::string format_structure(const SuperAlgebra& A, const std::string& sym = "f") {
    std::string s;
    for (int k = 0; k < A.n; ++k)
        for (int i = 0; i < A.n; ++i)
            for (int j = i; j < A.n; ++j)
                if (!A(k, i, j).is_zero())
                    s += sym + "^" + std::to_string(k + 1) + "_{" + std::to_string(i + 1) + " " + std::to_string(j + 1) +
                         "} = " + to_string(A(k, i, j)) + "\n";
    return s;
}

}  // namespace sba
