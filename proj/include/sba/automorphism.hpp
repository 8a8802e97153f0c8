#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bialgebra.hpp"
#include "polynomial.hpp"

namespace sba {

inline bool is_block_diagonal(const Matrix& A, const Grading& g) {
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (g[i] != g[j] && !A(i, j).is_zero()) return false;
    return true;
}

struct AutomorphismReport {
    bool pass = false;
    bool block_diagonal = true;
    bool invertible = true;
    bool matrix_form_pass = false;
    std::array<int, 3> witness{};  // (a, b, l)
    Gauss lhs, rhs;
};

// X'_a = s_i A_a^i X_i with s_i = (-1)^{|i|}. The parity signs cancel in the
// bracket because A is block diagonal, leaving
//   sum_{ij} A_a^i A_b^j f^l_{ij} = sum_k f^k_{ab} A_k^l.
inline Gauss automorphism_residual(const Matrix& A, const SuperAlgebra& alg, int a, int b, int l) {
    Gauss lhs, rhs;
    for (int i = 0; i < alg.n; ++i) {
        if (A(a, i).is_zero()) continue;
        for (int j = 0; j < alg.n; ++j)
            if (!A(b, j).is_zero() && !alg(l, i, j).is_zero()) lhs += A(a, i) * alg(l, i, j) * A(b, j);
    }
    for (int k = 0; k < alg.n; ++k)
        if (!alg(k, a, b).is_zero()) rhs += alg(k, a, b) * A(k, l);
    return lhs - rhs;
}

// Matrix form: (-1)^{|i||j| + |b||k|} A Y^k A^st = Y^l A_l^k, with the sign
// factor taken inside the product (i, j run over the contracted indices and b
// is the column of A^st).
inline bool automorphism_matrix_form(const Matrix& A, const SuperAlgebra& alg) {
    const Grading& g = alg.grading;
    int n = alg.n;
    auto Y = adjoint_reps(alg);
    Matrix Ast = supertranspose(A, g);
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Gauss lhs, rhs;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (A(a, i).is_zero() || Y[k](i, j).is_zero() || Ast(j, b).is_zero()) continue;
                        int s = psign(g[i] * g[j] + g[b] * g[k]);
                        lhs += Gauss(s) * A(a, i) * Y[k](i, j) * Ast(j, b);
                    }
                for (int l = 0; l < n; ++l)
                    if (!Y[l](a, b).is_zero() && !A(l, k).is_zero()) rhs += Y[l](a, b) * A(l, k);
                if (lhs != rhs) return false;
            }
    }
    return true;
}

inline AutomorphismReport is_automorphism(const Matrix& A, const SuperAlgebra& alg) {
    AutomorphismReport r;
    if (A.rows != alg.n || A.cols != alg.n) throw std::invalid_argument("automorphism matrix has the wrong size");
    r.block_diagonal = is_block_diagonal(A, alg.grading);
    r.invertible = inverse(A).has_value();
    if (!r.invertible) throw std::domain_error("automorphism matrix is singular");
    r.pass = r.block_diagonal;
    for (int a = 0; a < alg.n && r.pass; ++a)
        for (int b = 0; b < alg.n && r.pass; ++b)
            for (int l = 0; l < alg.n && r.pass; ++l) {
                Gauss v = automorphism_residual(A, alg, a, b, l);
                if (!v.is_zero()) {
                    r.pass = false;
                    r.witness = {a, b, l};
                    r.lhs = v;
                }
            }
    r.matrix_form_pass = r.block_diagonal && automorphism_matrix_form(A, alg);
    return r;
}

// ---------------------------------------------------------------------------
// Parametric family by elimination

inline std::string entry_name(int i, int j) { return "A" + std::to_string(i + 1) + std::to_string(j + 1); }

struct AutomorphismFamily {
    int n = 0;
    std::vector<std::vector<Poly>> pattern;  // entries in the free names
    std::vector<std::string> free;
    std::set<std::string> nonzero;         // free names known to be nonzero
    std::vector<Poly> nonvanishing;        // block determinants, must be nonzero
    std::vector<Poly> residual;            // equations left unsolved
    bool stalled = false;
    bool inconsistent = false;
    std::vector<std::string> log;

    Matrix instantiate(const std::map<std::string, Gauss>& vals) const {
        Matrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = pattern[i][j].evaluate(vals);
        return A;
    }
};

namespace detail {

inline Poly block_det(const std::vector<std::vector<Poly>>& M, const std::vector<int>& idx) {
    // Laplace expansion; blocks are at most a few rows
    if (idx.size() == 1) return M[idx[0]][idx[0]];
    if (idx.empty()) return Poly(1);
    std::function<Poly(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows, std::vector<int> cols) {
        if (rows.size() == 1) return M[rows[0]][cols[0]];
        Poly s;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> r2(rows.begin() + 1, rows.end()), c2 = cols;
            c2.erase(c2.begin() + static_cast<long>(c));
            Poly t = M[rows[0]][cols[c]] * det(r2, c2);
            if (c % 2) s -= t; else s += t;
        }
        return s;
    };
    return det(idx, idx);
}

inline bool all_nonzero(const Poly::Mono& m, const std::set<std::string>& nz) {
    for (const auto& [x, e] : m)
        if (!nz.count(x)) return false;
    return true;
}

}  // namespace detail

inline AutomorphismFamily solve_automorphism_family(const SuperAlgebra& alg) {
    AutomorphismFamily fam;
    int n = alg.n;
    const Grading& g = alg.grading;
    fam.n = n;
    fam.pattern.assign(n, std::vector<Poly>(n));
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g[i] == g[j]) {
                fam.pattern[i][j] = Poly::var(entry_name(i, j));
                vars.push_back(entry_name(i, j));
            }

    auto equations = [&]() {
        std::vector<Poly> eqs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int l = 0; l < n; ++l) {
                    Poly e;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            if (!alg(l, i, j).is_zero()) e += fam.pattern[a][i] * fam.pattern[b][j] * Poly(alg(l, i, j));
                    for (int k = 0; k < n; ++k)
                        if (!alg(k, a, b).is_zero()) e -= Poly(alg(k, a, b)) * fam.pattern[k][l];
                    if (!e.is_zero() && std::find(eqs.begin(), eqs.end(), e) == eqs.end() &&
                        std::find(eqs.begin(), eqs.end(), -e) == eqs.end())
                        eqs.push_back(e);
                }
        return eqs;
    };
    std::vector<int> even, odd;
    for (int i = 0; i < n; ++i) (g[i] ? odd : even).push_back(i);

    auto substitute = [&](const std::string& v, const Poly& value) {
        for (auto& row : fam.pattern)
            for (auto& p : row) p = p.substitute(v, value);
        fam.log.push_back(v + " = " + to_string(value));
    };

    for (int guard = 0; guard < 1000; ++guard) {
        auto eqs = equations();
        fam.nonvanishing = {detail::block_det(fam.pattern, even), detail::block_det(fam.pattern, odd)};
        for (const auto& d : fam.nonvanishing) {
            if (d.is_zero()) { fam.inconsistent = true; return fam; }
            if (d.is_monomial())
                for (const auto& [x, e] : d.terms.begin()->first) fam.nonzero.insert(x);
        }
        if (eqs.empty()) break;
        bool progressed = false;
        // single product term: some factor must vanish
        for (const auto& e : eqs) {
            if (!e.is_monomial()) continue;
            const auto& m = e.terms.begin()->first;
            if (m.empty()) { fam.inconsistent = true; return fam; }
            std::vector<std::string> unknown;
            for (const auto& [x, p] : m)
                if (!fam.nonzero.count(x)) unknown.push_back(x);
            if (unknown.empty()) { fam.inconsistent = true; return fam; }
            if (unknown.size() == 1) {
                substitute(unknown[0], Poly());
                progressed = true;
                break;
            }
        }
        if (progressed) continue;
        // a variable occurring linearly with an invertible coefficient
        std::optional<std::pair<std::string, Poly>> best;
        size_t best_terms = 0;
        int best_rank = 0;
        for (const auto& e : eqs)
            for (const auto& v : e.variables()) {
                if (e.degree_in(v) != 1 || e.min_degree_in(v) < 0) continue;
                auto co = e.coefficients_in(v);
                const Poly& c1 = co[1];
                if (!c1.is_monomial() || !detail::all_nonzero(c1.terms.begin()->first, fam.nonzero)) continue;
                Poly rest = e - c1 * Poly::var(v);
                // prefer constant coefficients, then short equations
                int rank = c1.is_constant() ? 0 : 1;
                if (!best || rank < best_rank || (rank == best_rank && e.terms.size() < best_terms)) {
                    best = {v, *(-rest).div_monomial(c1)};
                    best_terms = e.terms.size();
                    best_rank = rank;
                }
            }
        if (best) {
            substitute(best->first, best->second);
            continue;
        }
        fam.stalled = true;
        fam.residual = eqs;
        break;
    }
    std::set<std::string> fr;
    for (const auto& row : fam.pattern)
        for (const auto& p : row)
            for (const auto& v : p.variables()) fr.insert(v);
    fam.free.assign(fr.begin(), fr.end());
    std::set<std::string> nz;
    for (const auto& v : fam.nonzero)
        if (fr.count(v)) nz.insert(v);
    fam.nonzero = nz;
    return fam;
}

// The (C3+A) family with a = A11, c = A12, d = A43, b = A44.
inline Matrix c3a_family_member(const Gauss& a, const Gauss& b, const Gauss& c, const Gauss& d) {
    Matrix A(4, 4);
    A(0, 0) = a;
    A(0, 1) = c;
    A(1, 1) = b * b;
    A(2, 2) = a * b;
    A(3, 2) = d;
    A(3, 3) = b;
    return A;
}

// ---------------------------------------------------------------------------
// Transport of dual structures

inline bool is_zero_value(const Gauss& g) { return g.is_zero(); }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }

// ft'^{jk}_i = sum A_a^j A_b^k ft^{ab}_m (A^{-1})_i^m. Generic in the scalar
// type so that the equivalence search can run it over polynomials.
template <class T, class GetA, class GetAinv, class GetFt>
std::vector<T> transform_dual_entries(int n, const GetA& A, const GetAinv& Ainv, const GetFt& ft) {
    std::vector<T> out(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int m = 0; m < n; ++m) {
                if (ft.is_zero_at(a, b, m)) continue;
                T v = ft(a, b, m);
                for (int j = 0; j < n; ++j) {
                    T aj = A(a, j);
                    if (is_zero_value(aj)) continue;
                    T vj = aj * v;
                    for (int k = 0; k < n; ++k) {
                        T bk = A(b, k);
                        if (is_zero_value(bk)) continue;
                        T vjk = vj * bk;
                        for (int i = 0; i < n; ++i) {
                            T im = Ainv(i, m);
                            if (is_zero_value(im)) continue;
                            out[(static_cast<size_t>(j) * n + k) * n + i] += vjk * im;
                        }
                    }
                }
            }
    return out;
}

struct DualView {
    const DualStructure& d;
    Gauss operator()(int a, int b, int c) const { return d(a, b, c); }
    bool is_zero_at(int a, int b, int c) const { return d(a, b, c).is_zero(); }
};

inline DualStructure transform_dual(const Matrix& A, const DualStructure& d, const SuperAlgebra* base = nullptr) {
    if (base && !is_automorphism(A, *base).pass) throw std::invalid_argument("transform_dual: not an automorphism");
    auto inv = inverse(A);
    if (!inv) throw std::domain_error("transform_dual: singular matrix");
    DualStructure out(d.name, d.grading);
    out.params = d.params;
    out.ft = transform_dual_entries<Gauss>(
        d.n, [&](int i, int j) { return A(i, j); }, [&](int i, int j) { return (*inv)(i, j); }, DualView{d});
    return out;
}

// Structure constants in the basis X'_i = sum_a A(i,a) X_a.
inline SuperAlgebra change_basis(const SuperAlgebra& alg, const Matrix& A) {
    if (!is_block_diagonal(A, alg.grading)) throw std::invalid_argument("change_basis: matrix mixes parities");
    auto inv = inverse(A);
    if (!inv) throw std::domain_error("change_basis: singular matrix");
    int n = alg.n;
    SuperAlgebra out(alg.name, alg.grading);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Gauss v;
                for (int a = 0; a < n; ++a) {
                    if (A(i, a).is_zero()) continue;
                    for (int b = 0; b < n; ++b) {
                        if (A(j, b).is_zero()) continue;
                        for (int m = 0; m < n; ++m)
                            if (!alg(m, a, b).is_zero()) v += A(i, a) * A(j, b) * alg(m, a, b) * (*inv)(m, k);
                    }
                }
                out.f[(static_cast<size_t>(k) * n + i) * n + j] = v;
            }
    return out;
}

// The dual basis follows with (A^{-1})^T.
inline SuperBialgebra change_basis(const SuperBialgebra& bi, const Matrix& A) {
    auto inv = inverse(A);
    if (!inv) throw std::domain_error("change_basis: singular matrix");
    DualStructure d = DualStructure::from_algebra(change_basis(bi.dual.as_algebra(), inv->transpose()));
    d.name = bi.dual.name;
    d.params = bi.dual.params;
    return {change_basis(bi.base, A), d};
}

}  // namespace sba
