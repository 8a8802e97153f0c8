#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "superalgebra.hpp"

namespace sba {

// Dual structure constants [X~^i, X~^j] = ft^{ij}_k X~^k.
struct DualStructure {
    std::string name;
    Grading grading;
    int n = 0;
    std::vector<Gauss> ft;  // ft[(i*n + j)*n + k] = ft^{ij}_k
    std::map<std::string, Gauss> params;
    std::vector<std::string> notes;

    DualStructure() = default;
    DualStructure(std::string nm, Grading g) : name(std::move(nm)), grading(std::move(g)), n(grading.size()) {
        ft.assign(static_cast<size_t>(n) * n * n, Gauss());
    }

    const Gauss& operator()(int i, int j, int k) const { return ft[(static_cast<size_t>(i) * n + j) * n + k]; }
    Gauss& at(int i, int j, int k) { return ft[(static_cast<size_t>(i) * n + j) * n + k]; }

    void set(int i, int j, int k, const Gauss& v) {
        at(i, j, k) = v;
        at(j, i, k) = -(Gauss(grading.sign(i, j)) * v);
    }

    bool is_zero() const {
        for (const auto& x : ft)
            if (!x.is_zero()) return false;
        return true;
    }

    // The dual as a superalgebra on the basis X~^i.
    SuperAlgebra as_algebra() const {
        SuperAlgebra A(name, grading);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) A.at(k, i, j) = (*this)(i, j, k);
        return A;
    }
    static DualStructure from_algebra(const SuperAlgebra& A) {
        DualStructure d(A.name, A.grading);
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j)
                for (int k = 0; k < A.n; ++k) d.at(i, j, k) = A(k, i, j);
        return d;
    }
    friend bool operator==(const DualStructure& a, const DualStructure& b) { return a.ft == b.ft; }
};

struct SuperBialgebra {
    SuperAlgebra base;
    DualStructure dual;
};

// delta(X_i) = (-1)^{|j||k|} ft^{jk}_i X_j (x) X_k
inline Tensor2 cocommutator(const DualStructure& d, int i) {
    Tensor2 t(d.n, d.n);
    for (int j = 0; j < d.n; ++j)
        for (int k = 0; k < d.n; ++k) t(j, k) = Gauss(d.grading.sign(j, k)) * d(j, k, i);
    return t;
}

// [X_x (x) 1 + 1 (x) X_x, t] = sum t^{ab} ([X_x,X_a] (x) X_b + (-1)^{|x||a|} X_a (x) [X_x,X_b])
inline Tensor2 act_on_tensor2(const SuperAlgebra& A, int x, const Tensor2& t) {
    Tensor2 r(A.n, A.n);
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            const Gauss& v = t(a, b);
            if (v.is_zero()) continue;
            for (int m = 0; m < A.n; ++m) {
                if (!A(m, x, a).is_zero()) r(m, b) += v * A(m, x, a);
                if (!A(m, x, b).is_zero()) r(a, m) += Gauss(A.grading.sign(x, a)) * v * A(m, x, b);
            }
        }
    return r;
}

// Same action on g (x) g (x) g.
inline Tensor3 act_on_tensor3(const SuperAlgebra& A, int x, const Tensor3& t) {
    Tensor3 r(A.n);
    const Grading& g = A.grading;
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b)
            for (int c = 0; c < A.n; ++c) {
                const Gauss& v = t(a, b, c);
                if (v.is_zero()) continue;
                for (int m = 0; m < A.n; ++m) {
                    if (!A(m, x, a).is_zero()) r(m, b, c) += v * A(m, x, a);
                    if (!A(m, x, b).is_zero()) r(a, m, c) += Gauss(g.sign(x, a)) * v * A(m, x, b);
                    if (!A(m, x, c).is_zero())
                        r(a, b, m) += Gauss(psign(g[x] * (g[a] + g[b]))) * v * A(m, x, c);
                }
            }
    return r;
}

struct CocycleReport {
    bool pass = true;
    int x = -1, y = -1;
    Tensor2 lhs, rhs;
};

// delta([x,y]) = [x(x)1 + 1(x)x, delta(y)] - (-1)^{xy} [y(x)1 + 1(x)y, delta(x)]
inline CocycleReport check_cocycle_map(const SuperAlgebra& A, const std::function<Tensor2(int)>& delta) {
    CocycleReport rep;
    std::vector<Tensor2> d;
    for (int i = 0; i < A.n; ++i) d.push_back(delta(i));
    for (int x = 0; x < A.n; ++x)
        for (int y = 0; y < A.n; ++y) {
            Tensor2 lhs(A.n, A.n);
            for (int k = 0; k < A.n; ++k)
                if (!A(k, x, y).is_zero()) lhs = lhs + A(k, x, y) * d[k];
            Tensor2 rhs = act_on_tensor2(A, x, d[y]) - Gauss(A.grading.sign(x, y)) * act_on_tensor2(A, y, d[x]);
            if (!(lhs == rhs)) {
                rep.pass = false;
                rep.x = x;
                rep.y = y;
                rep.lhs = lhs;
                rep.rhs = rhs;
                return rep;
            }
        }
    return rep;
}

inline CocycleReport check_cocycle(const SuperBialgebra& bi) {
    return check_cocycle_map(bi.base, [&](int i) { return cocommutator(bi.dual, i); });
}

// Dual super Jacobi, tensor form:
// (-1)^{i(j+k)} ft^{jl}_m ft^{ki}_l + ft^{il}_m ft^{jk}_l + (-1)^{k(i+j)} ft^{kl}_m ft^{ij}_l
template <class T, class Get>
T dual_jacobi_sum(const Grading& g, int n, const Get& ft, int i, int j, int k, int m) {
    T s1, s2, s3;
    for (int l = 0; l < n; ++l) {
        s1 += ft(j, l, m) * ft(k, i, l);
        s2 += ft(i, l, m) * ft(j, k, l);
        s3 += ft(k, l, m) * ft(i, j, l);
    }
    T r = s2;
    if (psign(g[i] * (g[j] + g[k])) > 0) r += s1; else r -= s1;
    if (psign(g[k] * (g[i] + g[j])) > 0) r += s3; else r -= s3;
    return r;
}

struct IdentityReport {
    bool pass = true;
    std::vector<int> witness;
    Gauss value;
};

inline IdentityReport check_dual_jacobi_tensor(const DualStructure& d) {
    auto get = [&](int a, int b, int c) { return d(a, b, c); };
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            for (int k = 0; k < d.n; ++k)
                for (int m = 0; m < d.n; ++m) {
                    Gauss v = dual_jacobi_sum<Gauss>(d.grading, d.n, get, i, j, k, m);
                    if (!v.is_zero()) return {false, {i, j, k, m}, v};
                }
    return {};
}

// (X~^i)^j_k = -ft^{ij}_k
inline std::vector<Matrix> dual_adjoint_reps(const DualStructure& d) {
    std::vector<Matrix> X;
    for (int i = 0; i < d.n; ++i) {
        Matrix m(d.n, d.n);
        for (int j = 0; j < d.n; ++j)
            for (int k = 0; k < d.n; ++k) m(j, k) = -d(i, j, k);
        X.push_back(std::move(m));
    }
    return X;
}

// Matrix form: (X~^i)^j_l X~^l - X~^j X~^i + (-1)^{ij} X~^i X~^j = 0
inline IdentityReport check_dual_jacobi_matrix(const DualStructure& d) {
    auto X = dual_adjoint_reps(d);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            Matrix lhs(d.n, d.n);
            for (int l = 0; l < d.n; ++l)
                if (!X[i](j, l).is_zero()) lhs = lhs + X[i](j, l) * X[l];
            lhs = lhs - X[j] * X[i] + Gauss(d.grading.sign(i, j)) * (X[i] * X[j]);
            for (int a = 0; a < d.n; ++a)
                for (int b = 0; b < d.n; ++b)
                    if (!lhs(a, b).is_zero()) return {false, {i, j, a, b}, lhs(a, b)};
        }
    return {};
}

struct DualJacobiReport {
    IdentityReport tensor, matrix;
    bool agree() const { return tensor.pass == matrix.pass; }
    bool pass() const { return tensor.pass && matrix.pass; }
};

inline DualJacobiReport check_dual_jacobi(const DualStructure& d) {
    return {check_dual_jacobi_tensor(d), check_dual_jacobi_matrix(d)};
}

// Mixed super Jacobi, tensor form, as the residual LHS - RHS of
// f^m_{jk} ft^{il}_m = f^i_{mk} ft^{ml}_j + f^l_{jm} ft^{im}_k + (-1)^{jl} f^i_{jm} ft^{ml}_k + (-1)^{ik} f^l_{mk} ft^{im}_j
template <class T, class GetF, class GetFt>
T mixed_jacobi_residual(const Grading& g, int n, const GetF& f, const GetFt& ft, int i, int j, int k, int l) {
    T r;
    for (int m = 0; m < n; ++m) {
        r += f(m, j, k) * ft(i, l, m);
        r -= f(i, m, k) * ft(m, l, j);
        r -= f(l, j, m) * ft(i, m, k);
        T t4 = f(i, j, m) * ft(m, l, k);
        T t5 = f(l, m, k) * ft(i, m, j);
        if (psign(g[j] * g[l]) > 0) r -= t4; else r += t4;
        if (psign(g[i] * g[k]) > 0) r -= t5; else r += t5;
    }
    return r;
}

inline IdentityReport check_mixed_jacobi_tensor(const SuperAlgebra& A, const DualStructure& d) {
    auto f = [&](int a, int b, int c) { return A(a, b, c); };
    auto ft = [&](int a, int b, int c) { return d(a, b, c); };
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k)
                for (int l = 0; l < A.n; ++l) {
                    Gauss v = mixed_jacobi_residual<Gauss>(A.grading, A.n, f, ft, i, j, k, l);
                    if (!v.is_zero()) return {false, {i, j, k, l}, v};
                }
    return {};
}

// Matrix form:
// (X~^i)^j_l Y^l = -(-1)^k (X~^j)^st Y^i + Y^j X~^i - (-1)^{ij} Y^i X~^j + (-1)^{k+ij} (X~^i)^st Y^j
// where k runs over the column of the supertransposed factor.
inline IdentityReport check_mixed_jacobi_matrix(const SuperAlgebra& A, const DualStructure& d) {
    const Grading& g = A.grading;
    int n = A.n;
    auto Y = adjoint_reps(A);
    auto X = dual_adjoint_reps(d);
    std::vector<Matrix> Xst;
    for (auto& m : X) Xst.push_back(supertranspose(m, g));
    auto signed_prod = [&](const Matrix& P, const Matrix& Q) {
        Matrix r(n, n);
        for (int a = 0; a < n; ++a)
            for (int k = 0; k < n; ++k) {
                if (P(a, k).is_zero()) continue;
                Gauss pk = Gauss(psign(g[k])) * P(a, k);
                for (int b = 0; b < n; ++b) r(a, b) += pk * Q(k, b);
            }
        return r;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs(n, n);
            for (int l = 0; l < n; ++l)
                if (!X[i](j, l).is_zero()) lhs = lhs + X[i](j, l) * Y[l];
            Gauss sij(g.sign(i, j));
            Matrix rhs = Gauss(-1) * signed_prod(Xst[j], Y[i]) + Y[j] * X[i] - sij * (Y[i] * X[j]) +
                         sij * signed_prod(Xst[i], Y[j]);
            Matrix diff = lhs - rhs;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!diff(a, b).is_zero()) return {false, {i, j, a, b}, diff(a, b)};
        }
    return {};
}

struct MixedJacobiReport {
    IdentityReport tensor, matrix;
    bool agree() const { return tensor.pass == matrix.pass; }
    bool pass() const { return tensor.pass && matrix.pass; }
};

inline MixedJacobiReport check_mixed_jacobi(const SuperBialgebra& bi) {
    return {check_mixed_jacobi_tensor(bi.base, bi.dual), check_mixed_jacobi_matrix(bi.base, bi.dual)};
}

// ---------------------------------------------------------------------------
// Linear solution of the mixed identity

struct DualUnknown {
    int i, j, k;  // ft^{ij}_k with i <= j
    std::string name() const {
        return "ft" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1);
    }
};

// Canonical grading-allowed entries: i <= j, |i|+|j| = |k|, and no repeated even index.
inline std::vector<DualUnknown> dual_unknowns(const Grading& g) {
    std::vector<DualUnknown> u;
    int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && g[i] == 0) continue;
            for (int k = 0; k < n; ++k)
                if (((g[i] + g[j] + g[k]) & 1) == 0) u.push_back({i, j, k});
        }
    return u;
}

struct MixedLinearSolution {
    std::vector<DualUnknown> unknowns;
    std::vector<std::string> free_names;
    std::vector<Poly> values;  // value of each unknown in terms of the free names
    std::vector<Poly> residuals;  // nonzero dual Jacobi polynomials on the family
    std::vector<std::vector<Gauss>> kernel;

    // Does a concrete dual lie in the affine (here linear) solution space?
    bool contains(const DualStructure& d) const {
        std::vector<Gauss> v;
        for (const auto& u : unknowns) v.push_back(d(u.i, u.j, u.k));
        return in_span(kernel, v);
    }
};

template <class T>
struct PolyDual {
    Grading grading;
    int n;
    std::vector<T> ft;
    T operator()(int i, int j, int k) const { return ft[(static_cast<size_t>(i) * n + j) * n + k]; }
};

inline MixedLinearSolution solve_mixed_linear(const SuperAlgebra& base) {
    MixedLinearSolution sol;
    const Grading& g = base.grading;
    int n = base.n;
    sol.unknowns = dual_unknowns(g);
    int U = static_cast<int>(sol.unknowns.size());
    auto f = [&](int a, int b, int c) { return base(a, b, c); };
    std::vector<std::vector<Gauss>> rows;
    std::vector<DualStructure> units;
    for (const auto& u : sol.unknowns) {
        DualStructure d("", g);
        d.set(u.i, u.j, u.k, Gauss(1));
        units.push_back(std::move(d));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::vector<Gauss> row(U);
                    bool any = false;
                    for (int c = 0; c < U; ++c) {
                        auto ft = [&](int a, int b, int e) { return units[c](a, b, e); };
                        row[c] = mixed_jacobi_residual<Gauss>(g, n, f, ft, i, j, k, l);
                        any = any || !row[c].is_zero();
                    }
                    if (any) rows.push_back(std::move(row));
                }
    Matrix M(static_cast<int>(rows.size()), U);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < U; ++c) M(r, c) = rows[r][c];
    AffineSolution s = solve_affine(M, std::vector<Gauss>(M.rows));
    sol.kernel = s.kernel;
    sol.values.assign(U, Poly());
    for (size_t b = 0; b < s.kernel.size(); ++b) {
        std::string nm = sol.unknowns[s.free_columns[b]].name();
        sol.free_names.push_back(nm);
        for (int c = 0; c < U; ++c)
            if (!s.kernel[b][c].is_zero()) sol.values[c] += Poly(s.kernel[b][c]) * Poly::var(nm);
    }
    PolyDual<Poly> pd{g, n, std::vector<Poly>(static_cast<size_t>(n) * n * n)};
    for (int c = 0; c < U; ++c) {
        const auto& u = sol.unknowns[c];
        pd.ft[(static_cast<size_t>(u.i) * n + u.j) * n + u.k] = sol.values[c];
        Poly refl = sol.values[c];
        if (g.sign(u.i, u.j) > 0) refl = -refl;
        if (u.i != u.j) pd.ft[(static_cast<size_t>(u.j) * n + u.i) * n + u.k] = refl;
    }
    std::vector<Poly> seen;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    Poly r = dual_jacobi_sum<Poly>(g, n, pd, i, j, k, m);
                    if (r.is_zero()) continue;
                    bool dup = false;
                    for (const auto& q : seen)
                        if (q == r || q == -r) { dup = true; break; }
                    if (!dup) seen.push_back(r);
                }
    sol.residuals = std::move(seen);
    return sol;
}

// ---------------------------------------------------------------------------
// The four solution families of the dual and mixed identities over (C3+A).

struct TheoremOneCase {
    int id;
    std::vector<std::string> params;
    std::string relations;
    std::string exclusion;
};

inline std::vector<TheoremOneCase> theorem_one_cases() {
    return {
        {1, {"ft12_1", "ft23_3", "ft23_4"}, "ft24_4 = ft12_1 + ft23_3", ""},
        {2, {"ft23_3", "ft23_4", "ft33_1"}, "ft24_4 = -ft23_3, ft12_1 = -2 ft23_3", ""},
        {3, {"ft33_1", "ft34_1", "ft23_3"},
         "ft12_1 = -ft23_3 + (i/2) ft34_1, ft24_4 = -(i/2) ft34_1, ft23_4 = -ft33_1 (2 ft23_3 + i ft34_1)/(4 ft34_1)",
         "ft34_1 != 0"},
        {4, {"ft33_1", "ft34_1", "ft33_2"},
         "ft12_1 = (i/2) ft34_1, ft13_4 = (i/4) ft33_2, ft23_4 = -(i/4) ft33_1, ft24_4 = -(i/2) ft34_1", ""},
    };
}

// Builds the dual of the given case; returns false when the sample hits an exclusion.
inline bool theorem_one_dual(int id, const std::vector<Gauss>& p, DualStructure& d) {
    d = DualStructure("theorem1-case" + std::to_string(id), Grading::standard22());
    const Gauss I = Gauss::i();
    const Gauss half(Rational(1, 2)), quarter(Rational(1, 4));
    switch (id) {
        case 1:
            d.set(0, 1, 0, p[0]);
            d.set(1, 2, 2, p[1]);
            d.set(1, 2, 3, p[2]);
            d.set(1, 3, 3, p[0] + p[1]);
            return true;
        case 2:
            d.set(1, 2, 2, p[0]);
            d.set(1, 3, 3, -p[0]);
            d.set(0, 1, 0, Gauss(-2) * p[0]);
            d.set(1, 2, 3, p[1]);
            d.set(2, 2, 0, p[2]);
            return true;
        case 3: {
            const Gauss &e = p[0], &h = p[1], &b = p[2];
            if (h.is_zero()) return false;
            d.set(2, 2, 0, e);
            d.set(2, 3, 0, h);
            d.set(1, 2, 2, b);
            d.set(0, 1, 0, -b + half * I * h);
            d.set(1, 3, 3, -(half * I * h));
            d.set(1, 2, 3, -(e * (Gauss(2) * b + I * h)) / (Gauss(4) * h));
            return true;
        }
        case 4: {
            const Gauss &e = p[0], &h = p[1], &w = p[2];
            d.set(2, 2, 0, e);
            d.set(2, 3, 0, h);
            d.set(2, 2, 1, w);
            d.set(0, 1, 0, half * I * h);
            d.set(0, 2, 3, quarter * I * w);
            d.set(1, 2, 3, -(quarter * I * e));
            d.set(1, 3, 3, -(half * I * h));
            return true;
        }
    }
    throw std::invalid_argument("no such case");
}

// ---------------------------------------------------------------------------
// Drinfeld double on g + g~ (generators X_1..X_n, then X~^1..X~^n).

inline SuperAlgebra drinfeld_double(const SuperBialgebra& bi) {
    const SuperAlgebra& A = bi.base;
    const DualStructure& d = bi.dual;
    int n = A.n;
    std::vector<int> gg = A.grading.g;
    gg.insert(gg.end(), A.grading.g.begin(), A.grading.g.end());
    SuperAlgebra D("D(" + A.name + ", " + d.name + ")", Grading(gg));
    const Grading& g = A.grading;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                D.at(k, i, j) = A(k, i, j);
                D.at(n + k, n + i, n + j) = d(i, j, k);
            }
    // [X_i, X~^j] = (-1)^{|j|} ft^{jk}_i X_k + (-1)^{|i|} f^j_{ki} X~^k
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Gauss a = Gauss(psign(g[j])) * d(j, k, i);
                Gauss b = Gauss(psign(g[i])) * A(j, k, i);
                D.at(k, i, n + j) = a;
                D.at(n + k, i, n + j) = b;
                D.at(k, n + j, i) = -(Gauss(g.sign(i, j)) * a);
                D.at(n + k, n + j, i) = -(Gauss(g.sign(i, j)) * b);
            }
    return D;
}

// <X_i, X~^j> = s_j delta_i^j, <X~^j, X_i> = (-1)^{|i||j|} <X_i, X~^j>.
// With signed = false this is the unsigned pairing delta_i^j.
inline BilinearForm double_pairing(const Grading& g, bool signed_pairing) {
    int n = g.size();
    BilinearForm B(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        Gauss v = signed_pairing ? Gauss(psign(g[i])) : Gauss(1);
        B(i, n + i) = v;
        B(n + i, i) = Gauss(g.sign(i, i)) * v;
    }
    return B;
}

}  // namespace sba
