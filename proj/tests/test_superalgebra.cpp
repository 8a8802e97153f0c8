#include <gtest/gtest.h>

#include <random>

#include "sba/formats.hpp"
#include "sba/hopf.hpp"

using namespace sba;

namespace {

const Catalog& catalog() {
    static const Catalog c = Catalog::load();
    return c;
}

SuperAlgebra c3a() { return build_algebra(catalog().algebra("(C3+A)"), {}); }

// Naive Jacobi sum, written from the graded cyclic identity
// (-1)^{|i||k|} [X_i,[X_j,X_k]] + cyclic = 0, projected on X_m.
Gauss naive_jacobi(const SuperAlgebra& A, int m, int i, int j, int k) {
    const Grading& g = A.grading;
    auto inner = [&](int a, int b, int c) {  // [X_a,[X_b,X_c]] projected on X_m
        Gauss s;
        for (int l = 0; l < A.n; ++l) s += A(l, b, c) * A(m, a, l);
        return s;
    };
    return Gauss(psign(g[i] * g[k])) * inner(i, j, k) + Gauss(psign(g[j] * g[i])) * inner(j, k, i) +
           Gauss(psign(g[k] * g[j])) * inner(k, i, j);
}

// <Z,H> = <H,Z> = 1, <Q+,Q-> = 1, <Q-,Q+> = -1 in the Z, H, Q+, Q- basis.
BilinearForm quadratic_form() {
    BilinearForm B(4, 4);
    B(0, 1) = B(1, 0) = Gauss(1);
    B(2, 3) = Gauss(1);
    B(3, 2) = Gauss(-1);
    return B;
}

}  // namespace

TEST(Jacobi, C3APasses) {
    SuperAlgebra A = c3a();
    EXPECT_EQ(A(2, 0, 3), Gauss(1));
    EXPECT_EQ(A(1, 3, 3), Gauss::i());
    EXPECT_TRUE(check_super_jacobi(A).pass);
    EXPECT_TRUE(check_antisymmetry(A).pass);
}

TEST(Jacobi, AbelianPasses) {
    SuperAlgebra A("abelian", Grading::standard22());
    EXPECT_TRUE(check_super_jacobi(A).pass);
    EXPECT_TRUE(build_algebra(catalog().algebra("I_(2,2)"), {}).is_abelian());
}

// With {X4,X4} = i X1 instead of i X2, every term of the engine's cyclic sum
// at (m,i,j,k) = (3,4,4,4) equals f^3_{41} f^1_{44} = -i, so the sum is -3i.
// The naive form carries (-1)^{|i||k|} = -1 on each term and gives 3i.
TEST(Jacobi, ReplacedBracketFailsWithWitness) {
    SuperAlgebra A = c3a();
    A.set(1, 3, 3, Gauss(0));
    A.set(0, 3, 3, Gauss::i());
    auto r = check_super_jacobi(A);
    ASSERT_FALSE(r.pass);
    EXPECT_EQ(r.witness, (std::array<int, 4>{2, 3, 3, 3}));
    EXPECT_EQ(r.value, Gauss(0, -3));
    EXPECT_EQ(naive_jacobi(A, 2, 3, 3, 3), Gauss(0, 3));
    // the tuple (3,4,4,1) has no violating term
    EXPECT_TRUE(jacobi_sum(A, 2, 3, 3, 0).is_zero());
}

TEST(Jacobi, EngineAgreesWithNaiveSumOnCatalog) {
    std::mt19937_64 rng(4);
    for (const auto& sf : catalog().algebras) {
        SuperAlgebra A = build_algebra(sf, sample_params(sf, rng));
        for (int m = 0; m < 4; ++m)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) {
                        EXPECT_TRUE(naive_jacobi(A, m, i, j, k).is_zero()) << sf.name;
                        EXPECT_TRUE(jacobi_sum(A, m, i, j, k).is_zero()) << sf.name;
                    }
    }
}

TEST(Jacobi, RandomBracketsDetectedByBothOracles) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> v(-2, 2);
    int violations = 0;
    for (int t = 0; t < 200; ++t) {
        SuperAlgebra A("random", Grading::standard22());
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j)
                    if (!((A.grading[i] + A.grading[j] + A.grading[k]) & 1) && !(i == j && A.grading[i] == 0) && rng() % 4 == 0)
                        A.set(k, i, j, Gauss(v(rng)));
        bool naive_ok = true;
        for (int m = 0; m < 4; ++m)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) naive_ok = naive_ok && naive_jacobi(A, m, i, j, k).is_zero();
        EXPECT_EQ(check_super_jacobi(A).pass, naive_ok);
        violations += !naive_ok;
    }
    EXPECT_GT(violations, 20);
}

TEST(Adjoint, C3AMatrices) {
    auto Y = adjoint_reps(c3a());
    ASSERT_EQ(Y.size(), 4u);
    EXPECT_TRUE(Y[0].is_zero());
    EXPECT_TRUE(Y[3].is_zero());
    Matrix y2(4, 4), y3(4, 4);
    y2(3, 3) = -Gauss::i();
    y3(0, 3) = Gauss(-1);
    y3(3, 0) = Gauss(1);
    EXPECT_EQ(Y[1], y2);
    EXPECT_EQ(Y[2], y3);
}

TEST(AdInvariance, QuadraticFormIsInvariant) {
    auto r = check_ad_invariance(classical_c3a(), quadratic_form());
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.supersymmetric);
    // with {X4,X4} = i X2 the ZH entry becomes -i
    BilinearForm B = quadratic_form();
    B(0, 1) = B(1, 0) = -Gauss::i();
    EXPECT_TRUE(check_ad_invariance(c3a(), B).pass);
}

TEST(AdInvariance, ZeroFormIsDegenerate) {
    auto r = check_ad_invariance(c3a(), BilinearForm(4, 4));
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.degenerate);
}

// Replacing <Z,H> by <Z,Z>: <[Z,Q-],Q-> = <Q+,Q-> = 1 but <Z,{Q-,Q-}> = <Z,H> = 0.
TEST(AdInvariance, ZZFormFails) {
    BilinearForm B = quadratic_form();
    B(0, 1) = B(1, 0) = Gauss(0);
    B(0, 0) = Gauss(1);
    SuperAlgebra A = classical_c3a();
    auto r = check_ad_invariance(A, B);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(form_eval(B, A.bracket(A.basis(0), A.basis(3)), A.basis(3)), Gauss(1));
    EXPECT_EQ(form_eval(B, A.basis(0), A.bracket(A.basis(3), A.basis(3))), Gauss(0));
}

// B^{ij} X_i X_j brought to normal order is 2(ZH - Q+Q-) and is central.
TEST(Casimir, QuadraticFromForm) {
    auto terms = casimir_quadratic(classical_c3a(), quadratic_form());
    PolySeries h(0);
    h[0] = Poly1::monomial(1, Gauss(1));
    UAlgebra alg(h);
    UElement C(0);
    for (const auto& t : terms)
        C += alg.mul(UElement::gen(0, all_gens[t.i]), UElement::gen(0, all_gens[t.j])).scaled(t.coeff);
    UElement want = alg.mul(UElement::gen(0, Gen::Z), UElement::gen(0, Gen::H)).scaled(Gauss(2)) -
                    alg.mul(UElement::gen(0, Gen::QP), UElement::gen(0, Gen::QM)).scaled(Gauss(2));
    EXPECT_EQ(C, want);
    for (Gen g : all_gens) EXPECT_TRUE(alg.bracket(C, 0, UElement::gen(0, g), gen_parity(g)).is_zero());
    EXPECT_THROW(casimir_quadratic(classical_c3a(), BilinearForm(4, 4)), std::invalid_argument);
}

TEST(Casimir, AbelianWithSameForm) {
    SuperAlgebra A("abelian", Grading::standard22());
    EXPECT_TRUE(check_ad_invariance(A, quadratic_form()).pass);
    EXPECT_EQ(casimir_quadratic(A, quadratic_form()).size(), 4u);
}

TEST(Catalog, LoadsAllAlgebras) {
    EXPECT_EQ(catalog().algebras.size(), 36u);
    const SourceFile& d1 = catalog().algebra("D^1_{pq}");
    EXPECT_THROW(resolve_params(d1, {{"p", Gauss(1)}, {"q", Gauss(0)}}), BindError);
    EXPECT_NO_THROW(resolve_params(d1, {{"p", Gauss(2)}, {"q", Gauss(1)}}));
}

TEST(Catalog, FormatStructure) {
    EXPECT_EQ(format_structure(c3a()), "f^2_{4 4} = i\nf^3_{1 4} = 1\n");
}
