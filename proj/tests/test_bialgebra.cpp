#include <gtest/gtest.h>

#include <random>

#include "sba/automorphism.hpp"
#include "sba/classify.hpp"
#include "sba/formats.hpp"

using namespace sba;

namespace {

const Catalog& catalog() {
    static const Catalog c = Catalog::load();
    return c;
}

SuperAlgebra c3a() { return build_algebra(catalog().algebra("(C3+A)"), {}); }

struct Row {
    const SourceFile* sf;
    Bindings b;
};

std::vector<Row> all_rows(std::mt19937_64& rng) {
    std::vector<Row> rows;
    for (const auto& sf : catalog().duals)
        for (const auto& c : choice_combinations(sf)) rows.push_back({&sf, sample_params(sf, rng, c)});
    return rows;
}

DualStructure dual_of(const std::string& name, const Bindings& b) { return build_dual(catalog().dual(name), b); }

// Cocycle identity written out term by term from delta(X_i)_{jk} = (-1)^{|j||k|} ft^{jk}_i.
bool naive_cocycle(const SuperAlgebra& A, const DualStructure& d) {
    const Grading& g = A.grading;
    int n = A.n;
    auto delta = [&](int i, int j, int k) { return Gauss(psign(g[j] * g[k])) * d(j, k, i); };
    // x acting on delta(y), component (p,q):
    // sum_a f^p_{xa} delta(y)_{aq} + (-1)^{|x||p|} sum_b delta(y)_{pb} f^q_{xb}
    auto act = [&](int x, int y, int p, int q) {
        Gauss s;
        for (int a = 0; a < n; ++a) s += A(p, x, a) * delta(y, a, q);
        for (int b = 0; b < n; ++b) s += Gauss(psign(g[x] * g[p])) * delta(y, p, b) * A(q, x, b);
        return s;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    Gauss lhs;
                    for (int m = 0; m < n; ++m) lhs += A(m, x, y) * delta(m, p, q);
                    Gauss rhs = act(x, y, p, q) - Gauss(psign(g[x] * g[y])) * act(y, x, p, q);
                    if (lhs != rhs) return false;
                }
    return true;
}

DualStructure random_dual(std::mt19937_64& rng, int density) {
    std::uniform_int_distribution<int> v(-2, 2);
    DualStructure d("random", Grading::standard22());
    for (const auto& u : dual_unknowns(d.grading))
        if (rng() % density == 0) d.set(u.i, u.j, u.k, Gauss(v(rng), rng() % 3 == 0 ? v(rng) : 0));
    return d;
}

Gauss nonzero_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-5, 5);
    Gauss g;
    while (g.is_zero()) g = Gauss(make_rational(v(rng), 1 + rng() % 3), v(rng));
    return g;
}

}  // namespace

TEST(Cocycle, EveryCatalogRowPasses) {
    std::mt19937_64 rng(31);
    auto rows = all_rows(rng);
    EXPECT_EQ(rows.size(), 31u);
    for (const auto& r : rows) {
        SuperBialgebra bi{build_algebra(*r.sf, r.b), build_dual(*r.sf, r.b)};
        EXPECT_TRUE(check_cocycle(bi).pass) << bi.dual.name;
        EXPECT_TRUE(naive_cocycle(bi.base, bi.dual)) << bi.dual.name;
    }
}

TEST(Cocycle, ZeroDualPasses) {
    EXPECT_TRUE(check_cocycle({c3a(), DualStructure("zero", Grading::standard22())}).pass);
}

// Flipping the sign of [X~2,X~4] breaks the cocycle on the pair (X1,X4).
TEST(Cocycle, FlippedSignFails) {
    DualStructure d = dual_of("C2_p=1(+)A11", {{"eps", Gauss(1)}});
    d.set(1, 3, 3, Gauss(-1));
    auto r = check_cocycle({c3a(), d});
    ASSERT_FALSE(r.pass);
    EXPECT_EQ(r.x, 0);
    EXPECT_EQ(r.y, 3);
    EXPECT_FALSE(naive_cocycle(c3a(), d));
}

TEST(Cocycle, EngineAgreesWithNaiveOnRandomDuals) {
    std::mt19937_64 rng(32);
    SuperAlgebra A = c3a();
    int fails = 0;
    for (int t = 0; t < 100; ++t) {
        DualStructure d = random_dual(rng, 4);
        bool naive = naive_cocycle(A, d);
        EXPECT_EQ(check_cocycle({A, d}).pass, naive);
        fails += !naive;
    }
    EXPECT_GT(fails, 10);
}

TEST(DualJacobi, CatalogRowsPassBothForms) {
    std::mt19937_64 rng(33);
    for (const auto& r : all_rows(rng)) {
        SuperBialgebra bi{build_algebra(*r.sf, r.b), build_dual(*r.sf, r.b)};
        EXPECT_TRUE(check_dual_jacobi(bi.dual).pass()) << bi.dual.name;
        EXPECT_TRUE(check_mixed_jacobi(bi).pass()) << bi.dual.name;
        // the dual Jacobi identity is the Jacobi identity of the dual algebra
        EXPECT_TRUE(check_super_jacobi(bi.dual.as_algebra()).pass) << bi.dual.name;
    }
}

TEST(DualJacobi, PerturbationFails) {
    DualStructure d = dual_of("(C3+A)^eps", {{"eps", Gauss(1)}});
    SuperAlgebra A = c3a();
    ASSERT_TRUE(check_mixed_jacobi({A, d}).pass());
    d.set(0, 1, 0, d(0, 1, 0) + Gauss(1));
    auto m = check_mixed_jacobi({A, d});
    EXPECT_FALSE(m.tensor.pass);
    EXPECT_FALSE(m.matrix.pass);
    EXPECT_FALSE(check_cocycle({A, d}).pass);
}

TEST(DualJacobi, TensorAndMatrixFormsAgree) {
    std::mt19937_64 rng(34);
    SuperAlgebra A = c3a();
    int dual_fail = 0, mixed_fail = 0;
    for (int t = 0; t < 100; ++t) {
        DualStructure d = random_dual(rng, 3);
        auto dj = check_dual_jacobi(d);
        auto mj = check_mixed_jacobi({A, d});
        EXPECT_EQ(dj.tensor.pass, dj.matrix.pass);
        EXPECT_EQ(mj.tensor.pass, mj.matrix.pass);
        EXPECT_EQ(dj.tensor.pass, check_super_jacobi(d.as_algebra()).pass);
        EXPECT_EQ(mj.tensor.pass, check_cocycle({A, d}).pass);
        dual_fail += !dj.tensor.pass;
        mixed_fail += !mj.tensor.pass;
    }
    EXPECT_GT(dual_fail, 10);
    EXPECT_GT(mixed_fail, 10);
}

TEST(TheoremOne, AllCasesSatisfyBothIdentities) {
    std::mt19937_64 rng(35);
    SuperAlgebra A = c3a();
    MixedLinearSolution sol = solve_mixed_linear(A);
    for (const auto& c : theorem_one_cases())
        for (int t = 0; t < 15; ++t) {
            std::vector<Gauss> p;
            for (size_t k = 0; k < c.params.size(); ++k) p.push_back(nonzero_gauss(rng));
            DualStructure d;
            ASSERT_TRUE(theorem_one_dual(c.id, p, d));
            EXPECT_TRUE(check_dual_jacobi(d).pass()) << c.id;
            EXPECT_TRUE(check_mixed_jacobi({A, d}).pass()) << c.id;
            EXPECT_TRUE(sol.contains(d)) << c.id;
        }
}

TEST(TheoremOne, CaseThreeExclusion) {
    DualStructure d;
    EXPECT_FALSE(theorem_one_dual(3, {Gauss(1), Gauss(0), Gauss(2)}, d));
    EXPECT_TRUE(theorem_one_dual(3, {Gauss(1), Gauss(1), Gauss(2)}, d));
    EXPECT_THROW(theorem_one_dual(5, {}, d), std::invalid_argument);
}

// The linear solution of the mixed identity leaves quadratic dual Jacobi
// residuals; they vanish on every case and not on a generic kernel element.
TEST(TheoremOne, MixedLinearResiduals) {
    SuperAlgebra A = c3a();
    MixedLinearSolution sol = solve_mixed_linear(A);
    EXPECT_FALSE(sol.residuals.empty());
    EXPECT_EQ(sol.free_names.size(), sol.kernel.size());
    auto env_of = [&](const DualStructure& d) {
        std::map<std::string, Gauss> env;
        for (const auto& u : sol.unknowns) env[u.name()] = d(u.i, u.j, u.k);
        return env;
    };
    std::mt19937_64 rng(36);
    for (const auto& c : theorem_one_cases()) {
        std::vector<Gauss> p;
        for (size_t k = 0; k < c.params.size(); ++k) p.push_back(nonzero_gauss(rng));
        DualStructure d;
        ASSERT_TRUE(theorem_one_dual(c.id, p, d));
        auto env = env_of(d);
        for (const auto& r : sol.residuals) EXPECT_TRUE(r.evaluate(env).is_zero()) << c.id;
    }
    // sum of all kernel vectors is in the mixed solution space but fails dual Jacobi
    DualStructure g("generic", A.grading);
    for (size_t u = 0; u < sol.unknowns.size(); ++u) {
        Gauss v;
        for (const auto& k : sol.kernel) v += k[u];
        g.set(sol.unknowns[u].i, sol.unknowns[u].j, sol.unknowns[u].k, v);
    }
    EXPECT_TRUE(check_mixed_jacobi({A, g}).pass());
    EXPECT_FALSE(check_dual_jacobi(g).pass());
    bool some_nonzero = false;
    for (const auto& r : sol.residuals) some_nonzero = some_nonzero || !r.evaluate(env_of(g)).is_zero();
    EXPECT_TRUE(some_nonzero);
}

TEST(Double, SignedPairingIsInvariant) {
    std::mt19937_64 rng(37);
    for (const auto& r : all_rows(rng)) {
        SuperBialgebra bi{build_algebra(*r.sf, r.b), build_dual(*r.sf, r.b)};
        SuperAlgebra D = drinfeld_double(bi);
        EXPECT_EQ(D.n, 8);
        EXPECT_TRUE(check_super_jacobi(D).pass) << bi.dual.name;
        auto s = check_ad_invariance(D, double_pairing(bi.base.grading, true));
        EXPECT_TRUE(s.pass) << bi.dual.name;
        EXPECT_FALSE(s.degenerate);
        EXPECT_FALSE(check_ad_invariance(D, double_pairing(bi.base.grading, false)).pass) << bi.dual.name;
    }
}

TEST(Double, BrokenDualBreaksJacobi) {
    DualStructure d = dual_of("(C3+A)^eps", {{"eps", Gauss(1)}});
    d.set(0, 1, 0, d(0, 1, 0) + Gauss(1));
    EXPECT_FALSE(check_super_jacobi(drinfeld_double({c3a(), d})).pass);
}

TEST(CatalogReadings, C4AlternativeFailsMixedJacobi) {
    for (int eps : {1, -1}) {
        DualStructure adopted = dual_of("C4(+)A11", {{"eps", Gauss(eps)}});
        EXPECT_TRUE(check_mixed_jacobi({c3a(), adopted}).pass());
        DualStructure alt("alternative", Grading::standard22());
        alt.set(1, 2, 2, Gauss(eps));
        alt.set(1, 3, 2, Gauss(1));
        alt.set(1, 3, 3, Gauss(eps));
        auto m = check_mixed_jacobi({c3a(), alt});
        EXPECT_FALSE(m.tensor.pass);
        EXPECT_FALSE(m.matrix.pass);
    }
}

TEST(Equivalence, SameDualFoundWithVerifiedWitness) {
    SuperAlgebra A = c3a();
    DualStructure d = dual_of("(C3+A)_k^eps", {{"eps", Gauss(1)}, {"k", Gauss(2)}});
    auto r = classify_pair(d, d, A);
    ASSERT_EQ(r.verdict, Equivalence::Found);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(is_automorphism(*r.witness, A).pass);
    EXPECT_EQ(transform_dual(*r.witness, d), d);
}

TEST(Equivalence, SeparatedByInvariant) {
    SuperAlgebra A = c3a();
    auto r = classify_pair(dual_of("C2_p=1(+)A11", {{"eps", Gauss(1)}}), dual_of("C3(+)A11.i", {}), A);
    EXPECT_EQ(r.verdict, Equivalence::InequivalentByInvariant);
    EXPECT_FALSE(r.detail.empty());
    EXPECT_FALSE(r.witness);
}

TEST(Equivalence, TransportIsRecovered) {
    SuperAlgebra A = c3a();
    std::mt19937_64 rng(38);
    for (const auto& name : {"(C3+A)^eps", "C2_p=1(+)A11", "C4(+)A11"}) {
        DualStructure d = dual_of(name, {{"eps", Gauss(1)}});
        Matrix M = c3a_family_member(Gauss(2), Gauss(-3), Gauss(5), Gauss(7));
        DualStructure moved = transform_dual(M, d, &A);
        auto r = classify_pair(d, moved, A);
        ASSERT_EQ(r.verdict, Equivalence::Found) << name << ": " << r.detail;
        EXPECT_TRUE(is_automorphism(*r.witness, A).pass);
        EXPECT_EQ(transform_dual(*r.witness, d), moved) << name;
    }
}

TEST(Equivalence, SignsOfEpsAreInequivalent) {
    SuperAlgebra A = c3a();
    auto r = classify_pair(dual_of("(C3+A)^eps", {{"eps", Gauss(1)}}), dual_of("(C3+A)^eps", {{"eps", Gauss(-1)}}), A);
    EXPECT_TRUE(r.verdict == Equivalence::InequivalentByInvariant || r.verdict == Equivalence::InequivalentBySearch)
        << to_string(r.verdict);
}
