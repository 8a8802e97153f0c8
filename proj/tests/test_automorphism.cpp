#include <gtest/gtest.h>

#include <random>

#include "sba/automorphism.hpp"
#include "sba/formats.hpp"

using namespace sba;

namespace {

const Catalog& catalog() {
    static const Catalog c = Catalog::load();
    return c;
}

SuperAlgebra c3a() { return build_algebra(catalog().algebra("(C3+A)"), {}); }

std::vector<Gauss> row(const Matrix& M, int i) {
    std::vector<Gauss> r(M.cols);
    for (int j = 0; j < M.cols; ++j) r[j] = M(i, j);
    return r;
}

// Direct oracle: with X'_a the rows of M, [X'_a, X'_b] = f^k_{ab} X'_k.
bool preserves_brackets(const Matrix& M, const SuperAlgebra& A) {
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
            std::vector<Gauss> rhs(A.n);
            for (int k = 0; k < A.n; ++k)
                for (int l = 0; l < A.n; ++l) rhs[l] += A(k, a, b) * M(k, l);
            if (A.bracket(row(M, a), row(M, b)) != rhs) return false;
        }
    return true;
}

// Direct oracle for a basis change: [X'_i, X'_j] = f'^k_{ij} X'_k with X'_i the rows of M.
bool expresses_in_new_basis(const SuperAlgebra& old, const Matrix& M, const SuperAlgebra& moved) {
    for (int i = 0; i < old.n; ++i)
        for (int j = 0; j < old.n; ++j) {
            std::vector<Gauss> rhs(old.n);
            for (int k = 0; k < old.n; ++k)
                for (int l = 0; l < old.n; ++l) rhs[l] += moved(k, i, j) * M(k, l);
            if (old.bracket(row(M, i), row(M, j)) != rhs) return false;
        }
    return true;
}

Gauss nonzero_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-6, 6);
    Gauss g;
    while (g.is_zero()) g = Gauss(make_rational(v(rng), 1 + rng() % 4), v(rng));
    return g;
}

}  // namespace

TEST(Automorphism, IdentityPasses) {
    auto r = is_automorphism(Matrix::identity(4), c3a());
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.matrix_form_pass);
}

TEST(Automorphism, FamilyMemberPasses) {
    Matrix M = c3a_family_member(Gauss(2), Gauss(3), Gauss(5), Gauss(7));
    EXPECT_TRUE(is_automorphism(M, c3a()).pass);
    EXPECT_TRUE(preserves_brackets(M, c3a()));
}

// [X'_1, X'_4] = A11 A44 [X1, X4] = 6 X3, but X'_3 = A33 X3 = X3.
TEST(Automorphism, WrongDiagonalEntryFails) {
    Matrix M = c3a_family_member(Gauss(2), Gauss(3), Gauss(5), Gauss(7));
    M(2, 2) = Gauss(1);
    auto r = is_automorphism(M, c3a());
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.matrix_form_pass);
    EXPECT_EQ(r.witness, (std::array<int, 3>{0, 3, 2}));
    EXPECT_EQ(r.lhs, Gauss(5));
    EXPECT_FALSE(preserves_brackets(M, c3a()));
}

TEST(Automorphism, RejectsSingularAndMixedMatrices) {
    EXPECT_THROW(is_automorphism(Matrix(4, 4), c3a()), std::domain_error);
    EXPECT_THROW(is_automorphism(Matrix::identity(3), c3a()), std::invalid_argument);
    Matrix M = Matrix::identity(4);
    M(0, 2) = Gauss(1);
    auto r = is_automorphism(M, c3a());
    EXPECT_FALSE(r.block_diagonal);
    EXPECT_FALSE(r.pass);
}

TEST(Automorphism, EngineAgreesWithDirectOracle) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> v(-2, 2);
    SuperAlgebra A = c3a();
    int passes = 0;
    for (int t = 0; t < 400; ++t) {
        Matrix M = c3a_family_member(nonzero_gauss(rng), nonzero_gauss(rng), Gauss(v(rng)), Gauss(v(rng)));
        // perturb one even-even or odd-odd entry half of the time
        if (t % 2) {
            int i = rng() % 4, j = (i < 2) ? rng() % 2 : 2 + rng() % 2;
            M(i, j) += Gauss(v(rng));
        }
        if (!inverse(M)) continue;
        bool direct = preserves_brackets(M, A);
        EXPECT_EQ(is_automorphism(M, A).pass, direct);
        passes += direct;
    }
    EXPECT_GT(passes, 200);
}

TEST(Family, C3APattern) {
    AutomorphismFamily fam = solve_automorphism_family(c3a());
    EXPECT_FALSE(fam.stalled);
    EXPECT_FALSE(fam.inconsistent);
    EXPECT_EQ(fam.free, (std::vector<std::string>{"A11", "A12", "A43", "A44"}));
    EXPECT_TRUE(fam.nonzero.count("A11"));
    EXPECT_TRUE(fam.nonzero.count("A44"));
    Matrix M = fam.instantiate({{"A11", Gauss(2)}, {"A44", Gauss(3)}, {"A12", Gauss(5)}, {"A43", Gauss(7)}});
    EXPECT_EQ(M, c3a_family_member(Gauss(2), Gauss(3), Gauss(5), Gauss(7)));
    EXPECT_TRUE(fam.residual.empty());
}

TEST(Family, AbelianKeepsEveryBlockEntry) {
    SuperAlgebra A("abelian", Grading::standard22());
    AutomorphismFamily fam = solve_automorphism_family(A);
    EXPECT_EQ(fam.free.size(), 8u);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool same = (i < 2) == (j < 2);
            EXPECT_EQ(fam.pattern[i][j], same ? Poly::var(entry_name(i, j)) : Poly()) << i << j;
        }
    EXPECT_EQ(fam.nonvanishing.size(), 2u);
}

TEST(Family, EveryCatalogAlgebraGivesAutomorphisms) {
    std::mt19937_64 rng(5);
    for (const auto& sf : catalog().algebras) {
        SuperAlgebra A = build_algebra(sf, sample_params(sf, rng));
        AutomorphismFamily fam = solve_automorphism_family(A);
        if (fam.stalled || !fam.residual.empty()) continue;
        std::map<std::string, Gauss> vals;
        for (const auto& v : fam.free) vals[v] = nonzero_gauss(rng);
        Matrix M = fam.instantiate(vals);
        if (!inverse(M)) continue;
        EXPECT_TRUE(preserves_brackets(M, A)) << sf.name;
    }
}

TEST(Transport, IdentityAndZero) {
    DualStructure d = build_dual(catalog().dual("C3(+)A11.i"), {});
    EXPECT_EQ(transform_dual(Matrix::identity(4), d), d);
    DualStructure z("zero", Grading::standard22());
    EXPECT_TRUE(transform_dual(c3a_family_member(Gauss(2), Gauss(3), Gauss(5), Gauss(7)), z).is_zero());
    EXPECT_THROW(transform_dual(Matrix(4, 4), d), std::domain_error);
    Matrix bad = Matrix::identity(4);
    bad(2, 2) = Gauss(2);
    SuperAlgebra A = c3a();
    EXPECT_THROW(transform_dual(bad, d, &A), std::invalid_argument);
}

TEST(Transport, ComposesAndInverts) {
    SuperAlgebra A = c3a();
    std::mt19937_64 rng(12);
    for (const auto& sf : catalog().duals) {
        Bindings b = sample_params(sf, rng, choice_combinations(sf).front());
        DualStructure d = build_dual(sf, b);
        Matrix M = c3a_family_member(nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng));
        Matrix N = c3a_family_member(nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng));
        EXPECT_EQ(transform_dual(*inverse(M), transform_dual(M, d)), d) << sf.name;
        EXPECT_EQ(transform_dual(N, transform_dual(M, d)), transform_dual(M * N, d)) << sf.name;
    }
}

TEST(Transport, AutomorphismsPreserveTheBialgebraIdentities) {
    SuperAlgebra A = c3a();
    std::mt19937_64 rng(13);
    int runs = 0;
    for (const auto& name : {"(C3+A)^eps", "(C3+A)_k^eps"}) {
        const SourceFile& sf = catalog().dual(name);
        for (const auto& c : choice_combinations(sf)) {
            SuperBialgebra bi{build_algebra(sf, sample_params(sf, rng, c)), {}};
            bi.dual = build_dual(sf, sample_params(sf, rng, c));
            ASSERT_EQ(bi.base.f, A.f) << name;
            ++runs;
            Matrix M = c3a_family_member(nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng), nonzero_gauss(rng));
            DualStructure moved = transform_dual(M, bi.dual, &A);
            EXPECT_TRUE(check_dual_jacobi(moved).pass()) << name;
            EXPECT_TRUE(check_mixed_jacobi({A, moved}).pass()) << name;
            EXPECT_TRUE(check_cocycle({A, moved}).pass) << name;
        }
    }
    EXPECT_EQ(runs, 4);
}

TEST(ChangeBasis, AgreesWithDirectExpansion) {
    SuperAlgebra A = c3a();
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int t = 0; t < 40; ++t) {
        Matrix M(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if ((i < 2) == (j < 2)) M(i, j) = Gauss(v(rng), v(rng));
        if (!inverse(M)) continue;
        EXPECT_TRUE(expresses_in_new_basis(A, M, change_basis(A, M)));
    }
    Matrix mixed = Matrix::identity(4);
    mixed(1, 3) = Gauss(1);
    EXPECT_THROW(change_basis(A, mixed), std::invalid_argument);
}

// Each coboundary pair file is the catalog row written in the real-form basis.
TEST(ChangeBasis, PairFilesLinkToCatalogRows) {
    std::mt19937_64 rng(15);
    for (const auto& sf : catalog().pairs) {
        const SourceFile& t3 = catalog().dual(sf.meta.at("table3"));
        Matrix M = build_matrix(sf);
        for (const auto& combo : choice_combinations(sf)) {
            Bindings b = sample_params(sf, rng, combo);
            Bindings tb = b;
            if (sf.meta.count("table3_eps")) tb["eps"] = -b.at("eps");
            Bindings tb2 = resolve_params(t3, tb, true);
            SuperAlgebra old = build_algebra(t3, tb2);
            SuperAlgebra real = build_algebra(sf, b);
            EXPECT_TRUE(expresses_in_new_basis(old, M, real)) << sf.name;
            // dual generators move with the inverse transpose
            Matrix W = inverse(M)->transpose();
            EXPECT_TRUE(expresses_in_new_basis(build_dual(t3, tb2).as_algebra(), W, build_dual(sf, b).as_algebra()))
                << sf.name;
        }
    }
}
