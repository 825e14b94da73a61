#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace artinian;
using testing_helpers::random_matrix;

TEST(PrimeField, EveryNonzeroElementHasAnInverse) {
    PrimeField f(101);
    for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(PrimeField, CanonicalResidues) {
    PrimeField f(7);
    EXPECT_EQ(f.from_int(-1), 6u);
    EXPECT_EQ(f.from_int(15), 1u);
    EXPECT_EQ(f.sub(2, 5), 4u);
    EXPECT_EQ(f.neg(0), 0u);
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_EQ(PrimeField().characteristic(), 32003u);
}

TEST(PrimeField, LargeProductsDoNotOverflow) {
    PrimeField f(2147483647u);
    auto a = f.from_int(2147483646);
    EXPECT_EQ(f.mul(a, a), 1u);
}

TEST(RationalField, ReducedFractions) {
    RationalField q;
    auto a = q.from_fraction(6, -4);
    EXPECT_EQ(q.to_string(a), "-3/2");
    EXPECT_TRUE(q.is_one(q.mul(a, q.inv(a))));
    EXPECT_THROW(q.from_fraction(1, 0), std::domain_error);
    EXPECT_THROW(q.inv(q.zero()), std::domain_error);
}

TEST(Rank, EmptyAndIdentity) {
    PrimeField f2(2);
    EXPECT_EQ(rank(Matrix<PrimeField>(f2, 0, 0)), 0u);
    EXPECT_EQ(rank(Matrix<PrimeField>::identity(f2, 3)), 3u);
}

TEST(Rank, FourByThreeBidiagonalOverQ) {
    // Evaluating the linear entries at x = 2, y = 3 keeps full column rank.
    RationalField q;
    Matrix<RationalField> a(q, 4, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        a(c, c) = q.from_int(3);
        a(c + 1, c) = q.from_int(-2);
    }
    EXPECT_EQ(rank(a), 3u);
}

TEST(Rank, EqualsRankOfTranspose) {
    std::mt19937_64 rng(7);
    PrimeField f(7);
    RationalField q;
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        auto a = random_matrix(f, r, c, rng, 40);
        EXPECT_EQ(rank(a), rank(a.transpose()));
        auto b = random_matrix(q, r, c, rng, 40);
        EXPECT_EQ(rank(b), rank(b.transpose()));
        EXPECT_LE(rank(a), std::min(r, c));
    }
}

TEST(Kernel, IdentityAndZero) {
    PrimeField f(5);
    EXPECT_EQ(kernel_basis(Matrix<PrimeField>::identity(f, 4)).cols(), 0u);
    EXPECT_EQ(kernel_basis(Matrix<PrimeField>(f, 2, 3)).cols(), 3u);
}

TEST(Kernel, RowVectorOverF2MatchesEnumeration) {
    PrimeField f2(2);
    Matrix<PrimeField> a(f2, 1, 2);
    a(0, 0) = a(0, 1) = 1;
    auto k = kernel_basis(a);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(k(0, 0), 1u);
    EXPECT_EQ(k(1, 0), 1u);
    std::size_t solutions = 0;
    for (std::uint32_t u = 0; u < 2; ++u)
        for (std::uint32_t v = 0; v < 2; ++v) solutions += (u + v) % 2 == 0;
    EXPECT_EQ(solutions, 2u);
}

TEST(Kernel, AnnihilatedIndependentAndCounted) {
    std::mt19937_64 rng(11);
    RationalField q;
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
        auto a = random_matrix(q, r, c, rng, 50);
        auto k = kernel_basis(a);
        EXPECT_TRUE((a * k).is_zero());
        EXPECT_EQ(rank(k), k.cols());
        EXPECT_EQ(rank(a) + k.cols(), c);
    }
}

TEST(Kernel, SizeMatchesExhaustiveCountOverF2) {
    std::mt19937_64 rng(3);
    PrimeField f2(2);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 9;
        auto a = random_matrix(f2, r, c, rng, 50);
        std::size_t count = 0;
        for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
            Vec<PrimeField> v(c);
            for (std::size_t j = 0; j < c; ++j) v[j] = (mask >> j) & 1u;
            count += is_zero_vector(f2, a.apply(v));
        }
        EXPECT_EQ(count, std::size_t{1} << kernel_basis(a).cols());
    }
}

TEST(Solve, IdentityZeroAndConstructed) {
    PrimeField f(7);
    Vec<PrimeField> b{1, 2, 3};
    EXPECT_EQ(*solve(Matrix<PrimeField>::identity(f, 3), b), b);
    EXPECT_FALSE(solve(Matrix<PrimeField>(f, 3, 3), b).has_value());
    EXPECT_THROW(solve(Matrix<PrimeField>(f, 2, 3), b), std::invalid_argument);

    std::mt19937_64 rng(5);
    int built = 0;
    while (built < 10) {
        auto a = random_matrix(f, 5, 5, rng, 100);
        if (rank(a) != 5) continue;
        ++built;
        Vec<PrimeField> x0(5);
        for (auto& v : x0) v = f.random(rng);
        auto rhs = a.apply(x0);
        auto x = solve(a, rhs);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a.apply(*x), rhs);
        EXPECT_EQ(*x, x0);
    }
}

TEST(Solve, NoneExactlyWhenAugmentedRankGrows) {
    std::mt19937_64 rng(9);
    PrimeField f(3);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto a = random_matrix(f, r, c, rng, 40);
        Vec<PrimeField> b(r);
        for (auto& v : b) v = f.random(rng);
        Matrix<PrimeField> aug(f, r, c + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
            aug(i, c) = b[i];
        }
        auto x = solve(a, b);
        EXPECT_EQ(!x.has_value(), rank(aug) > rank(a));
        if (x) { EXPECT_EQ(a.apply(*x), b); }
    }
}

TEST(Echelon, DeterministicOutput) {
    std::mt19937_64 rng(1);
    PrimeField f(32003);
    auto a = random_matrix(f, 6, 9, rng);
    auto e1 = reduced_row_echelon(a), e2 = reduced_row_echelon(a);
    EXPECT_EQ(e1.pivot_cols, e2.pivot_cols);
    EXPECT_TRUE(e1.reduced == e2.reduced);
}

TEST(Subspace, DimensionFormulaAgainstEnumeration) {
    std::mt19937_64 rng(21);
    PrimeField f2(2);
    const std::size_t n = 6;
    for (int t = 0; t < 20; ++t) {
        std::vector<Vec<PrimeField>> u, w;
        for (int i = 0; i < 3; ++i) {
            Vec<PrimeField> a(n), b(n);
            for (std::size_t j = 0; j < n; ++j) {
                a[j] = rng() % 2;
                b[j] = rng() % 2;
            }
            u.push_back(a);
            w.push_back(b);
        }
        auto U = Subspace<PrimeField>::span(f2, n, u), W = Subspace<PrimeField>::span(f2, n, w);
        std::size_t both = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Vec<PrimeField> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = (mask >> j) & 1u;
            both += U.contains(v) && W.contains(v);
        }
        EXPECT_EQ(both, std::size_t{1} << U.intersection_dim(W));
        EXPECT_EQ(U.sum(W).dim() + U.intersection_dim(W), U.dim() + W.dim());
    }
}

TEST(Subspace, KernelSubspaceSpansKernel) {
    std::mt19937_64 rng(4);
    PrimeField f(32003);
    auto a = random_matrix(f, 4, 9, rng);
    auto s = kernel_subspace(a);
    EXPECT_EQ(s.dim(), 9 - rank(a));
    for (const auto& v : s.basis()) EXPECT_TRUE(is_zero_vector(f, a.apply(v)));
    EXPECT_TRUE(s.same_as(Subspace<PrimeField>::span(f, 9, kernel_vectors(a))));
}
