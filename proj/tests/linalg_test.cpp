#include <gtest/gtest.h>

#include "hpi/algebra/standard.hpp"
#include "hpi/linalg/echelon.hpp"
#include "hpi/linalg/ops.hpp"
#include "test_util.hpp"

using namespace hpi;
using namespace hpi::testing;

TEST(Subspace, SpanIntersectSum) {
    auto a = span<Q>({qv({1, 0}), qv({0, 1})}, 2);
    auto b = span<Q>({qv({1, 1})}, 2);
    EXPECT_EQ(intersect(a, b), b);
    EXPECT_EQ(span<Q>({qv({1, 0})}, 2) + b, Subspace<Q>::full(2));
    EXPECT_EQ(rank(Matrix<Q>(3, 4)), 0u);
    EXPECT_THROW(a + span<Q>({qv({1, 0, 0})}, 3), Error);
}

TEST(Subspace, CanonicalBasis) {
    auto v = span<Q>({qv({2, 4, 6}), qv({1, 1, 1}), qv({3, 5, 7})}, 3);
    EXPECT_EQ(v.dim(), 2u);
    EXPECT_EQ(span(v.basis(), 3), v);
    EXPECT_EQ(v.basis_vector(0), qv({1, 0, -1}));
    EXPECT_EQ(v.basis_vector(1), qv({0, 1, 2}));
    EXPECT_TRUE(v.contains(qv({0, 1, 2})));
    EXPECT_FALSE(v.contains(qv({0, 0, 1})));
}

TEST(Matrix, RankSubmultiplicative) {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(rng, 4, 3, -1, 1), b = random_matrix(rng, 3, 5, -1, 1);
        auto r = rank(a * b);
        EXPECT_LE(r, std::min(rank(a), rank(b)));
        // Bareiss agrees with plain RREF
        EXPECT_EQ(rank(a), rref(a).pivots.size());
    }
}

TEST(Matrix, KernelSolveInverse) {
    auto m = qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto ker = kernel(m);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_TRUE(is_zero_vec(m.apply(ker[0])));
    auto x = solve(m, qv({6, 12, 2}));
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), qv({6, 12, 2}));
    EXPECT_FALSE(solve(m, qv({1, 0, 0})));
    EXPECT_FALSE(inverse(m));
    auto g = qm({{2, 1}, {1, 1}});
    EXPECT_EQ(g * *inverse(g), Matrix<Q>::identity(2));
}

TEST(BilinearImage, UpperTriangular) {
    auto ut2 = standard::upper_triangular<Q>(2);  // e11, e12, e22
    auto e11 = span<Q>({qv({1, 0, 0})}, 3), e12 = span<Q>({qv({0, 1, 0})}, 3);
    EXPECT_TRUE(bilinear_image(e12, e12, ut2.table()).is_zero_space());
    EXPECT_EQ(bilinear_image(e11, e12, ut2.table()), e12);
    auto m2 = standard::matrix_algebra<Q>(2);
    auto full = Subspace<Q>::full(4);
    EXPECT_EQ(bilinear_image(full, full, m2.table()), full);
}

TEST(StableClosureShrink, Cases) {
    auto v = span<Q>({qv({0, 1})}, 2);  // span{x} in F[x]/(x^2), basis {1, x}
    auto vop = qm({{0, 1}, {0, 0}});    // v: 1 -> 0, x -> 1
    EXPECT_TRUE(stable_closure_shrink(v, {vop}).is_zero_space());
    EXPECT_EQ(stable_closure_shrink(v, {}), v);
    auto d = qm({{1, 0}, {0, -1}});
    EXPECT_EQ(stable_closure_shrink(v, {d}), v);
    // result stable and contained, on a random case
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto op = random_matrix(rng, 4, 4, -1, 1);
        auto w = span<Q>({qv({1, 0, 0, 1}), qv({0, 1, 1, 0}), qv({0, 0, 1, 1})}, 4);
        auto u = stable_closure_shrink(w, {op});
        EXPECT_TRUE(w.contains(u));
        EXPECT_TRUE(u.contains(image(op, u)));
    }
}

TEST(EquivariantProjection, TrivialCases) {
    auto ops = standard::matrix_algebra<Q>(2).left_mults();
    EXPECT_EQ(equivariant_projection(4, ops, Subspace<Q>::full(4)), Matrix<Q>::identity(4));
    EXPECT_EQ(equivariant_projection(4, ops, Subspace<Q>(4)), Matrix<Q>(4, 4));
}

TEST(EquivariantProjection, UT2Bimodule) {
    auto ut2 = standard::upper_triangular<Q>(2);
    std::vector<Matrix<Q>> ops;
    for (auto b : {qv({1, 0, 0}), qv({0, 0, 1})}) {
        ops.push_back(ut2.left_mult(b));
        ops.push_back(ut2.right_mult(b));
    }
    // S = span{e12} inside the whole algebra: complement span{e11, e22}
    auto s = span<Q>({qv({0, 1, 0})}, 3);
    auto p = equivariant_projection(3, ops, s);
    EXPECT_EQ(p * p, p);
    for (const auto& t : ops) EXPECT_EQ(p * t, t * p);
    EXPECT_EQ(image(p, Subspace<Q>::full(3)), s);
    EXPECT_EQ(span(kernel(p), 3), span<Q>({qv({1, 0, 0}), qv({0, 0, 1})}, 3));
}

TEST(EquivariantProjection, NotCompletelyReducible) {
    // F[x]/(x^2) as a module over itself: span{x} has no invariant complement
    auto ops = standard::truncated_polynomial<Q>(2).left_mults();
    try {
        equivariant_projection(2, ops, span<Q>({qv({0, 1})}, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_completely_reducible);
    }
}

TEST(RankAccumulator, AgreesWithDenseRank) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(rng, 12, 7, -1, 1);
        RankAccumulator<Q> acc(7);
        for (std::size_t i = 0; i < m.rows(); ++i) acc.add(m.row(i));
        EXPECT_EQ(acc.rank(), rank(m));
        // split and merge in either order
        RankAccumulator<Q> a(7), b(7);
        for (std::size_t i = 0; i < m.rows(); ++i) (i % 2 ? a : b).add(m.row(i));
        a.merge(b);
        EXPECT_EQ(a.rank(), rank(m));
        EXPECT_EQ(span(a.basis_rows(), 7), span(m.row_vectors(), 7));
    }
}
