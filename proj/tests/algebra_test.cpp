#include <gtest/gtest.h>

#include "hpi/algebra/standard.hpp"
#include "hpi/algebra/structure.hpp"
#include "hpi/field/cyclotomic.hpp"
#include "test_util.hpp"

using namespace hpi;
using namespace hpi::testing;

namespace {

// Oracle for "I is the radical": I is a nilpotent two-sided ideal and A/I has zero radical
// detected by a different route (no nonzero nilpotent ideal among the spans of basis products).
bool nilpotent_ideal(const StructAlgebra<Q>& a, const Subspace<Q>& i) {
    if (!is_two_sided_ideal(a, i)) return false;
    auto p = i;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        if (p.is_zero_space()) return true;
        p = bilinear_image(p, i, a.table());
    }
    return false;
}

} // namespace

TEST(Algebra, Associativity) {
    EXPECT_TRUE(check_associativity(standard::matrix_algebra<Q>(2)));
    auto t = standard::matrix_algebra<Q>(2).table();
    t.at(1, 2, 0) += Q(1);  // e12 e21 gets an extra e11... then perturb
    t.at(0, 1, 1) = Q(2);
    EXPECT_FALSE(check_associativity(StructAlgebra<Q>({}, t)));
    EXPECT_TRUE(check_associativity(standard::diagonal<Q>(1)));
}

TEST(Algebra, AdjoinUnit) {
    auto z = standard::zero_product<Q>(1);
    auto plus = adjoin_unit(z);
    EXPECT_EQ(plus.dim(), 2u);
    // A+ with basis {x, 1} is F[x]/(x^2)
    EXPECT_EQ(plus.basis_product(0, 0), qv({0, 0}));
    EXPECT_EQ(plus.basis_product(1, 0), qv({1, 0}));
    EXPECT_EQ(*plus.unit(), qv({0, 1}));
    EXPECT_EQ(adjoin_unit(standard::matrix_algebra<Q>(2)).dim(), 5u);
}

TEST(Algebra, JacobsonRadical) {
    EXPECT_TRUE(jacobson_radical(standard::matrix_algebra<Q>(2)).is_zero_space());
    auto ut2 = standard::upper_triangular<Q>(2);
    auto j = jacobson_radical(ut2);
    EXPECT_EQ(j, span<Q>({qv({0, 1, 0})}, 3));
    EXPECT_TRUE(nilpotent_ideal(ut2, j));
    auto q = quotient_algebra(ut2, j);
    EXPECT_TRUE(jacobson_radical(q.algebra).is_zero_space());
    auto dual = standard::truncated_polynomial<Q>(2);
    EXPECT_EQ(jacobson_radical(dual), span<Q>({qv({0, 1})}, 2));
    auto ut3 = standard::upper_triangular<Q>(3);
    auto j3 = jacobson_radical(ut3);
    EXPECT_EQ(j3.dim(), 3u);
    EXPECT_TRUE(nilpotent_ideal(ut3, j3));
}

TEST(Algebra, RadicalOfUnitization) {
    for (auto a : {standard::upper_triangular<Q>(2), standard::strictly_upper<Q>(3), standard::diagonal<Q>(2)}) {
        auto j = jacobson_radical(a);
        std::vector<Vec<Q>> lifted;
        for (auto v : j.basis()) {
            v.push_back(Q(0));
            lifted.push_back(v);
        }
        EXPECT_EQ(jacobson_radical(adjoin_unit(a)), span(lifted, a.dim() + 1));
    }
}

TEST(Algebra, Nilpotency) {
    auto ut2 = standard::upper_triangular<Q>(2);
    auto n = is_nilpotent(ut2, span<Q>({qv({0, 1, 0})}, 3));
    EXPECT_TRUE(n.nilpotent);
    EXPECT_EQ(n.index, 2u);
    EXPECT_FALSE(is_nilpotent(standard::matrix_algebra<Q>(2), Subspace<Q>::full(4)).nilpotent);
    auto su3 = standard::strictly_upper<Q>(3);
    auto n3 = is_nilpotent(su3, Subspace<Q>::full(3));
    EXPECT_TRUE(n3.nilpotent);
    EXPECT_EQ(n3.index, 3u);
}

TEST(Algebra, WedderburnMalcev) {
    auto m2 = standard::matrix_algebra<Q>(2);
    EXPECT_EQ(wedderburn_malcev(m2).semisimple, Subspace<Q>::full(4));
    auto ut2 = standard::upper_triangular<Q>(2);
    auto wm = wedderburn_malcev(ut2);
    EXPECT_EQ(wm.semisimple, span<Q>({qv({1, 0, 0}), qv({0, 0, 1})}, 3));
    auto dual = standard::truncated_polynomial<Q>(2);
    EXPECT_EQ(wedderburn_malcev(dual).semisimple, span<Q>({qv({1, 0})}, 2));
}

TEST(Algebra, WedderburnMalcevInvariantsAfterBasisChange) {
    // UT3 in a scrambled basis: the lift must be corrected, not just copied
    std::mt19937 rng(17);
    auto ut3 = standard::upper_triangular<Q>(3);
    const std::size_t n = ut3.dim();
    auto p = random_invertible(rng, n);
    auto pinv = *inverse(p);
    auto b = StructAlgebra<Q>::from_products({}, n, [&](std::size_t i, std::size_t j) {
        return pinv.apply(ut3.mul(p.column(i), p.column(j)));
    });
    auto wm = wedderburn_malcev(b);
    EXPECT_TRUE(intersect(wm.semisimple, wm.radical).is_zero_space());
    EXPECT_TRUE((wm.semisimple + wm.radical).is_full());
    EXPECT_TRUE(wm.semisimple.contains(bilinear_image(wm.semisimple, wm.semisimple, b.table())));
    auto sub = subalgebra(b, wm.semisimple);
    EXPECT_NE(rank(trace_form(sub)), 0u);
    EXPECT_EQ(rank(trace_form(sub)), sub.dim());
}

TEST(Algebra, CentralIdempotents) {
    auto m2 = standard::matrix_algebra<Q>(2);
    auto e = primitive_central_idempotents(m2);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], *m2.unit());
    auto ff = standard::diagonal<Q>(2);
    auto f = primitive_central_idempotents(ff);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], qv({1, 0}));
    EXPECT_EQ(f[1], qv({0, 1}));
    auto ut2 = standard::upper_triangular<Q>(2);
    EXPECT_EQ(center(ut2), span<Q>({qv({1, 0, 1})}, 3));
    EXPECT_EQ(primitive_central_idempotents(ut2).size(), 1u);
}

TEST(Algebra, CentralIdempotentsProperties) {
    // F + F + M2 + UT2 as a block-diagonal algebra in a scrambled basis
    auto d3 = standard::diagonal<Q>(3);
    std::mt19937 rng(4);
    auto p = random_invertible(rng, 3);
    auto pinv = *inverse(p);
    auto b = StructAlgebra<Q>::from_products({}, 3, [&](std::size_t i, std::size_t j) {
        return pinv.apply(d3.mul(p.column(i), p.column(j)));
    });
    b = b.with_unit(find_unit(b));
    auto e = primitive_central_idempotents(b);
    ASSERT_EQ(e.size(), 3u);
    auto sum = zero_vec<Q>(3);
    for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_EQ(b.mul(e[i], e[i]), e[i]);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (i != j) EXPECT_TRUE(is_zero_vec(b.mul(e[i], e[j])));
        sum = add(sum, e[i]);
    }
    EXPECT_EQ(sum, *b.unit());
}

TEST(Algebra, FieldTooSmall) {
    // Q(i) = Q[x]/(x^2 + 1) is a field over Q: its center does not split
    auto a = StructAlgebra<Q>::from_products(
        {}, 2,
        [](std::size_t i, std::size_t j) {
            if (i == 1 && j == 1) return qv({-1, 0});
            return unit_vec<Q>(2, i + j);
        },
        qv({1, 0}));
    auto ff = StructAlgebra<Q>::from_products({}, 4, [&](std::size_t i, std::size_t j) {
        // Q(i) x Q(i) as a 4-dim commutative algebra
        if (i / 2 != j / 2) return zero_vec<Q>(4);
        auto p = a.basis_product(i % 2, j % 2);
        auto out = zero_vec<Q>(4);
        out[2 * (i / 2)] = p[0];
        out[2 * (i / 2) + 1] = p[1];
        return out;
    }, qv({1, 0, 1, 0}));
    try {
        primitive_central_idempotents(ff);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::field_too_small);
    }
    // over Q(zeta_4) the same algebra splits into four idempotents
    using C = Cyclotomic;
    FieldSpec f4{4};
    auto ffc = StructAlgebra<C>::from_products(f4, 4, [&](std::size_t i, std::size_t j) {
        Vec<C> out(4, C(0));
        auto p = ff.basis_product(i, j);
        for (std::size_t k = 0; k < 4; ++k) out[k] = C(p[k]);
        return out;
    }, Vec<C>{C(1), C(0), C(1), C(0)});
    EXPECT_EQ(primitive_central_idempotents(ffc).size(), 4u);
}
