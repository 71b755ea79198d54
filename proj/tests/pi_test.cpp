#include <gtest/gtest.h>

#include <random>

#include "examples.hpp"
#include "hpi/pi/witness.hpp"
#include "oracle.hpp"

using namespace hpi;
using namespace hpi::testing;

namespace {

HPolynomial<Q> commutator() {
    HPolynomial<Q> f(identity_monomial({0, 1}));
    f.add(identity_monomial({1, 0}), Q(-1));
    return f;
}

HPolynomial<Q> standard_polynomial(std::size_t n) {
    HPolynomial<Q> f(n);
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    do f.add(identity_monomial(s), Q(detail::permutation_sign(s)));
    while (std::next_permutation(s.begin(), s.end()));
    return f;
}

HPolynomial<Q> random_polynomial(std::mt19937& rng, std::size_t n, std::size_t h) {
    std::uniform_int_distribution<int> c(-2, 2);
    std::uniform_int_distribution<std::size_t> lab(0, h - 1);
    HPolynomial<Q> f(n);
    for (int t = 0; t < 4; ++t) {
        std::vector<std::size_t> s(n);
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        std::vector<std::size_t> l(n);
        for (auto& x : l) x = lab(rng);
        f.add(make_monomial(s, l), Q(c(rng)));
    }
    return f;
}

} // namespace

TEST(Evaluate, Examples) {
    auto ut2 = trivial_action(standard::upper_triangular<Q>(2));
    EXPECT_EQ(evaluate(HPolynomial<Q>(identity_monomial({0, 1})), ut2, {qv({1, 0, 0}), qv({0, 1, 0})}), qv({0, 1, 0}));
    auto sw = sweedler();
    // label of v in the effective image basis
    std::size_t v = 0;
    for (std::size_t i = 0; i < sw.effective_image().dim(); ++i)
        if (sw.effective_image().words[i] == Word{"v"}) v = i;
    EXPECT_EQ(evaluate(HPolynomial<Q>(make_monomial({0}, {v})), sw, {qv({0, 1})}), qv({1, 0}));
    EXPECT_FALSE(is_h_identity(HPolynomial<Q>(make_monomial({0}, {v})), sw));
    auto m2 = trivial_action(standard::matrix_algebra<Q>(2));
    EXPECT_EQ(evaluate(commutator(), m2, {qv({1, 0, 0, 0}), qv({0, 0, 0, 1})}), qv({0, 0, 0, 0}));
    EXPECT_THROW(evaluate(commutator(), m2, {qv({1, 0, 0, 0})}), Error);
}

TEST(Identity, Examples) {
    EXPECT_TRUE(is_h_identity(commutator(), trivial_action(standard::truncated_polynomial<Q>(3))));
    EXPECT_FALSE(is_h_identity(commutator(), trivial_action(standard::upper_triangular<Q>(2))));
    EXPECT_TRUE(is_h_identity(standard_polynomial(4), trivial_action(standard::matrix_algebra<Q>(2))));
    EXPECT_FALSE(is_h_identity(standard_polynomial(3), trivial_action(standard::matrix_algebra<Q>(2))));
}

TEST(Identity, SoundnessSpotCheck) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> c(-3, 3);
    auto act = trivial_action(standard::matrix_algebra<Q>(2));
    auto f = standard_polynomial(4);
    ASSERT_TRUE(is_h_identity(f, act));
    for (int t = 0; t < 100; ++t) {
        std::vector<Vec<Q>> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(qv({c(rng), c(rng), c(rng), c(rng)}));
        EXPECT_TRUE(is_zero_vec(evaluate(f, act, pts)));
    }
}

TEST(Alternate, Basics) {
    auto f = alternate(HPolynomial<Q>(identity_monomial({0, 1})), {0, 1});
    EXPECT_EQ(f, commutator());
    std::mt19937 rng(21);
    auto sw = sweedler();
    const std::size_t h = sw.effective_image().dim();
    for (int t = 0; t < 100; ++t) {
        auto p = random_polynomial(rng, 3, h);
        std::vector<std::size_t> set{0, 2};
        auto a = alternate(p, set);
        EXPECT_EQ(alternate(a, set), Q(2) * a);
        // repeated point inside the alternated set
        std::vector<Vec<Q>> pts{qv({1, 2}), qv({0, 1}), qv({1, 2})};
        EXPECT_TRUE(is_zero_vec(evaluate(a, sw, pts)));
    }
}

TEST(Codimension, MatchesBruteForce) {
    std::vector<HAction<Q>> acts{trivial_action(standard::diagonal<Q>(1)), trivial_action(standard::diagonal<Q>(2)),
                                 trivial_action(standard::upper_triangular<Q>(2)), sweedler(), swap_action(),
                                 grading_dual_action(standard::upper_triangular<Q>(2), z2({0, 1, 0}))};
    for (const auto& act : acts)
        for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(codimension(act, n), brute_force_codimension(act, n)) << n;
}

TEST(Codimension, KnownValues) {
    auto f = trivial_action(standard::diagonal<Q>(1));
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(codimension(f, n), 1u);
    auto ut2 = trivial_action(standard::upper_triangular<Q>(2));
    std::vector<std::size_t> expect{1, 2, 6, 18, 50};  // 2^{n-1}(n-2) + 2
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(codimension(ut2, n), expect[n - 1]) << n;
    auto nil = trivial_action(standard::strictly_upper<Q>(3));
    EXPECT_GT(codimension(nil, 2), 0u);
    for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(codimension(nil, n), 0u);
}

TEST(Codimension, ThreadIndependent) {
    auto act = sweedler();
    for (std::size_t n = 2; n <= 4; ++n) {
        auto one = codimension_stats(act, n, {.threads = 1});
        auto four = codimension_stats(act, n, {.threads = 4});
        EXPECT_EQ(one.value, four.value);
        EXPECT_EQ(one.blocks, four.blocks);
    }
}

TEST(Codimension, BasisInvariance) {
    std::mt19937 rng(99);
    auto ut2 = standard::upper_triangular<Q>(2);
    auto p = random_invertible(rng, 3);
    auto pinv = *inverse(p);
    auto b = StructAlgebra<Q>::from_products({}, 3, [&](std::size_t i, std::size_t j) {
        return pinv.apply(ut2.mul(p.column(i), p.column(j)));
    });
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(codimension(trivial_action(b), n), codimension(trivial_action(ut2), n));
}

TEST(Codimension, BoundAndCap) {
    auto act = sweedler();
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_LE(codimension(act, n), std::size_t{1} << (n + 1));
    try {
        codimension(act, 4, {.row_cap = 10});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::resource_cap);
    }
}

TEST(GradedCodimension, MatchesDualAction) {
    auto m2 = standard::matrix_algebra<Q>(2);
    auto ut2 = standard::upper_triangular<Q>(2);
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(graded_codimension(m2, z2({0, 1, 1, 0}), n), codimension(grading_dual_action(m2, z2({0, 1, 1, 0})), n));
        EXPECT_EQ(graded_codimension(ut2, z2({0, 1, 0}), n), codimension(grading_dual_action(ut2, z2({0, 1, 0})), n));
    }
    Grading one{{"t"}, {{0}}, {0, 0, 0}};
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(graded_codimension(ut2, one, n), codimension(trivial_action(ut2), n));
}

TEST(StarWitness, OneDimensional) {
    auto f = trivial_action(standard::diagonal<Q>(1));
    for (std::size_t k = 1; k <= 2; ++k) {
        auto w = property_star_witness(f, k, 0);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->n1, 0u);
        EXPECT_EQ(w->f.degree(), 2 * k);
        EXPECT_EQ(w->value, qv({1}));
    }
}

TEST(StarWitness, Sweedler) {
    auto sw = sweedler();
    auto w = property_star_witness(sw, 1, 2);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->l, 2u);
    EXPECT_EQ(w->f.degree(), 4 + w->n1);
    // f is alternating in each set: swapping two variables of a set negates it
    std::vector<Vec<Q>> pts;
    for (std::size_t i = 0; i < 4; ++i) pts.push_back(unit_vec<Q>(2, i % 2));
    for (auto z : w->z) pts.push_back(unit_vec<Q>(2, z));
    EXPECT_EQ(evaluate(w->f, sw, pts), w->value);
    std::swap(pts[0], pts[1]);
    EXPECT_EQ(evaluate(w->f, sw, pts), scale(Q(-1), w->value));
}

TEST(StarWitness, NeedsUnit) {
    try {
        property_star_witness(trivial_action(standard::zero_product<Q>(1)), 1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::precondition);
    }
}

TEST(ExponentReport, Examples) {
    auto r = exponent_report(trivial_action(standard::upper_triangular<Q>(2)), 5);
    EXPECT_EQ(r.d, std::optional<std::size_t>(2));
    EXPECT_EQ(r.codim, (std::vector<std::size_t>{1, 2, 6, 18, 50}));
    auto f = exponent_report(trivial_action(standard::diagonal<Q>(1)), 4);
    EXPECT_EQ(f.d, std::optional<std::size_t>(1));
    for (auto x : f.roots) EXPECT_DOUBLE_EQ(x, 1.0);
    auto nil = exponent_report(trivial_action(standard::strictly_upper<Q>(3)), 4);
    EXPECT_TRUE(nil.nilpotent);
    EXPECT_FALSE(nil.d.has_value());
    EXPECT_EQ(nil.codim[3], 0u);
}

TEST(Codimension, MatrixAlgebraClosedFormula) {
    // c_n(M_2) = Catalan(n+1) - binom(n,3) + 1 - 2^n
    auto catalan = [](std::size_t k) {
        std::size_t c = 1;
        for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
        return c;
    };
    auto m2 = trivial_action(standard::matrix_algebra<Q>(2));
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t binom3 = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
        EXPECT_EQ(codimension(m2, n), catalan(n + 1) - binom3 + 1 - (std::size_t{1} << n)) << n;
    }
}
