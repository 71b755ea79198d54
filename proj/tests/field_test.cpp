#include <gtest/gtest.h>

#include <random>

#include "hpi/field/cyclotomic.hpp"
#include "hpi/field/poly.hpp"

using namespace hpi;

namespace {

// Schoolbook long division over Q on plain coefficient vectors (low degree first),
// kept separate from UPoly so it can serve as an oracle.
std::vector<Rational> long_divide(std::vector<Rational> num, const std::vector<Rational>& den,
                                  std::vector<Rational>* rem) {
    std::vector<Rational> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
        Rational c = num[i] / den.back();
        q[i - den.size() + 1] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
        if (i == den.size() - 1) break;
    }
    num.resize(den.size() - 1);
    *rem = num;
    return q;
}

std::vector<Rational> coeffs(const UPoly& p) {
    std::vector<Rational> out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(static_cast<std::size_t>(i)));
    return out;
}

Cyclotomic random_cyclo(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < static_cast<std::size_t>(euler_phi(m)); ++i) c.emplace_back(Rational(d(rng)) / Rational(1 + (d(rng) + 5) % 3));
    return Cyclotomic(m, c);
}

} // namespace

TEST(Rational, ParseAndNormalize) {
    EXPECT_EQ(Rational::parse("6/-4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational::parse("12").str(), "12");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(cyclotomic_polynomial(1).str(), "x - 1");
    EXPECT_EQ(cyclotomic_polynomial(2).str(), "x + 1");
    // x^4 - 1 = (x - 1)(x + 1) Phi_4
    std::vector<Rational> x4m1{Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)};
    std::vector<Rational> xm1sq{Rational(-1), Rational(0), Rational(1)};
    std::vector<Rational> rem;
    auto q = long_divide(x4m1, xm1sq, &rem);
    for (const auto& r : rem) EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(coeffs(cyclotomic_polynomial(4)), q);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXmMinusOne) {
    for (int m = 1; m <= 12; ++m) {
        UPoly prod = UPoly::constant(1);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
        EXPECT_EQ(prod, UPoly::monomial(static_cast<std::size_t>(m)) - UPoly::constant(1)) << m;
        EXPECT_EQ(cyclotomic_polynomial(m).degree(), euler_phi(m));
    }
}

TEST(Cyclotomic, BasicArithmetic) {
    auto z2 = Cyclotomic::zeta(2), z4 = Cyclotomic::zeta(4);
    EXPECT_EQ(z2 * z2, Cyclotomic(1));
    EXPECT_EQ(z4 * z4, Cyclotomic(-1));
    auto inv = z4.inverse();
    EXPECT_EQ(inv, -z4);
    EXPECT_EQ(z4 * (-z4), Cyclotomic(1));
    EXPECT_THROW(Cyclotomic(4, {Rational(0), Rational(0)}).inverse(), Error);
}

TEST(Cyclotomic, OrderMismatch) {
    auto z3 = Cyclotomic::zeta(3), z4 = Cyclotomic::zeta(4);
    EXPECT_THROW(z3 + z4, Error);
    EXPECT_THROW((void)(z3 * z4), Error);
    EXPECT_NO_THROW(z3 + Cyclotomic(Rational(1, 2)));
}

TEST(Cyclotomic, PhiVanishesAtZeta) {
    for (int m = 1; m <= 12; ++m) {
        auto z = Cyclotomic::zeta(m);
        auto phi = cyclotomic_polynomial(m);
        Cyclotomic acc(0);
        for (int k = phi.degree(); k >= 0; --k) acc = acc * z + Cyclotomic(phi.coeff(static_cast<std::size_t>(k)));
        EXPECT_TRUE(acc.is_zero()) << m;
    }
}

TEST(Cyclotomic, PrimitiveRoots) {
    EXPECT_TRUE(is_primitive_root(Cyclotomic::zeta(4), 4));
    EXPECT_FALSE(is_primitive_root(Cyclotomic(-1), 4));
    auto z6 = Cyclotomic::zeta(6);
    EXPECT_TRUE(is_primitive_root(z6 * z6, 3));
    // oracle: enumerate powers of zeta_6^2
    auto w = z6 * z6;
    Cyclotomic p(1);
    int first = 0;
    for (int k = 1; k <= 6 && first == 0; ++k) {
        p = p * w;
        if (p == Cyclotomic(1)) first = k;
    }
    EXPECT_EQ(first, 3);
    EXPECT_TRUE(is_primitive_root(Rational(-1), 2));
    EXPECT_FALSE(is_primitive_root(Rational(1), 2));
}

TEST(Cyclotomic, FieldAxiomsOnRandomSamples) {
    std::mt19937 rng(7);
    for (int m : {3, 4, 5, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
        }
    }
}

TEST(Cyclotomic, CanonicalFormAndParse) {
    auto z = Cyclotomic::zeta(3);
    auto x = Cyclotomic(Rational(3, 2)) - Cyclotomic(2) * z;
    EXPECT_EQ(Cyclotomic::parse(x.str(), 3), x);
    // z^2 = -1 - z in Q(zeta_3)
    EXPECT_EQ(z * z, Cyclotomic(-1) - z);
    EXPECT_EQ(Cyclotomic::parse("z^2", 3).coeffs(), (Cyclotomic(-1) - z).coeffs());
}

TEST(Poly, FactorSquarefree) {
    // (x^2 + 1)(x - 2)(x^2 - 2)
    UPoly x = UPoly::x();
    UPoly f = (x * x + UPoly::constant(1)) * (x - UPoly::constant(2)) * (x * x - UPoly::constant(2));
    auto fs = factor_squarefree(f);
    ASSERT_EQ(fs.size(), 3u);
    UPoly prod = UPoly::constant(1);
    for (const auto& g : fs) prod = prod * g;
    EXPECT_EQ(prod.monic(), f.monic());
    EXPECT_EQ(fs[0].degree(), 1);
}
