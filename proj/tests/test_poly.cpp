#include <gtest/gtest.h>

#include "test_util.hpp"
#include "ringtower/bench/benchmarks.hpp"

using namespace ringtower;
using namespace rt_test;

namespace {

/// Schoolbook product on coefficient vectors.
template <class E>
Poly<E> oracle_mul(const Poly<E>& f, const Poly<E>& g) {
    if (f.is_zero() || g.is_zero()) return f.parent().zero();
    std::vector<E> c(f.length() + g.length() - 1, f.parent().base().zero());
    for (std::size_t i = 0; i < f.length(); ++i)
        for (std::size_t j = 0; j < g.length(); ++j) c[i + j] = c[i + j] + f.coeffs()[i] * g.coeffs()[j];
    return f.parent().from_coeffs(std::move(c));
}

Poly<Integer> monic_int(SplitMix64& rng, const PolyRing<Integer>& R, long deg) {
    auto f = rand_poly(rng, R, Gen<Integer>{}, deg - 1);
    return f + R.monomial(Integer(1), static_cast<std::size_t>(deg));
}

} // namespace

TEST(Dense, CanonicalFormAndText) {
    const auto& R = make_poly_ring<Integer>(ZZ(), "x");
    auto f = R.from_coeffs({Integer(1), Integer(0), Integer(3), Integer(0), Integer(0)});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.length(), 3u);
    EXPECT_TRUE(R.from_coeffs({Integer(0), Integer(0)}).is_zero());
    EXPECT_EQ(R.zero().degree(), -1);
    EXPECT_EQ(to_string(R.parse("3*x^2 - 2*x + 1")), "3*x^2 + -2*x + 1");
    SplitMix64 rng(1);
    for (int i = 0; i < 100; ++i) {
        auto g = rand_poly(rng, R, Gen<Integer>{}, 6);
        ASSERT_EQ(R.parse(to_string(g)), g);
    }
}

TEST(Dense, ArithmeticMatchesSchoolbook) {
    const auto& R = make_poly_ring<Rational>(QQ(), "x");
    SplitMix64 rng(2);
    for (int i = 0; i < 300; ++i) {
        auto f = rand_poly(rng, R, Gen<Rational>{}, static_cast<long>(rng.range(0, 9)));
        auto g = rand_poly(rng, R, Gen<Rational>{}, static_cast<long>(rng.range(0, 9)));
        ASSERT_EQ(f * g, oracle_mul(f, g));
        if (g.is_zero()) continue;
        auto [q, r] = divrem(f, g);
        ASSERT_EQ(oracle_mul(q, g) + r, f);
        ASSERT_LT(r.degree(), g.degree());
    }
}

TEST(Dense, PseudoDivisionIdentity) {
    const auto& R = make_poly_ring<Integer>(ZZ(), "x");
    SplitMix64 rng(3);
    for (int i = 0; i < 300; ++i) {
        auto f = rand_poly(rng, R, Gen<Integer>{}, static_cast<long>(rng.range(0, 8)));
        auto g = rand_poly(rng, R, Gen<Integer>{}, static_cast<long>(rng.range(1, 5)));
        if (g.degree() < 1) continue;
        auto [q, r] = pseudo_divrem(f, g);
        long e = std::max(0L, f.degree() - g.degree() + 1);
        ASSERT_EQ(f.scale(pow(g.lc(), static_cast<std::uint64_t>(e))), oracle_mul(q, g) + r);
        ASSERT_LT(r.degree(), g.degree());
    }
}

TEST(Dense, GcdContentAndXgcd) {
    const auto& Z = make_poly_ring<Integer>(ZZ(), "x");
    EXPECT_EQ(gcd(Z.parse("6*x^2 + 6*x - 12"), Z.parse("4*x + 4")), Z.parse("2"));
    EXPECT_EQ(gcd(Z.parse("6*(x+1)*(x-2)"), Z.parse("4*(x+1)")), Z.parse("2*x + 2"));
    EXPECT_EQ(content(Z.parse("6*x^2 + 9*x")), Integer(3));
    EXPECT_EQ(primitive_part(Z.parse("-6*x^2 + 9*x")), Z.parse("2*x^2 - 3*x"));
    const auto& Q = make_poly_ring<Rational>(QQ(), "x");
    SplitMix64 rng(4);
    for (int i = 0; i < 100; ++i) {
        auto f = rand_poly(rng, Q, Gen<Rational>{}, 5), h = rand_poly(rng, Q, Gen<Rational>{}, 4);
        auto [g, s, t] = xgcd(f, h);
        ASSERT_EQ(s * f + t * h, g);
        if (!g.is_zero()) {
            ASSERT_TRUE(g.lc().is_one());
            ASSERT_TRUE(rem(f, g).is_zero());
            ASSERT_TRUE(rem(h, g).is_zero());
        }
    }
}

TEST(Dense, DerivativeAndEvaluation) {
    const auto& R = make_poly_ring<Integer>(ZZ(), "x");
    auto f = R.parse("x^3 - 2*x + 5");
    EXPECT_EQ(derivative(f), R.parse("3*x^2 - 2"));
    EXPECT_EQ(evaluate(f, Integer(2)), Integer(9));
    const auto& F7 = make_poly_ring<Zmod>(make_zmod(7), "x");
    EXPECT_TRUE(derivative(F7.parse("x^7 + 1")).is_zero());
}

TEST(Resultant, Examples) {
    const auto& R = make_poly_ring<Integer>(ZZ(), "x");
    auto f = R.parse("x^2 + 1"), g = R.parse("x^2 - 1");
    Integer oracle = cofactor_det(sylvester_oracle(f, g), Integer(1));
    EXPECT_EQ(oracle, Integer(4));
    EXPECT_EQ(resultant(f, g), Integer(4));
    EXPECT_EQ(resultant_sylvester(f, g), Integer(4));
    EXPECT_EQ(resultant_multimodular(f, g), Integer(4));
    EXPECT_EQ(resultant(R.parse("(x - 1)*(x + 5)"), R.parse("(x - 1)*(x^2 + 3)")), Integer(0));
    EXPECT_EQ(resultant(R.zero(), R.zero()), Integer(0));
    EXPECT_EQ(resultant(R.parse("x^3 + 2"), R.parse("5")), Integer(125));
    EXPECT_EQ(resultant(R.parse("5"), R.parse("x^3 + 2")), Integer(125));
    EXPECT_EQ(resultant(R.parse("3"), R.parse("5")), Integer(1));
}

TEST(Resultant, ZeroDivisorsFallBackToSylvester) {
    const auto& Z6 = make_zmod(6);
    const auto& R = make_poly_ring<Zmod>(Z6, "x");
    // leading coefficient 2 is a zero divisor mod 6, so the PRS must give up
    auto f = R.parse("x^3 + 5*x + 1"), g = R.parse("2*x^2 + 3*x + 1");
    EXPECT_THROW(resultant_prs(f, g), ImpossibleInverse);
    Zmod oracle = cofactor_det(sylvester_oracle(f, g), Z6.one());
    EXPECT_EQ(resultant(f, g), oracle);
    SplitMix64 rng(5);
    int fallback = 0;
    for (int i = 0; i < 200; ++i) {
        auto a = rand_poly(rng, R, Gen<Zmod>{Z6}, static_cast<long>(rng.range(1, 4)));
        auto b = rand_poly(rng, R, Gen<Zmod>{Z6}, static_cast<long>(rng.range(1, 3)));
        if (a.degree() < 1 || b.degree() < 1) continue;
        try {
            resultant_prs(a, b);
        } catch (const ImpossibleInverse&) {
            ++fallback;
        }
        ASSERT_EQ(resultant(a, b), cofactor_det(sylvester_oracle(a, b), Z6.one()));
    }
    EXPECT_GT(fallback, 20);
}

TEST(Resultant, AgreesWithSylvesterOracleOverFields) {
    SplitMix64 rng(6);
    const auto& Q = make_poly_ring<Rational>(QQ(), "x");
    const auto& F = make_poly_ring<FqElem>(FiniteField::get(17, 3), "x");
    Gen<FqElem> gf{FiniteField::get(17, 3)};
    for (int i = 0; i < 100; ++i) {
        auto a = rand_poly(rng, Q, Gen<Rational>{}, static_cast<long>(rng.range(1, 4)));
        auto b = rand_poly(rng, Q, Gen<Rational>{}, static_cast<long>(rng.range(1, 4)));
        if (a.degree() >= 1 && b.degree() >= 1) {
            ASSERT_EQ(resultant(a, b), cofactor_det(sylvester_oracle(a, b), QQ().one()));
        }
        auto c = rand_poly(rng, F, gf, static_cast<long>(rng.range(1, 4)));
        auto d = rand_poly(rng, F, gf, static_cast<long>(rng.range(1, 4)));
        if (c.degree() >= 1 && d.degree() >= 1) {
            ASSERT_EQ(resultant(c, d), cofactor_det(sylvester_oracle(c, d), FiniteField::get(17, 3).one()));
        }
    }
}

TEST(Resultant, Properties) {
    const auto& R = make_poly_ring<Integer>(ZZ(), "x");
    SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto f = monic_int(rng, R, rng.range(1, 5));
        auto g = monic_int(rng, R, rng.range(1, 5));
        auto h = monic_int(rng, R, rng.range(1, 4));
        Integer sign = (f.degree() * g.degree()) % 2 ? Integer(-1) : Integer(1);
        ASSERT_EQ(resultant(f, g), sign * resultant(g, f));
        ASSERT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
        ASSERT_EQ(resultant_multimodular(f, g), resultant(f, g));
        ASSERT_EQ(resultant_sylvester(f, g), resultant(f, g));
    }
    auto big = R.parse("123456789123456789*x^7 - 99999999999*x^3 + 17");
    auto big2 = R.parse("-987654321987*x^5 + 3*x^2 - 1000000000000000000001");
    EXPECT_EQ(resultant_multimodular(big, big2), resultant_sylvester(big, big2));
    EXPECT_EQ(resultant(big, big2), resultant_sylvester(big, big2));
}

TEST(Resultant, TowerOfResidueRings) {
    auto [s, t] = bench::resultant_tower(1);
    auto prs = resultant(s, t);
    EXPECT_EQ(prs, resultant_sylvester(s, t));
    EXPECT_TRUE(resultant(s, s).is_zero());
    auto [s2, t2] = bench::resultant_tower(2);
    EXPECT_EQ(resultant(s2, t2), resultant_sylvester(s2, t2));
}
