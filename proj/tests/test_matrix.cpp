#include <gtest/gtest.h>

#include "properties.hpp"

using namespace ringtower;
using namespace rt_test;

namespace {

/// charpoly via det(T*I - M) over Z[T] expanded by cofactors.
Poly<Integer> cofactor_charpoly(const Matrix<Integer>& M) {
    const auto& PT = make_poly_ring<Integer>(ZZ(), "T");
    const std::size_t n = M.rows();
    std::vector<std::vector<Poly<Integer>>> a(n, std::vector<Poly<Integer>>(n, PT.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? PT.gen() : PT.zero()) - PT(M(i, j));
    return cofactor_det(a, PT.one());
}

Matrix<Zmod> rand_zmod_matrix(SplitMix64& rng, const ZmodRing& R, std::size_t n) {
    std::vector<std::vector<Zmod>> rows(n, std::vector<Zmod>(n, R.zero()));
    for (auto& row : rows)
        for (auto& x : row) x = R(static_cast<long>(rng.below(R.modulus().get_ui())));
    return make_matrix<Zmod>(R, rows);
}

} // namespace

TEST(Determinant, Examples) {
    auto I3 = identity_matrix<Integer>(ZZ(), 3);
    auto lu = fflu(I3);
    EXPECT_EQ(lu.rank, 3u);
    EXPECT_EQ(lu.det_value, Integer(1));
    for (std::size_t n = 1; n <= 8; ++n) {
        auto I = identity_matrix<Integer>(ZZ(), n);
        EXPECT_EQ(det(I), Integer(1));
        EXPECT_EQ(det_clow(I), Integer(1));
        EXPECT_EQ(det_berkowitz(I), Integer(1));
    }
    EXPECT_THROW(det(make_matrix<Integer>(ZZ(), {{Integer(1), Integer(2)}})), NonSquare);
    EXPECT_THROW(det_clow(make_matrix<Integer>(ZZ(), {{Integer(1), Integer(2)}})), NonSquare);
}

TEST(Determinant, Symbolic2x2) {
    const auto& R = make_mpoly_ring<Integer>(ZZ(), {"a", "b", "c", "d"});
    auto M = make_matrix<MPoly<Integer>>(R, {{R.gen(0), R.gen(1)}, {R.gen(2), R.gen(3)}});
    auto expect = R.parse("a*d - b*c");
    EXPECT_EQ(fflu(M).det_value, expect);
    EXPECT_EQ(det_berkowitz(M), expect);
    EXPECT_EQ(det_clow(M), expect);
}

TEST(Determinant, RankDeficient) {
    auto M = make_matrix<Integer>(ZZ(), {{Integer(1), Integer(2), Integer(3)},
                                         {Integer(2), Integer(4), Integer(6)},
                                         {Integer(1), Integer(0), Integer(1)}});
    auto lu = fflu(M);
    EXPECT_EQ(lu.rank, 2u);
    EXPECT_TRUE(lu.det_value.is_zero());
    EXPECT_TRUE(det_clow(M).is_zero());
}

TEST(Determinant, CofactorOracleUpToSix) {
    EXPECT_EQ(det_cofactor_agreement(11, 5), "");
}

TEST(Determinant, TripleAgreement) {
    EXPECT_EQ(det_triple_agreement(5, 200), "");
}

TEST(Determinant, ZeroDivisorsUseDivisionFreeFallback) {
    const auto& Z6 = make_zmod(6);
    // Bareiss divides by the first pivot 2, which is not a unit mod 6
    auto M = make_matrix<Zmod>(Z6, {{Z6(2), Z6(1), Z6(3)}, {Z6(1), Z6(2), Z6(5)}, {Z6(4), Z6(1), Z6(1)}});
    EXPECT_THROW(fflu(M), ImpossibleInverse);
    Zmod ref = cofactor_det(M);
    EXPECT_EQ(det(M), ref);
    EXPECT_EQ(det_berkowitz(M), ref);
    SplitMix64 rng(6);
    int fell_back = 0;
    for (int rep = 0; rep < 200; ++rep) {
        auto A = rand_zmod_matrix(rng, Z6, 4);
        try {
            fflu(A);
        } catch (const ImpossibleInverse&) {
            ++fell_back;
        }
        ASSERT_EQ(det(A), cofactor_det(A));
    }
    EXPECT_GT(fell_back, 10);
    const auto& Z4 = make_zmod(4);
    for (int rep = 0; rep < 200; ++rep) {
        auto A = rand_zmod_matrix(rng, Z4, 5);
        Zmod b = det_berkowitz(A);
        ASSERT_EQ(det_clow(A), b);
        ASSERT_EQ(det(A), b);
        // constant term of the charpoly is (-1)^n det
        ASSERT_EQ(charpoly_berkowitz(A).coeff(0), -b);
    }
}

TEST(Determinant, Interpolation) {
    const auto& PX = make_poly_ring<Integer>(ZZ(), "x");
    auto x = PX.gen();
    auto D = make_matrix<Poly<Integer>>(PX, {{x, PX.zero()}, {PX.zero(), x}});
    EXPECT_EQ(det_interpolation(D), x * x);
    EXPECT_EQ(det(D), x * x);
    auto C = make_matrix<Poly<Integer>>(PX, {{PX(3), PX(1)}, {PX(4), PX(2)}});
    EXPECT_EQ(det_interpolation(C), PX(2));
    SplitMix64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::vector<Poly<Integer>>> rows(4, std::vector<Poly<Integer>>(4, PX.zero()));
        for (auto& row : rows)
            for (auto& e : row) e = rand_poly(rng, PX, Gen<Integer>{}, static_cast<long>(rng.range(0, 2)));
        auto M = make_matrix<Poly<Integer>>(PX, rows);
        auto ref = cofactor_det(rows, PX.one());
        ASSERT_EQ(det_interpolation(M), ref);
        ASSERT_EQ(det(M), ref);
    }
    // GF(3)[x]: degree bound 4 exceeds the number of points, so det uses clow
    const auto& F3 = make_zmod(3);
    const auto& P3 = make_poly_ring<Zmod>(F3, "x");
    auto y = P3.gen();
    auto S = make_matrix<Poly<Zmod>>(P3, {{y * y, P3.one()}, {P3.one(), y * y}});
    EXPECT_THROW(det_interpolation(S), InsufficientPoints);
    EXPECT_EQ(det(S), pow(y, 4) - P3.one());
}

TEST(Determinant, Multiplicativity) {
    SplitMix64 rng(9);
    for (int rep = 0; rep < 50; ++rep) {
        auto A = rand_int_matrix(rng, 6, 6, -20, 20), B = rand_int_matrix(rng, 6, 6, -20, 20);
        ASSERT_EQ(det(A * B), det(A) * det(B));
        ASSERT_EQ(det(A.transpose()), det(A));
    }
}

TEST(Charpoly, Examples) {
    const auto& PT = make_poly_ring<Integer>(ZZ(), "T");
    auto m = PT.parse("T^3 + 3*T + 1");
    auto C = companion(m);
    EXPECT_EQ(charpoly_danilevsky_ff(C), m);
    EXPECT_EQ(charpoly_berkowitz(C), m);
    EXPECT_EQ(charpoly(C), m);
    EXPECT_EQ(to_q(charpoly_hessenberg(to_rational(C))), to_q(m));
    auto I3 = identity_matrix<Integer>(ZZ(), 3);
    auto cube = pow(PT.gen() - PT.one(), 3);
    EXPECT_EQ(charpoly_danilevsky_ff(I3), cube);
    EXPECT_EQ(charpoly_berkowitz(I3), cube);
    EXPECT_EQ(to_q(charpoly_hessenberg(to_rational(I3))), to_q(cube));
    EXPECT_EQ(to_string(charpoly(make_matrix<Integer>(ZZ(), {{Integer(1), Integer(2)}, {Integer(3), Integer(4)}}))),
              "T^2 + -5*T + -2");
}

TEST(Charpoly, ThreeWayAgreementAndCayleyHamilton) {
    EXPECT_EQ(charpoly_suite(7, 100, 7), "");
    SplitMix64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        auto M = rand_int_matrix(rng, 7, 7, -99, 99);
        auto b = charpoly(M);
        ASSERT_EQ(b.coeff(0), -det(M));
        ASSERT_TRUE(evaluate_at_matrix(b, M).is_zero());
    }
}

TEST(Charpoly, CofactorOracleSmall) {
    SplitMix64 rng(10);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            auto M = rand_int_matrix(rng, n, n, -9, 9);
            ASSERT_EQ(charpoly_danilevsky_ff(M), cofactor_charpoly(M));
        }
}

TEST(Charpoly, DanilevskyIsFractionFree) {
    SplitMix64 rng(12);
    exact_division_stats() = {};
    for (int rep = 0; rep < 50; ++rep) {
        auto M = rand_int_matrix(rng, 8, 8, -99, 99);
        auto p = charpoly_danilevsky_ff(M);
        ASSERT_TRUE(evaluate_at_matrix(p, M).is_zero());
    }
    EXPECT_GT(exact_division_stats().calls, 0u);
    EXPECT_EQ(exact_division_stats().inexact, 0u);
}

TEST(Charpoly, ZeroPivotsAndBlockSplits) {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        // sparse matrices force row swaps and decoupled blocks
        auto M = rand_int_matrix(rng, 6, 6, -2, 2);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if (rng.below(3) != 0) M(i, j) = Integer(0);
        ASSERT_EQ(charpoly_danilevsky_ff(M), charpoly_berkowitz(M));
    }
}

TEST(Charpoly, FiniteFieldsAndResidueRings) {
    SplitMix64 rng(14);
    const auto& F = make_zmod(101);
    const auto& Z4 = make_zmod(4);
    for (int rep = 0; rep < 30; ++rep) {
        auto A = rand_zmod_matrix(rng, F, 8);
        auto h = charpoly_hessenberg(A);
        ASSERT_EQ(h, charpoly_berkowitz(A));
        ASSERT_TRUE(evaluate_at_matrix(h, A).is_zero());
        auto B = rand_zmod_matrix(rng, Z4, 5);
        auto b = charpoly_berkowitz(B);
        ASSERT_TRUE(evaluate_at_matrix(b, B).is_zero());
        ASSERT_EQ(charpoly(B), b);
    }
}

TEST(Minpoly, Examples) {
    const auto& PQ = make_poly_ring<Rational>(QQ(), "T");
    const auto& PZ = make_poly_ring<Integer>(ZZ(), "T");
    auto T = PQ.gen();
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(minpoly_field(identity_matrix<Rational>(QQ(), n)), T - PQ.one());
    auto D = make_matrix<Rational>(QQ(), {{Rational(1), Rational(0), Rational(0)},
                                          {Rational(0), Rational(1), Rational(0)},
                                          {Rational(0), Rational(0), Rational(2)}});
    EXPECT_EQ(minpoly_field(D), (T - PQ(1)) * (T - PQ(2)));
    EXPECT_EQ(minpoly_integer(MatrixSpace<Integer>::get(ZZ(), 4, 4).zero()), PZ.gen());
    auto D2 = make_matrix<Integer>(ZZ(), {{Integer(2), Integer(0), Integer(0)},
                                          {Integer(0), Integer(2), Integer(0)},
                                          {Integer(0), Integer(0), Integer(3)}});
    EXPECT_EQ(minpoly_integer(D2), (PZ.gen() - PZ(2)) * (PZ.gen() - PZ(3)));
}

TEST(Minpoly, DuplicatedCompanionBlocks) {
    EXPECT_EQ(minpoly_suite(15, 100), "");
    SplitMix64 rng(17);
    const auto& PZ = make_poly_ring<Integer>(ZZ(), "T");
    for (int rep = 0; rep < 20; ++rep) {
        auto m = PZ.from_coeffs({rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5),
                                 rand_int(rng, -5, 5), Integer(1)});
        auto M = duplicated_companion_conjugate(rng, m, 30);
        ASSERT_EQ(M.rows(), 10u);
        KrylovBasis<Rational> kb;
        ASSERT_EQ(minpoly_field(to_rational(M), &kb), to_q(m));
        ASSERT_EQ(kb.B.size(), 10u);
        ASSERT_EQ(charpoly(M), m * m);
    }
}

TEST(Minpoly, DividesCharpoly) {
    SplitMix64 rng(16);
    for (int rep = 0; rep < 40; ++rep) {
        auto M = rand_int_matrix(rng, 6, 6, -3, 3);
        auto mp = minpoly_integer(M);
        auto cp = charpoly(M);
        ASSERT_TRUE(evaluate_at_matrix(mp, M).is_zero());
        ASSERT_TRUE(rem(to_q(cp), to_q(mp)).is_zero());
        ASSERT_EQ(to_q(mp), minpoly_field(to_rational(M)));
    }
}
