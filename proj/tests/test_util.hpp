#pragma once

// Random element generators shared by the unit tests.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ringtower/ringtower.hpp"

namespace rt_test {

using namespace ringtower;

inline mpz_class rand_mpz(SplitMix64& rng, long bits) {
    mpz_class r = 0;
    for (long b = 0; b < bits; b += 32) r = (r << 32) + mpz_class(static_cast<unsigned long>(rng.next() >> 32));
    r >>= static_cast<mp_bitcnt_t>((bits + 31) / 32 * 32 - bits);
    return rng.coin() ? mpz_class(-r) : r;
}

inline Integer rand_int(SplitMix64& rng, long lo = -99, long hi = 99) { return Integer(static_cast<long>(rng.range(lo, hi))); }

inline Rational rand_rat(SplitMix64& rng, long lo = -30, long hi = 30) {
    long d = static_cast<long>(rng.range(1, 12));
    return Rational(mpz_class(static_cast<long>(rng.range(lo, hi))), mpz_class(d));
}

inline Zmod rand_zmod(SplitMix64& rng, const ZmodRing& R) { return R.from_int(rand_mpz(rng, 80)); }

inline FqElem rand_fq(SplitMix64& rng, const FiniteField& F) {
    nmod_poly::Vec c(static_cast<std::size_t>(F.degree()));
    for (auto& x : c) x = rng.below(F.prime());
    return F.from_coeffs(std::move(c));
}

/// Dispatching generator for the coefficient rings used in the oracle suites.
template <class E>
struct Gen;

template <>
struct Gen<Integer> {
    const IntegerRing& R = ZZ();
    Integer operator()(SplitMix64& rng) const { return rand_int(rng, -50, 50); }
};
template <>
struct Gen<Rational> {
    const RationalField& R = QQ();
    Rational operator()(SplitMix64& rng) const { return rand_rat(rng, -9, 9); }
};
template <>
struct Gen<Zmod> {
    const ZmodRing& R;
    Zmod operator()(SplitMix64& rng) const { return rand_zmod(rng, R); }
};
template <>
struct Gen<FqElem> {
    const FiniteField& R;
    FqElem operator()(SplitMix64& rng) const { return rand_fq(rng, R); }
};

/// Random sparse polynomial with up to `terms` terms of total degree <= maxdeg.
template <class E>
MPoly<E> rand_mpoly(SplitMix64& rng, const MPolyRing<E>& R, const Gen<E>& gen, int terms, int maxdeg) {
    std::vector<std::pair<std::vector<std::uint64_t>, E>> t;
    for (int i = 0; i < terms; ++i) {
        std::vector<std::uint64_t> e(static_cast<std::size_t>(R.nvars()), 0);
        long budget = static_cast<long>(rng.range(0, maxdeg));
        for (auto& x : e) {
            x = static_cast<std::uint64_t>(rng.range(0, budget));
            budget -= static_cast<long>(x);
        }
        t.emplace_back(std::move(e), gen(rng));
    }
    return R.from_terms(std::move(t));
}

template <class E>
Poly<E> rand_poly(SplitMix64& rng, const PolyRing<E>& R, const Gen<E>& gen, long deg) {
    std::vector<E> c;
    for (long i = 0; i <= deg; ++i) c.push_back(gen(rng));
    return R.from_coeffs(std::move(c));
}

inline Matrix<Integer> rand_int_matrix(SplitMix64& rng, std::size_t r, std::size_t c, long lo = -99, long hi = 99) {
    std::vector<std::vector<Integer>> rows(r, std::vector<Integer>(c));
    for (auto& row : rows)
        for (auto& x : row) x = rand_int(rng, lo, hi);
    return make_matrix<Integer>(ZZ(), rows);
}

inline Matrix<Rational> to_rational(const Matrix<Integer>& M) {
    return map_matrix<Integer, Rational>(M, QQ(), [](const Integer& x) { return Rational(x); });
}

inline NFElem rand_nf(SplitMix64& rng, const NumberField& K, long lo = -9, long hi = 9, long maxden = 1) {
    std::vector<mpz_class> c(static_cast<std::size_t>(K.degree()));
    for (auto& x : c) x = static_cast<long>(rng.range(lo, hi));
    return K.from_coeffs(std::move(c), static_cast<long>(rng.range(1, maxden)));
}

/// Laplace expansion along the first row; O(n!) and division-free.
template <class E>
E cofactor_det(const std::vector<std::vector<E>>& a, const E& one) {
    const std::size_t n = a.size();
    if (n == 0) return one;
    if (n == 1) return a[0][0];
    E acc = one - one;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<E>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<E> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        E t = a[0][j] * cofactor_det(minor, one);
        acc = (j % 2) ? acc - t : acc + t;
    }
    return acc;
}

template <class E>
E cofactor_det(const Matrix<E>& M) {
    return cofactor_det(M.to_rows(), M.base().one());
}

/// Sylvester matrix built directly from the coefficient lists (high degree first rows).
template <class E>
std::vector<std::vector<E>> sylvester_oracle(const Poly<E>& f, const Poly<E>& g) {
    const long m = f.degree(), n = g.degree();
    const auto zero = f.parent().base().zero();
    std::vector<std::vector<E>> S(static_cast<std::size_t>(m + n), std::vector<E>(static_cast<std::size_t>(m + n), zero));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k <= m; ++k) S[i][i + k] = f.coeff(static_cast<std::size_t>(m - k));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k <= n; ++k) S[n + i][i + k] = g.coeff(static_cast<std::size_t>(n - k));
    return S;
}

} // namespace rt_test
