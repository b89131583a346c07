#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "integer.hpp"
#include "matrix/det.hpp"
#include "matrix/matrix.hpp"
#include "nmod_poly.hpp"
#include "poly.hpp"
#include "zmod.hpp"

namespace ringtower {

/// Division-free resultant: Berkowitz determinant of the Sylvester matrix.
template <class E>
E resultant_sylvester(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    const auto& K = f.parent().base();
    if (f.is_zero() || g.is_zero()) return K.zero();
    auto rows = sylvester_rows(f, g);
    if (rows.empty()) return K.one();
    return det_berkowitz(make_matrix<E>(K, rows));
}

/// Subresultant PRS, falling back to the Sylvester determinant when a zero
/// divisor stops the PRS. res(0, g) = 0.
template <class E>
E resultant(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    if (f.is_zero() || g.is_zero()) return f.parent().base().zero();
    if constexpr (ring_traits<E>::is_domain) {
        return resultant_prs(f, g);
    } else {
        try {
            return resultant_prs(f, g);
        } catch (const ImpossibleInverse&) {
            return resultant_sylvester(f, g);
        }
    }
}

/// Resultant over Z by CRT over word primes below 2^62 until the modulus
/// exceeds twice the Hadamard bound |f|_2^deg g * |g|_2^deg f.
inline Integer resultant_multimodular(const Poly<Integer>& f, const Poly<Integer>& g) {
    check_parents(f, g);
    if (f.is_zero() || g.is_zero()) return Integer(0);
    long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Integer(1);
    auto norm_ceil = [](const Poly<Integer>& h) {
        mpz_class s = 0;
        for (const auto& c : h.coeffs()) s += c.value() * c.value();
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
        return mpz_class(r + 1);
    };
    mpz_class bound, t;
    mpz_pow_ui(bound.get_mpz_t(), norm_ceil(f).get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(t.get_mpz_t(), norm_ceil(g).get_mpz_t(), static_cast<unsigned long>(m));
    bound = 2 * bound * t;
    mpz_class lcs = f.lc().value() * g.lc().value();

    mpz_class acc = 0, modulus = 1;
    std::uint64_t p = std::uint64_t(1) << 62;
    auto reduce = [](const Poly<Integer>& h, std::uint64_t q) {
        nmod_poly::Vec v(h.length());
        mpz_class qq(static_cast<unsigned long>(q)), r;
        for (std::size_t i = 0; i < h.length(); ++i) {
            mpz_fdiv_r(r.get_mpz_t(), h.coeffs()[i].value().get_mpz_t(), qq.get_mpz_t());
            v[i] = r.get_ui();
        }
        return v;
    };
    while (modulus <= bound) {
        p = nmod::prev_prime(p);
        mpz_class pz(static_cast<unsigned long>(p));
        if (mpz_divisible_p(lcs.get_mpz_t(), pz.get_mpz_t())) continue;
        std::uint64_t r = nmod_poly::resultant(reduce(f, p), reduce(g, p), p);
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        mpz_class d = (mpz_class(static_cast<unsigned long>(r)) - acc) % pz;
        if (d < 0) d += pz;
        acc += modulus * ((d * minv) % pz);
        modulus *= pz;
    }
    if (acc > modulus / 2) acc -= modulus;
    return Integer(acc);
}

} // namespace ringtower
