#pragma once

// Minimal polynomials by spinning: V is covered by Krylov subspaces
// K(v_i) = span{v_i, M v_i, M^2 v_i, ...} of standard basis vectors, and
// minpoly(M) = lcm of the minimal polynomials of M on each K(v_i).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "../integer.hpp"
#include "../poly.hpp"
#include "../zmod.hpp"
#include "matrix.hpp"

namespace ringtower {

/// Reduced echelon basis of the Krylov vectors found so far.
template <class E>
struct KrylovBasis {
    std::vector<std::vector<E>> B;
    std::vector<std::size_t> pivot_cols;
    /// indices j of the generators e_j, in the order used
    std::vector<std::size_t> generators;
};

namespace minpoly_detail {

/// Reduce w against normalised rows (pivot entry 1). Returns the first
/// nonzero column or w.size() when w reduces to zero.
template <class E>
std::size_t reduce(std::vector<E>& w, const std::vector<std::vector<E>>& rows, const std::vector<std::size_t>& piv) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const E f = w[piv[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!rows[k][j].is_zero()) submul(w[j], f, rows[k][j]);
    }
    for (std::size_t j = 0; j < w.size(); ++j)
        if (!w[j].is_zero()) return j;
    return w.size();
}

/// Insert an already reduced nonzero vector, keeping the basis fully reduced.
template <class E>
void insert_reduced(KrylovBasis<E>& kb, std::vector<E> w, std::size_t pc) {
    E s = inv(w[pc]);
    for (auto& x : w) x = x * s;
    for (auto& row : kb.B) {
        const E f = row[pc];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) submul(row[j], f, w[j]);
    }
    kb.B.push_back(std::move(w));
    kb.pivot_cols.push_back(pc);
}

} // namespace minpoly_detail

/// Monic minimal polynomial over a field.
template <class E>
Poly<E> minpoly_field(const Matrix<E>& M, KrylovBasis<E>* basis_out = nullptr) {
    if (!M.is_square()) throw NonSquare();
    const auto& K = M.base();
    const auto& PT = PolyRing<E>::get(K, "T");
    const std::size_t n = M.rows();
    KrylovBasis<E> kb;
    Poly<E> result = PT.one();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j = 0; j < n && kb.B.size() < n; ++j) {
        if (is_pivot[j]) continue;
        // e_j is independent of the span so far: spin it
        kb.generators.push_back(j);
        std::vector<E> v(n, K.zero());
        v[j] = K.one();
        // local echelon of the chain with combination tracking:
        // rows[k] = sum comb[k][i] * M^i v
        std::vector<std::vector<E>> rows, combs;
        std::vector<std::size_t> piv;
        std::vector<E> w = v;
        for (std::size_t k = 0;; ++k) {
            std::vector<E> red = w;
            std::vector<E> comb(k + 1, K.zero());
            comb[k] = K.one();
            for (std::size_t t = 0; t < rows.size(); ++t) {
                const E f = red[piv[t]];
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c)
                    if (!rows[t][c].is_zero()) submul(red[c], f, rows[t][c]);
                for (std::size_t c = 0; c < combs[t].size(); ++c) submul(comb[c], f, combs[t][c]);
            }
            std::size_t pc = n;
            for (std::size_t c = 0; c < n; ++c)
                if (!red[c].is_zero()) {
                    pc = c;
                    break;
                }
            if (pc == n) {
                // M^k v = -sum comb: the local minimal polynomial is comb
                result = lcm_monic(result, PT.from_coeffs(std::move(comb)));
                break;
            }
            E s = inv(red[pc]);
            for (auto& x : red) x = x * s;
            for (auto& x : comb) x = x * s;
            rows.push_back(std::move(red));
            combs.push_back(std::move(comb));
            piv.push_back(pc);
            // the global basis only needs the vectors that are new to it
            std::vector<E> g = w;
            std::size_t gp = minpoly_detail::reduce(g, kb.B, kb.pivot_cols);
            if (gp < n) {
                minpoly_detail::insert_reduced(kb, std::move(g), gp);
                is_pivot[gp] = true;
            }
            w = M.mul_vec(w);
        }
    }
    if (basis_out) *basis_out = std::move(kb);
    return result;
}

/// lcm of two monic polynomials over a field.
template <class E>
Poly<E> lcm_monic(const Poly<E>& a, const Poly<E>& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Poly<E> g = gcd(a, b);
    return normalise_unit(divexact(a, g) * b);
}

struct MinpolyIntegerStats {
    std::size_t primes_used = 0;
    std::size_t primes_discarded = 0;
    std::size_t verifications = 0;
    std::vector<std::size_t> generators;
};

/// Monic minimal polynomial of an integer matrix, multimodular.
///
/// Primes descend from 2^62. A prime whose modular degree is below the
/// running maximum is discarded; a larger degree restarts the CRT. When the
/// symmetric lift is unchanged by one further prime, m(M) v_i = 0 is checked
/// over Z for the generators recorded at the first retained prime, which
/// proves the result.
inline Poly<Integer> minpoly_integer(const Matrix<Integer>& M, MinpolyIntegerStats* stats = nullptr) {
    if (!M.is_square()) throw NonSquare();
    const std::size_t n = M.rows();
    const auto& PZ = PolyRing<Integer>::get(ZZ(), "T");
    MinpolyIntegerStats st;
    if (n == 0) return PZ.one();

    long dmax = -1;
    std::vector<mpz_class> crt;  // coefficients mod `modulus`, in [0, modulus)
    mpz_class modulus = 1;
    std::vector<std::size_t> gens;
    std::vector<mpz_class> last_lift;
    bool have_last = false;
    std::uint64_t p = std::uint64_t(1) << 62;

    auto lift = [&]() {
        std::vector<mpz_class> out(crt.size());
        mpz_class half = modulus / 2;
        for (std::size_t i = 0; i < crt.size(); ++i) out[i] = crt[i] > half ? mpz_class(crt[i] - modulus) : crt[i];
        return out;
    };
    auto verify = [&](const std::vector<mpz_class>& c) {
        ++st.verifications;
        for (std::size_t j : gens) {
            // Horner on vectors: y = sum c_k M^k e_j
            std::vector<Integer> y(n, Integer(0)), ej(n, Integer(0));
            ej[j] = Integer(1);
            for (std::size_t k = c.size(); k-- > 0;) {
                y = M.mul_vec(y);
                if (c[k] != 0)
                    for (std::size_t i = 0; i < n; ++i) addmul(y[i], Integer(c[k]), ej[i]);
            }
            for (const auto& x : y)
                if (!x.is_zero()) return false;
        }
        return true;
    };

    for (;;) {
        p = nmod::prev_prime(p);
        const auto& Fp = ZmodRing::get(mpz_class(static_cast<unsigned long>(p)));
        Matrix<Zmod> Mp = map_matrix<Integer, Zmod>(M, Fp, [&](const Integer& x) { return Fp.from_int(x.value()); });
        KrylovBasis<Zmod> kb;
        Poly<Zmod> mp = minpoly_field(Mp, &kb);
        long d = mp.degree();
        ++st.primes_used;
        if (d < dmax) {
            ++st.primes_discarded;
            continue;
        }
        mpz_class pz(static_cast<unsigned long>(p));
        if (d > dmax) {
            st.primes_discarded += dmax >= 0 ? 1 : 0;
            dmax = d;
            crt.assign(d + 1, 0);
            for (long i = 0; i <= d; ++i) crt[i] = mp.coeffs()[i].rep();
            modulus = pz;
            gens = kb.generators;
            last_lift = lift();
            have_last = true;
            continue;
        }
        // CRT: x = a mod m, x = b mod p
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (long i = 0; i <= d; ++i) {
            mpz_class b = mp.coeffs()[i].rep();
            mpz_class t = ((b - crt[i]) % pz) * minv % pz;
            if (t < 0) t += pz;
            crt[i] += modulus * t;
        }
        modulus *= pz;
        auto cur = lift();
        if (have_last && cur == last_lift) {
            if (verify(cur)) {
                st.generators = gens;
                if (stats) *stats = st;
                std::vector<Integer> cs;
                for (auto& x : cur) cs.emplace_back(x);
                return PZ.from_coeffs(std::move(cs));
            }
        }
        last_lift = std::move(cur);
        have_last = true;
    }
}

} // namespace ringtower
