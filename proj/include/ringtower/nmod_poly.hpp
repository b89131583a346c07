#pragma once

// Dense polynomials over Z/pZ for word-size primes p, stored as coefficient
// vectors (index = exponent, no trailing zeros). These kernels back the
// finite fields and the factorisation used for prime decomposition.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "core/errors.hpp"
#include "core/random.hpp"
#include "zmod.hpp"

namespace ringtower::nmod_poly {

using Vec = std::vector<std::uint64_t>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long deg(const Vec& a) { return static_cast<long>(a.size()) - 1; }

inline bool is_one(const Vec& a) { return a.size() == 1 && a[0] == 1; }

inline Vec x_poly() { return Vec{0, 1}; }

inline Vec add(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = nmod::addmod(x, y, p);
    }
    trim(r);
    return r;
}

inline Vec sub(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = nmod::submod(x, y, p);
    }
    trim(r);
    return r;
}

inline Vec neg(const Vec& a, std::uint64_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = nmod::negmod(a[i], p);
    return r;
}

inline Vec scale(const Vec& a, std::uint64_t c, std::uint64_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = nmod::mulmod(a[i], c, p);
    trim(r);
    return r;
}

inline Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    // accumulate in 128 bits, reducing only when the sum could overflow
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    const unsigned __int128 cap = ~static_cast<unsigned __int128>(0) >> 1;
    const unsigned __int128 step = static_cast<unsigned __int128>(p - 1) * (p - 1);
    std::size_t budget = step == 0 ? SIZE_MAX : static_cast<std::size_t>(std::min<unsigned __int128>(cap / step, SIZE_MAX));
    if (budget == 0) budget = 1;
    std::vector<std::size_t> count(acc.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = i + j;
            acc[k] += static_cast<unsigned __int128>(a[i]) * b[j];
            if (++count[k] >= budget) {
                acc[k] %= p;
                count[k] = 0;
            }
        }
    }
    Vec r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint64_t>(acc[k] % p);
    trim(r);
    return r;
}

/// a = q*b + r, deg r < deg b. b must have an invertible leading coefficient.
inline std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b, std::uint64_t p) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {Vec{}, a};
    std::uint64_t li = nmod::invmod(b.back(), p);
    if (li == 0) throw ImpossibleInverse(std::to_string(b.back()));
    Vec r = a, q(a.size() - b.size() + 1, 0);
    for (long i = deg(a); i >= deg(b); --i) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        c = nmod::mulmod(c, li, p);
        long s = i - deg(b);
        q[s] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[s + j] = nmod::submod(r[s + j], nmod::mulmod(c, b[j], p), p);
    }
    trim(q);
    trim(r);
    return {q, r};
}

inline Vec rem(const Vec& a, const Vec& b, std::uint64_t p) { return divrem(a, b, p).second; }

inline Vec make_monic(const Vec& a, std::uint64_t p) {
    if (a.empty() || a.back() == 1) return a;
    return scale(a, nmod::invmod(a.back(), p), p);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Vec gcd(Vec a, Vec b, std::uint64_t p) {
    while (!b.empty()) {
        Vec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// Returns (g, s, t) with g = s*a + t*b and g monic.
inline std::tuple<Vec, Vec, Vec> xgcd(const Vec& a, const Vec& b, std::uint64_t p) {
    Vec r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        Vec s2 = sub(s0, mul(q, s1, p), p);
        Vec t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        std::uint64_t li = nmod::invmod(r0.back(), p);
        r0 = scale(r0, li, p);
        s0 = scale(s0, li, p);
        t0 = scale(t0, li, p);
    }
    return {r0, s0, t0};
}

/// Resultant over the field Z/pZ by the Euclidean recurrence
/// res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) res(b, r).
inline std::uint64_t resultant(Vec a, Vec b, std::uint64_t p) {
    if (a.empty() || b.empty()) return 0;
    std::uint64_t s = 1;
    for (;;) {
        long da = deg(a), db = deg(b);
        if (db == 0) return nmod::mulmod(s, nmod::powmod(b[0], static_cast<std::uint64_t>(da), p), p);
        if (da == 0) return nmod::mulmod(s, nmod::powmod(a[0], static_cast<std::uint64_t>(db), p), p);
        Vec r = rem(a, b, p);
        if (r.empty()) return 0;
        if ((da & 1) && (db & 1)) s = nmod::negmod(s, p);
        s = nmod::mulmod(s, nmod::powmod(b.back(), static_cast<std::uint64_t>(da - deg(r)), p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

inline Vec mulmod(const Vec& a, const Vec& b, const Vec& f, std::uint64_t p) {
    return rem(mul(a, b, p), f, p);
}

inline Vec powmod(const Vec& a, const mpz_class& e, const Vec& f, std::uint64_t p) {
    Vec r = rem(Vec{1 % p}, f, p);
    Vec base = rem(a, f, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, f, p);
    }
    return r;
}

inline Vec powmod(const Vec& a, std::uint64_t e, const Vec& f, std::uint64_t p) {
    mpz_class E;
    mpz_import(E.get_mpz_t(), 1, 1, sizeof e, 0, 0, &e);
    return powmod(a, E, f, p);
}

inline Vec derivative(const Vec& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = nmod::mulmod(a[i], i % p, p);
    trim(r);
    return r;
}

inline std::uint64_t eval(const Vec& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = nmod::addmod(nmod::mulmod(r, x, p), a[i], p);
    return r;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Rabin's test: f of degree k is irreducible iff x^(p^k) = x mod f and
/// gcd(x^(p^(k/q)) - x, f) = 1 for every prime q | k.
inline bool is_irreducible(const Vec& f_in, std::uint64_t p) {
    Vec f = make_monic(f_in, p);
    long k = deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    std::vector<Vec> frob(k + 1);
    frob[0] = rem(x_poly(), f, p);
    for (long i = 1; i <= k; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
    if (sub(frob[k], rem(x_poly(), f, p), p).size() != 0) return false;
    for (std::uint64_t q : prime_divisors(static_cast<std::uint64_t>(k))) {
        Vec h = sub(frob[k / q], x_poly(), p);
        if (!is_one(gcd(f, h, p))) return false;
    }
    return true;
}

/// Monic irreducible of degree k found by a seeded random search.
inline Vec random_irreducible(std::uint64_t p, long k, std::uint64_t seed = 0x5eed) {
    if (k == 1) return Vec{0, 1};
    SplitMix64 rng(seed ^ (p * 0x9e3779b97f4a7c15ULL) ^ static_cast<std::uint64_t>(k));
    for (long attempt = 0; attempt < (1L << 20); ++attempt) {
        Vec f(k + 1);
        for (long i = 0; i < k; ++i) f[i] = rng.below(p);
        f[k] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible(f, p)) return f;
    }
    throw RandomSearchExhausted("no irreducible polynomial found");
}

/// Squarefree decomposition of a monic f: f = prod g_i^{e_i}, g_i squarefree,
/// pairwise coprime.
inline std::vector<std::pair<Vec, long>> squarefree(const Vec& f_in, std::uint64_t p) {
    Vec f = make_monic(f_in, p);
    std::vector<std::pair<Vec, long>> out;
    if (deg(f) < 1) return out;
    Vec c = gcd(f, derivative(f, p), p);
    Vec w = divrem(f, c, p).first;
    long i = 1;
    while (!is_one(w)) {
        Vec y = gcd(w, c, p);
        Vec fac = divrem(w, y, p).first;
        if (!is_one(fac)) out.push_back({fac, i});
        w = y;
        c = divrem(c, y, p).first;
        ++i;
    }
    if (!is_one(c)) {
        // c is a p-th power: coefficients live at multiples of p
        Vec root(c.size() / p + 1, 0);
        for (std::size_t j = 0; j < c.size(); j += p) root[j / p] = c[j];
        trim(root);
        for (auto& [g, e] : squarefree(root, p)) out.push_back({g, e * static_cast<long>(p)});
    }
    return out;
}

/// Distinct-degree factorisation of a monic squarefree f. Returns pairs
/// (product of all irreducible factors of degree d, d), stopping after
/// degree max_degree when that is positive.
inline std::vector<std::pair<Vec, long>> distinct_degree(const Vec& f_in, std::uint64_t p, long max_degree = 0) {
    std::vector<std::pair<Vec, long>> out;
    Vec f = make_monic(f_in, p);
    Vec h = rem(x_poly(), f, p);
    long i = 1;
    while (deg(f) >= 2 * i && (max_degree <= 0 || i <= max_degree)) {
        h = powmod(h, p, f, p);
        Vec g = gcd(f, sub(h, x_poly(), p), p);
        if (!is_one(g)) {
            out.push_back({g, i});
            f = divrem(f, g, p).first;
            h = rem(h, f, p);
        }
        ++i;
    }
    if (deg(f) >= 1 && (deg(f) < 2 * i) && (max_degree <= 0 || deg(f) <= max_degree)) out.push_back({f, deg(f)});
    return out;
}

/// Cantor-Zassenhaus splitting of f, a product of distinct irreducibles of
/// degree d each.
inline void equal_degree(const Vec& f, long d, std::uint64_t p, SplitMix64& rng, std::vector<Vec>& out) {
    long n = deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class q = zz::pow(mpz_class(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    for (;;) {
        Vec a(n);
        for (long i = 0; i < n; ++i) a[i] = rng.below(p);
        trim(a);
        if (deg(a) < 1) continue;
        Vec b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            Vec t = a, s = a;
            for (long i = 1; i < d; ++i) {
                t = mulmod(t, t, f, p);
                s = add(s, t, p);
            }
            b = s;
        } else {
            b = sub(powmod(a, mpz_class((q - 1) / 2), f, p), Vec{1}, p);
        }
        Vec g = gcd(f, b, p);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

/// Factorisation into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients) for determinism. A positive max_degree keeps only
/// the irreducible factors of at most that degree.
inline std::vector<std::pair<Vec, long>> factor(const Vec& f, std::uint64_t p, long max_degree = 0) {
    std::vector<std::pair<Vec, long>> out;
    SplitMix64 rng(0xfac7 ^ p);
    for (auto& [sf, e] : squarefree(f, p)) {
        for (auto& [g, d] : distinct_degree(sf, p, max_degree)) {
            std::vector<Vec> parts;
            equal_degree(g, d, p, rng, parts);
            for (auto& h : parts) out.push_back({h, e});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first)
            return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
        return a.second < b.second;
    });
    return out;
}

} // namespace ringtower::nmod_poly
