#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "heap.hpp"
#include "mpoly.hpp"

namespace ringtower {

/// f^k by k-1 heap multiplications.
template <class E>
MPoly<E> heap_pow(const MPoly<E>& f, std::uint64_t k) {
    if (k == 0) return f.parent().one();
    MPoly<E> r = f;
    for (std::uint64_t i = 1; i < k; ++i) r = heap_mul(r, f);
    return r;
}

/// f^k through the multinomial theorem: one term per composition of k into
/// #f parts, then a single sort-and-merge. Worth it for short f.
template <class E>
MPoly<E> multinomial_pow(const MPoly<E>& f, std::uint64_t k) {
    const auto& R = f.parent();
    if (k == 0) return R.one();
    if (f.is_zero()) return R.zero();
    const std::size_t m = f.length();
    auto L = R.layout(mono::bits_for_degree(f.total_degree() * k));
    const int W = L.nwords();
    // ppow[i][j]: packed j*e_i; cpow[i][j]: c_i^j
    std::vector<std::vector<std::uint64_t>> ppow(m);
    std::vector<std::vector<E>> cpow(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto e = f.exponents(i);
        ppow[i].resize((k + 1) * W);
        cpow[i].reserve(k + 1);
        cpow[i].push_back(R.base().one());
        std::vector<std::uint64_t> ej(e.size());
        for (std::uint64_t j = 0; j <= k; ++j) {
            for (std::size_t v = 0; v < e.size(); ++v) ej[v] = e[v] * j;
            L.pack(ej, ppow[i].data() + j * W);
            if (j > 0) cpow[i].push_back(cpow[i].back() * f.coeff(i));
        }
    }
    std::vector<mpz_class> fact(k + 1);
    fact[0] = 1;
    for (std::uint64_t j = 1; j <= k; ++j) fact[j] = fact[j - 1] * j;

    std::vector<std::uint64_t> mons;
    std::vector<E> cs;
    std::vector<std::uint64_t> parts(m, 0), acc(W);
    // enumerate compositions parts[0..m-1] of k recursively
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left, const std::uint64_t* mon, const E& c,
                   const mpz_class& denom) -> void {
        if (i + 1 == m) {
            std::vector<std::uint64_t> out(W);
            mono::add(out.data(), mon, ppow[i].data() + left * W, W);
            mpz_class multi = fact[k] / (denom * fact[left]);
            E coef = c * cpow[i][left] * R.base().from_int(multi);
            if (coef.is_zero()) return;
            mons.insert(mons.end(), out.begin(), out.end());
            cs.push_back(std::move(coef));
            return;
        }
        std::vector<std::uint64_t> next(W);
        for (std::uint64_t j = 0; j <= left; ++j) {
            mono::add(next.data(), mon, ppow[i].data() + j * W, W);
            self(self, i + 1, left - j, next.data(), c * cpow[i][j], denom * fact[j]);
        }
    };
    std::vector<std::uint64_t> zero(W, 0);
    rec(rec, 0, k, zero.data(), R.base().one(), mpz_class(1));

    std::vector<std::size_t> idx(cs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return mono::compare(mons.data() + a * W, mons.data() + b * W, W) > 0;
    });
    MPoly<E> r(&R, L.bits);
    for (std::size_t t = 0; t < idx.size();) {
        const std::uint64_t* mo = mons.data() + idx[t] * W;
        E c = cs[idx[t]];
        std::size_t u = t + 1;
        while (u < idx.size() && mono::equal(mo, mons.data() + idx[u] * W, W)) c += cs[idx[u++]];
        if (!c.is_zero()) r.push_term(mo, std::move(c));
        t = u;
    }
    return r;
}

template <class E>
MPoly<E> pow(const MPoly<E>& f, std::uint64_t k) {
    if (k == 0) return f.parent().one();
    if (f.length() == 1) {
        auto e = f.exponents(0);
        for (auto& x : e) x *= k;
        return f.parent().term(pow(f.lc(), k), e);
    }
    if (f.length() <= 5 && k >= 4) return multinomial_pow(f, k);
    return heap_pow(f, k);
}

template <class E>
MPoly<E> MPolyRing<E>::parse(std::string_view s) const {
    ExprOps<MPoly<E>> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const MPoly<E>& a, const MPoly<E>& b) { return divexact(a, b); };
    ops.pow = [](const MPoly<E>& a, unsigned long k) { return pow(a, k); };
    return parse_expression<MPoly<E>>(s, ops);
}

} // namespace ringtower
