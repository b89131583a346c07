#pragma once

// Heap-based sparse multiplication and division (Johnson; Monagan and
// Pearce). Products f_i*g_j are merged through a binary max-heap keyed on
// packed monomials. Row i of the product contributes at most one live heap
// entry, so at most min(#f, #g) entries are live; entries with equal monomials
// found while sifting up are chained onto one node.

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "../integer.hpp"
#include "mpoly.hpp"

namespace ringtower {

namespace heap_detail {

/// 192-bit two's complement accumulator for sums of int64 products.
struct Acc192 {
    unsigned __int128 lo = 0;
    std::int64_t hi = 0;

    void reset() {
        lo = 0;
        hi = 0;
    }
    void add(__int128 p) {
        unsigned __int128 u = static_cast<unsigned __int128>(p);
        unsigned __int128 nl = lo + u;
        hi += (nl < lo ? 1 : 0) + (p < 0 ? -1 : 0);
        lo = nl;
    }
    bool is_zero() const { return lo == 0 && hi == 0; }

    mpz_class value() const {
        // fast path: fits in a signed 64-bit word
        auto slo = static_cast<__int128>(lo);
        if ((hi == 0 && lo <= static_cast<unsigned __int128>(INT64_MAX)) ||
            (hi == -1 && slo < 0 && slo >= static_cast<__int128>(INT64_MIN))) {
            return mpz_class(static_cast<long>(static_cast<std::int64_t>(slo)));
        }
        std::uint64_t words[3] = {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(lo >> 64),
                                  static_cast<std::uint64_t>(hi)};
        bool neg = hi < 0;
        if (neg) {
            // negate the 192-bit value
            std::uint64_t carry = 1;
            for (auto& w : words) {
                w = ~w;
                std::uint64_t s = w + carry;
                carry = (s < w) ? 1 : 0;
                w = s;
            }
        }
        mpz_class r;
        mpz_import(r.get_mpz_t(), 3, -1, sizeof(std::uint64_t), 0, 0, words);
        if (neg) r = -r;
        return r;
    }
};

template <int NWC>
struct MonoOps {
    int nw;
    int words() const {
        if constexpr (NWC > 0) return NWC;
        else return nw;
    }
    int cmp(const std::uint64_t* a, const std::uint64_t* b) const {
        if constexpr (NWC == 1) return a[0] == b[0] ? 0 : (a[0] > b[0] ? 1 : -1);
        else return mono::compare(a, b, words());
    }
    void add(std::uint64_t* o, const std::uint64_t* a, const std::uint64_t* b) const {
        if constexpr (NWC == 1) o[0] = a[0] + b[0];
        else mono::add(o, a, b, words());
    }
    void copy(std::uint64_t* o, const std::uint64_t* a) const {
        if constexpr (NWC == 1) o[0] = a[0];
        else
            for (int i = 0; i < words(); ++i) o[i] = a[i];
    }
};

/// The multiplication kernel. `Acc` supplies reset(), add(i, j) and
/// flush(mono, out).
template <int NWC, class Acc, class Out>
void mul_kernel(const std::uint64_t* fe, std::size_t s, const std::uint64_t* ge, std::size_t t, int nw, Acc& acc,
                Out& out) {
    MonoOps<NWC> ops{nw};
    const int W = ops.words();
    // 1-based heap of nodes: monomial in hm, chain head row in hh
    std::vector<std::uint64_t> hm((s + 1) * W);
    std::vector<std::int64_t> hh(s + 1);
    std::vector<std::size_t> cj(s);
    std::vector<std::int64_t> cnext(s);
    std::size_t n = 0;
    std::vector<std::uint64_t> tmp(W), cur(W);
    std::vector<std::size_t> popped;
    popped.reserve(s);

    auto insert = [&](std::size_t row) {
        ops.add(tmp.data(), fe + row * W, ge + cj[row] * W);
        // find the slot first so that chaining leaves the heap untouched
        std::size_t target = n + 1;
        while (target > 1) {
            std::size_t par = target >> 1;
            int c = ops.cmp(hm.data() + par * W, tmp.data());
            if (c == 0) {
                cnext[row] = hh[par];
                hh[par] = static_cast<std::int64_t>(row);
                return;
            }
            if (c > 0) break;
            target = par;
        }
        std::size_t pos = ++n;
        while (pos > target) {
            std::size_t par = pos >> 1;
            ops.copy(hm.data() + pos * W, hm.data() + par * W);
            hh[pos] = hh[par];
            pos = par;
        }
        ops.copy(hm.data() + pos * W, tmp.data());
        hh[pos] = static_cast<std::int64_t>(row);
        cnext[row] = -1;
    };

    auto pop_root = [&]() {
        // move last node to the root and sift down
        std::size_t last = n--;
        if (n == 0) return;
        std::size_t pos = 1;
        const std::uint64_t* lm = hm.data() + last * W;
        for (;;) {
            std::size_t ch = pos << 1;
            if (ch > n) break;
            if (ch + 1 <= n && ops.cmp(hm.data() + (ch + 1) * W, hm.data() + ch * W) > 0) ++ch;
            if (ops.cmp(hm.data() + ch * W, lm) <= 0) break;
            ops.copy(hm.data() + pos * W, hm.data() + ch * W);
            hh[pos] = hh[ch];
            pos = ch;
        }
        ops.copy(hm.data() + pos * W, lm);
        hh[pos] = hh[last];
    };

    cj[0] = 0;
    insert(0);
    while (n > 0) {
        ops.copy(cur.data(), hm.data() + W);
        acc.reset();
        popped.clear();
        while (n > 0 && ops.cmp(hm.data() + W, cur.data()) == 0) {
            std::int64_t r = hh[1];
            pop_root();
            for (; r != -1; r = cnext[r]) {
                acc.add(static_cast<std::size_t>(r), cj[r]);
                popped.push_back(static_cast<std::size_t>(r));
            }
        }
        acc.flush(cur.data(), out);
        for (std::size_t r : popped) {
            std::size_t j = cj[r];
            if (j == 0 && r + 1 < s) {
                cj[r + 1] = 0;
                insert(r + 1);
            }
            if (j + 1 < t) {
                cj[r] = j + 1;
                insert(r);
            }
        }
    }
}

template <class E>
struct GenericAcc {
    const std::vector<E>& fc;
    const std::vector<E>& gc;
    E acc;
    void reset() { acc = fc[0] - fc[0]; }
    void add(std::size_t i, std::size_t j) { addmul(acc, fc[i], gc[j]); }
    void flush(const std::uint64_t* m, MPoly<E>& out) {
        if (!acc.is_zero()) out.push_term(m, acc);
    }
};

struct SmallIntAcc {
    const std::vector<std::int64_t>& fc;
    const std::vector<std::int64_t>& gc;
    Acc192 acc;
    void reset() { acc.reset(); }
    void add(std::size_t i, std::size_t j) { acc.add(static_cast<__int128>(fc[i]) * gc[j]); }
    void flush(const std::uint64_t* m, MPoly<Integer>& out) {
        if (!acc.is_zero()) out.push_term(m, Integer(acc.value()));
    }
};

template <class E, class Acc>
void dispatch_mul(const MPoly<E>& f, const MPoly<E>& g, Acc& acc, MPoly<E>& out) {
    int nw = f.nwords();
    const std::uint64_t* fe = f.exps().data();
    const std::uint64_t* ge = g.exps().data();
    if (nw == 1) mul_kernel<1>(fe, f.length(), ge, g.length(), nw, acc, out);
    else if (nw == 2) mul_kernel<2>(fe, f.length(), ge, g.length(), nw, acc, out);
    else mul_kernel<0>(fe, f.length(), ge, g.length(), nw, acc, out);
}

} // namespace heap_detail

/// Exact product via the chained heap merge.
template <class E>
MPoly<E> heap_mul(const MPoly<E>& f0, const MPoly<E>& g0) {
    check_parents(f0, g0);
    const auto& R = f0.parent();
    if (f0.is_zero() || g0.is_zero()) return R.zero();
    int bits = std::max({f0.bits(), g0.bits(), mono::bits_for_degree(f0.total_degree() + g0.total_degree())});
    MPoly<E> f = f0.repack(bits), g = g0.repack(bits);
    if (f.length() > g.length()) std::swap(f, g);
    MPoly<E> out(&R, bits);
    out.exps_mut().reserve((f.length() + g.length()) * f.nwords());
    out.coeffs_mut().reserve(f.length() + g.length());
    if constexpr (std::is_same_v<E, Integer>) {
        bool small = true;
        for (const auto& c : f.coeffs()) small = small && c.fits_slong();
        for (const auto& c : g.coeffs()) small = small && c.fits_slong();
        if (small) {
            std::vector<std::int64_t> fc, gc;
            fc.reserve(f.length());
            gc.reserve(g.length());
            for (const auto& c : f.coeffs()) fc.push_back(c.to_long());
            for (const auto& c : g.coeffs()) gc.push_back(c.to_long());
            heap_detail::SmallIntAcc acc{fc, gc, {}};
            heap_detail::dispatch_mul(f, g, acc, out);
            return out;
        }
    }
    heap_detail::GenericAcc<E> acc{f.coeffs(), g.coeffs(), R.base().zero()};
    heap_detail::dispatch_mul(f, g, acc, out);
    return out;
}

namespace heap_detail {

/// Division by a heap of quotient-term streams q_k * (g - lt(g)).
/// With `exact`, the first remainder term raises InexactDivision.
template <class E>
std::pair<MPoly<E>, MPoly<E>> divrem_impl(const MPoly<E>& f0, const MPoly<E>& g0, bool exact) {
    check_parents(f0, g0);
    const auto& R = f0.parent();
    if (g0.is_zero()) throw DivisionByZero();
    if (f0.is_zero()) return {R.zero(), R.zero()};
    int bits = std::max(f0.bits(), g0.bits());
    MPoly<E> f = f0.repack(bits), g = g0.repack(bits);
    auto L = f.layout();
    const int W = L.nwords();
    MPoly<E> q(&R, bits), r(&R, bits);

    std::optional<E> lc_inv;
    if constexpr (ring_traits<E>::inverse_division) lc_inv = inv(g.lc());

    // stream k: quotient term k times g term gi[k]; its monomial in sm
    std::vector<std::size_t> gi;
    std::vector<std::uint64_t> sm;
    std::vector<std::size_t> heap;
    auto less = [&](std::size_t a, std::size_t b) {
        return mono::compare(sm.data() + a * W, sm.data() + b * W, W) < 0;
    };
    std::vector<std::uint64_t> M(W), qm(W);
    std::size_t fpos = 0;
    const std::size_t t = g.length();

    for (;;) {
        bool have_f = fpos < f.length();
        if (!have_f && heap.empty()) break;
        if (!heap.empty() && (!have_f || mono::compare(sm.data() + heap.front() * W, f.mono(fpos), W) > 0)) {
            std::copy(sm.data() + heap.front() * W, sm.data() + heap.front() * W + W, M.begin());
        } else {
            std::copy(f.mono(fpos), f.mono(fpos) + W, M.begin());
        }
        E c = R.base().zero();
        if (have_f && mono::equal(f.mono(fpos), M.data(), W)) {
            c = f.coeff(fpos);
            ++fpos;
        }
        while (!heap.empty() && mono::equal(sm.data() + heap.front() * W, M.data(), W)) {
            std::pop_heap(heap.begin(), heap.end(), less);
            std::size_t k = heap.back();
            heap.pop_back();
            submul(c, q.coeff(k), g.coeff(gi[k]));
            if (++gi[k] < t) {
                mono::add(sm.data() + k * W, q.mono(k), g.mono(gi[k]), W);
                heap.push_back(k);
                std::push_heap(heap.begin(), heap.end(), less);
            }
        }
        if (c.is_zero()) continue;
        if (L.divides(g.mono(0), M.data())) {
            std::optional<E> qc;
            if constexpr (ring_traits<E>::inverse_division) qc = c * *lc_inv;
            else qc = try_divide(c, g.lc());
            if (qc) {
                mono::sub(qm.data(), M.data(), g.mono(0), W);
                q.push_term(qm.data(), std::move(*qc));
                if (t > 1) {
                    std::size_t k = q.length() - 1;
                    gi.push_back(1);
                    sm.resize((k + 1) * W);
                    mono::add(sm.data() + k * W, q.mono(k), g.mono(1), W);
                    heap.push_back(k);
                    std::push_heap(heap.begin(), heap.end(), less);
                } else {
                    gi.push_back(t);
                    sm.resize((q.length()) * W);
                }
                continue;
            }
        }
        if (exact) throw InexactDivision();
        r.push_term(M.data(), std::move(c));
    }
    return {std::move(q), std::move(r)};
}

} // namespace heap_detail

/// f = q*g + r. Terms whose monomial is divisible by lm(g) but whose
/// coefficient is not divisible by lc(g) (possible over Z) go to r.
template <class E>
std::pair<MPoly<E>, MPoly<E>> heap_divrem(const MPoly<E>& f, const MPoly<E>& g) {
    return heap_detail::divrem_impl(f, g, false);
}

template <class E>
MPoly<E> heap_exact_div(const MPoly<E>& f, const MPoly<E>& g) {
    if (g.is_constant() && !g.is_zero()) {
        // coefficient-wise
        const E& c = g.lc();
        MPoly<E> q(&f.parent(), f.bits());
        for (std::size_t i = 0; i < f.length(); ++i) q.push_term(f.mono(i), divexact(f.coeff(i), c));
        return q;
    }
    return heap_detail::divrem_impl(f, g, true).first;
}

template <class E>
MPoly<E> divexact(const MPoly<E>& f, const MPoly<E>& g) {
    return heap_exact_div(f, g);
}

template <class E>
std::optional<MPoly<E>> try_divide(const MPoly<E>& f, const MPoly<E>& g) {
    try {
        return heap_detail::divrem_impl(f, g, true).first;
    } catch (const InexactDivision&) {
        return std::nullopt;
    }
}

/// Classical long division on unpacked terms; the test oracle for
/// heap_divrem (same quotient rule).
template <class E>
std::pair<MPoly<E>, MPoly<E>> naive_divrem(const MPoly<E>& f, const MPoly<E>& g) {
    check_parents(f, g);
    const auto& R = f.parent();
    if (g.is_zero()) throw DivisionByZero();
    MPoly<E> p = f, q = R.zero(), r = R.zero();
    auto lg = g.exponents(0);
    while (!p.is_zero()) {
        auto lp = p.exponents(0);
        bool div = true;
        for (std::size_t v = 0; v < lp.size(); ++v) div = div && lp[v] >= lg[v];
        std::optional<E> c;
        if (div) {
            if constexpr (ring_traits<E>::inverse_division) c = p.lc() * inv(g.lc());
            else c = try_divide(p.lc(), g.lc());
        }
        if (c) {
            for (std::size_t v = 0; v < lp.size(); ++v) lp[v] -= lg[v];
            MPoly<E> t = R.term(*c, lp);
            q = q + t;
            p = p - naive_mul(t, g);
        } else {
            MPoly<E> t = R.term(p.lc(), lp);
            r = r + t;
            p = p - t;
        }
    }
    return {q, r};
}

} // namespace ringtower
