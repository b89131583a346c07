#pragma once

// Multivariate gcd by the subresultant PRS in a chosen main variable, with
// coefficients kept as sparse polynomials in the remaining variables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "../poly.hpp"
#include "heap.hpp"
#include "mpoly.hpp"
#include "pow.hpp"

namespace ringtower {

template <class E>
using MPolyUniv = Poly<MPoly<E>>;

namespace mpoly_detail {

template <class E>
bool is_unit(const E& c) {
    if (c.is_zero()) return false;
    try {
        (void)inv(c);
        return true;
    } catch (const ImpossibleInverse&) {
        return false;
    }
}

/// f monic in v: its leading coefficient in v is a unit constant.
template <class E>
bool monic_in(const MPoly<E>& f, int v) {
    long d = f.degree(v);
    if (d <= 0) return false;
    auto L = f.layout();
    std::size_t hits = 0, at = 0;
    for (std::size_t i = 0; i < f.length(); ++i)
        if (static_cast<long>(L.exponent(f.mono(i), v)) == d) {
            ++hits;
            at = i;
        }
    return hits == 1 && static_cast<long>(L.total_degree(f.mono(at))) == d && is_unit(f.coeff(at));
}

} // namespace mpoly_detail

/// Main-variable order for the gcd: variables in which both inputs are monic
/// first (by max degree), then the rest by max degree, ties by index.
/// Variables absent from both inputs are placed last.
template <class E>
std::vector<int> variable_order_heuristic(const MPoly<E>& f, const MPoly<E>& g) {
    check_parents(f, g);
    int n = f.parent().nvars();
    struct Key {
        int cls;
        long deg;
        int idx;
    };
    std::vector<Key> keys;
    for (int v = 0; v < n; ++v) {
        long d = std::max(f.degree(v), g.degree(v));
        int cls = d <= 0 ? 2 : (mpoly_detail::monic_in(f, v) && mpoly_detail::monic_in(g, v)) ? 0 : 1;
        keys.push_back({cls, d, v});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.cls != b.cls) return a.cls < b.cls;
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.idx < b.idx;
    });
    std::vector<int> perm;
    for (const auto& k : keys) perm.push_back(k.idx);
    return perm;
}

/// View f as a polynomial in variable v with coefficients free of v.
template <class E>
MPolyUniv<E> to_univariate(const MPoly<E>& f, int v) {
    const auto& R = f.parent();
    const auto& U = PolyRing<MPoly<E>>::get(R, R.vars()[v]);
    if (f.is_zero()) return U.zero();
    auto L = f.layout();
    const int W = L.nwords();
    long d = f.degree(v);
    std::vector<MPoly<E>> cs(d + 1, MPoly<E>(&R, f.bits()));
    std::vector<std::uint64_t> sh(W), m(W);
    std::vector<std::uint64_t> ev(R.nvars(), 0);
    for (std::size_t i = 0; i < f.length(); ++i) {
        std::uint64_t e = L.exponent(f.mono(i), v);
        ev[v] = e;
        L.pack(ev, sh.data());
        mono::sub(m.data(), f.mono(i), sh.data(), W);
        // order within one bucket is preserved by removing a fixed power
        cs[e].push_term(m.data(), f.coeff(i));
    }
    return U.from_coeffs(std::move(cs));
}

template <class E>
MPoly<E> from_univariate(const MPolyUniv<E>& F, int v) {
    const auto& R = F.parent().base();
    std::vector<std::pair<std::vector<std::uint64_t>, E>> terms;
    for (std::size_t i = 0; i < F.length(); ++i) {
        const auto& c = F.coeffs()[i];
        for (std::size_t j = 0; j < c.length(); ++j) {
            auto e = c.exponents(j);
            e[v] += i;
            terms.emplace_back(std::move(e), c.coeff(j));
        }
    }
    return R.from_terms(std::move(terms));
}

/// lc(g)^(deg f - deg g + 1) * f = q*g + r with deg_v r < deg_v g; no
/// coefficient divisions.
template <class E>
MPoly<E> pseudorem_univ(const MPoly<E>& f, const MPoly<E>& g, int v) {
    check_parents(f, g);
    if (g.is_zero()) throw DivisionByZero();
    return from_univariate(pseudo_rem(to_univariate(f, v), to_univariate(g, v)), v);
}

template <class E>
MPoly<E> normalise_unit(const MPoly<E>& f) {
    if (f.is_zero()) return f;
    E u = canonical_unit(f.lc());
    if (u.is_one()) return f;
    return f.scale(inv(u));
}

template <class E>
MPoly<E> gcd(const MPoly<E>& f, const MPoly<E>& g);

/// gcd of the coefficients of f viewed in v, carrying the unit of the
/// leading coefficient: f = content * primitive_part.
template <class E>
MPoly<E> content(const MPoly<E>& f, int v) {
    if (f.is_zero()) return f;
    return content(to_univariate(f, v));
}

template <class E>
MPoly<E> primitive_part(const MPoly<E>& f, int v) {
    if (f.is_zero()) return f;
    return divexact(f, content(f, v));
}

namespace mpoly_detail {

template <class E>
E coeff_gcd(const MPoly<E>& f, E acc) {
    for (std::size_t i = 0; i < f.length() && !acc.is_one(); ++i) acc = gcd(acc, f.coeff(i));
    return acc;
}

} // namespace mpoly_detail

/// Subresultant gcd, primitive in the main variable and unit-normalised.
template <class E>
MPoly<E> subresultant_gcd(const MPoly<E>& f, const MPoly<E>& g) {
    static_assert(ring_traits<E>::is_domain, "gcd needs an integral domain");
    check_parents(f, g);
    const auto& R = f.parent();
    if (f.is_zero()) return normalise_unit(g);
    if (g.is_zero()) return normalise_unit(f);
    if (f.is_constant() || g.is_constant()) {
        E c = mpoly_detail::coeff_gcd(g, mpoly_detail::coeff_gcd(f, R.base().zero()));
        return normalise_unit(R(c));
    }
    int v = variable_order_heuristic(f, g).front();
    using U = MPolyUniv<E>;
    U F = to_univariate(f, v), G = to_univariate(g, v);
    if (F.degree() == 0) return gcd(f, content(G));
    if (G.degree() == 0) return gcd(content(F), g);

    MPoly<E> cf = content(F), cg = content(G);
    MPoly<E> c = gcd(cf, cg);
    U A = divexact_scalar(F, cf), B = divexact_scalar(G, cg);
    if (A.degree() < B.degree()) std::swap(A, B);
    // lc of the primitive gcd divides L
    MPoly<E> L = gcd(A.lc(), B.lc());

    MPoly<E> gg = R.one(), h = R.one();
    while (!B.is_zero() && B.degree() > 0) {
        long delta = A.degree() - B.degree();
        U r = pseudo_rem(A, B);
        A = std::move(B);
        if (r.is_zero()) {
            B = r;
            break;
        }
        B = divexact_scalar(r, gg * pow(h, static_cast<std::uint64_t>(delta)));
        gg = A.lc();
        if (delta == 1) h = gg;
        else if (delta > 1)
            h = divexact(pow(gg, static_cast<std::uint64_t>(delta)), pow(h, static_cast<std::uint64_t>(delta - 1)));
    }
    if (!B.is_zero()) return normalise_unit(c);  // nonzero constant remainder: coprime parts

    // A = lambda * H with H primitive; L*A/lc(A) = (L/lc(H)) * H
    U Gs = divexact_scalar(A.scale(L), A.lc());
    MPoly<E> cont = L;
    for (std::size_t i = 0; i < Gs.length() && !cont.is_constant(); ++i)
        if (!Gs.coeffs()[i].is_zero()) cont = gcd(cont, Gs.coeffs()[i]);
    if (cont.is_constant()) {
        // the loop may stop early; take the numeric content of all of Gs
        E k = R.base().zero();
        for (const auto& cc : Gs.coeffs()) k = mpoly_detail::coeff_gcd(cc, k);
        cont = R(k);
    }
    U H = divexact_scalar(Gs, cont);
    return normalise_unit(from_univariate(H, v) * c);
}

template <class E>
MPoly<E> gcd(const MPoly<E>& f, const MPoly<E>& g) {
    return subresultant_gcd(f, g);
}

} // namespace ringtower
