#pragma once

// Characteristic polynomials det(T*I - M), returned monic in the variable T.

#include <cstdint>
#include <optional>
#include <vector>

#include "../poly.hpp"
#include "matrix.hpp"

namespace ringtower {

/// Counters for the checked exact division used by fraction-free code.
struct ExactDivisionStats {
    std::uint64_t calls = 0;
    std::uint64_t inexact = 0;
};

inline ExactDivisionStats& exact_division_stats() {
    thread_local ExactDivisionStats s;
    return s;
}

/// a / b, which must be exact; failures are counted before raising.
template <class E>
E counted_divexact(const E& a, const E& b) {
    auto& st = exact_division_stats();
    ++st.calls;
    std::optional<E> q = try_divide(a, b);
    if (!q) {
        ++st.inexact;
        throw InexactDivision();
    }
    return std::move(*q);
}

namespace charpoly_detail {

template <class E>
void require_square(const Matrix<E>& M) {
    if (!M.is_square()) throw NonSquare();
}

/// Coefficients given highest first.
template <class E>
Poly<E> from_high_first(const typename E::parent_type& base, std::vector<E> c) {
    std::reverse(c.begin(), c.end());
    return PolyRing<E>::get(base, "T").from_coeffs(std::move(c));
}

} // namespace charpoly_detail

/// Berkowitz: division free, any commutative ring, O(n^4).
template <class E>
Poly<E> charpoly_berkowitz(const Matrix<E>& M) {
    charpoly_detail::require_square(M);
    const auto& K = M.base();
    const std::size_t n = M.rows();
    if (n == 0) return PolyRing<E>::get(K, "T").one();
    std::vector<E> v = {K.one(), -M(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
        std::vector<E> t;
        t.reserve(r + 2);
        t.push_back(K.one());
        t.push_back(-M(r, r));
        std::vector<E> w(r, K.zero());
        for (std::size_t i = 0; i < r; ++i) w[i] = M(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            E s = K.zero();
            for (std::size_t i = 0; i < r; ++i) addmul(s, M(r, i), w[i]);
            t.push_back(-s);
            if (k + 1 == r) break;
            std::vector<E> nw(r, K.zero());
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) addmul(nw[i], M(i, j), w[j]);
            w = std::move(nw);
        }
        std::vector<E> nv(r + 2, K.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) addmul(nv[i], t[i - j], v[j]);
        v = std::move(nv);
    }
    return charpoly_detail::from_high_first(K, std::move(v));
}

/// Hessenberg reduction then the leading-minor recurrence; needs a field.
template <class E>
Poly<E> charpoly_hessenberg(const Matrix<E>& M) {
    charpoly_detail::require_square(M);
    const auto& K = M.base();
    const std::size_t n = M.rows();
    Matrix<E> H = M;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = n;
        for (std::size_t i = m; i < n; ++i)
            if (!H(i, m - 1).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != m) {
            H.swap_rows(piv, m);
            H.swap_cols(piv, m);
        }
        E tinv = inv(H(m, m - 1));
        for (std::size_t i = m + 1; i < n; ++i) {
            if (H(i, m - 1).is_zero()) continue;
            E u = H(i, m - 1) * tinv;
            for (std::size_t j = 0; j < n; ++j) submul(H(i, j), u, H(m, j));
            for (std::size_t j = 0; j < n; ++j) addmul(H(j, m), u, H(j, i));
        }
    }
    // p[m] low-first, p[0] = 1
    std::vector<std::vector<E>> p(n + 1);
    p[0] = {K.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<E> q(m + 1, K.zero());
        const auto& prev = p[m - 1];
        for (std::size_t k = 0; k < prev.size(); ++k) {
            q[k + 1] += prev[k];
            submul(q[k], H(m - 1, m - 1), prev[k]);
        }
        E t = K.one();
        for (std::size_t i = 1; i < m; ++i) {
            t = t * H(m - i, m - i - 1);
            E c = H(m - i - 1, m - 1) * t;
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) submul(q[k], c, p[m - i - 1][k]);
        }
        p[m] = std::move(q);
    }
    return PolyRing<E>::get(K, "T").from_coeffs(std::move(p[n]));
}

/// Fraction-free Danilevsky over an integral domain.
///
/// The working matrix G is sigma times the classical Danilevsky iterate,
/// where sigma is the pivot of the previous step. One step with pivot p
/// scales by p; the old sigma is then removed by exact division, once from
/// every column except the pivot column and a second time from the pivot
/// row (which also carries the left transform). Companion blocks are read
/// off as row / sigma.
template <class E>
Poly<E> charpoly_danilevsky_ff(const Matrix<E>& M) {
    charpoly_detail::require_square(M);
    const auto& K = M.base();
    const auto& PT = PolyRing<E>::get(K, "T");
    const std::size_t n = M.rows();
    if (n == 0) return PT.one();
    auto body = [&]() {
        Matrix<E> G = M;
        E sigma = K.one();
        bool have_sigma = false;
        Poly<E> result = PT.one();
        auto block = [&](std::size_t row, std::size_t from, std::size_t m) {
            std::vector<E> c;
            c.reserve(m + 1);
            c.push_back(K.one());
            for (std::size_t k = 0; k < m; ++k) {
                E x = have_sigma ? counted_divexact(G(row, from + k), sigma) : G(row, from + k);
                c.push_back(-x);
            }
            result = result * charpoly_detail::from_high_first(K, std::move(c));
        };
        std::size_t top = n, r = n - 1;
        std::vector<E> a(n, K.zero());
        Matrix<E> C = G;
        while (top > 0) {
            if (r == 0) {
                block(0, 0, top);
                break;
            }
            std::size_t c = r - 1;
            if (G(r, c).is_zero()) {
                std::size_t j = c;
                for (std::size_t k = 0; k < c; ++k)
                    if (!G(r, k).is_zero()) {
                        j = k;
                        break;
                    }
                if (j == c) {
                    // rows r..top-1 decouple: split off their companion block
                    block(r, r, top - r);
                    top = r;
                    r = top - 1;
                    continue;
                }
                G.swap_rows(j, c);
                G.swap_cols(j, c);
            }
            E p = G(r, c);
            for (std::size_t m = 0; m < n; ++m) a[m] = m == c ? K.zero() : G(r, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == c) C(i, j) = p * G(i, c);
                    else C(i, j) = p * G(i, j) - G(i, c) * a[j];
                }
            Matrix<E> N = C;
            for (std::size_t i = 0; i < n; ++i)
                if (i != c) N(i, c) = G(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                E s = p * C(c, j);
                for (std::size_t m = 0; m < n; ++m)
                    if (!a[m].is_zero()) addmul(s, a[m], C(m, j));
                N(c, j) = std::move(s);
            }
            {
                E s = p * G(c, c);
                for (std::size_t m = 0; m < n; ++m)
                    if (!a[m].is_zero()) addmul(s, a[m], G(m, c));
                N(c, c) = std::move(s);
            }
            if (have_sigma && !sigma.is_one()) {
                // pass 1: every column but the pivot column
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != c) N(i, j) = counted_divexact(N(i, j), sigma);
                // pass 2: the pivot row
                for (std::size_t j = 0; j < n; ++j) N(c, j) = counted_divexact(N(c, j), sigma);
            }
            sigma = p;
            have_sigma = true;
            G = std::move(N);
            --r;
        }
        return result;
    };
    if constexpr (ring_traits<E>::is_domain) {
        return body();
    } else {
        try {
            return body();
        } catch (const InexactDivision&) {
            throw ZeroPivotUnresolvable("pivot is a zero divisor");
        } catch (const ImpossibleInverse&) {
            throw ZeroPivotUnresolvable("pivot is a zero divisor");
        }
    }
}

/// Evaluate p at a square matrix (Horner).
template <class E>
Matrix<E> evaluate_at_matrix(const Poly<E>& p, const Matrix<E>& M) {
    charpoly_detail::require_square(M);
    Matrix<E> R = M.parent().zero();
    Matrix<E> I = M.parent().identity();
    for (std::size_t k = p.length(); k-- > 0;) R = R * M + I.scale(p.coeffs()[k]);
    return R;
}

/// Picks Danilevsky over domains, Hessenberg over fields, else Berkowitz.
template <class E>
Poly<E> charpoly(const Matrix<E>& M) {
    if constexpr (ring_traits<E>::is_field) return charpoly_hessenberg(M);
    else if constexpr (ring_traits<E>::is_domain) return charpoly_danilevsky_ff(M);
    else return charpoly_berkowitz(M);
}

} // namespace ringtower
