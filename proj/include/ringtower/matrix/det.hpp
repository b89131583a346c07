#pragma once

#include <cstdint>
#include <vector>

#include "../poly.hpp"
#include "charpoly.hpp"
#include "matrix.hpp"

namespace ringtower {

template <class E>
struct FFLUResult {
    std::size_t rank = 0;
    /// perm[i] is the input row now at position i.
    std::vector<std::size_t> permutation;
    Matrix<E> U;
    /// +-(last pivot) when square of full rank, else zero.
    E det_value;
};

/// Bareiss fraction-free elimination. Every entry below the pivots is a
/// minor of the (row-permuted) input, so each division is exact; over rings
/// with zero divisors a non-unit divisor raises ImpossibleInverse.
template <class E>
FFLUResult<E> fflu(const Matrix<E>& M) {
    const auto& K = M.base();
    const std::size_t n = M.rows(), m = M.cols();
    FFLUResult<E> res;
    res.U = M;
    Matrix<E>& U = res.U;
    res.permutation.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.permutation[i] = i;
    bool negate = false;
    E prev = K.one();
    bool prev_is_one = true;
    std::size_t rank = 0;
    auto divide = [&](const E& a, const E& pinv) -> E {
        if constexpr (ring_traits<E>::inverse_division) {
            return a * pinv;
        } else if constexpr (ring_traits<E>::is_domain) {
            return divexact(a, prev);
        } else {
            auto q = try_divide(a, prev);
            if (!q) throw ImpossibleInverse(to_string(prev));
            return *q;
        }
    };
    for (std::size_t k = 0; k < m && rank < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = rank; i < n; ++i)
            if (!U(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != rank) {
            U.swap_rows(piv, rank);
            std::swap(res.permutation[piv], res.permutation[rank]);
            negate = !negate;
        }
        E pinv = K.one();
        if constexpr (ring_traits<E>::inverse_division) {
            if (!prev_is_one && rank + 1 < n) pinv = inv(prev);
        }
        const E& p = U(rank, k);
        for (std::size_t i = rank + 1; i < n; ++i) {
            const E lead = U(i, k);
            for (std::size_t j = k + 1; j < m; ++j) {
                E t = p * U(i, j);
                submul(t, lead, U(rank, j));
                U(i, j) = prev_is_one ? std::move(t) : divide(t, pinv);
            }
            U(i, k) = K.zero();
        }
        prev = U(rank, k);
        prev_is_one = prev.is_one();
        ++rank;
    }
    res.rank = rank;
    if (n == m && rank == n && n > 0) {
        res.det_value = negate ? -prev : prev;
    } else {
        if constexpr (!ring_traits<E>::is_domain) {
            // det * unit = 0 only certifies det = 0 when the last pivot is a unit
            if (rank > 0 && n == m) (void)inv(prev);
        }
        res.det_value = (n == 0 && m == 0) ? K.one() : K.zero();
    }
    return res;
}

/// Mahajan-Vinay clow-sequence determinant: division free, O(n^4).
template <class E>
E det_clow(const Matrix<E>& M) {
    if (!M.is_square()) throw NonSquare();
    const auto& K = M.base();
    const std::size_t n = M.rows();
    if (n == 0) return K.one();
    // D[h][u]: signed weight of partial sequences whose open clow has head h
    // and currently sits at u (u >= h); the sign accumulates -1 per clow.
    std::vector<E> D(n * n, K.zero()), N(n * n, K.zero());
    for (std::size_t h = 0; h < n; ++h) D[h * n + h] = K.one();
    E result = K.zero();
    for (std::size_t l = 0; l < n; ++l) {
        bool last = l + 1 == n;
        for (auto& x : N) x = K.zero();
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t u = h; u < n; ++u) {
                const E& w = D[h * n + u];
                if (w.is_zero()) continue;
                E closed = w * M(u, h);
                if (last) {
                    result -= closed;
                    continue;
                }
                for (std::size_t v = h + 1; v < n; ++v) addmul(N[h * n + v], w, M(u, v));
                for (std::size_t h2 = h + 1; h2 < n; ++h2) N[h2 * n + h2] -= closed;
            }
        std::swap(D, N);
    }
    return (n & 1) ? -result : result;
}

/// Division-free determinant through the Berkowitz charpoly.
template <class E>
E det_berkowitz(const Matrix<E>& M) {
    if (!M.is_square()) throw NonSquare();
    E c0 = charpoly_berkowitz(M).constant_term();
    return (M.rows() & 1) ? -c0 : c0;
}

template <class E>
E det(const Matrix<E>& M);

/// Determinant over R[x] by evaluation at 0..D and Newton interpolation,
/// D = sum over rows of the largest entry degree.
template <class F>
Poly<F> det_interpolation(const Matrix<Poly<F>>& M) {
    if (!M.is_square()) throw NonSquare();
    const auto& PR = M.base();
    const auto& K = PR.base();
    const std::size_t n = M.rows();
    if (n == 0) return PR.one();
    long D = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long rd = -1;
        for (std::size_t j = 0; j < n; ++j) rd = std::max(rd, M(i, j).degree());
        if (rd < 0) return PR.zero();
        D += rd;
    }
    mpz_class ch = K.characteristic();
    if (ch != 0 && ch <= D) throw InsufficientPoints("base ring has too few evaluation points");
    std::vector<F> xs, ys;
    const auto& MS = MatrixSpace<F>::get(K, n, n);
    for (long k = 0; k <= D; ++k) {
        F x = K(k);
        Matrix<F> Mx = MS.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Mx(i, j) = evaluate(M(i, j), x);
        xs.push_back(x);
        ys.push_back(det(Mx));
    }
    // divided differences in place
    for (long k = 1; k <= D; ++k)
        for (long i = D; i >= k; --i) ys[i] = divexact(ys[i] - ys[i - 1], xs[i] - xs[i - k]);
    Poly<F> P = PR(ys[D]);
    Poly<F> T = PR.gen();
    for (long k = D - 1; k >= 0; --k) P = P * (T - PR(xs[k])) + PR(ys[k]);
    return P;
}

/// Dispatcher: interpolation over polynomial rings (clow fallback), else
/// fraction-free LU with a Berkowitz fallback on impossible inverses.
template <class E>
E det(const Matrix<E>& M) {
    if (!M.is_square()) throw NonSquare();
    if (M.rows() == 0) return M.base().one();
    if constexpr (ring_traits<E>::is_polynomial) {
        try {
            return det_interpolation(M);
        } catch (const InsufficientPoints&) {
        } catch (const ImpossibleInverse&) {
        } catch (const InexactDivision&) {
        }
        return det_clow(M);
    } else {
        try {
            return fflu(M).det_value;
        } catch (const ImpossibleInverse&) {
            return det_berkowitz(M);
        }
    }
}

} // namespace ringtower
