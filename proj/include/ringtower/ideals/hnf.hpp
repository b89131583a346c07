#pragma once

// Integer row Hermite normal forms in lower-triangular shape: row i of an
// n x n result has its positive pivot in column i, zeros to the right, and
// entries left of the pivot reduced into [0, H[j][j]).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "../core/errors.hpp"
#include "../integer.hpp"

namespace ringtower {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;

namespace hnf_detail {

/// (h, r) <- (u h + v r, (r_k/g) h - (h_k/g) r); afterwards r_k = 0 and
/// h_k = gcd(h_k, r_k) >= 0. The transformation is unimodular.
inline void combine(IntVec& h, IntVec& r, std::size_t k, std::size_t upto) {
    if (r[k] == 0) return;
    auto [g, u, v] = zz::xgcd(h[k], r[k]);
    mpz_class hk = h[k] / g, rk = r[k] / g;
    for (std::size_t j = 0; j <= upto; ++j) {
        mpz_class nh = u * h[j] + v * r[j];
        r[j] = rk * h[j] - hk * r[j];
        h[j] = std::move(nh);
    }
}

/// Off-diagonal reduction once the triangle is in place.
inline void normalise(IntMat& H) {
    const std::size_t n = H.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (H[i][i] < 0)
            for (auto& x : H[i]) x = -x;
        for (std::size_t j = i; j-- > 0;) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[j][j].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t c = 0; c <= j; ++c) H[i][c] -= q * H[j][c];
        }
    }
}

} // namespace hnf_detail

/// HNF of the lattice spanned by `rows` together with m Z^n, for m > 0.
/// All intermediate entries stay reduced modulo m.
inline IntMat hnf_mod(IntMat rows, const mpz_class& m, std::size_t n) {
    if (m <= 0) throw InvalidParameter("hnf modulus must be positive");
    for (auto& r : rows) {
        if (r.size() != n) throw DimensionMismatch("hnf row length");
        for (auto& x : r) x = zz::mod(x, m);
    }
    IntMat H(n, IntVec(n, 0));
    for (std::size_t k = n; k-- > 0;) {
        IntVec h(n, 0);
        h[k] = m;
        for (auto& r : rows) {
            hnf_detail::combine(h, r, k, k);
            for (std::size_t j = 0; j < k; ++j) r[j] = zz::mod(r[j], m);
            for (std::size_t j = 0; j < k; ++j) h[j] = zz::mod(h[j], m);
        }
        H[k] = std::move(h);
        // rows whose remaining prefix vanished carry no information
        std::size_t w = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < k && zero; ++j) zero = rows[i][j] == 0;
            if (zero) continue;
            if (w != i) rows[w] = std::move(rows[i]);
            ++w;
        }
        rows.resize(w);
    }
    hnf_detail::normalise(H);
    return H;
}

/// HNF of a full-rank lattice in Z^n given by spanning rows (no modulus).
inline IntMat hnf(IntMat rows, std::size_t n) {
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("hnf row length");
    IntMat H(n);
    for (std::size_t k = n; k-- > 0;) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) throw InvalidParameter("lattice is not of full rank");
        std::swap(rows[piv], rows.back());
        IntVec h = std::move(rows.back());
        rows.pop_back();
        for (auto& r : rows) hnf_detail::combine(h, r, k, k);
        H[k] = std::move(h);
        std::size_t w = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < k && zero; ++j) zero = rows[i][j] == 0;
            if (zero) continue;
            if (w != i) rows[w] = std::move(rows[i]);
            ++w;
        }
        rows.resize(w);
    }
    hnf_detail::normalise(H);
    return H;
}

/// Product of the diagonal, i.e. the lattice index in Z^n.
inline mpz_class hnf_index(const IntMat& H) {
    mpz_class d = 1;
    for (std::size_t i = 0; i < H.size(); ++i) d *= H[i][i];
    return d;
}

inline std::string to_string(const IntMat& H) {
    std::string s = "[";
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < H[i].size(); ++j) {
            if (j) s += ", ";
            s += H[i][j].get_str();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace ringtower
