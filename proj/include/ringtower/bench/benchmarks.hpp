#pragma once

// Benchmark programs. Each returns a report whose fingerprint depends only
// on the parameters and the seed; oracle failures are reported, not thrown.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "../balls.hpp"
#include "../core/random.hpp"
#include "../finite_field.hpp"
#include "../ideals.hpp"
#include "../integer.hpp"
#include "../matrix.hpp"
#include "../mpoly.hpp"
#include "../nf/number_field.hpp"
#include "../poly.hpp"
#include "../residue.hpp"
#include "../resultant.hpp"
#include "report.hpp"

namespace ringtower::bench {

namespace detail {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline const MPolyRing<Integer>& fateman_ring() { return make_mpoly_ring<Integer>(ZZ(), {"x", "y", "z", "t"}); }
inline const MPolyRing<Integer>& pearce_ring() { return make_mpoly_ring<Integer>(ZZ(), {"x", "y", "z", "t", "u"}); }

} // namespace detail

/// f (f + 1) with f = (1 + x + y + z + t)^n over Z.
inline BenchReport cmd_fateman(long n) {
    if (n < 1) throw InvalidParameter("fateman needs n >= 1");
    BenchReport r;
    r.name = "fateman";
    r.params = {{"n", std::to_string(n)}};
    const auto& R = detail::fateman_ring();
    MPoly<Integer> f = pow(R.parse("1 + x + y + z + t"), static_cast<std::uint64_t>(n));
    MPoly<Integer> g = f + R.one();
    detail::Stopwatch sw;
    MPoly<Integer> p = f * g;
    r.seconds = sw.seconds();
    r.fingerprint = std::to_string(p.length());
    if (n <= 5) {
        r.oracle_checked = true;
        r.oracle_ok = naive_mul(f, g) == p;
    }
    return r;
}

/// f g with f = (1 + x + y + 2z^2 + 3t^3 + 5u^5)^n, g = (1 + u + t + 2z^2 + 3y^3 + 5x^5)^n.
inline BenchReport cmd_pearce(long n) {
    if (n < 0) throw InvalidParameter("pearce needs n >= 0");
    BenchReport r;
    r.name = "pearce";
    r.params = {{"n", std::to_string(n)}};
    const auto& R = detail::pearce_ring();
    auto k = static_cast<std::uint64_t>(n);
    MPoly<Integer> f = pow(R.parse("1 + x + y + 2*z^2 + 3*t^3 + 5*u^5"), k);
    MPoly<Integer> g = pow(R.parse("1 + u + t + 2*z^2 + 3*y^3 + 5*x^5"), k);
    detail::Stopwatch sw;
    MPoly<Integer> p = f * g;
    r.seconds = sw.seconds();
    r.fingerprint = std::to_string(p.length());
    if (n <= 3) {
        r.oracle_checked = true;
        r.oracle_ok = naive_mul(f, g) == p;
    }
    return r;
}

/// The tower GF(17^11) -> [y] -> mod (y^3 + 3xy + 1) -> [z] and its operands
/// s = f^e, t = (s + g)^e.
struct ResultantTower {
    Poly<Residue<Poly<FqElem>>> s, t;
};

inline ResultantTower resultant_tower(long e) {
    const auto& F = FiniteField::get(17, 11, "x");
    const auto& Ry = make_poly_ring<FqElem>(F, "y");
    const auto& Q = make_residue_ring<Poly<FqElem>>(Ry.parse("y^3 + 3*x*y + 1"));
    const auto& Rz = make_poly_ring<Residue<Poly<FqElem>>>(Q, "z");
    auto f = Rz.parse("(3*y^2 + y + x)*z^2 + ((x + 2)*y^2 + x + 1)*z + 4*x*y + 3");
    auto g = Rz.parse("(7*y^2 - y + 2*x + 7)*z^2 + (3*y^2 + 4*x + 1)*z + (2*x + 1)*y + 1");
    auto s = pow(f, static_cast<std::uint64_t>(e));
    auto t = pow(s + g, static_cast<std::uint64_t>(e));
    return {s, t};
}

inline BenchReport cmd_resultant_tower(long e) {
    if (e < 1) throw InvalidParameter("resultant-tower needs e >= 1");
    BenchReport r;
    r.name = "resultant-tower";
    r.params = {{"e", std::to_string(e)}};
    auto [s, t] = resultant_tower(e);
    detail::Stopwatch sw;
    auto res = resultant(s, t);
    r.seconds = sw.seconds();
    r.fingerprint = text_fingerprint(to_string(res));
    if (e <= 2) {
        r.oracle_checked = true;
        r.oracle_ok = resultant_sylvester(s, t) == res;
    }
    return r;
}

/// dim x dim matrix over Q[a]/(a^3 + 3a + 1), entries sum_k a^k r_k with
/// r_k uniform in [-100, 100].
inline Matrix<NFElem> nf_det_matrix(long dim, std::uint64_t seed) {
    const auto& K = NumberField::get("x^3 + 3*x + 1", "a");
    SplitMix64 rng(seed);
    const auto& MS = MatrixSpace<NFElem>::get(K, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    Matrix<NFElem> M = MS.zero();
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            std::vector<mpz_class> c(3);
            for (auto& x : c) x = rng.range(-100, 100);
            M(i, j) = K.from_coeffs(std::move(c));
        }
    return M;
}

inline BenchReport cmd_nf_det(long dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidParameter("nf-det needs dim >= 1");
    BenchReport r;
    r.name = "nf-det";
    r.params = {{"dim", std::to_string(dim)}, {"seed", std::to_string(seed)}};
    Matrix<NFElem> M = nf_det_matrix(dim, seed);
    detail::Stopwatch sw;
    NFElem d = fflu(M).det_value;
    r.seconds = sw.seconds();
    r.fingerprint = text_fingerprint(to_string(d));
    if (dim <= 6) {
        r.oracle_checked = true;
        r.oracle_ok = det_berkowitz(M) == d;
    }
    return r;
}

/// Q[x]/(x^n + 2) with its equation order, which is maximal: the polynomial
/// is Eisenstein at 2 and its discriminant is +-n^n 2^(n-1).
inline const Order& ideal_bench_order(long n) {
    std::vector<mpz_class> f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = 2;
    f[n] = 1;
    return Order::equation_order(NumberField::get(f, "a"), true);
}

struct IdealProduct {
    std::vector<PrimeIdeal> factors;
    TwoGenIdeal product;
    mpz_class norm_product;  // prod N(P_i)
};

/// Samples `count` primes of norm <= bound and multiplies them left to right.
inline IdealProduct random_ideal_product(const Order& O, long count, std::uint64_t bound, std::uint64_t seed) {
    auto primes = primes_up_to_norm(O, bound);
    if (primes.empty()) throw InvalidParameter("no prime ideals below the norm bound");
    SplitMix64 rng(seed);
    IdealProduct out{{}, unit_ideal(O), 1};
    for (long i = 0; i < count; ++i) out.factors.push_back(primes[rng.below(primes.size())]);
    for (const auto& P : out.factors) {
        out.product = ideal_mul(out.product, P.ideal());
        out.norm_product *= P.norm();
    }
    return out;
}

inline BenchReport cmd_ideal(long n, long count, std::uint64_t bound, std::uint64_t seed) {
    if (n < 1 || count < 1) throw InvalidParameter("ideal needs n >= 1 and count >= 1");
    BenchReport r;
    r.name = "ideal";
    r.params = {{"n", std::to_string(n)},
                {"count", std::to_string(count)},
                {"bound", std::to_string(bound)},
                {"seed", std::to_string(seed)}};
    const Order& O = ideal_bench_order(n);
    auto primes = primes_up_to_norm(O, bound);
    if (primes.empty()) throw InvalidParameter("no prime ideals below the norm bound");
    SplitMix64 rng(seed);
    std::vector<const PrimeIdeal*> picks;
    for (long i = 0; i < count; ++i) picks.push_back(&primes[rng.below(primes.size())]);
    detail::Stopwatch sw;
    TwoGenIdeal A = unit_ideal(O);
    for (const auto* P : picks) A = ideal_mul(A, P->ideal());
    r.seconds = sw.seconds();
    mpz_class expect = 1;
    for (const auto* P : picks) expect *= P->norm();
    mpz_class N = ideal_norm_uncached(A);
    r.fingerprint = N.get_str();
    r.oracle_checked = true;
    r.oracle_ok = N == expect;
    if (count <= 20 && n == 16) {
        IntMat H = hnf_basis(unit_ideal(O));
        for (const auto* P : picks) H = ideal_mul_basis(O, H, hnf_basis(P->ideal()));
        bool hnf_ok = H == hnf_basis(A);
        r.oracle_ok = r.oracle_ok && hnf_ok;
        r.detail = hnf_ok ? "hnf matches basis oracle" : "hnf differs from basis oracle";
    }
    return r;
}

/// Unimodular conjugate of diag(C(m), ..., C(m), c, ..., c) where
/// m = (T - c) h with h monic random; the minimal polynomial is m.
struct MinpolyInstance {
    Matrix<Integer> M;
    Poly<Integer> m;
};

inline MinpolyInstance structured_minpoly_matrix(long dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidParameter("dim must be positive");
    SplitMix64 rng(seed);
    const auto& PZ = PolyRing<Integer>::get(ZZ(), "T");
    long k = std::max<long>(1, dim / 2);
    long c = rng.range(-3, 3);
    std::vector<Integer> hc;
    for (long i = 0; i < k - 1; ++i) hc.emplace_back(rng.range(-5, 5));
    hc.emplace_back(1);
    Poly<Integer> m = PZ.from_coeffs(std::move(hc)) * (PZ.gen() - PZ(c));
    std::vector<std::vector<Integer>> rows(dim, std::vector<Integer>(dim, Integer(0)));
    long pos = 0;
    while (pos + k <= dim) {
        // companion: subdiagonal ones, last column -m_0 .. -m_{k-1}
        for (long i = 1; i < k; ++i) rows[pos + i][pos + i - 1] = Integer(1);
        for (long i = 0; i < k; ++i) rows[pos + i][pos + k - 1] = -m.coeffs()[i];
        pos += k;
    }
    for (; pos < dim; ++pos) rows[pos][pos] = Integer(c);
    // conjugate by elementary matrices E = I + s e_i e_j^T: row i += s row j,
    // then column j -= s column i
    for (long step = 0; step < 3 * dim; ++step) {
        long i = static_cast<long>(rng.below(dim)), j = static_cast<long>(rng.below(dim));
        if (i == j) continue;
        long s = rng.range(-2, 2);
        if (s == 0) continue;
        for (long col = 0; col < dim; ++col) rows[i][col] = rows[i][col] + Integer(s) * rows[j][col];
        for (long row = 0; row < dim; ++row) rows[row][j] = rows[row][j] - Integer(s) * rows[row][i];
    }
    return {make_matrix<Integer>(ZZ(), rows), m};
}

inline BenchReport cmd_minpoly(long dim, std::uint64_t seed) {
    BenchReport r;
    r.name = "minpoly";
    r.params = {{"dim", std::to_string(dim)}, {"seed", std::to_string(seed)}};
    auto inst = structured_minpoly_matrix(dim, seed);
    MinpolyIntegerStats st;
    detail::Stopwatch sw;
    Poly<Integer> mp = minpoly_integer(inst.M, &st);
    r.seconds = sw.seconds();
    r.fingerprint = "deg=" + std::to_string(mp.degree()) + ";" + text_fingerprint(to_string(mp));
    r.oracle_checked = true;
    r.oracle_ok = mp == inst.m && st.verifications > 0;
    r.detail = "primes " + std::to_string(st.primes_used) + ", verified";
    return r;
}

/// "torsion, order k" or "not torsion" for an element of Q[x]/(f).
inline std::string torsion_demo(const std::string& field, const std::string& elem) {
    const auto& K = NumberField::get(field, "x", "x");
    return to_string(is_torsion(K.parse(elem)));
}

} // namespace ringtower::bench
