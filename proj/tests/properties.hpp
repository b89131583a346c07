#pragma once

// Independent oracles and randomized property drivers shared by the unit
// tests and the acceptance binary. A driver returns "" on success and a
// description of the first counterexample otherwise.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "test_util.hpp"

namespace rt_test {

template <class... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

// ---- sparse polynomials on explicit term maps ----------------------------

using Exps = std::vector<std::uint64_t>;

/// deglex: total degree, then lexicographic.
struct DegLexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        std::uint64_t da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

template <class E>
using TermMap = std::map<Exps, E, DegLexLess>;

template <class E>
TermMap<E> terms_of(const MPoly<E>& f) {
    TermMap<E> m;
    for (std::size_t i = 0; i < f.length(); ++i) m.emplace(f.exponents(i), f.coeff(i));
    return m;
}

template <class E>
MPoly<E> from_map(const MPolyRing<E>& R, const TermMap<E>& m) {
    std::vector<std::pair<Exps, E>> t;
    for (const auto& [e, c] : m)
        if (!c.is_zero()) t.emplace_back(e, c);
    return R.from_terms(std::move(t));
}

/// Schoolbook product over a term map.
template <class E>
MPoly<E> oracle_mul(const MPoly<E>& f, const MPoly<E>& g) {
    TermMap<E> acc;
    auto F = terms_of(f), G = terms_of(g);
    for (const auto& [ea, ca] : F)
        for (const auto& [eb, cb] : G) {
            Exps e(ea.size());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, ca * cb);
            else it->second = it->second + ca * cb;
        }
    return from_map(f.parent(), acc);
}

template <class E>
MPoly<E> oracle_pow(const MPoly<E>& f, std::uint64_t k) {
    MPoly<E> r = f.parent().one();
    for (std::uint64_t i = 0; i < k; ++i) r = oracle_mul(r, f);
    return r;
}

/// f = q g + r with no term of r divisible by lm(g); "" when it holds.
template <class E>
std::string division_violation(const MPoly<E>& f, const MPoly<E>& g, const MPoly<E>& q, const MPoly<E>& r) {
    if (oracle_mul(q, g) + r != f) return "f != q*g + r";
    Exps lg = g.exponents(0);
    for (std::size_t i = 0; i < r.length(); ++i) {
        Exps e = r.exponents(i);
        bool div = true;
        for (std::size_t v = 0; v < e.size(); ++v) div = div && e[v] >= lg[v];
        if (div) return "remainder term divisible by lm(g)";
    }
    return "";
}

/// Random divisor whose leading coefficient is a unit.
template <class E>
MPoly<E> rand_divisor(SplitMix64& rng, const MPolyRing<E>& R, const Gen<E>& gen) {
    for (;;) {
        MPoly<E> g = rand_mpoly(rng, R, gen, static_cast<int>(rng.range(1, 5)), 3);
        if (g.is_zero()) continue;
        if constexpr (std::is_same_v<E, Integer>) {
            if (g.lc() != Integer(1) && g.lc() != Integer(-1)) continue;
        }
        return g;
    }
}

/// `count` random (mul, divrem, pow) triples in three variables.
template <class E>
std::string heap_oracle_suite(const Gen<E>& gen, std::uint64_t seed, int count) {
    const auto& R = make_mpoly_ring<E>(gen.R, {"x", "y", "z"});
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        MPoly<E> f = rand_mpoly(rng, R, gen, static_cast<int>(rng.range(0, 14)), 6);
        MPoly<E> g = rand_mpoly(rng, R, gen, static_cast<int>(rng.range(0, 14)), 6);
        MPoly<E> p = heap_mul(f, g);
        if (p != oracle_mul(f, g) || !p.is_canonical()) return describe("mul instance ", i);

        MPoly<E> d = rand_divisor(rng, R, gen);
        auto [q, r] = heap_divrem(f, d);
        auto v = division_violation(f, d, q, r);
        if (!v.empty()) return describe("divrem instance ", i, ": ", v);
        if (!q.is_canonical() || !r.is_canonical()) return describe("divrem instance ", i, ": not canonical");
        if (heap_exact_div(heap_mul(f, d), d) != f) return describe("exact division instance ", i);

        MPoly<E> b = rand_mpoly(rng, R, gen, static_cast<int>(rng.range(1, 4)), 3);
        auto k = static_cast<std::uint64_t>(rng.range(0, 5));
        MPoly<E> pw = pow(b, k);
        if (pw != oracle_pow(b, k) || heap_pow(b, k) != pw) return describe("pow instance ", i);
    }
    return "";
}

// ---- matrices ------------------------------------------------------------

inline Matrix<Integer> companion(const Poly<Integer>& m) {
    const std::size_t k = static_cast<std::size_t>(m.degree());
    std::vector<std::vector<Integer>> rows(k, std::vector<Integer>(k, Integer(0)));
    for (std::size_t i = 1; i < k; ++i) rows[i][i - 1] = Integer(1);
    for (std::size_t i = 0; i < k; ++i) rows[i][k - 1] = -m.coeff(i);
    return make_matrix<Integer>(ZZ(), rows);
}

/// P * blockdiag(C(m), C(m)) * P^-1 with P a product of elementary matrices.
inline Matrix<Integer> duplicated_companion_conjugate(SplitMix64& rng, const Poly<Integer>& m, int steps) {
    const std::size_t k = static_cast<std::size_t>(m.degree()), n = 2 * k;
    auto C = companion(m).to_rows();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = a[i + k][j + k] = C[i][j];
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        Integer c(rng.coin() ? 1 : -1);
        for (std::size_t col = 0; col < n; ++col) a[i][col] = a[i][col] + c * a[j][col];
        for (std::size_t row = 0; row < n; ++row) a[row][j] = a[row][j] - c * a[row][i];
    }
    return make_matrix<Integer>(ZZ(), a);
}

template <class E>
Poly<Rational> to_q(const Poly<E>& p) {
    const auto& PQ = make_poly_ring<Rational>(QQ(), "T");
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return PQ.from_coeffs(std::move(c));
}

/// p(M) by Horner with plain matrix products.
inline bool annihilates(const Poly<Integer>& p, const Matrix<Integer>& M) {
    const std::size_t n = M.rows();
    auto rows = M.to_rows();
    std::vector<std::vector<Integer>> acc(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t k = p.length(); k-- > 0;) {
        std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, Integer(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (acc[i][l].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] + acc[i][l] * rows[l][j];
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] = next[i][i] + p.coeff(k);
        acc = std::move(next);
    }
    for (const auto& r : acc)
        for (const auto& x : r)
            if (!x.is_zero()) return false;
    return true;
}

inline std::string det_triple_agreement(std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    for (int rep = 0; rep < count; ++rep) {
        auto M = rand_int_matrix(rng, 5, 5, -99, 99);
        Integer a = fflu(M).det_value;
        if (det_berkowitz(M) != a || det_clow(M) != a) return describe("matrix ", rep);
    }
    return "";
}

inline std::string det_cofactor_agreement(std::uint64_t seed, int per_size) {
    SplitMix64 rng(seed);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int rep = 0; rep < per_size; ++rep) {
            auto M = rand_int_matrix(rng, n, n);
            Integer ref = cofactor_det(M);
            if (fflu(M).det_value != ref || det_berkowitz(M) != ref || det_clow(M) != ref || det(to_rational(M)) != Rational(ref))
                return describe("size ", n, " matrix ", rep);
        }
    return "";
}

/// Danilevsky-FF, Hessenberg over Q and Berkowitz agree; Cayley-Hamilton holds.
inline std::string charpoly_suite(std::uint64_t seed, int count, std::size_t n) {
    SplitMix64 rng(seed);
    exact_division_stats() = {};
    for (int rep = 0; rep < count; ++rep) {
        auto M = rand_int_matrix(rng, n, n, -99, 99);
        auto b = charpoly_berkowitz(M);
        if (b.degree() != static_cast<long>(n) || !b.lc().is_one()) return describe("matrix ", rep, ": bad shape");
        if (charpoly_danilevsky_ff(M) != b) return describe("matrix ", rep, ": danilevsky differs");
        if (to_q(charpoly_hessenberg(to_rational(M))) != to_q(b)) return describe("matrix ", rep, ": hessenberg differs");
        if (!annihilates(b, M)) return describe("matrix ", rep, ": cayley-hamilton fails");
    }
    if (exact_division_stats().calls == 0) return "no divisions were instrumented";
    if (exact_division_stats().inexact != 0) return describe(exact_division_stats().inexact, " inexact divisions");
    return "";
}

/// Conjugated duplicated companion blocks of a random degree-5 m(T).
inline std::string minpoly_suite(std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    const auto& PZ = make_poly_ring<Integer>(ZZ(), "T");
    for (int rep = 0; rep < count; ++rep) {
        auto m = PZ.from_coeffs({rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5),
                                 rand_int(rng, -5, 5), Integer(1)});
        auto M = duplicated_companion_conjugate(rng, m, 30);
        MinpolyIntegerStats st;
        auto mp = minpoly_integer(M, &st);
        if (mp != m) return describe("matrix ", rep, ": wrong minimal polynomial");
        if (st.verifications == 0 || st.generators.empty()) return describe("matrix ", rep, ": no verification recorded");
        // Horner on each recorded generator e_j: acc = M acc + m_k e_j
        for (std::size_t j : st.generators) {
            std::vector<Integer> acc(M.rows(), Integer(0));
            for (std::size_t k = mp.length(); k-- > 0;) {
                acc = M.mul_vec(acc);
                acc[j] = acc[j] + mp.coeff(k);
            }
            for (const auto& x : acc)
                if (!x.is_zero()) return describe("matrix ", rep, ": generator ", j, " not annihilated");
        }
        if (minpoly_field(to_rational(M)) != to_q(m)) return describe("matrix ", rep, ": rational spinning differs");
    }
    return "";
}

// ---- ideals --------------------------------------------------------------

/// Lower-triangular row HNF by repeated smallest-pivot Euclid, no modulus.
inline IntMat oracle_hnf(IntMat rows, std::size_t n) {
    IntMat H(n);
    for (std::size_t k = n; k-- > 0;) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][k] != 0 && (best == rows.size() || abs(rows[i][k]) < abs(rows[best][k]))) best = i;
            if (best == rows.size()) throw std::runtime_error("oracle_hnf: rank deficient");
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][k] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][k].get_mpz_t(), rows[best][k].get_mpz_t());
                for (std::size_t j = 0; j <= k; ++j) rows[i][j] -= q * rows[best][j];
                if (rows[i][k] != 0) done = false;
            }
            if (!done) continue;
            H[k] = rows[best];
            rows.erase(rows.begin() + static_cast<long>(best));
            break;
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [&](const IntVec& r) { return std::all_of(r.begin(), r.begin() + k, [](const mpz_class& x) { return x == 0; }); }),
                   rows.end());
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (H[i][i] < 0)
            for (auto& x : H[i]) x = -x;
        for (std::size_t j = i; j-- > 0;) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[j][j].get_mpz_t());
            for (std::size_t c = 0; c <= j; ++c) H[i][c] -= q * H[j][c];
        }
    }
    return H;
}

inline IntVec power_coords(const NFElem& x) {
    IntVec c(static_cast<std::size_t>(x.parent().degree()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpq_class q = x.coeff(i);
        if (q.get_den() != 1) throw std::runtime_error("element is not integral");
        c[i] = q.get_num();
    }
    return c;
}

/// Z-basis of <a, alpha> in an equation order, via field multiplication only.
inline IntMat oracle_ideal_hnf(const mpz_class& a, const NFElem& alpha) {
    const auto& K = alpha.parent();
    const std::size_t n = static_cast<std::size_t>(K.degree());
    IntMat rows;
    NFElem xj = K.one();
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = a;
        rows.push_back(e);
        rows.push_back(power_coords(alpha * xj));
        xj = xj * K.gen();
    }
    return oracle_hnf(std::move(rows), n);
}

inline IntMat oracle_hnf(const TwoGenIdeal& A) { return oracle_ideal_hnf(A.a(), A.alpha().to_field()); }

inline IntMat oracle_product(const NumberField& K, const IntMat& HA, const IntMat& HB) {
    const std::size_t n = HA.size();
    IntMat rows;
    for (const auto& r : HA)
        for (const auto& s : HB) {
            std::vector<mpz_class> rc(r.begin(), r.end()), sc(s.begin(), s.end());
            rows.push_back(power_coords(K.from_coeffs(rc) * K.from_coeffs(sc)));
        }
    return oracle_hnf(std::move(rows), n);
}

inline IntMat scalar_identity(std::size_t n, const mpz_class& d) {
    IntMat I(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = d;
    return I;
}

inline const Order& x16() { return Order::equation_order(NumberField::get("x^16 + 2", "a", "x"), true); }

inline const std::vector<PrimeIdeal>& x16_primes() {
    static const auto ps = primes_up_to_norm(x16(), 400);
    return ps;
}

/// Product of 1..3 random primes of x^16+2 with total norm <= 400.
inline TwoGenIdeal rand_small_ideal(SplitMix64& rng) {
    const auto& ps = x16_primes();
    for (;;) {
        TwoGenIdeal A = unit_ideal(x16());
        mpz_class N = 1;
        long k = rng.range(1, 3);
        for (long i = 0; i < k; ++i) {
            const auto& P = ps[rng.below(ps.size())];
            A = ideal_mul(A, P.ideal());
            N *= P.norm();
        }
        if (N <= 400) return A;
    }
}

/// extend_S keeps the lattice and yields a normal presentation over S u T.
inline std::string extend_s_suite(std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    const std::vector<long> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int rep = 0; rep < count; ++rep) {
        auto A = rand_small_ideal(rng);
        PrimeSet T;
        long k = rng.range(1, 4);
        for (long i = 0; i < k; ++i) T.push_back(pool[rng.below(pool.size())]);
        auto E = extend_S(A, T);
        if (oracle_hnf(E) != oracle_hnf(A)) return describe("pair ", rep, ": lattice changed");
        if (!is_normal(E)) return describe("pair ", rep, ": not normal");
        for (const auto& p : T)
            if (!std::binary_search(E.S().begin(), E.S().end(), p)) return describe("pair ", rep, ": ", p, " missing from S");
        for (const auto& p : A.S())
            if (!std::binary_search(E.S().begin(), E.S().end(), p)) return describe("pair ", rep, ": ", p, " dropped from S");
    }
    return "";
}

/// A * (numerator of A^-1) = D * O with D the stated denominator.
inline std::string inverse_suite(std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    const auto& K = x16().field();
    for (int rep = 0; rep < count; ++rep) {
        auto A = rand_small_ideal(rng);
        auto Ai = ideal_inverse(A);
        const mpz_class& D = Ai.denominator;
        if (D <= 0) return describe("ideal ", rep, ": non-positive denominator");
        auto prod = ideal_mul(A, Ai.numerator);
        if (oracle_hnf(prod) != scalar_identity(16, D)) return describe("ideal ", rep, ": A A^-1 != O");
        if (rep % 20 == 0 && oracle_product(K, oracle_hnf(A), oracle_hnf(Ai.numerator)) != scalar_identity(16, D))
            return describe("ideal ", rep, ": basis-level product differs");
    }
    return "";
}

// ---- balls ---------------------------------------------------------------

inline mpq_class rand_q(SplitMix64& rng, long num_bits, long max_den) {
    mpq_class q(rand_mpz(rng, num_bits), mpz_class(static_cast<long>(rng.range(1, max_den))));
    q.canonicalize();
    return q;
}

struct Sampled {
    RealBall ball;
    std::vector<mpq_class> points;
};

/// Ball around a random rational with sample points spread over [m - r, m + r].
inline Sampled rand_ball(SplitMix64& rng, mpfr_prec_t prec) {
    mpq_class m = rand_q(rng, 40, 1000000);
    mpq_class r = rng.below(10) < 3 ? mpq_class(0) : mpq_class(static_cast<long>(rng.range(1, 1000)), 100000);
    Sampled s{RealBall::from_mid_rad(m, r, prec), {m - r, m, m + r}};
    for (int i = 0; i < 3; ++i) s.points.push_back(m + r * mpq_class(static_cast<long>(rng.range(-1000, 1000)), 1000));
    return s;
}

inline bool sqrt_inside(const RealBall& b, const mpq_class& q) {
    mpq_class lo = b.lower_q(), hi = b.upper_q();
    bool lo_ok = lo <= 0 || lo * lo <= q;
    bool hi_ok = hi >= 0 && hi * hi >= q;
    return lo_ok && hi_ok;
}

inline mpq_class qpow(const mpq_class& q, long k) {
    mpq_class r = 1;
    for (long i = 0; i < k; ++i) r *= q;
    return r;
}

/// floor(sqrt(2) * 2^k) via the integer square root of 2 * 4^k.
inline mpz_class sqrt2_scaled(unsigned long k) {
    mpz_class v = mpz_class(2) << (2 * k), s;
    mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
    return s;
}

inline bool box_contains_sqrt2(const ComplexBox& b, int sign) {
    mpq_class lo = b.re().lower_q(), hi = b.re().upper_q();
    if (sign < 0) std::swap(lo, hi), lo = -lo, hi = -hi;
    return lo > 0 && lo * lo <= 2 && hi * hi >= 2 && b.im().contains(0);
}

/// Every operation's output contains the image of every sample point.
inline std::string ball_containment_suite(std::uint64_t seed, int ops) {
    SplitMix64 rng(seed);
    const mpfr_prec_t precs[] = {24, 53, 64, 128, 200};
    auto fail = [](int op, const char* what) { return describe("operation ", op, " (", what, ")"); };
    for (int op = 0; op < ops; ++op) {
        mpfr_prec_t p = precs[rng.below(5)];
        auto A = rand_ball(rng, p), B = rand_ball(rng, p);
        for (const auto& x : A.points)
            if (!A.ball.contains(x)) return fail(op, "input");
        switch (op % 10) {
        case 0: {
            auto C = A.ball + B.ball;
            for (const auto& x : A.points)
                for (const auto& y : B.points)
                    if (!C.contains(x + y)) return fail(op, "add");
            break;
        }
        case 1: {
            auto C = A.ball - B.ball;
            for (const auto& x : A.points)
                for (const auto& y : B.points)
                    if (!C.contains(x - y)) return fail(op, "sub");
            break;
        }
        case 2: {
            auto C = A.ball * B.ball;
            for (const auto& x : A.points)
                for (const auto& y : B.points)
                    if (!C.contains(x * y)) return fail(op, "mul");
            break;
        }
        case 3: {
            if (B.ball.lower_q() <= 0 && B.ball.upper_q() >= 0) break;
            auto C = A.ball / B.ball;
            for (const auto& x : A.points)
                for (const auto& y : B.points)
                    if (!C.contains(x / y)) return fail(op, "div");
            break;
        }
        case 4: {
            long k = rng.range(0, 6);
            auto C = pow(A.ball, k);
            for (const auto& x : A.points)
                if (!C.contains(qpow(x, k))) return fail(op, "pow");
            break;
        }
        case 5: {
            auto C = abs(A.ball), D = -A.ball;
            for (const auto& x : A.points)
                if (!C.contains(abs(x)) || !D.contains(-x)) return fail(op, "abs/neg");
            break;
        }
        case 6: {
            auto pos = RealBall::from_mid_rad(abs(A.points[1]) + 1, mpq_class(1, 1000), p);
            auto C = sqrt(pos);
            for (const mpq_class& x : std::vector<mpq_class>{pos.lower_q(), pos.upper_q(), abs(A.points[1]) + 1})
                if (!sqrt_inside(C, x)) return fail(op, "sqrt");
            break;
        }
        case 7: {
            ComplexBox z(A.ball, B.ball), w(B.ball, A.ball);
            auto sum = z + w, prod = z * w;
            auto az = abs(z);
            for (std::size_t i = 0; i < A.points.size(); ++i) {
                const auto &x = A.points[i], &y = B.points[i];
                // (x + iy) and (y + ix)
                if (!sum.contains(x + y, y + x)) return fail(op, "complex add");
                if (!prod.contains(x * y - y * x, x * x + y * y)) return fail(op, "complex mul");
                if (!sqrt_inside(az, x * x + y * y)) return fail(op, "complex abs");
            }
            break;
        }
        case 8: {
            ComplexBox z(A.ball, B.ball);
            auto wre = rand_ball(rng, p);
            ComplexBox w(wre.ball, RealBall::exact(1, p));
            auto q = z / w;
            for (std::size_t i = 0; i < A.points.size(); ++i) {
                const auto &x = A.points[i], &y = B.points[i], &u = wre.points[i];
                // (x + iy) / (u + i) = ((x u + y) + i (y u - x)) / (u^2 + 1)
                mpq_class n = u * u + 1;
                if (!q.contains((x * u + y) / n, (y * u - x) / n)) return fail(op, "complex div");
            }
            break;
        }
        case 9: {
            std::vector<mpq_class> c;
            for (int i = 0, d = static_cast<int>(rng.range(0, 5)); i <= d; ++i) c.push_back(rand_q(rng, 10, 7));
            auto small = RealBall::from_mid_rad(mpq_class(static_cast<long>(rng.range(-50, 50)), 7), mpq_class(1, 100), p);
            auto v = poly_eval(c, small);
            for (const mpq_class& x : std::vector<mpq_class>{small.lower_q(), small.upper_q(), small.mid().to_mpq()}) {
                mpq_class e = 0;
                for (std::size_t i = c.size(); i-- > 0;) e = e * x + c[i];
                if (!v.contains(e)) return fail(op, "poly_eval");
            }
            auto h = hull(A.ball, B.ball);
            for (const auto& x : A.points)
                if (!h.contains(x)) return fail(op, "hull");
            for (const auto& y : B.points)
                if (!h.contains(y)) return fail(op, "hull");
            break;
        }
        }
    }
    return "";
}

/// Conjugates of sqrt 2 at `prec` bits: two boxes of diameter <= 2^-prec
/// holding +-sqrt 2, with midpoints within 2^-prec of the isqrt reference.
inline std::string sqrt2_conjugates(mpfr_prec_t prec) {
    const auto& K = NumberField::get("x^2 - 2", "x", "x");
    auto conj = conjugates(K.gen(), prec);
    if (conj.size() != 2) return "expected two conjugates";
    const unsigned long up = 2 * static_cast<unsigned long>(prec);
    mpq_class ref(sqrt2_scaled(up), mpz_class(1) << up);
    mpq_class eps(1, mpz_class(1) << prec);
    int pos = 0, neg = 0;
    for (const auto& b : conj) {
        if (!b.diameter_at_most_2exp(prec)) return "box too wide";
        mpq_class m = b.re().mid().to_mpq();
        int s = m > 0 ? 1 : -1;
        (s > 0 ? pos : neg)++;
        if (abs(m - s * ref) > eps) return "midpoint too far from the reference";
        if (!box_contains_sqrt2(b, s)) return "box misses the root";
    }
    if (pos != 1 || neg != 1) return "wrong signs";
    return "";
}

// ---- torsion -------------------------------------------------------------

inline std::uint64_t phi_oracle(std::uint64_t k) {
    std::uint64_t c = 0;
    for (std::uint64_t j = 1; j <= k; ++j) c += std::gcd(j, k) == 1;
    return c;
}

/// Exact enumeration: a has finite order k iff a^k = 1 for some k with phi(k) | d.
inline bool torsion_oracle(const NFElem& a, std::uint64_t& order) {
    const std::uint64_t d = static_cast<std::uint64_t>(a.parent().degree());
    NFElem p = a.parent().one();
    for (std::uint64_t k = 1; k <= 2 * d * d; ++k) {
        p = p * a;
        if (p.is_one() && d % phi_oracle(k) == 0) {
            order = k;
            return true;
        }
    }
    order = 0;
    return false;
}

inline std::string torsion_disagreement(const NFElem& a) {
    std::uint64_t order = 0;
    bool t = torsion_oracle(a, order);
    auto r = is_torsion(a);
    if (r.torsion != t || r.order != order) return describe(to_string(a), " in ", a.parent().describe());
    auto e = is_torsion_exact(a);
    if (e.torsion != t || e.order != order) return describe(to_string(a), " (exact path) in ", a.parent().describe());
    return "";
}

/// All n-th roots of unity in Q(zeta_n) for n = 4, 8, 12.
inline std::string torsion_roots_of_unity_suite() {
    struct Case {
        const char* f;
        std::uint64_t n;
    };
    for (auto c : {Case{"x^2 + 1", 4}, Case{"x^4 + 1", 8}, Case{"x^4 - x^2 + 1", 12}}) {
        const auto& K = NumberField::get(c.f, "x", "x");
        NFElem z = K.one();
        for (std::uint64_t k = 0; k < c.n; ++k) {
            auto r = is_torsion(z);
            if (!r.torsion || r.order != c.n / std::gcd(c.n, k == 0 ? c.n : k)) return describe(c.f, " k=", k);
            auto v = torsion_disagreement(z);
            if (!v.empty()) return v;
            z = z * K.gen();
        }
    }
    return "";
}

/// `count` seeded elements of norm != +-1, all expected non-torsion.
inline std::string torsion_non_torsion_suite(std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    const char* fields[] = {"x^2 + 1", "x^4 + 1", "x^4 - x^2 + 1", "x^3 + 3*x + 1", "x^6 + x^3 + 1"};
    for (int done = 0; done < count;) {
        const auto& K = NumberField::get(fields[rng.below(5)], "x", "x");
        auto a = rand_nf(rng, K, -4, 4, 3);
        if (a.is_zero()) continue;
        mpq_class N = nf_norm(a);
        if (N == 1 || N == -1) continue;
        if (is_torsion(a).torsion) return describe(to_string(a), " reported torsion");
        auto v = torsion_disagreement(a);
        if (!v.empty()) return v;
        ++done;
    }
    return "";
}

inline std::string dobrowolski_constant_check(long max_d) {
    for (long d = 1; d <= max_d; ++d) {
        double want = 1.0 + std::log(static_cast<double>(d)) / (6.0 * static_cast<double>(d * d));
        double got = dobrowolski_threshold(d);
        if (std::abs(got - want) > 4 * std::numeric_limits<double>::epsilon()) return describe("d=", d);
    }
    return "";
}

} // namespace rt_test
