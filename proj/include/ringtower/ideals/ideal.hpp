#pragma once

// Two-generator ideals <a, alpha> in S-normal presentation.
//
// S is a finite prime set containing every prime of a. The presentation is
// S-normal when, for each prime ideal Q over a prime of S, v_Q(alpha) equals
// v_Q(A), and a has no prime outside S. Products then need no linear algebra:
// once both factors share S, <ab, alpha beta> presents the product.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "../core/errors.hpp"
#include "../core/random.hpp"
#include "../integer.hpp"
#include "../nf/number_field.hpp"
#include "hnf.hpp"
#include "order.hpp"

namespace ringtower {

namespace ideal_detail {

/// Lazily computed invariants. Every fill computes the same value, so a
/// racing second writer is harmless; the mutex only keeps the optional sane.
struct Cache {
    std::mutex mu;
    std::optional<mpz_class> norm;
    std::optional<IntMat> hnf;
};

} // namespace ideal_detail

class TwoGenIdeal {
public:
    TwoGenIdeal() = default;
    /// Caller guarantees: a > 0, alpha in <a, alpha>, primes(a) within S.
    TwoGenIdeal(const Order& O, mpz_class a, OrderElem alpha, PrimeSet S, bool normal)
        : O_(&O), a_(std::move(a)), alpha_(std::move(alpha)), S_(normalise_prime_set(std::move(S))), normal_(normal),
          cache_(std::make_shared<ideal_detail::Cache>()) {
        if (a_ <= 0) throw InvalidParameter("first generator must be positive");
        if (&alpha_.order() != O_) throw MixedParents();
    }

    const Order& order() const { return *O_; }
    const mpz_class& a() const { return a_; }
    const OrderElem& alpha() const { return alpha_; }
    const PrimeSet& S() const { return S_; }
    bool is_normal_flagged() const { return normal_; }
    bool is_unit() const { return a_ == 1; }

    std::optional<mpz_class> cached_norm() const {
        std::lock_guard<std::mutex> g(cache_->mu);
        return cache_->norm;
    }
    void set_cached_norm(const mpz_class& n) const {
        std::lock_guard<std::mutex> g(cache_->mu);
        if (!cache_->norm) cache_->norm = n;
    }
    std::optional<IntMat> cached_hnf() const {
        std::lock_guard<std::mutex> g(cache_->mu);
        return cache_->hnf;
    }
    void set_cached_hnf(const IntMat& h) const {
        std::lock_guard<std::mutex> g(cache_->mu);
        if (!cache_->hnf) cache_->hnf = h;
    }

    /// Same ideal, new presentation: invariants carry over.
    TwoGenIdeal with_presentation(mpz_class a, OrderElem alpha, PrimeSet S, bool normal) const {
        TwoGenIdeal r(*O_, std::move(a), std::move(alpha), std::move(S), normal);
        r.cache_ = cache_;
        return r;
    }

private:
    const Order* O_ = nullptr;
    mpz_class a_;
    OrderElem alpha_;
    PrimeSet S_;
    bool normal_ = false;
    std::shared_ptr<ideal_detail::Cache> cache_;
};

/// numerator / denominator with the smallest possible denominator.
struct FracIdeal {
    TwoGenIdeal numerator;
    mpz_class denominator = 1;
};

inline std::string to_string(const TwoGenIdeal& A) {
    return "⟨" + A.a().get_str() + ", " + to_string(A.alpha()) + "⟩";
}

inline std::string to_string(const FracIdeal& A) {
    if (A.denominator == 1) return to_string(A.numerator);
    return "(1/" + A.denominator.get_str() + ") " + to_string(A.numerator);
}

inline TwoGenIdeal unit_ideal(const Order& O) { return TwoGenIdeal(O, 1, O.one(), {}, true); }

/// <m> for a positive integer m, presented as (m, m).
inline TwoGenIdeal principal_ideal(const Order& O, const mpz_class& m) {
    if (m <= 0) throw InvalidParameter("principal generator must be positive");
    IntVec c(O.degree(), 0);
    c[0] = m;
    TwoGenIdeal A(O, m, O.element(std::move(c)), prime_divisors(m), true);
    A.set_cached_norm(zz::pow(m, static_cast<unsigned long>(O.degree())));
    return A;
}

namespace ideal_detail {

/// Modulus m with <a, alpha + m x> still S-normal for every x in O:
/// a^2 handles primes of a, one extra factor p for primes of S outside a.
inline mpz_class safe_modulus(const mpz_class& a, const PrimeSet& S) {
    mpz_class m = a * a;
    for (const auto& p : S)
        if (!zz::divides(p, a)) m *= p;
    return m;
}

inline OrderElem reduce(const Order& O, const OrderElem& x, const mpz_class& a, const PrimeSet& S) {
    if (a == 1) return O.one();
    return O.element(O.reduce_mod(x.coords(), safe_modulus(a, S)));
}

} // namespace ideal_detail

/// Pohst's test for S = primes(a): gcd(a, d / gcd(a, d)) = 1 where
/// dZ = alpha O n Z.
inline bool is_normal(const mpz_class& a, const OrderElem& alpha) {
    if (alpha.is_zero()) return a == 1;
    mpz_class d = order_denominator(alpha);
    mpz_class g = zz::gcd(a, d);
    return zz::gcd(a, mpz_class(d / g)) == 1;
}

/// The test for the stored S, which may contain primes not dividing a: at
/// those, alpha must be a unit locally, i.e. p must not divide d.
inline bool is_normal(const TwoGenIdeal& A) {
    const auto& alpha = A.alpha();
    if (alpha.is_zero()) return A.a() == 1 && A.S().empty();
    for (const auto& p : prime_divisors(A.a()))
        if (!std::binary_search(A.S().begin(), A.S().end(), p)) return false;
    mpz_class d = order_denominator(alpha);
    mpz_class g = zz::gcd(A.a(), d);
    if (zz::gcd(A.a(), mpz_class(d / g)) != 1) return false;
    for (const auto& p : A.S())
        if (!zz::divides(p, A.a()) && zz::divides(p, d)) return false;
    return true;
}

/// HNF of the Z-lattice aO + alpha O.
inline IntMat hnf_basis(const TwoGenIdeal& A) {
    if (auto h = A.cached_hnf()) return *h;
    const Order& O = A.order();
    IntMat H = hnf_mod(O.regular_representation(A.alpha().to_field()), A.a(), O.degree());
    A.set_cached_hnf(H);
    return H;
}

/// Basis-level product: HNF of all n^2 products of basis elements.
inline IntMat ideal_mul_basis(const Order& O, const IntMat& HA, const IntMat& HB) {
    const long n = O.degree();
    std::vector<NFElem> ea, eb;
    for (const auto& r : HA) ea.push_back(O.to_field(r));
    for (const auto& r : HB) eb.push_back(O.to_field(r));
    IntMat rows;
    for (const auto& x : ea)
        for (const auto& y : eb) rows.push_back(O.from_field(x * y).coords());
    return hnf_mod(std::move(rows), HA[0][0] * HB[0][0], n);
}

/// N(A) = gcd(a^n, N(alpha)), valid for normal presentations.
inline mpz_class ideal_norm_uncached(const TwoGenIdeal& A) {
    mpz_class an = zz::pow(A.a(), static_cast<unsigned long>(A.order().degree()));
    if (A.alpha().is_zero()) return an;
    mpq_class N = nf_norm(A.alpha().to_field());
    return zz::gcd(an, N.get_num());
}

inline mpz_class ideal_norm(const TwoGenIdeal& A) {
    if (auto n = A.cached_norm()) return *n;
    mpz_class n = ideal_norm_uncached(A);
    A.set_cached_norm(n);
    return n;
}

/// S u T presentation of the same ideal: with s = prod S, t = prod (T \ S)
/// and u a s + v t = 1, beta = v t alpha + u a s.
inline TwoGenIdeal extend_S(const TwoGenIdeal& A, const PrimeSet& T_in) {
    PrimeSet T = normalise_prime_set(T_in);
    PrimeSet extra = prime_set_difference(T, A.S());
    if (extra.empty()) return A;
    const Order& O = A.order();
    mpz_class s = prime_set_product(A.S()), t = prime_set_product(extra);
    mpz_class as = A.a() * s;
    auto [g, u, v] = zz::xgcd(as, t);
    if (g != 1) throw InvalidParameter("prime set of the ideal does not cover its first generator");
    IntVec c = A.alpha().coords();
    mpz_class vt = v * t;
    for (auto& x : c) x *= vt;
    c[0] += u * as;
    PrimeSet S = prime_set_union(A.S(), extra);
    OrderElem beta = ideal_detail::reduce(O, O.element(std::move(c)), A.a(), S);
    return A.with_presentation(A.a(), std::move(beta), std::move(S), A.is_normal_flagged());
}

/// AB = <ab, alpha beta> after moving both factors to S_A u S_B.
inline TwoGenIdeal ideal_mul(const TwoGenIdeal& A, const TwoGenIdeal& B) {
    if (&A.order() != &B.order()) throw MixedParents();
    const Order& O = A.order();
    if (A.is_unit()) return B;
    if (B.is_unit()) return A;
    TwoGenIdeal A2 = extend_S(A, B.S());
    TwoGenIdeal B2 = extend_S(B, A.S());
    mpz_class c = A2.a() * B2.a();
    OrderElem prod = O.from_field(A2.alpha().to_field() * B2.alpha().to_field());
    PrimeSet S = A2.S();
    OrderElem gamma = ideal_detail::reduce(O, prod, c, S);
    TwoGenIdeal R(O, std::move(c), std::move(gamma), std::move(S), A.is_normal_flagged() && B.is_normal_flagged());
    auto na = A.cached_norm(), nb = B.cached_norm();
    if (na && nb) R.set_cached_norm(*na * *nb);
    return R;
}

/// A^k = <a^k, alpha^k>; powers are taken in O / mO for the final modulus m.
inline TwoGenIdeal ideal_pow(const TwoGenIdeal& A, std::uint64_t k) {
    const Order& O = A.order();
    if (k == 0 || A.is_unit()) return unit_ideal(O);
    if (k == 1) return A;
    mpz_class c = zz::pow(A.a(), static_cast<unsigned long>(k));
    mpz_class m = ideal_detail::safe_modulus(c, A.S());
    NFElem base = A.alpha().to_field(), acc = O.field().one();
    auto red = [&](const NFElem& x) { return O.to_field(O.reduce_mod(O.from_field(x).coords(), m)); };
    for (std::uint64_t e = k;;) {
        if (e & 1) acc = red(acc * base);
        e >>= 1;
        if (!e) break;
        base = red(base * base);
    }
    TwoGenIdeal R(O, std::move(c), O.from_field(acc), A.S(), A.is_normal_flagged());
    if (auto n = A.cached_norm()) R.set_cached_norm(zz::pow(*n, static_cast<unsigned long>(k)));
    return R;
}

/// A^-1 = <1, g2 / alpha> where alpha O n Z = gZ and g2 is the part of g
/// prime to S; returned as D^-1 <D, D g2 / alpha> with D minimal.
inline FracIdeal ideal_inverse(const TwoGenIdeal& A) {
    const Order& O = A.order();
    if (A.is_unit()) return {unit_ideal(O), 1};
    if (A.alpha().is_zero()) throw DivisionByZero();
    NFElem alpha = A.alpha().to_field();
    NFElem gamma = order_inverse(alpha);
    mpz_class g2 = order_denominator(O, alpha);
    for (const auto& p : A.S())
        while (zz::divides(p, g2)) g2 /= p;
    NFElem delta = gamma.scale(mpq_class(g2));
    mpz_class D = 1;
    for (const auto& q : O.coordinates(delta)) D = zz::lcm(D, q.get_den());
    if (D == 1) return {unit_ideal(O), 1};
    PrimeSet SD;
    for (const auto& p : A.S())
        if (zz::divides(p, D)) SD.push_back(p);
    OrderElem beta = ideal_detail::reduce(O, O.from_field(delta.scale(mpq_class(D))), D, SD);
    TwoGenIdeal num(O, D, std::move(beta), std::move(SD), A.is_normal_flagged());
    // N(num) = D^n / N(A)
    num.set_cached_norm(zz::pow(D, static_cast<unsigned long>(O.degree())) / ideal_norm(A));
    return {std::move(num), D};
}

/// Normal presentation of the ideal with Z-basis H (rows, any full-rank
/// basis). a = min(A n N); alpha is tried as a itself, then as random
/// combinations sum c_i h_i with |c_i| <= B, B doubling every 10 failures.
inline TwoGenIdeal make_normal(const Order& O, const IntMat& basis, SplitMix64& rng) {
    const long n = O.degree();
    IntMat H = hnf(basis, static_cast<std::size_t>(n));
    mpz_class a = H[0][0];
    mpz_class N = hnf_index(H);
    if (a == 1) {
        TwoGenIdeal U = unit_ideal(O);
        return U;
    }
    PrimeSet S = prime_divisors(a);
    auto accept = [&](const OrderElem& alpha) -> std::optional<TwoGenIdeal> {
        if (alpha.is_zero() || !is_normal(a, alpha)) return std::nullopt;
        TwoGenIdeal A(O, a, ideal_detail::reduce(O, alpha, a, S), S, true);
        if (ideal_norm_uncached(A) != N) return std::nullopt;
        A.set_cached_norm(N);
        A.set_cached_hnf(H);
        return A;
    };
    IntVec c0(n, 0);
    c0[0] = a;
    if (auto r = accept(O.element(c0))) return *r;
    std::int64_t B = 2;
    for (long attempt = 1; attempt <= (1L << 16); ++attempt) {
        IntVec c(n, 0);
        for (long i = 0; i < n; ++i) {
            std::int64_t k = rng.range(-B, B);
            if (k == 0) continue;
            for (long j = 0; j < n; ++j) c[j] += k * H[i][j];
        }
        if (auto r = accept(O.element(std::move(c)))) return *r;
        if (attempt % 10 == 0 && B < (std::int64_t(1) << 40)) B *= 2;
    }
    throw RandomSearchExhausted("no normal presentation found");
}

/// Normal presentation of xO + yO for nonzero x or y.
inline TwoGenIdeal make_normal(const OrderElem& x, const OrderElem& y, SplitMix64& rng) {
    const Order& O = x.order();
    if (&y.order() != &O) throw MixedParents();
    mpz_class m = 0;
    IntMat rows;
    for (const OrderElem* e : {&x, &y}) {
        if (e->is_zero()) continue;
        m = zz::gcd(m, abs(nf_norm(e->to_field()).get_num()));
        for (auto& r : O.regular_representation(e->to_field())) rows.push_back(std::move(r));
    }
    if (m == 0) throw DivisionByZero();
    return make_normal(O, hnf_mod(std::move(rows), m, O.degree()), rng);
}

inline bool ideal_equal(const TwoGenIdeal& A, const TwoGenIdeal& B) {
    return &A.order() == &B.order() && hnf_basis(A) == hnf_basis(B);
}

} // namespace ringtower
