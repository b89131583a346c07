#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

#include <gmpxx.h>

#include "core/errors.hpp"
#include "core/ring.hpp"
#include "core/text.hpp"

namespace ringtower {

class Integer;

/// The ring of rational integers. Stateless singleton.
class IntegerRing {
public:
    using element_type = Integer;

    static const IntegerRing& instance() {
        static const IntegerRing zz;
        return zz;
    }

    RingKind kind() const { return RingKind::Integers; }
    std::string describe() const { return "ZZ"; }
    mpz_class characteristic() const { return 0; }

    Integer zero() const;
    Integer one() const;
    Integer operator()(long v) const;
    Integer from_int(const mpz_class& v) const;
    Integer parse(std::string_view s) const;

    bool operator==(const IntegerRing&) const { return true; }

private:
    IntegerRing() = default;
};

inline const IntegerRing& ZZ() { return IntegerRing::instance(); }

class Integer {
public:
    using parent_type = IntegerRing;

    Integer() = default;
    Integer(long v) : v_(v) {}
    Integer(int v) : v_(v) {}
    Integer(const mpz_class& v) : v_(v) {}
    Integer(mpz_class&& v) : v_(std::move(v)) {}
    explicit Integer(std::string_view dec) : v_(std::string(dec)) {}

    const IntegerRing& parent() const { return IntegerRing::instance(); }
    const mpz_class& value() const { return v_; }
    mpz_class& value() { return v_; }
    mpz_srcptr get_mpz_t() const { return v_.get_mpz_t(); }
    mpz_ptr get_mpz_t() { return v_.get_mpz_t(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool fits_slong() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Integer& a, const Integer& b) {
        int c = cmp(a.v_, b.v_);
        return c <=> 0;
    }

private:
    mpz_class v_;
};

inline Integer IntegerRing::zero() const { return Integer(0); }
inline Integer IntegerRing::one() const { return Integer(1); }
inline Integer IntegerRing::operator()(long v) const { return Integer(v); }
inline Integer IntegerRing::from_int(const mpz_class& v) const { return Integer(v); }

template <>
struct ring_traits<Integer> {
    static constexpr bool is_domain = true;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = false;
    static constexpr bool has_gcd = true;
    static constexpr bool is_polynomial = false;
};

inline std::string to_string(const Integer& a) { return a.value().get_str(); }
inline std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.value(); }

inline void mul_into(Integer& d, const Integer& a, const Integer& b) {
    mpz_mul(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_assign(Integer& acc, const Integer& t) {
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), t.get_mpz_t());
}
inline void sub_assign(Integer& acc, const Integer& t) {
    mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), t.get_mpz_t());
}
inline void addmul(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void submul(Integer& acc, const Integer& a, const Integer& b) {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Integer pow(const Integer& a, std::uint64_t k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return Integer(std::move(r));
}

inline Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.value()))); }

/// Sign normalisation: gcds and fraction denominators are made positive.
inline Integer canonical_unit(const Integer& a) { return Integer(a.sign() < 0 ? -1L : 1L); }

inline Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Integer(std::move(g));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Integer(std::move(g));
}

/// Only ±1 are units; anything else raises with the element as witness.
inline Integer inv(const Integer& a) {
    if (a.is_zero()) throw DivisionByZero();
    if (a.value() == 1 || a.value() == -1) return a;
    throw ImpossibleInverse(to_string(a));
}

inline std::optional<Integer> try_divide(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Integer(std::move(q));
}

inline Integer divexact(const Integer& a, const Integer& b) {
    auto q = try_divide(a, b);
    if (!q) throw InexactDivision();
    return std::move(*q);
}

/// Euclidean division: a = q*b + r with 0 <= r < |b|.
inline std::pair<Integer, Integer> divrem(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) < 0) {
        r += ::abs(b.value());
        q -= sgn(b.value());
    }
    return {Integer(std::move(q)), Integer(std::move(r))};
}

inline Integer IntegerRing::parse(std::string_view s) const {
    ExprOps<Integer> ops;
    ops.from_integer = [](const mpz_class& v) { return Integer(v); };
    ops.div = [](const Integer& a, const Integer& b) { return divexact(a, b); };
    ops.pow = [](const Integer& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Integer>(s, ops);
}

// Plain mpz helpers shared across modules.
namespace zz {

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// g = gcd(a, b) = u*a + v*b with g >= 0.
inline std::tuple<mpz_class, mpz_class, mpz_class> xgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, u, v};
}

inline mpz_class pow(const mpz_class& a, unsigned long k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

/// Nonnegative residue of a modulo m > 0.
inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const mpz_class& d, const mpz_class& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace zz

} // namespace ringtower
