#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "integer.hpp"

namespace ringtower {

class Rational;

/// The field of rational numbers. Stateless singleton.
class RationalField {
public:
    using element_type = Rational;

    static const RationalField& instance() {
        static const RationalField qq;
        return qq;
    }

    RingKind kind() const { return RingKind::Rationals; }
    std::string describe() const { return "QQ"; }
    mpz_class characteristic() const { return 0; }

    Rational zero() const;
    Rational one() const;
    Rational operator()(long v) const;
    Rational operator()(const Integer& v) const;
    Rational from_int(const mpz_class& v) const;
    Rational parse(std::string_view s) const;

private:
    RationalField() = default;
};

inline const RationalField& QQ() { return RationalField::instance(); }

/// Invariant: den > 0 and gcd(num, den) = 1 (maintained by mpq_class).
class Rational {
public:
    using parent_type = RationalField;

    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(const Integer& v) : v_(v.value()) {}
    Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) {
        if (sgn(d) == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    const RationalField& parent() const { return RationalField::instance(); }
    const mpq_class& value() const { return v_; }
    mpq_class& value() { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpz_class& num_ref() const { return v_.get_num(); }
    const mpz_class& den_ref() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <=> 0; }

private:
    mpq_class v_;
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::operator()(long v) const { return Rational(v); }
inline Rational RationalField::operator()(const Integer& v) const { return Rational(v); }
inline Rational RationalField::from_int(const mpz_class& v) const { return Rational(v); }

template <>
struct ring_traits<Rational> {
    static constexpr bool is_domain = true;
    static constexpr bool is_field = true;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = true;
    static constexpr bool is_polynomial = false;
};

/// "a" for integers, otherwise "a/b".
inline std::string to_string(const Rational& a) {
    if (a.is_integer()) return a.num_ref().get_str();
    return a.num_ref().get_str() + "/" + a.den_ref().get_str();
}
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << to_string(a); }

inline void mul_into(Rational& d, const Rational& a, const Rational& b) {
    mpq_mul(d.value().get_mpq_t(), a.value().get_mpq_t(), b.value().get_mpq_t());
}
inline void add_assign(Rational& acc, const Rational& t) {
    mpq_add(acc.value().get_mpq_t(), acc.value().get_mpq_t(), t.value().get_mpq_t());
}

inline Rational inv(const Rational& a) {
    if (a.is_zero()) throw DivisionByZero();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), a.value().get_mpq_t());
    return Rational(r);
}

inline Rational divexact(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.value() / b.value()));
}

inline std::optional<Rational> try_divide(const Rational& a, const Rational& b) { return divexact(a, b); }

inline Rational pow(const Rational& a, std::uint64_t k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), a.num_ref().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), a.den_ref().get_mpz_t(), k);
    mpq_class r;
    mpz_swap(mpq_numref(r.get_mpq_t()), n.get_mpz_t());
    mpz_swap(mpq_denref(r.get_mpq_t()), d.get_mpz_t());
    return Rational(r);
}

/// Fields normalise gcds to 1.
inline Rational canonical_unit(const Rational& a) { return a.is_zero() ? Rational(1) : a; }
inline Rational gcd(const Rational& a, const Rational& b) {
    return (a.is_zero() && b.is_zero()) ? Rational(0) : Rational(1);
}

inline Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.value()))); }

inline Rational RationalField::parse(std::string_view s) const {
    ExprOps<Rational> ops;
    ops.from_integer = [](const mpz_class& v) { return Rational(v); };
    ops.div = [](const Rational& a, const Rational& b) { return divexact(a, b); };
    ops.pow = [](const Rational& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Rational>(s, ops);
}

} // namespace ringtower
