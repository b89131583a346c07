#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

#include <gmpxx.h>

#include "nmod_poly.hpp"

namespace ringtower {

class FqElem;

/// GF(p^k) realised as (Z/pZ)[var]/(g) with g monic irreducible of degree k.
/// The generator `var` is the class of the variable, a root of g.
class FiniteField {
public:
    using element_type = FqElem;

    static const FiniteField& get(std::uint64_t p, long k, const std::string& var = "x") {
        if (!nmod::is_prime(p) || p >= (std::uint64_t(1) << 63))
            throw InvalidParameter("finite field characteristic must be a word-size prime");
        if (k < 1) throw InvalidParameter("finite field degree must be positive");
        return intern_parent<FiniteField>(std::make_tuple(p, k, var),
                                          [&] { return new FiniteField(p, k, var); });
    }

    RingKind kind() const { return RingKind::FiniteField; }
    std::string describe() const {
        return "GF(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
    }
    mpz_class characteristic() const { return mpz_class(static_cast<unsigned long>(p_)); }
    mpz_class order() const { return zz::pow(characteristic(), static_cast<unsigned long>(k_)); }
    std::uint64_t prime() const { return p_; }
    long degree() const { return k_; }
    const std::string& var() const { return var_; }
    const nmod_poly::Vec& modulus() const { return g_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem gen() const;
    FqElem operator()(long v) const;
    FqElem from_int(const mpz_class& v) const;
    FqElem from_coeffs(nmod_poly::Vec c) const;
    std::optional<FqElem> lookup(std::string_view name) const;
    FqElem parse(std::string_view s) const;

private:
    FiniteField(std::uint64_t p, long k, std::string var)
        : p_(p), k_(k), var_(std::move(var)), g_(nmod_poly::random_irreducible(p, k)) {}

    std::uint64_t p_;
    long k_;
    std::string var_;
    nmod_poly::Vec g_;
};

inline const FiniteField& make_finite_field(std::uint64_t p, long k, const std::string& var = "x") {
    return FiniteField::get(p, k, var);
}

/// Invariant: coefficient vector trimmed, length <= k.
class FqElem {
public:
    using parent_type = FiniteField;

    FqElem() = default;
    FqElem(const FiniteField* F, nmod_poly::Vec c) : F_(F), c_(std::move(c)) {}

    const FiniteField& parent() const { return *F_; }
    const nmod_poly::Vec& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    FqElem& operator+=(const FqElem& o) {
        check_parents(*this, o);
        c_ = nmod_poly::add(c_, o.c_, F_->prime());
        return *this;
    }
    FqElem& operator-=(const FqElem& o) {
        check_parents(*this, o);
        c_ = nmod_poly::sub(c_, o.c_, F_->prime());
        return *this;
    }
    FqElem& operator*=(const FqElem& o) {
        check_parents(*this, o);
        if (c_.empty() || o.c_.empty()) {
            c_.clear();
            return *this;
        }
        c_ = nmod_poly::mulmod(c_, o.c_, F_->modulus(), F_->prime());
        return *this;
    }

    friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
    friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
    friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
    friend FqElem operator-(const FqElem& a) { return FqElem(a.F_, nmod_poly::neg(a.c_, a.F_->prime())); }
    friend bool operator==(const FqElem& a, const FqElem& b) {
        check_parents(a, b);
        return a.c_ == b.c_;
    }

private:
    const FiniteField* F_ = nullptr;
    nmod_poly::Vec c_;
};

inline FqElem FiniteField::zero() const { return FqElem(this, {}); }
inline FqElem FiniteField::one() const { return FqElem(this, {1}); }
inline FqElem FiniteField::gen() const { return FqElem(this, nmod_poly::rem({0, 1}, g_, p_)); }
inline FqElem FiniteField::operator()(long v) const { return from_int(mpz_class(v)); }
inline FqElem FiniteField::from_int(const mpz_class& v) const {
    mpz_class r = zz::mod(v, characteristic());
    if (r == 0) return zero();
    return FqElem(this, {r.get_ui()});
}
inline FqElem FiniteField::from_coeffs(nmod_poly::Vec c) const {
    for (auto& x : c) x %= p_;
    nmod_poly::trim(c);
    if (static_cast<long>(c.size()) > k_) c = nmod_poly::rem(c, g_, p_);
    return FqElem(this, std::move(c));
}

template <>
struct ring_traits<FqElem> {
    static constexpr bool is_domain = true;
    static constexpr bool is_field = true;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = true;
    static constexpr bool is_polynomial = false;
};

inline std::string to_string(const FqElem& a) {
    const auto& c = a.coeffs();
    const std::string& v = a.parent().var();
    std::vector<std::string> terms;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? v : v + "^" + std::to_string(i));
        terms.push_back(format_term(std::to_string(c[i]), mono));
    }
    return join_terms(terms);
}
inline std::ostream& operator<<(std::ostream& os, const FqElem& a) { return os << to_string(a); }

inline FqElem inv(const FqElem& a) {
    if (a.is_zero()) throw DivisionByZero();
    const FiniteField& F = a.parent();
    auto [g, s, t] = nmod_poly::xgcd(a.coeffs(), F.modulus(), F.prime());
    if (!nmod_poly::is_one(g)) throw ImpossibleInverse(to_string(F.from_coeffs(g)));
    return F.from_coeffs(s);
}

inline FqElem divexact(const FqElem& a, const FqElem& b) { return a * inv(b); }
inline std::optional<FqElem> try_divide(const FqElem& a, const FqElem& b) { return a * inv(b); }

inline FqElem pow(const FqElem& a, std::uint64_t k) {
    const FiniteField& F = a.parent();
    if (k == 0) return F.one();
    if (a.is_zero()) return a;
    return F.from_coeffs(nmod_poly::powmod(a.coeffs(), k, F.modulus(), F.prime()));
}

inline FqElem canonical_unit(const FqElem& a) { return a.is_zero() ? a.parent().one() : a; }
inline FqElem gcd(const FqElem& a, const FqElem& b) {
    return (a.is_zero() && b.is_zero()) ? a : a.parent().one();
}

inline std::optional<FqElem> FiniteField::lookup(std::string_view name) const {
    if (name == var_) return gen();
    return std::nullopt;
}

inline FqElem FiniteField::parse(std::string_view s) const {
    ExprOps<FqElem> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const FqElem& a, const FqElem& b) { return divexact(a, b); };
    ops.pow = [](const FqElem& a, unsigned long k) { return pow(a, k); };
    return parse_expression<FqElem>(s, ops);
}

} // namespace ringtower
