#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "core/errors.hpp"
#include "core/ring.hpp"
#include "core/text.hpp"

namespace ringtower {

template <class E>
class Frac;

/// Fraction field of an integral domain with gcd.
template <class E>
class FracField {
public:
    using element_type = Frac<E>;
    using base_parent = typename E::parent_type;

    static const FracField& get(const base_parent& base) {
        return intern_parent<FracField>(static_cast<const void*>(&base), [&] { return new FracField(base); });
    }

    RingKind kind() const { return RingKind::FractionField; }
    std::string describe() const { return "Frac(" + base_->describe() + ")"; }
    mpz_class characteristic() const { return base_->characteristic(); }
    const base_parent& base() const { return *base_; }

    Frac<E> zero() const;
    Frac<E> one() const;
    Frac<E> operator()(long v) const;
    Frac<E> operator()(const E& v) const;
    Frac<E> operator()(const E& n, const E& d) const;
    Frac<E> from_int(const mpz_class& v) const;
    std::optional<Frac<E>> lookup(std::string_view name) const;
    Frac<E> parse(std::string_view s) const;

private:
    explicit FracField(const base_parent& b) : base_(&b) {}
    const base_parent* base_;
};

template <class E>
const FracField<E>& make_fraction_field(const typename E::parent_type& base) {
    return FracField<E>::get(base);
}

/// Invariant: den != 0, gcd(num, den) = 1, canonical_unit(den) = 1.
template <class E>
class Frac {
public:
    using parent_type = FracField<E>;

    Frac() = default;
    Frac(const FracField<E>* F, E n, E d) : F_(F), n_(std::move(n)), d_(std::move(d)) { canonicalise(); }

    const FracField<E>& parent() const { return *F_; }
    const E& num() const { return n_; }
    const E& den() const { return d_; }

    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return n_.is_one() && d_.is_one(); }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        check_parents(a, b);
        if (a.d_ == b.d_) return Frac(a.F_, a.n_ + b.n_, a.d_);
        return Frac(a.F_, a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        check_parents(a, b);
        if (a.d_ == b.d_) return Frac(a.F_, a.n_ - b.n_, a.d_);
        return Frac(a.F_, a.n_ * b.d_ - b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        check_parents(a, b);
        return Frac(a.F_, a.n_ * b.n_, a.d_ * b.d_);
    }
    friend Frac operator-(const Frac& a) {
        Frac r = a;
        r.n_ = -r.n_;
        return r;
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        check_parents(a, b);
        return a.n_ == b.n_ && a.d_ == b.d_;
    }

private:
    void canonicalise() {
        if (d_.is_zero()) throw DivisionByZero();
        if (n_.is_zero()) {
            d_ = F_->base().one();
            return;
        }
        E g = gcd(n_, d_);
        if (!g.is_one()) {
            n_ = divexact(n_, g);
            d_ = divexact(d_, g);
        }
        E u = canonical_unit(d_);
        if (!u.is_one()) {
            E ui = inv(u);
            n_ = n_ * ui;
            d_ = d_ * ui;
        }
    }

    const FracField<E>* F_ = nullptr;
    E n_, d_;
};

template <class E>
Frac<E> FracField<E>::zero() const { return Frac<E>(this, base_->zero(), base_->one()); }
template <class E>
Frac<E> FracField<E>::one() const { return Frac<E>(this, base_->one(), base_->one()); }
template <class E>
Frac<E> FracField<E>::operator()(long v) const { return Frac<E>(this, (*base_)(v), base_->one()); }
template <class E>
Frac<E> FracField<E>::operator()(const E& v) const {
    if (&v.parent() != base_) throw NoCoercion("element does not belong to " + base_->describe());
    return Frac<E>(this, v, base_->one());
}
template <class E>
Frac<E> FracField<E>::operator()(const E& n, const E& d) const { return Frac<E>(this, n, d); }
template <class E>
Frac<E> FracField<E>::from_int(const mpz_class& v) const { return Frac<E>(this, base_->from_int(v), base_->one()); }

template <class E>
struct ring_traits<Frac<E>> {
    static constexpr bool is_domain = true;
    static constexpr bool is_field = true;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = true;
    static constexpr bool is_polynomial = false;
};

template <class E>
std::string to_string(const Frac<E>& a) {
    std::string n = to_string(a.num());
    if (a.den().is_one()) return n;
    auto wrap = [](const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == ' ' || s[i] == '*' || s[i] == '^' || s[i] == '/' || (s[i] == '-' && i > 0)) return "(" + s + ")";
        return s;
    };
    return wrap(n) + "/" + wrap(to_string(a.den()));
}

template <class E>
std::ostream& operator<<(std::ostream& os, const Frac<E>& a) {
    return os << to_string(a);
}

template <class E>
Frac<E> inv(const Frac<E>& a) {
    if (a.is_zero()) throw DivisionByZero();
    return a.parent()(a.den(), a.num());
}

template <class E>
Frac<E> divexact(const Frac<E>& a, const Frac<E>& b) {
    return a * inv(b);
}

template <class E>
std::optional<Frac<E>> try_divide(const Frac<E>& a, const Frac<E>& b) {
    return a * inv(b);
}

template <class E>
Frac<E> canonical_unit(const Frac<E>& a) {
    return a.is_zero() ? a.parent().one() : a;
}

template <class E>
Frac<E> gcd(const Frac<E>& a, const Frac<E>& b) {
    return (a.is_zero() && b.is_zero()) ? a : a.parent().one();
}

template <class E>
std::optional<Frac<E>> FracField<E>::lookup(std::string_view name) const {
    if constexpr (requires { base_->lookup(name); }) {
        if (auto b = base_->lookup(name)) return (*this)(*b);
    }
    return std::nullopt;
}

template <class E>
Frac<E> FracField<E>::parse(std::string_view s) const {
    ExprOps<Frac<E>> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const Frac<E>& a, const Frac<E>& b) { return divexact(a, b); };
    ops.pow = [](const Frac<E>& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Frac<E>>(s, ops);
}

} // namespace ringtower
