#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace ringtower {

template <class E>
class Residue;

/// Quotient P/(m) of a polynomial ring P = F[y] by a nonzero m whose leading
/// coefficient is a unit. Elements are reduced representatives, deg < deg m.
template <class E>
class ResidueRing {
public:
    using element_type = Residue<E>;
    using base_parent = typename E::parent_type;

    static const ResidueRing& get(const E& modulus) {
        if (modulus.is_zero()) throw InvalidParameter("residue ring modulus must be nonzero");
        if (modulus.degree() < 1) throw InvalidParameter("residue ring modulus must be nonconstant");
        const base_parent& base = modulus.parent();
        return intern_parent<ResidueRing>(std::make_pair(static_cast<const void*>(&base), to_string(modulus)),
                                          [&] { return new ResidueRing(modulus); });
    }

    RingKind kind() const { return RingKind::ResidueRing; }
    std::string describe() const { return base_->describe() + "/(" + to_string(m_) + ")"; }
    mpz_class characteristic() const { return base_->characteristic(); }
    const base_parent& base() const { return *base_; }
    const E& modulus() const { return m_; }

    Residue<E> zero() const;
    Residue<E> one() const;
    Residue<E> operator()(long v) const;
    Residue<E> operator()(const E& v) const;
    Residue<E> from_int(const mpz_class& v) const;
    std::optional<Residue<E>> lookup(std::string_view name) const;
    Residue<E> parse(std::string_view s) const;

    E reduce(const E& x) const {
        if (x.degree() < m_.degree()) return x;
        return rem(x, m_);
    }

private:
    explicit ResidueRing(const E& m) : base_(&m.parent()), m_(normalise_unit(m)) {}
    const base_parent* base_;
    E m_;
};

template <class E>
const ResidueRing<E>& make_residue_ring(const E& modulus) {
    return ResidueRing<E>::get(modulus);
}

template <class E>
class Residue {
public:
    using parent_type = ResidueRing<E>;

    Residue() = default;
    Residue(const ResidueRing<E>* R, E rep) : R_(R), rep_(R->reduce(rep)) {}

    const ResidueRing<E>& parent() const { return *R_; }
    const E& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    Residue& operator+=(const Residue& o) {
        check_parents(*this, o);
        rep_ += o.rep_;
        return *this;
    }
    Residue& operator-=(const Residue& o) {
        check_parents(*this, o);
        rep_ -= o.rep_;
        return *this;
    }
    Residue& operator*=(const Residue& o) {
        check_parents(*this, o);
        rep_ = R_->reduce(rep_ * o.rep_);
        return *this;
    }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator-(const Residue& a) { return Residue(a.R_, -a.rep_); }
    friend bool operator==(const Residue& a, const Residue& b) {
        check_parents(a, b);
        return a.rep_ == b.rep_;
    }

private:
    const ResidueRing<E>* R_ = nullptr;
    E rep_;
};

template <class E>
Residue<E> ResidueRing<E>::zero() const { return Residue<E>(this, base_->zero()); }
template <class E>
Residue<E> ResidueRing<E>::one() const { return Residue<E>(this, base_->one()); }
template <class E>
Residue<E> ResidueRing<E>::operator()(long v) const { return Residue<E>(this, (*base_)(v)); }
template <class E>
Residue<E> ResidueRing<E>::operator()(const E& v) const {
    if (&v.parent() != base_) throw NoCoercion("element does not belong to " + base_->describe());
    return Residue<E>(this, v);
}
template <class E>
Residue<E> ResidueRing<E>::from_int(const mpz_class& v) const { return Residue<E>(this, base_->from_int(v)); }

template <class E>
struct ring_traits<Residue<E>> {
    static constexpr bool is_domain = false;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = false;
    static constexpr bool is_polynomial = false;
};

template <class E>
std::string to_string(const Residue<E>& a) {
    return to_string(a.rep());
}

template <class E>
std::ostream& operator<<(std::ostream& os, const Residue<E>& a) {
    return os << to_string(a);
}

/// Inverse via the extended gcd with the modulus. A nonconstant gcd is
/// reported as the ImpossibleInverse witness.
template <class E>
Residue<E> inv(const Residue<E>& a) {
    if (a.is_zero()) throw DivisionByZero();
    const auto& R = a.parent();
    auto [g, s, t] = xgcd(a.rep(), R.modulus());
    if (g.degree() != 0) throw ImpossibleInverse(to_string(g));
    return R(s);
}

template <class E>
Residue<E> divexact(const Residue<E>& a, const Residue<E>& b) {
    return a * inv(b);
}

template <class E>
std::optional<Residue<E>> try_divide(const Residue<E>& a, const Residue<E>& b) {
    try {
        return a * inv(b);
    } catch (const ImpossibleInverse&) {
        return std::nullopt;
    }
}

template <class E>
std::optional<Residue<E>> ResidueRing<E>::lookup(std::string_view name) const {
    if (auto b = base_->lookup(name)) return (*this)(*b);
    return std::nullopt;
}

template <class E>
Residue<E> ResidueRing<E>::parse(std::string_view s) const {
    ExprOps<Residue<E>> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const Residue<E>& a, const Residue<E>& b) { return divexact(a, b); };
    ops.pow = [](const Residue<E>& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Residue<E>>(s, ops);
}

} // namespace ringtower
