#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "errors.hpp"

namespace ringtower {

/// Kind tag carried by every parent object.
enum class RingKind {
    Integers,
    Rationals,
    IntegerResidue,
    PolynomialRing,
    ResidueRing,
    FractionField,
    FiniteField,
    MatrixSpace,
    NumberField,
};

inline const char* kind_name(RingKind k) {
    switch (k) {
    case RingKind::Integers: return "Integers";
    case RingKind::Rationals: return "Rationals";
    case RingKind::IntegerResidue: return "IntegerResidue";
    case RingKind::PolynomialRing: return "PolynomialRing";
    case RingKind::ResidueRing: return "ResidueRing";
    case RingKind::FractionField: return "FractionField";
    case RingKind::FiniteField: return "FiniteField";
    case RingKind::MatrixSpace: return "MatrixSpace";
    case RingKind::NumberField: return "NumberField";
    }
    return "?";
}

/// Compile-time facts about an element type.
///
///   is_field          every nonzero element is a unit
///   inverse_division  exact division is implemented as multiplication by an
///                     inverse (may raise ImpossibleInverse at runtime)
///   has_gcd           gcd() and canonical_unit() are available
///   is_polynomial     the type is a dense univariate polynomial
///   is_domain         no zero divisors (known statically)
template <class E>
struct ring_traits {
    static constexpr bool is_domain = false;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = false;
    static constexpr bool has_gcd = false;
    static constexpr bool is_polynomial = false;
};

/// What every element type provides. Parents are interned, so two elements
/// share a parent exactly when the parent addresses coincide.
template <class E>
concept RingElement = requires(const E& a, const E& b, E& d) {
    typename E::parent_type;
    { a.parent() } -> std::convertible_to<const typename E::parent_type&>;
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { a * b } -> std::convertible_to<E>;
    { -a } -> std::convertible_to<E>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    d += a;
    d -= a;
    d *= a;
};

template <class P>
concept RingParent = requires(const P& p, long n) {
    typename P::element_type;
    { p.zero() } -> std::convertible_to<typename P::element_type>;
    { p.one() } -> std::convertible_to<typename P::element_type>;
    { p(n) } -> std::convertible_to<typename P::element_type>;
    { p.kind() } -> std::convertible_to<RingKind>;
    { p.describe() } -> std::convertible_to<std::string>;
};

template <class E>
inline bool same_parent(const E& a, const E& b) {
    return &a.parent() == &b.parent();
}

template <class E>
inline void check_parents(const E& a, const E& b) {
    if (!same_parent(a, b)) throw MixedParents();
}

template <class E>
E zero_like(const E& x) {
    return x.parent().zero();
}

template <class E>
E one_like(const E& x) {
    return x.parent().one();
}

// In-place arithmetic. Element types override these when they can reuse
// storage; the defaults are semantically identical to the pure operators.

template <class E>
void mul_into(E& dst, const E& a, const E& b) {
    dst = a * b;
}

template <class E>
void add_assign(E& acc, const E& t) {
    acc += t;
}

template <class E>
void sub_assign(E& acc, const E& t) {
    acc -= t;
}

/// acc += a * b
template <class E>
void addmul(E& acc, const E& a, const E& b) {
    acc += a * b;
}

/// acc -= a * b
template <class E>
void submul(E& acc, const E& a, const E& b) {
    acc -= a * b;
}

/// Binary powering, x^0 = 1.
template <class E>
E pow(const E& x, std::uint64_t k) {
    E result = x.parent().one();
    if (k == 0) return result;
    E base = x;
    for (;;) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return result;
}

/// Inverse of a unit; ImpossibleInverse (with witness) for non-units,
/// DivisionByZero for zero.
template <class E>
E try_inverse(const E& x) {
    return inv(x);
}

/// Global registry handing out one immortal parent per structural key.
template <class Parent, class Key, class Make>
const Parent& intern_parent(const Key& key, Make&& make) {
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<Parent>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, std::unique_ptr<Parent>(make())).first;
    return *it->second;
}

} // namespace ringtower
