#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "integer.hpp"

namespace ringtower {

namespace nmod {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    std::uint64_t s = a + b;
    return s >= n ? s - n : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return a >= b ? a - b : a + (n - b);
}
inline std::uint64_t negmod(std::uint64_t a, std::uint64_t n) { return a == 0 ? 0 : n - a; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

/// Returns (g, s) with g = gcd(a, n) and s*a = g mod n.
inline std::pair<std::uint64_t, std::uint64_t> gcdinv(std::uint64_t a, std::uint64_t n) {
    __int128 r0 = n, r1 = a % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    __int128 s = s0 % static_cast<__int128>(n);
    if (s < 0) s += n;
    return {static_cast<std::uint64_t>(r0), static_cast<std::uint64_t>(s)};
}

/// Inverse of a mod n; 0 when a is not a unit.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t n) {
    auto [g, s] = gcdinv(a, n);
    return g == 1 ? s : 0;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : small) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Largest prime strictly below n.
inline std::uint64_t prev_prime(std::uint64_t n) {
    for (std::uint64_t c = n - 1; c >= 2; --c)
        if (is_prime(c)) return c;
    return 0;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    for (std::uint64_t c = n + 1;; ++c)
        if (is_prime(c)) return c;
}

} // namespace nmod

class Zmod;

/// Z/nZ for n >= 2. Moduli below 2^63 use machine-word arithmetic.
class ZmodRing {
public:
    using element_type = Zmod;

    static const ZmodRing& get(const mpz_class& n) {
        if (n < 2) throw InvalidParameter("modulus must be at least 2");
        return intern_parent<ZmodRing>(n.get_str(), [&] { return new ZmodRing(n); });
    }
    static const ZmodRing& get(long n) { return get(mpz_class(n)); }

    RingKind kind() const { return RingKind::IntegerResidue; }
    std::string describe() const { return "ZZ/" + n_.get_str(); }
    mpz_class characteristic() const { return n_; }
    const mpz_class& modulus() const { return n_; }
    bool is_word() const { return word_ != 0; }
    std::uint64_t word_modulus() const { return word_; }

    Zmod zero() const;
    Zmod one() const;
    Zmod operator()(long v) const;
    Zmod operator()(const Integer& v) const;
    Zmod from_int(const mpz_class& v) const;
    Zmod parse(std::string_view s) const;

private:
    explicit ZmodRing(const mpz_class& n) : n_(n) {
        if (n_ < (mpz_class(1) << 63)) word_ = n_.get_ui();
    }
    mpz_class n_;
    std::uint64_t word_ = 0;
};

inline const ZmodRing& make_zmod(long n) { return ZmodRing::get(n); }

/// Invariant: 0 <= rep < n.
class Zmod {
public:
    using parent_type = ZmodRing;

    Zmod() = default;
    /// w must already be reduced when the modulus is a word.
    Zmod(const ZmodRing* R, std::uint64_t w) : R_(R), w_(w) {
        if (!R->is_word()) {
            mpz_import(big_.get_mpz_t(), 1, 1, sizeof w, 0, 0, &w);
            w_ = 0;
        }
    }
    Zmod(const ZmodRing* R, mpz_class big) : R_(R) {
        if (R->is_word()) w_ = zz::mod(big, R->modulus()).get_ui();
        else big_ = zz::mod(big, R->modulus());
    }

    const ZmodRing& parent() const { return *R_; }
    const ZmodRing* parent_ptr() const { return R_; }

    mpz_class rep() const {
        if (R_->is_word()) {
            mpz_class r;
            mpz_import(r.get_mpz_t(), 1, 1, sizeof w_, 0, 0, &w_);
            return r;
        }
        return big_;
    }
    std::uint64_t word() const { return w_; }

    bool is_zero() const { return R_->is_word() ? w_ == 0 : sgn(big_) == 0; }
    bool is_one() const { return R_->is_word() ? w_ == 1 : big_ == 1; }

    Zmod& operator+=(const Zmod& o) {
        check_parents(*this, o);
        if (R_->is_word()) w_ = nmod::addmod(w_, o.w_, R_->word_modulus());
        else {
            big_ += o.big_;
            if (big_ >= R_->modulus()) big_ -= R_->modulus();
        }
        return *this;
    }
    Zmod& operator-=(const Zmod& o) {
        check_parents(*this, o);
        if (R_->is_word()) w_ = nmod::submod(w_, o.w_, R_->word_modulus());
        else {
            big_ -= o.big_;
            if (sgn(big_) < 0) big_ += R_->modulus();
        }
        return *this;
    }
    Zmod& operator*=(const Zmod& o) {
        check_parents(*this, o);
        if (R_->is_word()) w_ = nmod::mulmod(w_, o.w_, R_->word_modulus());
        else {
            big_ *= o.big_;
            mpz_mod(big_.get_mpz_t(), big_.get_mpz_t(), R_->modulus().get_mpz_t());
        }
        return *this;
    }

    friend Zmod operator+(Zmod a, const Zmod& b) { return a += b; }
    friend Zmod operator-(Zmod a, const Zmod& b) { return a -= b; }
    friend Zmod operator*(Zmod a, const Zmod& b) { return a *= b; }
    friend Zmod operator-(const Zmod& a) {
        if (a.R_->is_word()) return Zmod(a.R_, nmod::negmod(a.w_, a.R_->word_modulus()));
        return Zmod(a.R_, mpz_class(-a.big_));
    }
    friend bool operator==(const Zmod& a, const Zmod& b) {
        check_parents(a, b);
        return a.R_->is_word() ? a.w_ == b.w_ : a.big_ == b.big_;
    }

private:
    const ZmodRing* R_ = nullptr;
    std::uint64_t w_ = 0;
    mpz_class big_;
};

inline Zmod ZmodRing::zero() const { return Zmod(this, std::uint64_t(0)); }
inline Zmod ZmodRing::one() const { return Zmod(this, std::uint64_t(1)); }
inline Zmod ZmodRing::operator()(long v) const { return Zmod(this, mpz_class(v)); }
inline Zmod ZmodRing::operator()(const Integer& v) const { return Zmod(this, v.value()); }
inline Zmod ZmodRing::from_int(const mpz_class& v) const { return Zmod(this, v); }

template <>
struct ring_traits<Zmod> {
    static constexpr bool is_domain = false;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = false;
    static constexpr bool is_polynomial = false;
};

inline std::string to_string(const Zmod& a) { return a.rep().get_str(); }
inline std::ostream& operator<<(std::ostream& os, const Zmod& a) { return os << to_string(a); }

/// Raises ImpossibleInverse with witness gcd(rep, n) for non-units.
inline Zmod inv(const Zmod& a) {
    if (a.is_zero()) throw DivisionByZero();
    const ZmodRing& R = a.parent();
    if (R.is_word()) {
        auto [g, s] = nmod::gcdinv(a.word(), R.word_modulus());
        if (g != 1) throw ImpossibleInverse(std::to_string(g));
        return Zmod(&R, s);
    }
    mpz_class r = a.rep(), g, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, r.get_mpz_t(), R.modulus().get_mpz_t());
    if (g != 1) throw ImpossibleInverse(g.get_str());
    return Zmod(&R, s);
}

inline Zmod divexact(const Zmod& a, const Zmod& b) { return a * inv(b); }

inline std::optional<Zmod> try_divide(const Zmod& a, const Zmod& b) {
    try {
        return a * inv(b);
    } catch (const ImpossibleInverse&) {
        return std::nullopt;
    }
}

/// a itself when a is a unit, so that normalising makes polynomials monic;
/// 1 for zero and zero divisors.
inline Zmod canonical_unit(const Zmod& a) {
    if (a.is_zero()) return a.parent().one();
    mpz_class g;
    mpz_class r = a.rep();
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), a.parent().modulus().get_mpz_t());
    return g == 1 ? a : a.parent().one();
}

inline Zmod pow(const Zmod& a, std::uint64_t k) {
    const ZmodRing& R = a.parent();
    if (R.is_word()) return Zmod(&R, nmod::powmod(a.word(), k, R.word_modulus()));
    mpz_class r;
    mpz_class e;
    mpz_import(e.get_mpz_t(), 1, 1, sizeof k, 0, 0, &k);
    mpz_powm(r.get_mpz_t(), a.rep().get_mpz_t(), e.get_mpz_t(), R.modulus().get_mpz_t());
    return Zmod(&R, r);
}

inline Zmod ZmodRing::parse(std::string_view s) const {
    ExprOps<Zmod> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.div = [](const Zmod& a, const Zmod& b) { return divexact(a, b); };
    ops.pow = [](const Zmod& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Zmod>(s, ops);
}

} // namespace ringtower
