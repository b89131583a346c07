#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/ring.hpp"
#include "core/text.hpp"
#include "integer.hpp"

namespace ringtower {

template <class E>
class Poly;

/// Dense univariate polynomial ring base[var].
template <class E>
class PolyRing {
public:
    using element_type = Poly<E>;
    using coeff_type = E;
    using base_parent = typename E::parent_type;

    static const PolyRing& get(const base_parent& base, const std::string& var) {
        return intern_parent<PolyRing>(std::make_pair(static_cast<const void*>(&base), var),
                                       [&] { return new PolyRing(base, var); });
    }

    RingKind kind() const { return RingKind::PolynomialRing; }
    std::string describe() const { return base_->describe() + "[" + var_ + "]"; }
    mpz_class characteristic() const { return base_->characteristic(); }
    const base_parent& base() const { return *base_; }
    const std::string& var() const { return var_; }

    Poly<E> zero() const;
    Poly<E> one() const;
    Poly<E> gen() const;
    Poly<E> operator()(long v) const;
    Poly<E> operator()(const E& c) const;
    Poly<E> from_int(const mpz_class& v) const;
    Poly<E> from_coeffs(std::vector<E> c) const;
    /// c * var^k
    Poly<E> monomial(const E& c, std::size_t k) const;
    std::optional<Poly<E>> lookup(std::string_view name) const;
    Poly<E> parse(std::string_view s) const;

private:
    PolyRing(const base_parent& base, std::string var) : base_(&base), var_(std::move(var)) {}
    const base_parent* base_;
    std::string var_;
};

template <class E>
const PolyRing<E>& make_poly_ring(const typename E::parent_type& base, const std::string& var) {
    return PolyRing<E>::get(base, var);
}

/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
template <class E>
class Poly {
public:
    using parent_type = PolyRing<E>;
    using coeff_type = E;

    Poly() = default;
    Poly(const PolyRing<E>* R, std::vector<E> c) : R_(R), c_(std::move(c)) { normalise(); }

    const PolyRing<E>& parent() const { return *R_; }
    const std::vector<E>& coeffs() const { return c_; }
    std::vector<E>& coeffs_mut() { return c_; }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t length() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R_->base().zero(); }
    const E& lc() const { return c_.back(); }
    E constant_term() const { return coeff(0); }

    void normalise() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Poly& operator+=(const Poly& o) {
        check_parents(*this, o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R_->base().zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) add_assign(c_[i], o.c_[i]);
        normalise();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_parents(*this, o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R_->base().zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) sub_assign(c_[i], o.c_[i]);
        normalise();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        std::vector<E> c;
        c.reserve(a.c_.size());
        for (const auto& x : a.c_) c.push_back(-x);
        return Poly(a.R_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_parents(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.R_, {});
        const auto& base = a.R_->base();
        std::vector<E> c(a.c_.size() + b.c_.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) addmul(c[i + j], a.c_[i], b.c_[j]);
        }
        return Poly(a.R_, std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        check_parents(a, b);
        return a.c_ == b.c_;
    }

    /// Multiply every coefficient by a base-ring scalar.
    Poly scale(const E& s) const {
        std::vector<E> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x * s);
        return Poly(R_, std::move(c));
    }

    /// Multiply by var^k.
    Poly shift(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<E> c(k, R_->base().zero());
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(R_, std::move(c));
    }

private:
    const PolyRing<E>* R_ = nullptr;
    std::vector<E> c_;
};

template <class E>
Poly<E> PolyRing<E>::zero() const { return Poly<E>(this, {}); }
template <class E>
Poly<E> PolyRing<E>::one() const { return Poly<E>(this, {base_->one()}); }
template <class E>
Poly<E> PolyRing<E>::gen() const { return Poly<E>(this, {base_->zero(), base_->one()}); }
template <class E>
Poly<E> PolyRing<E>::operator()(long v) const { return Poly<E>(this, {(*base_)(v)}); }
template <class E>
Poly<E> PolyRing<E>::operator()(const E& c) const {
    if (&c.parent() != base_) throw NoCoercion("coefficient does not belong to " + base_->describe());
    return Poly<E>(this, {c});
}
template <class E>
Poly<E> PolyRing<E>::from_int(const mpz_class& v) const { return Poly<E>(this, {base_->from_int(v)}); }
template <class E>
Poly<E> PolyRing<E>::from_coeffs(std::vector<E> c) const { return Poly<E>(this, std::move(c)); }
template <class E>
Poly<E> PolyRing<E>::monomial(const E& c, std::size_t k) const {
    std::vector<E> v(k + 1, base_->zero());
    v[k] = c;
    return Poly<E>(this, std::move(v));
}

template <class E>
struct ring_traits<Poly<E>> {
    static constexpr bool is_domain = ring_traits<E>::is_domain;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = false;
    static constexpr bool has_gcd = ring_traits<E>::has_gcd && ring_traits<E>::is_domain;
    static constexpr bool is_polynomial = true;
};

template <class E>
std::string to_string(const Poly<E>& f) {
    const auto& c = f.coeffs();
    const std::string& v = f.parent().var();
    std::vector<std::string> terms;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? v : v + "^" + std::to_string(i));
        terms.push_back(format_term(to_string(c[i]), mono));
    }
    return join_terms(terms);
}

template <class E>
std::ostream& operator<<(std::ostream& os, const Poly<E>& f) {
    return os << to_string(f);
}

template <class E>
Poly<E> derivative(const Poly<E>& f) {
    if (f.length() <= 1) return f.parent().zero();
    std::vector<E> c;
    const auto& base = f.parent().base();
    for (std::size_t i = 1; i < f.length(); ++i) c.push_back(f.coeffs()[i] * base(static_cast<long>(i)));
    return f.parent().from_coeffs(std::move(c));
}

/// Horner evaluation at a base-ring point.
template <class E>
E evaluate(const Poly<E>& f, const E& x) {
    E r = f.parent().base().zero();
    for (std::size_t i = f.length(); i-- > 0;) {
        r *= x;
        r += f.coeffs()[i];
    }
    return r;
}

/// Evaluation at an element of any ring into which the coefficients embed via
/// the supplied map.
template <class E, class T, class Map>
T evaluate_with(const Poly<E>& f, const T& x, Map&& embed) {
    T r = x.parent().zero();
    for (std::size_t i = f.length(); i-- > 0;) {
        r = r * x;
        r += embed(f.coeffs()[i]);
    }
    return r;
}

/// Euclidean division; the leading coefficient of g must be a unit
/// (ImpossibleInverse otherwise).
template <class E>
std::pair<Poly<E>, Poly<E>> divrem(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    if (g.is_zero()) throw DivisionByZero();
    const auto& R = f.parent();
    if (f.degree() < g.degree()) return {R.zero(), f};
    E li = inv(g.lc());
    std::vector<E> r = f.coeffs();
    std::vector<E> q(f.length() - g.length() + 1, R.base().zero());
    long dg = g.degree();
    for (long i = f.degree(); i >= dg; --i) {
        if (r[i].is_zero()) continue;
        E c = r[i] * li;
        long s = i - dg;
        for (long j = 0; j <= dg; ++j) submul(r[s + j], c, g.coeffs()[j]);
        r[i] = R.base().zero();
        q[s] = std::move(c);
    }
    r.resize(dg);
    return {R.from_coeffs(std::move(q)), R.from_coeffs(std::move(r))};
}

template <class E>
Poly<E> rem(const Poly<E>& f, const Poly<E>& g) {
    return divrem(f, g).second;
}

/// Pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r, deg r < deg g.
/// Performs no coefficient divisions.
template <class E>
std::pair<Poly<E>, Poly<E>> pseudo_divrem(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    if (g.is_zero()) throw DivisionByZero();
    const auto& R = f.parent();
    if (f.degree() < g.degree()) return {R.zero(), f};
    const E& l = g.lc();
    long dg = g.degree();
    long e = f.degree() - dg + 1;
    std::vector<E> r = f.coeffs();
    std::vector<E> q(f.length() - g.length() + 1, R.base().zero());
    long top = f.degree();
    while (top >= dg) {
        E c = r[top];
        r.resize(top);  // drop the leading term, it cancels exactly
        long s = top - dg;
        for (auto& x : q) x *= l;
        q[s] += c;
        for (auto& x : r) x *= l;
        for (long j = 0; j < dg; ++j) submul(r[s + j], c, g.coeffs()[j]);
        --e;
        top = static_cast<long>(r.size()) - 1;
        while (top >= 0 && r[top].is_zero()) --top;
        r.resize(top + 1);
    }
    if (e > 0) {
        E m = pow(l, static_cast<std::uint64_t>(e));
        for (auto& x : q) x *= m;
        for (auto& x : r) x *= m;
    }
    return {R.from_coeffs(std::move(q)), R.from_coeffs(std::move(r))};
}

template <class E>
Poly<E> pseudo_rem(const Poly<E>& f, const Poly<E>& g) {
    if (f.degree() < g.degree()) return f;
    return pseudo_divrem(f, g).second;
}

/// Divide every coefficient exactly by a scalar.
template <class E>
Poly<E> divexact_scalar(const Poly<E>& f, const E& s) {
    if (s.is_one()) return f;
    std::vector<E> c;
    c.reserve(f.length());
    for (const auto& x : f.coeffs()) c.push_back(divexact(x, s));
    return f.parent().from_coeffs(std::move(c));
}

/// Exact quotient f/g, or nullopt when g does not divide f.
template <class E>
std::optional<Poly<E>> try_divide(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    if (g.is_zero()) throw DivisionByZero();
    const auto& R = f.parent();
    if (f.is_zero()) return R.zero();
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<E> r = f.coeffs();
    std::vector<E> q(f.length() - g.length() + 1, R.base().zero());
    long dg = g.degree();
    for (long i = f.degree(); i >= dg; --i) {
        if (r[i].is_zero()) continue;
        std::optional<E> c;
        try {
            c = try_divide(r[i], g.lc());
        } catch (const ImpossibleInverse&) {
            return std::nullopt;
        }
        if (!c) return std::nullopt;
        long s = i - dg;
        for (long j = 0; j <= dg; ++j) submul(r[s + j], *c, g.coeffs()[j]);
        q[s] = std::move(*c);
    }
    for (long j = 0; j < dg; ++j)
        if (!r[j].is_zero()) return std::nullopt;
    return R.from_coeffs(std::move(q));
}

template <class E>
Poly<E> divexact(const Poly<E>& f, const Poly<E>& g) {
    if (g.is_constant() && !g.is_zero()) return divexact_scalar(f, g.lc());
    auto q = try_divide(f, g);
    if (!q) throw InexactDivision();
    return std::move(*q);
}

/// Only constants with unit value are invertible.
template <class E>
Poly<E> inv(const Poly<E>& f) {
    if (f.is_zero()) throw DivisionByZero();
    if (f.degree() > 0) throw ImpossibleInverse(to_string(f));
    return f.parent()(inv(f.lc()));
}

template <class E>
Poly<E> canonical_unit(const Poly<E>& f) {
    if (f.is_zero()) return f.parent().one();
    return f.parent()(canonical_unit(f.lc()));
}

/// Makes the leading coefficient canonical (monic over fields, positive over Z).
template <class E>
Poly<E> normalise_unit(const Poly<E>& f) {
    if (f.is_zero()) return f;
    E u = canonical_unit(f.lc());
    if (u.is_one()) return f;
    return f.scale(inv(u));
}

/// gcd of the coefficients, carrying the unit of lc(f) so that
/// f = content(f) * primitive_part(f) with primitive_part canonical.
template <class E>
E content(const Poly<E>& f) {
    const auto& base = f.parent().base();
    if (f.is_zero()) return base.zero();
    E g = base.zero();
    for (std::size_t i = f.length(); i-- > 0;) {
        g = gcd(g, f.coeffs()[i]);
        if (g.is_one()) break;
    }
    return g * canonical_unit(f.lc());
}

template <class E>
Poly<E> primitive_part(const Poly<E>& f) {
    if (f.is_zero()) return f;
    return divexact_scalar(f, content(f));
}

/// Monic (field) or primitive canonical (gcd domain) gcd.
template <class E>
Poly<E> gcd(const Poly<E>& f, const Poly<E>& g) {
    check_parents(f, g);
    if constexpr (ring_traits<E>::inverse_division) {
        Poly<E> a = f, b = g;
        while (!b.is_zero()) {
            Poly<E> r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return normalise_unit(a);
    } else {
        if (f.is_zero()) return normalise_unit(g);
        if (g.is_zero()) return normalise_unit(f);
        E cf = content(f), cg = content(g);
        E c = gcd(cf, cg);
        Poly<E> a = divexact_scalar(f, cf), b = divexact_scalar(g, cg);
        if (a.degree() < b.degree()) std::swap(a, b);
        // subresultant PRS with primitive parts taken at the end
        E gg = f.parent().base().one(), h = gg;
        while (!b.is_zero() && b.degree() > 0) {
            long delta = a.degree() - b.degree();
            Poly<E> r = pseudo_rem(a, b);
            a = std::move(b);
            if (r.is_zero()) {
                b = f.parent().zero();
                break;
            }
            b = divexact_scalar(r, gg * pow(h, static_cast<std::uint64_t>(delta)));
            gg = a.lc();
            if (delta == 0) {
            } else if (delta == 1) {
                h = gg;
            } else {
                h = divexact(pow(gg, static_cast<std::uint64_t>(delta)), pow(h, static_cast<std::uint64_t>(delta - 1)));
            }
        }
        if (!b.is_zero()) return f.parent()(c);  // b is a nonzero constant
        Poly<E> res = primitive_part(a);
        return normalise_unit(res.scale(c));
    }
}

/// Extended gcd over a field: g = s*f + t*h with g monic.
template <class E>
std::tuple<Poly<E>, Poly<E>, Poly<E>> xgcd(const Poly<E>& f, const Poly<E>& h) {
    const auto& R = f.parent();
    Poly<E> r0 = f, r1 = h, s0 = R.one(), s1 = R.zero(), t0 = R.zero(), t1 = R.one();
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly<E> s2 = s0 - q * s1;
        Poly<E> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        E li = inv(r0.lc());
        r0 = r0.scale(li);
        s0 = s0.scale(li);
        t0 = t0.scale(li);
    }
    return {r0, s0, t0};
}

/// Subresultant PRS resultant (no content extraction). Raises
/// ImpossibleInverse when a leading coefficient is a zero divisor; the caller
/// then falls back to a division-free determinant.
template <class E>
E resultant_prs(Poly<E> A, Poly<E> B) {
    check_parents(A, B);
    const auto& base = A.parent().base();
    if (A.is_zero() || B.is_zero()) return base.zero();
    E s = base.one();
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    if (B.degree() == 0) return s * pow(B.lc(), static_cast<std::uint64_t>(A.degree()));
    E g = base.one(), h = base.one();
    for (;;) {
        if constexpr (!ring_traits<E>::is_domain) (void)inv(B.lc());
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        Poly<E> R = pseudo_rem(A, B);
        A = std::move(B);
        if (R.is_zero()) return base.zero();
        B = divexact_scalar(R, g * pow(h, static_cast<std::uint64_t>(delta)));
        g = A.lc();
        if (delta == 1) h = g;
        else if (delta > 1)
            h = divexact(pow(g, static_cast<std::uint64_t>(delta)), pow(h, static_cast<std::uint64_t>(delta - 1)));
        if (B.degree() == 0) break;
    }
    long da = A.degree();
    E lb = pow(B.lc(), static_cast<std::uint64_t>(da));
    if (da > 1) lb = divexact(lb, pow(h, static_cast<std::uint64_t>(da - 1)));
    return s * lb;
}

/// Rows 0..deg g-1 hold shifted copies of f, the rest shifted copies of g,
/// coefficients in descending order.
template <class E>
std::vector<std::vector<E>> sylvester_rows(const Poly<E>& f, const Poly<E>& g) {
    const auto& base = f.parent().base();
    long m = f.degree(), n = g.degree();
    long N = m + n;
    std::vector<std::vector<E>> S(N, std::vector<E>(N, base.zero()));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) S[i][i + j] = f.coeffs()[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) S[n + i][i + j] = g.coeffs()[n - j];
    return S;
}

template <class E>
std::optional<Poly<E>> PolyRing<E>::lookup(std::string_view name) const {
    if (name == var_) return gen();
    if constexpr (requires { base_->lookup(name); }) {
        if (auto b = base_->lookup(name)) return (*this)(*b);
    }
    return std::nullopt;
}

template <class E>
Poly<E> PolyRing<E>::parse(std::string_view s) const {
    ExprOps<Poly<E>> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const Poly<E>& a, const Poly<E>& b) { return divexact(a, b); };
    ops.pow = [](const Poly<E>& a, unsigned long k) { return pow(a, k); };
    return parse_expression<Poly<E>>(s, ops);
}

} // namespace ringtower
