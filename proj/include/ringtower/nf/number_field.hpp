#pragma once

// K = Q[x]/(f), f monic with integer coefficients.
//
// Elements are num(x)/den with integer num of degree < d and den > 0 coprime
// to the content of num. Products are formed unreduced (degree <= 2d-2)
// and folded back with a table of x^i mod f, so a sum of products needs
// only one reduction.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "../core/errors.hpp"
#include "../core/ring.hpp"
#include "../core/text.hpp"
#include "../integer.hpp"
#include "../poly.hpp"
#include "../rational.hpp"
#include "../resultant.hpp"

namespace ringtower {

class NFElem;
class NFUnreduced;

class NumberField {
public:
    using element_type = NFElem;

    /// f given low-first; must be monic of degree >= 1.
    static const NumberField& get(const std::vector<mpz_class>& f, const std::string& var = "a") {
        if (f.size() < 2 || f.back() != 1) throw InvalidParameter("defining polynomial must be monic of degree >= 1");
        std::string key = var + ":";
        for (const auto& c : f) key += c.get_str() + ",";
        return intern_parent<NumberField>(key, [&] { return new NumberField(f, var); });
    }
    /// Parses the defining polynomial in `poly_var`.
    static const NumberField& get(std::string_view poly, const std::string& var = "a", const std::string& poly_var = "x") {
        auto P = PolyRing<Integer>::get(ZZ(), poly_var).parse(poly);
        std::vector<mpz_class> c;
        for (const auto& x : P.coeffs()) c.push_back(x.value());
        return get(c, var);
    }

    RingKind kind() const { return RingKind::NumberField; }
    std::string describe() const;
    mpz_class characteristic() const { return 0; }

    long degree() const { return d_; }
    const std::string& var() const { return var_; }
    /// Defining polynomial, low-first.
    const std::vector<mpz_class>& modulus() const { return f_; }
    Poly<Integer> defining_poly() const;
    /// x^i mod f for i = d .. 2d-2, each of length d.
    const std::vector<std::vector<mpz_class>>& power_table() const { return pt_; }
    /// S_k = sum of k-th powers of the roots, k = 0 .. 2d-2.
    const std::vector<mpz_class>& newton_sums() const { return S_; }
    /// 1 / lc(f); always 1 for the monic fields handled here.
    const mpz_class& lead_inv() const { return lead_inv_; }

    NFElem zero() const;
    NFElem one() const;
    NFElem gen() const;
    NFElem operator()(long v) const;
    NFElem operator()(const Rational& v) const;
    NFElem from_int(const mpz_class& v) const;
    NFElem from_coeffs(std::vector<mpz_class> num, mpz_class den = 1) const;
    NFElem from_rationals(const std::vector<mpq_class>& c) const;
    std::optional<NFElem> lookup(std::string_view name) const;
    NFElem parse(std::string_view s) const;

    /// In-place fold of coefficients d..2d-2 of a length-(2d-1) vector.
    void reduce_in_place(std::vector<mpz_class>& c) const;

private:
    NumberField(std::vector<mpz_class> f, std::string var);

    std::vector<mpz_class> f_;
    std::string var_;
    long d_;
    std::vector<std::vector<mpz_class>> pt_;
    std::vector<mpz_class> S_;
    mpz_class lead_inv_ = 1;
};

class NFElem {
public:
    using parent_type = NumberField;

    NFElem() = default;
    NFElem(const NumberField* K, std::vector<mpz_class> num, mpz_class den)
        : K_(K), num_(std::move(num)), den_(std::move(den)) {
        canonicalise();
    }

    const NumberField& parent() const { return *K_; }
    const std::vector<mpz_class>& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    mpq_class coeff(std::size_t i) const {
        mpq_class q(i < num_.size() ? num_[i] : mpz_class(0), den_);
        q.canonicalize();
        return q;
    }
    long degree() const { return static_cast<long>(num_.size()) - 1; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return num_.size() == 1 && num_[0] == 1 && den_ == 1; }
    bool is_integral_poly() const { return den_ == 1; }
    bool is_rational() const { return num_.size() <= 1; }

    NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
    NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

    friend NFElem operator+(const NFElem& a, const NFElem& b) { return add(a, b, false); }
    friend NFElem operator-(const NFElem& a, const NFElem& b) { return add(a, b, true); }
    friend NFElem operator-(const NFElem& a) {
        NFElem r = a;
        for (auto& c : r.num_) c = -c;
        return r;
    }
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend bool operator==(const NFElem& a, const NFElem& b) {
        check_parents(a, b);
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    NFElem scale(const mpq_class& q) const {
        std::vector<mpz_class> n = num_;
        for (auto& c : n) c *= q.get_num();
        return NFElem(K_, std::move(n), den_ * q.get_den());
    }

private:
    friend class NFUnreduced;
    static NFElem add(const NFElem& a, const NFElem& b, bool sub) {
        check_parents(a, b);
        std::size_t len = std::max(a.num_.size(), b.num_.size());
        std::vector<mpz_class> n(len, 0);
        if (a.den_ == b.den_) {
            for (std::size_t i = 0; i < a.num_.size(); ++i) n[i] = a.num_[i];
            for (std::size_t i = 0; i < b.num_.size(); ++i) n[i] = sub ? mpz_class(n[i] - b.num_[i]) : mpz_class(n[i] + b.num_[i]);
            return NFElem(a.K_, std::move(n), a.den_);
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
        mpz_class fa = b.den_ / g, fb = a.den_ / g;
        for (std::size_t i = 0; i < a.num_.size(); ++i) n[i] = a.num_[i] * fa;
        for (std::size_t i = 0; i < b.num_.size(); ++i) {
            if (sub) n[i] -= b.num_[i] * fb;
            else n[i] += b.num_[i] * fb;
        }
        return NFElem(a.K_, std::move(n), a.den_ * fa);
    }

    void canonicalise() {
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
        if (den_ == 0) throw DivisionByZero();
        if (num_.empty()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            den_ = -den_;
            for (auto& c : num_) c = -c;
        }
        if (den_ == 1) return;
        mpz_class g = den_;
        for (const auto& c : num_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }

    const NumberField* K_ = nullptr;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

/// A full product num/den of length 2d-1, reduced on demand.
class NFUnreduced {
public:
    NFUnreduced() = default;
    explicit NFUnreduced(const NumberField* K) : K_(K), num_(2 * K->degree() - 1, 0), den_(1) {}

    const std::vector<mpz_class>& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    std::size_t capacity() const { return num_.size(); }
    bool is_zero() const {
        for (const auto& c : num_)
            if (c != 0) return false;
        return true;
    }

    /// this += a*b without reduction.
    void addmul(const NFElem& a, const NFElem& b) {
        if (a.is_zero() || b.is_zero()) return;
        mpz_class pd = a.den() * b.den();
        if (pd != den_) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pd.get_mpz_t(), den_.get_mpz_t());
            mpz_class fs = pd / g;
            if (fs != 1)
                for (auto& c : num_) c *= fs;
            den_ *= fs;
        }
        mpz_class fp = den_ / pd;
        const auto& an = a.num();
        const auto& bn = b.num();
        for (std::size_t i = 0; i < an.size(); ++i) {
            if (an[i] == 0) continue;
            if (fp == 1) {
                for (std::size_t j = 0; j < bn.size(); ++j) mpz_addmul(num_[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
            } else {
                mpz_class t = an[i] * fp;
                for (std::size_t j = 0; j < bn.size(); ++j) mpz_addmul(num_[i + j].get_mpz_t(), t.get_mpz_t(), bn[j].get_mpz_t());
            }
        }
    }
    NFUnreduced& operator+=(const NFUnreduced& o) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class fa = l / den_, fb = l / o.den_;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * fa + o.num_[i] * fb;
        den_ = l;
        return *this;
    }

    NFElem reduce() const {
        std::vector<mpz_class> c = num_;
        K_->reduce_in_place(c);
        c.resize(K_->degree());
        return NFElem(K_, std::move(c), den_);
    }

private:
    const NumberField* K_ = nullptr;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

inline NFUnreduced nf_mul_unreduced(const NFElem& a, const NFElem& b) {
    check_parents(a, b);
    NFUnreduced u(&a.parent());
    u.addmul(a, b);
    return u;
}

inline NFElem nf_reduce(const NFUnreduced& u) { return u.reduce(); }

inline NFElem operator*(const NFElem& a, const NFElem& b) {
    check_parents(a, b);
    if (a.is_zero() || b.is_zero()) return a.K_->zero();
    const long d = a.K_->degree();
    std::vector<mpz_class> c(a.num_.size() + b.num_.size() - 1, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0) continue;
        for (std::size_t j = 0; j < b.num_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    if (static_cast<long>(c.size()) > d) {
        c.resize(2 * d - 1, 0);
        a.K_->reduce_in_place(c);
        c.resize(d);
    }
    return NFElem(a.K_, std::move(c), a.den_ * b.den_);
}

inline NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }

inline void NumberField::reduce_in_place(std::vector<mpz_class>& c) const {
    for (long i = static_cast<long>(c.size()) - 1; i >= d_; --i) {
        if (c[i] == 0) continue;
        const auto& row = pt_[i - d_];
        for (long k = 0; k < d_; ++k)
            if (row[k] != 0) mpz_addmul(c[k].get_mpz_t(), c[i].get_mpz_t(), row[k].get_mpz_t());
        c[i] = 0;
    }
}

inline NumberField::NumberField(std::vector<mpz_class> f, std::string var) : f_(std::move(f)), var_(std::move(var)) {
    d_ = static_cast<long>(f_.size()) - 1;
    // x^d = -(f_0 + ... + f_{d-1} x^{d-1}); then x^(i+1) = x * x^i folded once
    std::vector<mpz_class> cur(d_);
    for (long k = 0; k < d_; ++k) cur[k] = -f_[k];
    for (long i = d_; i <= 2 * d_ - 2; ++i) {
        pt_.push_back(cur);
        mpz_class top = cur[d_ - 1];
        std::vector<mpz_class> nx(d_, 0);
        for (long k = d_ - 1; k >= 1; --k) nx[k] = cur[k - 1];
        for (long k = 0; k < d_; ++k) nx[k] -= top * f_[k];
        cur = std::move(nx);
    }
    // Newton's identities for f = x^d + c_{d-1} x^{d-1} + ... + c_0
    S_.assign(2 * d_ - 1 > d_ + 1 ? 2 * d_ - 1 : d_ + 1, 0);
    S_[0] = d_;
    auto c = [&](long j) -> mpz_class { return j < 0 ? mpz_class(0) : f_[j]; };
    for (long k = 1; k < static_cast<long>(S_.size()); ++k) {
        mpz_class s = 0;
        for (long i = 1; i < k && i <= d_; ++i) s += c(d_ - i) * S_[k - i];
        if (k <= d_) s += k * c(d_ - k);
        S_[k] = -s;
    }
}

inline std::string NumberField::describe() const {
    return "NumberField(" + to_string(defining_poly()) + ", " + var_ + ")";
}

inline Poly<Integer> NumberField::defining_poly() const {
    std::vector<Integer> c;
    for (const auto& x : f_) c.emplace_back(x);
    return PolyRing<Integer>::get(ZZ(), "x").from_coeffs(std::move(c));
}

inline NFElem NumberField::zero() const { return NFElem(this, {}, 1); }
inline NFElem NumberField::one() const { return NFElem(this, {mpz_class(1)}, 1); }
inline NFElem NumberField::gen() const {
    if (d_ == 1) return NFElem(this, {mpz_class(-f_[0])}, 1);
    return NFElem(this, {mpz_class(0), mpz_class(1)}, 1);
}
inline NFElem NumberField::operator()(long v) const { return NFElem(this, {mpz_class(v)}, 1); }
inline NFElem NumberField::operator()(const Rational& v) const { return NFElem(this, {v.num()}, v.den()); }
inline NFElem NumberField::from_int(const mpz_class& v) const { return NFElem(this, {v}, 1); }
inline NFElem NumberField::from_coeffs(std::vector<mpz_class> num, mpz_class den) const {
    if (static_cast<long>(num.size()) > d_) {
        num.resize(std::max<long>(static_cast<long>(num.size()), 2 * d_ - 1), 0);
        // fold any length by repeated single-degree steps from the top
        for (long i = static_cast<long>(num.size()) - 1; i >= d_; --i) {
            if (num[i] == 0) continue;
            mpz_class t = num[i];
            num[i] = 0;
            for (long k = 0; k < d_; ++k) num[i - d_ + k] -= t * f_[k];
        }
        num.resize(d_);
    }
    return NFElem(this, std::move(num), std::move(den));
}
inline NFElem NumberField::from_rationals(const std::vector<mpq_class>& c) const {
    mpz_class l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> n;
    for (const auto& q : c) n.push_back(q.get_num() * (l / q.get_den()));
    return from_coeffs(std::move(n), l);
}

template <>
struct ring_traits<NFElem> {
    static constexpr bool is_domain = true;
    static constexpr bool is_field = true;
    static constexpr bool inverse_division = true;
    static constexpr bool has_gcd = true;
    static constexpr bool is_polynomial = false;
};

/// Coefficients over Q as a polynomial in x.
inline Poly<Rational> nf_to_poly(const NFElem& a, const std::string& var = "x") {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < a.num().size(); ++i) c.emplace_back(a.num()[i], a.den());
    return PolyRing<Rational>::get(QQ(), var).from_coeffs(std::move(c));
}

inline std::string to_string(const NFElem& a) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < a.num().size(); ++i) c.emplace_back(a.num()[i], a.den());
    return to_string(PolyRing<Rational>::get(QQ(), a.parent().var()).from_coeffs(std::move(c)));
}

inline std::ostream& operator<<(std::ostream& os, const NFElem& a) { return os << to_string(a); }

/// Tr(a) = sum_i a_i S_i.
inline mpq_class nf_trace(const NFElem& a) {
    mpz_class t = 0;
    const auto& S = a.parent().newton_sums();
    for (std::size_t i = 0; i < a.num().size(); ++i) t += a.num()[i] * S[i];
    mpq_class q(t, a.den());
    q.canonicalize();
    return q;
}

/// N(a) = res(f, num) / den^d for monic f.
inline mpq_class nf_norm(const NFElem& a) {
    const auto& K = a.parent();
    if (a.is_zero()) return 0;
    mpz_class r;
    if (a.num().size() == 1) {
        mpz_pow_ui(r.get_mpz_t(), a.num()[0].get_mpz_t(), static_cast<unsigned long>(K.degree()));
    } else {
        std::vector<Integer> c;
        for (const auto& x : a.num()) c.emplace_back(x);
        const auto& PZ = PolyRing<Integer>::get(ZZ(), "x");
        r = resultant_multimodular(K.defining_poly(), PZ.from_coeffs(std::move(c))).value();
    }
    mpz_class dd;
    mpz_pow_ui(dd.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(K.degree()));
    mpq_class q(r, dd);
    q.canonicalize();
    return q;
}

/// Inverse through the extended gcd of a and f over Q.
inline NFElem inv(const NFElem& a) {
    if (a.is_zero()) throw DivisionByZero();
    const auto& K = a.parent();
    if (a.is_rational()) return K.from_coeffs({a.den()}, a.num()[0]);
    // work with the integral numerator: (num/den)^-1 = den * num^-1
    std::vector<Rational> nc;
    for (const auto& x : a.num()) nc.emplace_back(x);
    std::vector<Rational> fc;
    for (const auto& x : K.modulus()) fc.emplace_back(x);
    const auto& PQ = PolyRing<Rational>::get(QQ(), "x");
    auto [g, s, t] = xgcd(PQ.from_coeffs(std::move(nc)), PQ.from_coeffs(std::move(fc)));
    if (g.degree() != 0) throw ImpossibleInverse(to_string(g));
    std::vector<mpq_class> sc;
    for (const auto& c : s.coeffs()) sc.push_back(c.value() * a.den());
    return K.from_rationals(sc);
}

inline NFElem nf_inverse(const NFElem& a) { return inv(a); }

inline NFElem divexact(const NFElem& a, const NFElem& b) { return a * inv(b); }
inline std::optional<NFElem> try_divide(const NFElem& a, const NFElem& b) {
    if (b.is_zero()) return std::nullopt;
    return a * inv(b);
}
inline NFElem canonical_unit(const NFElem& a) { return a.is_zero() ? a.parent().one() : a; }
inline NFElem gcd(const NFElem& a, const NFElem& b) {
    return (a.is_zero() && b.is_zero()) ? a : a.parent().one();
}

/// acc += a*b (generic fallback semantics).
inline void addmul(NFElem& acc, const NFElem& a, const NFElem& b) { acc = acc + a * b; }
inline void submul(NFElem& acc, const NFElem& a, const NFElem& b) { acc = acc - a * b; }

inline std::optional<NFElem> NumberField::lookup(std::string_view name) const {
    if (name == var_) return gen();
    return std::nullopt;
}

inline NFElem NumberField::parse(std::string_view s) const {
    ExprOps<NFElem> ops;
    ops.from_integer = [this](const mpz_class& v) { return from_int(v); };
    ops.lookup = [this](std::string_view name) { return lookup(name); };
    ops.div = [](const NFElem& a, const NFElem& b) { return divexact(a, b); };
    ops.pow = [](const NFElem& a, unsigned long k) { return pow(a, k); };
    return parse_expression<NFElem>(s, ops);
}

/// Dot product with one reduction at the end.
inline NFElem nf_dot(const std::vector<NFElem>& a, const std::vector<NFElem>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length");
    if (a.empty()) throw InvalidParameter("empty dot product");
    NFUnreduced u(&a[0].parent());
    for (std::size_t i = 0; i < a.size(); ++i) u.addmul(a[i], b[i]);
    return u.reduce();
}

} // namespace ringtower
