#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../core/errors.hpp"
#include "../core/ring.hpp"
#include "../core/text.hpp"
#include "monomial.hpp"

namespace ringtower {

template <class E>
class MPoly;

template <class E>
MPoly<E> heap_mul(const MPoly<E>& f, const MPoly<E>& g);

/// Sparse distributed polynomials over `base` in the named variables, graded
/// lexicographic order with the first variable largest.
template <class E>
class MPolyRing {
public:
    using element_type = MPoly<E>;
    using coeff_type = E;
    using base_parent = typename E::parent_type;

    static const MPolyRing& get(const base_parent& base, const std::vector<std::string>& vars) {
        if (vars.empty()) throw InvalidParameter("multivariate ring needs at least one variable");
        std::string key;
        for (const auto& v : vars) key += v + ",";
        return intern_parent<MPolyRing>(std::make_pair(static_cast<const void*>(&base), key),
                                        [&] { return new MPolyRing(base, vars); });
    }

    RingKind kind() const { return RingKind::PolynomialRing; }
    std::string describe() const {
        std::string s = base_->describe() + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        return s + "]";
    }
    mpz_class characteristic() const { return base_->characteristic(); }
    const base_parent& base() const { return *base_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(std::string_view name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars_[i] == name) return i;
        return -1;
    }
    mono::Layout layout(int bits) const { return mono::Layout(nvars(), bits); }

    MPoly<E> zero() const;
    MPoly<E> one() const;
    MPoly<E> gen(int i) const;
    MPoly<E> operator()(long v) const;
    MPoly<E> operator()(const E& c) const;
    MPoly<E> from_int(const mpz_class& v) const;
    MPoly<E> term(const E& c, const std::vector<std::uint64_t>& exps) const;
    /// Canonical polynomial from an arbitrary list of terms (sorted, merged,
    /// zero coefficients dropped).
    MPoly<E> from_terms(std::vector<std::pair<std::vector<std::uint64_t>, E>> terms) const;
    std::optional<MPoly<E>> lookup(std::string_view name) const;
    MPoly<E> parse(std::string_view s) const;

private:
    MPolyRing(const base_parent& base, std::vector<std::string> vars) : base_(&base), vars_(std::move(vars)) {}
    const base_parent* base_;
    std::vector<std::string> vars_;
};

template <class E>
const MPolyRing<E>& make_mpoly_ring(const typename E::parent_type& base, const std::vector<std::string>& vars) {
    return MPolyRing<E>::get(base, vars);
}

/// Invariants: terms strictly decreasing in the monomial order, no zero
/// coefficients, every monomial packed with `bits` bits per field.
template <class E>
class MPoly {
public:
    using parent_type = MPolyRing<E>;
    using coeff_type = E;

    MPoly() = default;
    MPoly(const MPolyRing<E>* R, int bits) : R_(R), bits_(bits) {}
    MPoly(const MPolyRing<E>* R, int bits, std::vector<std::uint64_t> exps, std::vector<E> coeffs)
        : R_(R), bits_(bits), exps_(std::move(exps)), coeffs_(std::move(coeffs)) {}

    const MPolyRing<E>& parent() const { return *R_; }
    const MPolyRing<E>* parent_ptr() const { return R_; }
    int bits() const { return bits_; }
    mono::Layout layout() const { return mono::Layout(R_->nvars(), bits_); }
    int nwords() const { return layout().nwords(); }

    std::size_t length() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (length() == 1 && layout().total_degree(mono(0)) == 0); }
    bool is_one() const { return is_constant() && !is_zero() && coeffs_[0].is_one(); }

    const E& coeff(std::size_t i) const { return coeffs_[i]; }
    const std::vector<E>& coeffs() const { return coeffs_; }
    std::vector<E>& coeffs_mut() { return coeffs_; }
    const std::vector<std::uint64_t>& exps() const { return exps_; }
    std::vector<std::uint64_t>& exps_mut() { return exps_; }
    const std::uint64_t* mono(std::size_t i) const { return exps_.data() + i * nwords(); }
    std::vector<std::uint64_t> exponents(std::size_t i) const { return layout().unpack(mono(i)); }

    const E& lc() const { return coeffs_.front(); }
    /// Constant coefficient value (zero when absent).
    E constant_coeff() const {
        if (!is_zero() && layout().total_degree(mono(length() - 1)) == 0) return coeffs_.back();
        return R_->base().zero();
    }

    std::uint64_t total_degree() const { return is_zero() ? 0 : layout().total_degree(mono(0)); }
    /// Largest exponent of variable v; -1 for the zero polynomial.
    long degree(int v) const {
        if (is_zero()) return -1;
        auto L = layout();
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < length(); ++i) d = std::max(d, L.exponent(mono(i), v));
        return static_cast<long>(d);
    }

    /// Same polynomial with a wider packing.
    MPoly repack(int newbits) const {
        if (newbits == bits_) return *this;
        auto from = layout();
        mono::Layout to(R_->nvars(), newbits);
        if (newbits < bits_ && total_degree() > to.mask()) throw InvalidParameter("repack would overflow");
        MPoly r(R_, newbits);
        r.exps_.resize(length() * to.nwords());
        for (std::size_t i = 0; i < length(); ++i) to.pack(from.unpack(mono(i)), r.exps_.data() + i * to.nwords());
        r.coeffs_ = coeffs_;
        return r;
    }

    void push_term(const std::uint64_t* m, E c) {
        exps_.insert(exps_.end(), m, m + nwords());
        coeffs_.push_back(std::move(c));
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = heap_mul(*this, o); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) { return heap_mul(a, b); }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        check_parents(a, b);
        if (a.length() != b.length()) return false;
        if (a.bits_ != b.bits_) {
            int w = std::max(a.bits_, b.bits_);
            return a.repack(w) == b.repack(w);
        }
        return a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
    }

    MPoly scale(const E& s) const {
        MPoly r(R_, bits_);
        if (s.is_zero()) return r;
        r.exps_.reserve(exps_.size());
        r.coeffs_.reserve(length());
        for (std::size_t i = 0; i < length(); ++i) {
            E c = coeffs_[i] * s;
            if (!c.is_zero()) r.push_term(mono(i), std::move(c));
        }
        return r;
    }

    /// Debug validator: sorted, no duplicates, no zero coefficients.
    bool is_canonical() const {
        int nw = nwords();
        if (exps_.size() != length() * nw) return false;
        for (std::size_t i = 0; i < length(); ++i) {
            if (coeffs_[i].is_zero()) return false;
            if (i > 0 && mono::compare(mono(i - 1), mono(i), nw) <= 0) return false;
        }
        return true;
    }

private:
    static MPoly merge(const MPoly& a0, const MPoly& b0, bool subtract) {
        check_parents(a0, b0);
        int bits = std::max(a0.bits_, b0.bits_);
        const MPoly& a = a0.bits_ == bits ? a0 : a0.repack(bits);
        const MPoly& b = b0.bits_ == bits ? b0 : b0.repack(bits);
        MPoly r(a.R_, bits);
        int nw = a.nwords();
        r.exps_.reserve(a.exps_.size() + b.exps_.size());
        r.coeffs_.reserve(a.length() + b.length());
        std::size_t i = 0, j = 0;
        while (i < a.length() || j < b.length()) {
            int c = i == a.length() ? -1 : j == b.length() ? 1 : mono::compare(a.mono(i), b.mono(j), nw);
            if (c > 0) {
                r.push_term(a.mono(i), a.coeffs_[i]);
                ++i;
            } else if (c < 0) {
                r.push_term(b.mono(j), subtract ? -b.coeffs_[j] : b.coeffs_[j]);
                ++j;
            } else {
                E s = subtract ? a.coeffs_[i] - b.coeffs_[j] : a.coeffs_[i] + b.coeffs_[j];
                if (!s.is_zero()) r.push_term(a.mono(i), std::move(s));
                ++i;
                ++j;
            }
        }
        return r;
    }

    const MPolyRing<E>* R_ = nullptr;
    int bits_ = 8;
    std::vector<std::uint64_t> exps_;
    std::vector<E> coeffs_;
};

template <class E>
MPoly<E> MPolyRing<E>::zero() const { return MPoly<E>(this, 8); }

template <class E>
MPoly<E> MPolyRing<E>::operator()(const E& c) const {
    if (&c.parent() != base_) throw NoCoercion("coefficient does not belong to " + base_->describe());
    MPoly<E> r(this, 8);
    if (c.is_zero()) return r;
    std::vector<std::uint64_t> m(layout(8).nwords(), 0);
    r.push_term(m.data(), c);
    return r;
}

template <class E>
MPoly<E> MPolyRing<E>::one() const { return (*this)(base_->one()); }
template <class E>
MPoly<E> MPolyRing<E>::operator()(long v) const { return (*this)((*base_)(v)); }
template <class E>
MPoly<E> MPolyRing<E>::from_int(const mpz_class& v) const { return (*this)(base_->from_int(v)); }

template <class E>
MPoly<E> MPolyRing<E>::term(const E& c, const std::vector<std::uint64_t>& exps) const {
    if (static_cast<int>(exps.size()) != nvars()) throw DimensionMismatch("exponent vector length");
    std::uint64_t d = std::accumulate(exps.begin(), exps.end(), std::uint64_t(0));
    auto L = layout(mono::bits_for_degree(d));
    MPoly<E> r(this, L.bits);
    if (c.is_zero()) return r;
    std::vector<std::uint64_t> m(L.nwords());
    L.pack(exps, m.data());
    r.push_term(m.data(), c);
    return r;
}

template <class E>
MPoly<E> MPolyRing<E>::gen(int i) const {
    if (i < 0 || i >= nvars()) throw InvalidParameter("variable index out of range");
    std::vector<std::uint64_t> e(nvars(), 0);
    e[i] = 1;
    return term(base_->one(), e);
}

template <class E>
MPoly<E> MPolyRing<E>::from_terms(std::vector<std::pair<std::vector<std::uint64_t>, E>> terms) const {
    std::uint64_t d = 0;
    for (const auto& t : terms) {
        if (static_cast<int>(t.first.size()) != nvars()) throw DimensionMismatch("exponent vector length");
        d = std::max(d, std::accumulate(t.first.begin(), t.first.end(), std::uint64_t(0)));
    }
    auto L = layout(mono::bits_for_degree(d));
    int nw = L.nwords();
    std::vector<std::uint64_t> packed(terms.size() * nw);
    for (std::size_t i = 0; i < terms.size(); ++i) L.pack(terms[i].first, packed.data() + i * nw);
    std::vector<std::size_t> idx(terms.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return mono::compare(packed.data() + a * nw, packed.data() + b * nw, nw) > 0;
    });
    MPoly<E> r(this, L.bits);
    for (std::size_t k = 0; k < idx.size();) {
        const std::uint64_t* m = packed.data() + idx[k] * nw;
        E c = terms[idx[k]].second;
        std::size_t l = k + 1;
        while (l < idx.size() && mono::equal(m, packed.data() + idx[l] * nw, nw)) {
            c += terms[idx[l]].second;
            ++l;
        }
        if (!c.is_zero()) r.push_term(m, std::move(c));
        k = l;
    }
    return r;
}

template <class E>
struct ring_traits<MPoly<E>> {
    static constexpr bool is_domain = ring_traits<E>::is_domain;
    static constexpr bool is_field = false;
    static constexpr bool inverse_division = false;
    static constexpr bool has_gcd = ring_traits<E>::has_gcd && ring_traits<E>::is_domain;
    static constexpr bool is_polynomial = false;
};

/// "c*x^e*y^f" terms in decreasing order joined by " + ".
template <class E>
std::string to_string(const MPoly<E>& f) {
    const auto& R = f.parent();
    auto L = f.layout();
    std::vector<std::string> terms;
    terms.reserve(f.length());
    for (std::size_t i = 0; i < f.length(); ++i) {
        std::string m;
        for (int v = 0; v < R.nvars(); ++v) {
            std::uint64_t e = L.exponent(f.mono(i), v);
            if (e == 0) continue;
            if (!m.empty()) m += "*";
            m += R.vars()[v];
            if (e > 1) m += "^" + std::to_string(e);
        }
        terms.push_back(format_term(to_string(f.coeff(i)), m));
    }
    return join_terms(terms);
}

template <class E>
std::ostream& operator<<(std::ostream& os, const MPoly<E>& f) {
    return os << to_string(f);
}

/// Schoolbook product with a final sort; the quadratic test oracle.
template <class E>
MPoly<E> naive_mul(const MPoly<E>& f, const MPoly<E>& g) {
    check_parents(f, g);
    const auto& R = f.parent();
    std::vector<std::pair<std::vector<std::uint64_t>, E>> terms;
    terms.reserve(f.length() * g.length());
    for (std::size_t i = 0; i < f.length(); ++i) {
        auto a = f.exponents(i);
        for (std::size_t j = 0; j < g.length(); ++j) {
            auto b = g.exponents(j);
            for (std::size_t v = 0; v < a.size(); ++v) b[v] += a[v];
            terms.emplace_back(std::move(b), f.coeff(i) * g.coeff(j));
        }
    }
    return R.from_terms(std::move(terms));
}

template <class E>
MPoly<E> canonical_unit(const MPoly<E>& f) {
    if (f.is_zero()) return f.parent().one();
    return f.parent()(canonical_unit(f.lc()));
}

/// Constants with unit value are the only units.
template <class E>
MPoly<E> inv(const MPoly<E>& f) {
    if (f.is_zero()) throw DivisionByZero();
    if (!f.is_constant()) throw ImpossibleInverse(to_string(f));
    return f.parent()(inv(f.lc()));
}

template <class E>
std::optional<MPoly<E>> MPolyRing<E>::lookup(std::string_view name) const {
    int i = var_index(name);
    if (i >= 0) return gen(i);
    if constexpr (requires { base_->lookup(name); }) {
        if (auto b = base_->lookup(name)) return (*this)(*b);
    }
    return std::nullopt;
}

} // namespace ringtower
