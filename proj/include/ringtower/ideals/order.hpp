#pragma once

// Orders in a number field given by a Z-basis w_1 = 1, w_2, ..., w_n written
// in the power basis. The equation order Z[a] is the identity basis and takes
// fast paths throughout.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "../core/errors.hpp"
#include "../integer.hpp"
#include "../nf/number_field.hpp"
#include "../nmod_poly.hpp"
#include "../resultant.hpp"
#include "../zmod.hpp"
#include "hnf.hpp"

namespace ringtower {

using RatMat = std::vector<std::vector<mpq_class>>;
using PrimeSet = std::vector<mpz_class>;  // sorted, distinct

class Order;

class OrderElem {
public:
    OrderElem() = default;
    OrderElem(const Order* O, IntVec coords) : O_(O), c_(std::move(coords)) {}

    const Order& order() const { return *O_; }
    const IntVec& coords() const { return c_; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x == 0; });
    }
    NFElem to_field() const;

    friend OrderElem operator+(const OrderElem& a, const OrderElem& b);
    friend OrderElem operator-(const OrderElem& a, const OrderElem& b);
    friend OrderElem operator*(const OrderElem& a, const OrderElem& b);
    friend bool operator==(const OrderElem& a, const OrderElem& b) { return a.O_ == b.O_ && a.c_ == b.c_; }

private:
    const Order* O_ = nullptr;
    IntVec c_;
};

class Order {
public:
    /// Z[a] for the generator a of K.
    static const Order& equation_order(const NumberField& K, bool is_maximal = false) {
        std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(&K)) + (is_maximal ? ":M" : ":-");
        return intern_parent<Order>(key, [&] { return new Order(K, {}, is_maximal); });
    }
    /// Row i of `basis` is w_{i+1} in the power basis; w_1 must be 1 and the
    /// Z-span must be closed under multiplication.
    static const Order& get(const NumberField& K, const RatMat& basis, bool is_maximal = false) {
        std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(&K)) + (is_maximal ? ":M:" : ":-:");
        for (const auto& r : basis)
            for (const auto& x : r) key += x.get_str() + ",";
        return intern_parent<Order>(key, [&] { return new Order(K, basis, is_maximal); });
    }

    const NumberField& field() const { return *K_; }
    long degree() const { return n_; }
    bool is_equation_order() const { return T_.empty(); }
    bool is_maximal() const { return maximal_; }
    /// Basis matrix (identity for the equation order) and its inverse.
    RatMat basis_matrix() const;
    RatMat basis_inverse() const;

    /// Coordinates of x with respect to the Z-basis.
    std::vector<mpq_class> coordinates(const NFElem& x) const {
        std::vector<mpq_class> pc(n_, 0);
        for (long i = 0; i < n_; ++i) pc[i] = x.coeff(static_cast<std::size_t>(i));
        if (is_equation_order()) return pc;
        std::vector<mpq_class> out(n_, 0);
        for (long j = 0; j < n_; ++j)
            for (long i = 0; i < n_; ++i) out[j] += pc[i] * Tinv_[i][j];
        return out;
    }
    bool contains(const NFElem& x) const {
        if (is_equation_order()) return x.den() == 1;
        for (const auto& c : coordinates(x))
            if (c.get_den() != 1) return false;
        return true;
    }
    OrderElem from_field(const NFElem& x) const {
        if (is_equation_order()) {
            if (x.den() != 1) throw InvalidParameter("element is not in the order");
            IntVec c(n_, 0);
            for (std::size_t i = 0; i < x.num().size(); ++i) c[i] = x.num()[i];
            return OrderElem(this, std::move(c));
        }
        IntVec c;
        for (const auto& q : coordinates(x)) {
            if (q.get_den() != 1) throw InvalidParameter("element is not in the order");
            c.push_back(q.get_num());
        }
        return OrderElem(this, std::move(c));
    }
    NFElem to_field(const IntVec& c) const {
        if (is_equation_order()) return K_->from_coeffs(c);
        std::vector<mpq_class> pc(n_, 0);
        for (long i = 0; i < n_; ++i)
            if (c[i] != 0)
                for (long j = 0; j < n_; ++j) pc[j] += c[i] * T_[i][j];
        return K_->from_rationals(pc);
    }
    OrderElem element(IntVec c) const {
        if (static_cast<long>(c.size()) != n_) throw DimensionMismatch("order coordinates");
        return OrderElem(this, std::move(c));
    }
    OrderElem one() const {
        IntVec c(n_, 0);
        c[0] = 1;
        return OrderElem(this, std::move(c));
    }
    OrderElem basis_element(long i) const {
        IntVec c(n_, 0);
        c[i] = 1;
        return OrderElem(this, std::move(c));
    }
    /// Rows are the coordinates of x * w_j, j = 1..n.
    IntMat regular_representation(const NFElem& x) const {
        IntMat R;
        if (is_equation_order()) {
            NFElem cur = x;
            NFElem g = K_->gen();
            for (long j = 0; j < n_; ++j) {
                R.push_back(from_field(cur).coords());
                if (j + 1 < n_) cur = cur * g;
            }
            return R;
        }
        for (long j = 0; j < n_; ++j) R.push_back(from_field(x * to_field(basis_element(j).coords())).coords());
        return R;
    }
    /// Coordinate-wise reduction into (-m/2, m/2]; a ring map O -> O/mO.
    IntVec reduce_mod(const IntVec& c, const mpz_class& m) const {
        IntVec r(c.size());
        mpz_class half = m / 2;
        for (std::size_t i = 0; i < c.size(); ++i) {
            r[i] = zz::mod(c[i], m);
            if (r[i] > half) r[i] -= m;
        }
        return r;
    }
    /// disc(f) and disc(O) = disc(f) * det(T)^2.
    mpz_class poly_discriminant() const { return disc_f_; }
    mpq_class discriminant() const { return disc_O_; }

    std::string describe() const {
        return (is_equation_order() ? std::string("EquationOrder(") : std::string("Order(")) + K_->describe() + ")";
    }

private:
    Order(const NumberField& K, RatMat basis, bool maximal);

    const NumberField* K_;
    long n_;
    RatMat T_, Tinv_;
    bool maximal_;
    mpz_class disc_f_;
    mpq_class disc_O_;
};

inline RatMat Order::basis_matrix() const {
    if (!is_equation_order()) return T_;
    RatMat I(n_, std::vector<mpq_class>(n_, 0));
    for (long i = 0; i < n_; ++i) I[i][i] = 1;
    return I;
}

inline RatMat Order::basis_inverse() const {
    if (!is_equation_order()) return Tinv_;
    return basis_matrix();
}

inline Order::Order(const NumberField& K, RatMat basis, bool maximal)
    : K_(&K), n_(K.degree()), maximal_(maximal) {
    // disc(f) = (-1)^(n(n-1)/2) res(f, f') for monic f
    Poly<Integer> f = K.defining_poly();
    mpz_class r = resultant_multimodular(f, derivative(f)).value();
    disc_f_ = ((n_ * (n_ - 1) / 2) & 1) ? mpz_class(-r) : r;
    disc_O_ = disc_f_;
    if (basis.empty()) return;

    if (static_cast<long>(basis.size()) != n_) throw DimensionMismatch("order basis size");
    for (const auto& row : basis)
        if (static_cast<long>(row.size()) != n_) throw DimensionMismatch("order basis row");
    if (basis[0][0] != 1 || std::any_of(basis[0].begin() + 1, basis[0].end(), [](const mpq_class& q) { return q != 0; }))
        throw InvalidParameter("the first basis element must be 1");
    // Gauss-Jordan inverse over Q
    RatMat A = basis;
    RatMat I(n_, std::vector<mpq_class>(n_, 0));
    for (long i = 0; i < n_; ++i) I[i][i] = 1;
    mpq_class det = 1;
    for (long k = 0; k < n_; ++k) {
        long piv = -1;
        for (long i = k; i < n_; ++i)
            if (A[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw InvalidParameter("order basis is singular");
        if (piv != k) {
            std::swap(A[piv], A[k]);
            std::swap(I[piv], I[k]);
            det = -det;
        }
        mpq_class p = A[k][k];
        det *= p;
        for (long j = 0; j < n_; ++j) {
            A[k][j] /= p;
            I[k][j] /= p;
        }
        for (long i = 0; i < n_; ++i) {
            if (i == k || A[i][k] == 0) continue;
            mpq_class t = A[i][k];
            for (long j = 0; j < n_; ++j) {
                A[i][j] -= t * A[k][j];
                I[i][j] -= t * I[k][j];
            }
        }
    }
    T_ = std::move(basis);
    Tinv_ = std::move(I);
    disc_O_ = disc_f_ * det * det;
    for (long i = 0; i < n_; ++i)
        for (long j = i; j < n_; ++j) {
            NFElem w = to_field(basis_element(i).coords()) * to_field(basis_element(j).coords());
            if (!contains(w)) throw InvalidParameter("basis is not closed under multiplication");
        }
}

inline NFElem OrderElem::to_field() const { return O_->to_field(c_); }

inline OrderElem operator+(const OrderElem& a, const OrderElem& b) {
    if (a.O_ != b.O_) throw MixedParents();
    IntVec c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return OrderElem(a.O_, std::move(c));
}

inline OrderElem operator-(const OrderElem& a, const OrderElem& b) {
    if (a.O_ != b.O_) throw MixedParents();
    IntVec c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return OrderElem(a.O_, std::move(c));
}

inline OrderElem operator*(const OrderElem& a, const OrderElem& b) {
    if (a.O_ != b.O_) throw MixedParents();
    return a.O_->from_field(a.to_field() * b.to_field());
}

inline std::string to_string(const OrderElem& a) { return to_string(a.to_field()); }

// ---------------------------------------------------------------------------
// small primes and prime sets

namespace order_detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        const std::uint32_t N = 1u << 16;
        std::vector<bool> comp(N, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < N; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < N; j += i) comp[j] = true;
        }
        return out;
    }();
    return table;
}

} // namespace order_detail

/// Prime divisors of a != 0 by trial division. A cofactor above 2^32 that
/// survives the table is rejected: it could be composite.
inline PrimeSet prime_divisors(const mpz_class& a_in) {
    if (a_in == 0) throw InvalidParameter("prime divisors of zero");
    mpz_class a = abs(a_in);
    PrimeSet out;
    for (std::uint32_t p : order_detail::small_primes()) {
        if (a == 1) break;
        if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            out.push_back(p);
            do mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
            while (mpz_divisible_ui_p(a.get_mpz_t(), p));
        }
    }
    if (a > 1) {
        if (a >= mpz_class(1) << 32) throw InvalidParameter("integer has a factor beyond the small-prime table");
        out.push_back(a);
    }
    return out;
}

inline PrimeSet prime_set_union(const PrimeSet& a, const PrimeSet& b) {
    PrimeSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline PrimeSet prime_set_difference(const PrimeSet& a, const PrimeSet& b) {
    PrimeSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline mpz_class prime_set_product(const PrimeSet& s) {
    mpz_class r = 1;
    for (const auto& p : s) r *= p;
    return r;
}

inline PrimeSet normalise_prime_set(PrimeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// ---------------------------------------------------------------------------
// inverses through the integral adjugate

/// For integral a(x) != 0 and the monic f of K: returns (s, r) with
/// r = res(f, a) and s(x) a(x) = r mod f, deg s < deg f, s integral.
/// Multimodular: each coefficient of s is a Sylvester minor, so the
/// Hadamard bound |a|^n |f|^deg(a) caps them all.
inline std::pair<IntVec, mpz_class> integral_adjugate(const NumberField& K, const IntVec& a) {
    const long n = K.degree();
    const auto& f = K.modulus();
    long da = static_cast<long>(a.size()) - 1;
    while (da >= 0 && a[da] == 0) --da;
    if (da < 0) throw DivisionByZero();
    if (da == 0) {
        // constant c: s = c^(n-1), r = c^n
        IntVec s(n, 0);
        s[0] = zz::pow(a[0], static_cast<unsigned long>(n - 1));
        return {s, zz::pow(a[0], static_cast<unsigned long>(n))};
    }
    auto norm_ceil = [](const IntVec& v) {
        mpz_class t = 0;
        for (const auto& c : v) t += c * c;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
        return mpz_class(r + 1);
    };
    mpz_class bound = 2 * zz::pow(norm_ceil(a), static_cast<unsigned long>(n)) *
                      zz::pow(norm_ceil(f), static_cast<unsigned long>(da));
    auto reduce = [](const IntVec& v, std::uint64_t p) {
        nmod_poly::Vec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
        nmod_poly::trim(out);
        return out;
    };
    IntVec acc(n, 0);
    mpz_class racc = 0, modulus = 1;
    std::uint64_t p = std::uint64_t(1) << 62;
    while (modulus <= bound) {
        p = nmod::prev_prime(p);
        nmod_poly::Vec fp = reduce(f, p), ap = reduce(a, p);
        if (ap.empty()) continue;
        std::uint64_t rp = nmod_poly::resultant(fp, ap, p);
        if (rp == 0) continue;
        auto [g, sa, tf] = nmod_poly::xgcd(ap, fp, p);
        (void)g;
        (void)tf;
        nmod_poly::Vec sp = nmod_poly::scale(sa, rp, p);
        mpz_class pz(static_cast<unsigned long>(p)), minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        auto lift = [&](mpz_class& x, std::uint64_t v) {
            mpz_class d = mpz_class(static_cast<unsigned long>(v)) - x;
            d = zz::mod(d * minv, pz);
            x += modulus * d;
        };
        for (long i = 0; i < n; ++i) lift(acc[i], i < static_cast<long>(sp.size()) ? sp[i] : 0);
        lift(racc, rp);
        modulus *= pz;
    }
    mpz_class half = modulus / 2;
    for (auto& x : acc)
        if (x > half) x -= modulus;
    if (racc > half) racc -= modulus;
    return {acc, racc};
}

/// Smallest d > 0 with d / x in O; equivalently xO n Z = dZ for x in O.
inline mpz_class order_denominator(const Order& O, const NFElem& x) {
    if (x.is_zero()) throw DivisionByZero();
    auto [s, r] = integral_adjugate(O.field(), x.num());
    // x^-1 = den * s / r
    if (O.is_equation_order()) {
        mpz_class c = 0;
        for (const auto& v : s) c = zz::gcd(c, v);
        c *= x.den();
        mpz_class ar = abs(r);
        return ar / zz::gcd(ar, c);
    }
    std::vector<mpq_class> sc;
    for (const auto& v : s) sc.push_back(mpq_class(v * x.den(), r));
    for (auto& q : sc) q.canonicalize();
    NFElem xi = O.field().from_rationals(sc);
    mpz_class d = 1;
    for (const auto& q : O.coordinates(xi)) d = zz::lcm(d, q.get_den());
    return d;
}

inline mpz_class order_denominator(const OrderElem& x) { return order_denominator(x.order(), x.to_field()); }

/// x^-1 through the integral adjugate; avoids rational gcd sequences.
inline NFElem order_inverse(const NFElem& x) {
    if (x.is_zero()) throw DivisionByZero();
    auto [s, r] = integral_adjugate(x.parent(), x.num());
    for (auto& v : s) v *= x.den();
    return x.parent().from_coeffs(std::move(s), r);
}

} // namespace ringtower
