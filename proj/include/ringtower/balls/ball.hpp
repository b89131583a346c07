#pragma once

// Midpoint-radius balls [m +/- r]. The midpoint carries the working
// precision; the radius is a 30-bit float that is only ever rounded upward.
// Containment contract: if x lies in the input balls, op(x) lies in the
// output ball.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "../core/errors.hpp"
#include "mpfr.hpp"

namespace ringtower {

inline constexpr mpfr_prec_t kRadiusPrec = 30;

/// Working precision, held once and shared by every ball made from it.
class BallContext {
public:
    explicit BallContext(mpfr_prec_t prec) : prec_(prec) {
        if (prec < 2) throw InvalidParameter("ball precision must be at least 2 bits");
    }
    mpfr_prec_t precision() const { return prec_; }

private:
    mpfr_prec_t prec_;
};

class RealBall {
public:
    explicit RealBall(mpfr_prec_t prec = 53) : mid_(prec), rad_(kRadiusPrec) {}
    RealBall(Float mid, Float rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}

    static RealBall exact(long v, mpfr_prec_t prec) {
        RealBall b(prec);
        b.add_error(mpfr_set_si(b.mid_.get(), v, MPFR_RNDN));
        return b;
    }
    static RealBall from_mpz(const mpz_class& v, mpfr_prec_t prec) {
        RealBall b(prec);
        b.add_error(mpfr_set_z(b.mid_.get(), v.get_mpz_t(), MPFR_RNDN));
        return b;
    }
    static RealBall from_mpq(const mpq_class& v, mpfr_prec_t prec) {
        RealBall b(prec);
        b.add_error(mpfr_set_q(b.mid_.get(), v.get_mpq_t(), MPFR_RNDN));
        return b;
    }
    /// [m +/- r] with the given rational radius (rounded up).
    static RealBall from_mid_rad(const mpq_class& m, const mpq_class& r, mpfr_prec_t prec) {
        RealBall b = from_mpq(m, prec);
        Float rr(kRadiusPrec);
        mpfr_set_q(rr.get(), r.get_mpq_t(), MPFR_RNDU);
        mpfr_add(b.rad_.get(), b.rad_.get(), rr.get(), MPFR_RNDU);
        return b;
    }
    static RealBall from_float(const Float& m, mpfr_prec_t prec) {
        RealBall b(prec);
        b.add_error(mpfr_set(b.mid_.get(), m.get(), MPFR_RNDN));
        return b;
    }

    const Float& mid() const { return mid_; }
    const Float& rad() const { return rad_; }
    Float& mid() { return mid_; }
    Float& rad() { return rad_; }
    mpfr_prec_t prec() const { return mid_.prec(); }

    bool is_exact() const { return rad_.is_zero(); }

    /// Adds one ulp of the midpoint when `ternary` reports rounding.
    void add_error(int ternary) {
        if (ternary == 0 || mid_.is_zero()) return;
        Float e(kRadiusPrec);
        mpfr_set_ui_2exp(e.get(), 1, mpfr_get_exp(mid_.get()) - static_cast<long>(mid_.prec()), MPFR_RNDU);
        mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
    }
    void add_rad(const Float& r) { mpfr_add(rad_.get(), rad_.get(), r.get(), MPFR_RNDU); }

    /// Outward-rounded end points at the midpoint precision.
    Float lower() const {
        Float l(prec() + 8);
        mpfr_sub(l.get(), mid_.get(), rad_.get(), MPFR_RNDD);
        return l;
    }
    Float upper() const {
        Float u(prec() + 8);
        mpfr_add(u.get(), mid_.get(), rad_.get(), MPFR_RNDU);
        return u;
    }
    mpq_class lower_q() const { return mid_.to_mpq() - rad_.to_mpq(); }
    mpq_class upper_q() const { return mid_.to_mpq() + rad_.to_mpq(); }

    bool contains(const mpq_class& q) const {
        mpq_class d = q - mid_.to_mpq();
        return abs(d) <= rad_.to_mpq();
    }
    bool contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }
    bool is_positive() const { return mpfr_cmp(mid_.get(), rad_.get()) > 0; }
    bool is_negative() const {
        Float n(mid_);
        mpfr_neg(n.get(), n.get(), MPFR_RNDN);
        return mpfr_cmp(n.get(), rad_.get()) > 0;
    }

    std::string to_string() const {
        std::size_t digits = static_cast<std::size_t>(std::ceil(static_cast<double>(prec()) * 0.30102999566398120));
        return "[" + mid_.to_decimal(digits) + " +/- " + rad_.to_decimal(3) + "]";
    }

private:
    Float mid_;
    Float rad_;
};

namespace ball_detail {

inline Float abs_up(const Float& x) {
    Float r(kRadiusPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
}
inline Float abs_down(const Float& x) {
    Float r(kRadiusPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDD);
    return r;
}
inline Float mul_up(const Float& a, const Float& b) {
    Float r(kRadiusPrec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}
inline Float add_up(const Float& a, const Float& b) {
    Float r(kRadiusPrec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

inline mpfr_prec_t out_prec(const RealBall& a, const RealBall& b) { return std::max(a.prec(), b.prec()); }

} // namespace ball_detail

inline RealBall operator-(const RealBall& a) {
    RealBall r(a);
    mpfr_neg(r.mid().get(), r.mid().get(), MPFR_RNDN);
    return r;
}

inline RealBall operator+(const RealBall& a, const RealBall& b) {
    RealBall r(ball_detail::out_prec(a, b));
    int t = mpfr_add(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
    mpfr_add(r.rad().get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
    r.add_error(t);
    return r;
}

inline RealBall operator-(const RealBall& a, const RealBall& b) {
    RealBall r(ball_detail::out_prec(a, b));
    int t = mpfr_sub(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
    mpfr_add(r.rad().get(), a.rad().get(), b.rad().get(), MPFR_RNDU);
    r.add_error(t);
    return r;
}

/// r = |m1| r2 + |m2| r1 + r1 r2 + rounding.
inline RealBall operator*(const RealBall& a, const RealBall& b) {
    using namespace ball_detail;
    RealBall r(out_prec(a, b));
    int t = mpfr_mul(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
    Float rad = add_up(add_up(mul_up(abs_up(a.mid()), b.rad()), mul_up(abs_up(b.mid()), a.rad())), mul_up(a.rad(), b.rad()));
    r.rad() = std::move(rad);
    r.add_error(t);
    return r;
}

/// |x/y - m1/m2| <= (|m1| r2 + |m2| r1) / (|m2| (|m2| - r2)).
inline RealBall operator/(const RealBall& a, const RealBall& b) {
    using namespace ball_detail;
    if (b.contains_zero()) throw ContainsZero("divisor ball contains zero");
    RealBall r(out_prec(a, b));
    int t = mpfr_div(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
    if (!a.is_exact() || !b.is_exact()) {
        Float num = add_up(mul_up(abs_up(a.mid()), b.rad()), mul_up(abs_up(b.mid()), a.rad()));
        Float m2 = abs_down(b.mid());
        Float gap(kRadiusPrec), den(kRadiusPrec);
        mpfr_sub(gap.get(), m2.get(), b.rad().get(), MPFR_RNDD);
        mpfr_mul(den.get(), m2.get(), gap.get(), MPFR_RNDD);
        if (den.sign() <= 0) throw ContainsZero("divisor ball too close to zero");
        mpfr_div(r.rad().get(), num.get(), den.get(), MPFR_RNDU);
    }
    r.add_error(t);
    return r;
}

inline RealBall abs(const RealBall& a) {
    RealBall r(a);
    mpfr_abs(r.mid().get(), r.mid().get(), MPFR_RNDN);
    return r;
}

/// |sqrt x - sqrt m| <= r / (sqrt(m - r) + sqrt m).
inline RealBall sqrt(const RealBall& a) {
    if (mpfr_cmp(a.mid().get(), a.rad().get()) < 0) throw ContainsNegative("sqrt of a ball with negative points");
    RealBall r(a.prec());
    int t = mpfr_sqrt(r.mid().get(), a.mid().get(), MPFR_RNDN);
    if (!a.is_exact()) {
        if (a.mid().is_zero()) throw ContainsNegative("sqrt of a ball with negative points");
        Float lo(kRadiusPrec + 8), s1(kRadiusPrec), s2(kRadiusPrec), den(kRadiusPrec);
        mpfr_sub(lo.get(), a.mid().get(), a.rad().get(), MPFR_RNDD);
        if (lo.sign() < 0) mpfr_set_zero(lo.get(), 1);
        mpfr_sqrt(s1.get(), lo.get(), MPFR_RNDD);
        mpfr_sqrt(s2.get(), a.mid().get(), MPFR_RNDD);
        mpfr_add(den.get(), s1.get(), s2.get(), MPFR_RNDD);
        mpfr_div(r.rad().get(), a.rad().get(), den.get(), MPFR_RNDU);
    }
    r.add_error(t);
    return r;
}

inline RealBall pow(const RealBall& a, long k) {
    if (k < 0) return RealBall::exact(1, a.prec()) / pow(a, -k);
    RealBall result = RealBall::exact(1, a.prec()), base = a;
    for (;;) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (!k) break;
        base = base * base;
    }
    return result;
}

/// Union hull: a ball containing both inputs.
inline RealBall hull(const RealBall& a, const RealBall& b) {
    mpq_class lo = std::min(a.lower_q(), b.lower_q()), hi = std::max(a.upper_q(), b.upper_q());
    return RealBall::from_mid_rad((lo + hi) / 2, (hi - lo) / 2, ball_detail::out_prec(a, b));
}

inline std::string to_string(const RealBall& a) { return a.to_string(); }

// ---------------------------------------------------------------------------

class ComplexBox {
public:
    explicit ComplexBox(mpfr_prec_t prec = 53) : re_(prec), im_(prec) {}
    ComplexBox(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexBox from_mpq(const mpq_class& re, const mpq_class& im, mpfr_prec_t prec) {
        return {RealBall::from_mpq(re, prec), RealBall::from_mpq(im, prec)};
    }

    const RealBall& re() const { return re_; }
    const RealBall& im() const { return im_; }
    RealBall& re() { return re_; }
    RealBall& im() { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    bool contains(const mpq_class& re, const mpq_class& im) const { return re_.contains(re) && im_.contains(im); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

    /// Upper bound on the Euclidean diameter 2 sqrt(r_re^2 + r_im^2).
    Float diameter() const {
        Float a(kRadiusPrec), b(kRadiusPrec), s(kRadiusPrec);
        mpfr_sqr(a.get(), re_.rad().get(), MPFR_RNDU);
        mpfr_sqr(b.get(), im_.rad().get(), MPFR_RNDU);
        mpfr_add(s.get(), a.get(), b.get(), MPFR_RNDU);
        mpfr_sqrt(s.get(), s.get(), MPFR_RNDU);
        mpfr_mul_2ui(s.get(), s.get(), 1, MPFR_RNDU);
        return s;
    }
    /// diameter <= 2^-p
    bool diameter_at_most_2exp(long p) const {
        Float d = diameter();
        Float t = Float::from_ui_2exp(1, -p, kRadiusPrec);
        return mpfr_cmp(d.get(), t.get()) <= 0;
    }

    std::string to_string() const { return re_.to_string() + " + " + im_.to_string() + "*I"; }

private:
    RealBall re_, im_;
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re() + b.re(), a.im() + b.im()}; }
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re() - b.re(), a.im() - b.im()}; }
inline ComplexBox operator-(const ComplexBox& a) { return {-a.re(), -a.im()}; }
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
inline ComplexBox operator*(const RealBall& a, const ComplexBox& b) { return {a * b.re(), a * b.im()}; }
inline ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
    RealBall n = b.re() * b.re() + b.im() * b.im();
    ComplexBox t = a * ComplexBox(b.re(), -b.im());
    return {t.re() / n, t.im() / n};
}

/// ||z| - |m|| <= |z - m| <= r_re + r_im.
inline RealBall abs(const ComplexBox& z) {
    RealBall r(z.prec());
    int t = mpfr_hypot(r.mid().get(), z.re().mid().get(), z.im().mid().get(), MPFR_RNDN);
    r.rad() = ball_detail::add_up(z.re().rad(), z.im().rad());
    r.add_error(t);
    return r;
}

inline std::string to_string(const ComplexBox& z) { return z.to_string(); }

/// Horner evaluation with exact rational coefficients (low-first).
inline ComplexBox poly_eval(const std::vector<mpq_class>& c, const ComplexBox& z) {
    mpfr_prec_t p = z.prec();
    if (c.empty()) return ComplexBox::from_mpq(0, 0, p);
    ComplexBox acc = ComplexBox::from_mpq(c.back(), 0, p);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * z;
        acc.re() = acc.re() + RealBall::from_mpq(c[i], p);
    }
    return acc;
}

inline RealBall poly_eval(const std::vector<mpq_class>& c, const RealBall& x) {
    mpfr_prec_t p = x.prec();
    if (c.empty()) return RealBall::exact(0, p);
    RealBall acc = RealBall::from_mpq(c.back(), p);
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + RealBall::from_mpq(c[i], p);
    return acc;
}

/// Horner with ball coefficients.
inline ComplexBox poly_eval(const std::vector<ComplexBox>& c, const ComplexBox& z) {
    if (c.empty()) return ComplexBox::from_mpq(0, 0, z.prec());
    ComplexBox acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

} // namespace ringtower
