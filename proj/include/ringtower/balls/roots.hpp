#pragma once

// Certified complex roots of squarefree rational polynomials.
//
// Aberth-Ehrlich iteration produces approximations z_k. Each disk
// |w - z_k| <= n |f(z_k)| / |f'(z_k)| contains a root; when the n disks are
// pairwise disjoint each contains exactly one. A disk centred on the real
// axis that keeps the family disjoint holds a root equal to its own
// conjugate, so that root is real.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "../core/errors.hpp"
#include "../nf/number_field.hpp"
#include "../poly.hpp"
#include "../rational.hpp"
#include "ball.hpp"
#include "mpfr.hpp"

namespace ringtower {

inline constexpr mpfr_prec_t kMaxBallPrecision = mpfr_prec_t(1) << 20;

namespace roots_detail {

/// Plain complex float at a fixed precision, round-to-nearest throughout.
struct CF {
    Float re, im;
    explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

inline CF cf_add(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}
inline CF cf_sub(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}
inline CF cf_mul(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    Float t(p);
    mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
    mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
    return r;
}
inline bool cf_is_zero(const CF& a) { return a.re.is_zero() && a.im.is_zero(); }
inline CF cf_div(const CF& a, const CF& b, mpfr_prec_t p) {
    Float n(p), t(p);
    mpfr_sqr(n.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
    CF c(p);
    mpfr_set(c.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_neg(c.im.get(), b.im.get(), MPFR_RNDN);
    CF r = cf_mul(a, c, p);
    mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
    return r;
}
/// log2 of max(|re|, |im|), or a very negative number for zero.
inline long cf_mag(const CF& a) {
    long e = -(1L << 40);
    if (!a.re.is_zero()) e = std::max<long>(e, mpfr_get_exp(a.re.get()));
    if (!a.im.is_zero()) e = std::max<long>(e, mpfr_get_exp(a.im.get()));
    return e;
}

inline ComplexBox point_box(const CF& z) {
    return {RealBall::from_float(z.re, z.re.prec()), RealBall::from_float(z.im, z.im.prec())};
}

/// Aberth in double precision from points on a circle of the Cauchy radius.
inline std::vector<std::complex<double>> aberth_double(const std::vector<double>& c) {
    using C = std::complex<double>;
    const long n = static_cast<long>(c.size()) - 1;
    double R = 0;
    for (long i = 0; i < n; ++i) R = std::max(R, std::abs(c[i] / c[n]));
    R = 1 + R;
    // a smaller radius where the geometric bound is sharper
    double R2 = 0;
    for (long i = 0; i < n; ++i) R2 = std::max(R2, std::pow(std::abs(c[i] / c[n]), 1.0 / static_cast<double>(n - i)));
    R = std::min(R, 2 * R2 + 1e-3);
    std::vector<C> z(n);
    for (long k = 0; k < n; ++k) z[k] = std::polar(R, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    for (int it = 0; it < 2000; ++it) {
        double worst = 0;
        for (long k = 0; k < n; ++k) {
            C f = c[n], fp = 0;
            for (long i = n - 1; i >= 0; --i) {
                fp = fp * z[k] + f;
                f = f * z[k] + c[i];
            }
            if (fp == C(0)) fp = C(1e-300);
            C N = f / fp, s = 0;
            for (long j = 0; j < n; ++j)
                if (j != k) s += C(1) / (z[k] - z[j]);
            C w = N / (C(1) - N * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

/// Aberth refinement at precision p; stops once every correction is below
/// 2^(8-p) relative.
inline void aberth_mpfr(const std::vector<CF>& c, std::vector<CF>& z, mpfr_prec_t p) {
    const long n = static_cast<long>(c.size()) - 1;
    for (int it = 0; it < 200; ++it) {
        bool done = true;
        for (long k = 0; k < n; ++k) {
            CF f = c[n], fp(p);
            for (long i = n - 1; i >= 0; --i) {
                fp = cf_add(cf_mul(fp, z[k], p), f, p);
                f = cf_add(cf_mul(f, z[k], p), c[i], p);
            }
            if (cf_is_zero(fp)) continue;
            CF N = cf_div(f, fp, p);
            CF s(p);
            for (long j = 0; j < n; ++j) {
                if (j == k) continue;
                CF d = cf_sub(z[k], z[j], p);
                if (cf_is_zero(d)) continue;
                CF one(p);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                s = cf_add(s, cf_div(one, d, p), p);
            }
            CF one(p);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            CF den = cf_sub(one, cf_mul(N, s, p), p);
            if (cf_is_zero(den)) continue;
            CF w = cf_div(N, den, p);
            z[k] = cf_sub(z[k], w, p);
            if (cf_mag(w) > std::max<long>(cf_mag(z[k]), 0) - static_cast<long>(p) + 8) done = false;
        }
        if (done) break;
    }
}

struct Disk {
    CF c;
    Float rho;
    bool real;
};

/// rho = n |f(z)| / |f'(z)| with outward rounding; false if f'(z) may vanish.
inline bool inclusion_radius(const std::vector<mpq_class>& f, const std::vector<mpq_class>& df, const CF& z, long n,
                             Float& rho) {
    ComplexBox zb = point_box(z);
    RealBall F = abs(poly_eval(f, zb)), G = abs(poly_eval(df, zb));
    Float up = F.upper(), lo = G.lower();
    if (lo.sign() <= 0) return false;
    rho = Float(kRadiusPrec);
    mpfr_mul_ui(rho.get(), up.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_div(rho.get(), rho.get(), lo.get(), MPFR_RNDU);
    return true;
}

inline bool disjoint(const Disk& a, const Disk& b) {
    ComplexBox d = point_box(a.c) - point_box(b.c);
    Float lo = abs(d).lower();
    Float s(kRadiusPrec);
    mpfr_add(s.get(), a.rho.get(), b.rho.get(), MPFR_RNDU);
    return mpfr_cmp(lo.get(), s.get()) > 0;
}

inline ComplexBox disk_box(const Disk& d) {
    RealBall re = RealBall::from_float(d.c.re, d.c.re.prec());
    re.add_rad(d.rho);
    RealBall im(d.c.im.prec());
    if (!d.real) {
        im = RealBall::from_float(d.c.im, d.c.im.prec());
        im.add_rad(d.rho);
    }
    return {std::move(re), std::move(im)};
}

} // namespace roots_detail

struct RootsResult {
    std::vector<ComplexBox> boxes;
    std::vector<bool> is_real;
    mpfr_prec_t working_precision = 0;
};

/// Boxes around all complex roots of f (rational, low-first, squarefree),
/// each of Euclidean diameter at most 2^-p. Real roots are reported with an
/// exact zero imaginary part.
inline RootsResult ball_roots_detailed(const std::vector<mpq_class>& f_in, long p) {
    using namespace roots_detail;
    std::vector<mpq_class> f = f_in;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) throw InvalidParameter("roots of the zero polynomial");
    const long n = static_cast<long>(f.size()) - 1;
    RootsResult out;
    if (n == 0) return out;
    std::vector<mpq_class> df;
    for (long i = 1; i <= n; ++i) df.push_back(f[i] * i);
    {
        const auto& PQ = PolyRing<Rational>::get(QQ(), "x");
        std::vector<Rational> a, b;
        for (const auto& q : f) a.emplace_back(q);
        for (const auto& q : df) b.emplace_back(q);
        if (gcd(PQ.from_coeffs(std::move(a)), PQ.from_coeffs(std::move(b))).degree() > 0) throw NotSquarefree();
    }
    std::vector<double> cd;
    for (const auto& q : f) cd.push_back(q.get_d());
    auto zd = aberth_double(cd);

    mpfr_prec_t wp = std::max<long>(64, p);
    std::vector<CF> z;
    for (const auto& w : zd) {
        CF c(wp);
        mpfr_set_d(c.re.get(), w.real(), MPFR_RNDN);
        mpfr_set_d(c.im.get(), w.imag(), MPFR_RNDN);
        z.push_back(std::move(c));
    }
    for (;;) {
        if (wp > kMaxBallPrecision) throw PrecisionExhausted("root isolation exceeded the precision cap");
        std::vector<CF> c;
        for (const auto& q : f) {
            CF x(wp);
            mpfr_set_q(x.re.get(), q.get_mpq_t(), MPFR_RNDN);
            c.push_back(std::move(x));
        }
        for (auto& zk : z) {
            CF r(wp);
            mpfr_set(r.re.get(), zk.re.get(), MPFR_RNDN);
            mpfr_set(r.im.get(), zk.im.get(), MPFR_RNDN);
            zk = std::move(r);
        }
        aberth_mpfr(c, z, wp);

        std::vector<Disk> disks;
        bool ok = true;
        for (long k = 0; k < n && ok; ++k) {
            Disk d{z[k], Float(kRadiusPrec), false};
            ok = inclusion_radius(f, df, z[k], n, d.rho);
            disks.push_back(std::move(d));
        }
        for (long j = 0; j < n && ok; ++j)
            for (long k = j + 1; k < n && ok; ++k) ok = disjoint(disks[j], disks[k]);
        if (ok) {
            // move near-real disks onto the axis when that keeps disjointness
            for (long k = 0; k < n; ++k) {
                const Disk& d = disks[k];
                Float aim(kRadiusPrec);
                mpfr_abs(aim.get(), d.c.im.get(), MPFR_RNDU);
                if (mpfr_cmp(aim.get(), d.rho.get()) > 0) continue;
                Disk r{CF(wp), Float(kRadiusPrec), true};
                mpfr_set(r.c.re.get(), d.c.re.get(), MPFR_RNDN);
                if (!inclusion_radius(f, df, r.c, n, r.rho)) continue;
                bool fine = true;
                for (long j = 0; j < n && fine; ++j)
                    if (j != k) fine = disjoint(r, disks[j]);
                if (fine) disks[k] = std::move(r);
            }
            std::vector<ComplexBox> boxes;
            for (const auto& d : disks) {
                boxes.push_back(disk_box(d));
                if (!boxes.back().diameter_at_most_2exp(p)) ok = false;
            }
            if (ok) {
                std::vector<long> idx(n);
                for (long k = 0; k < n; ++k) idx[k] = k;
                std::sort(idx.begin(), idx.end(), [&](long a, long b) {
                    if (disks[a].real != disks[b].real) return disks[a].real;
                    int c1 = mpfr_cmp(disks[a].c.re.get(), disks[b].c.re.get());
                    if (c1 != 0) return c1 < 0;
                    return mpfr_cmp(disks[a].c.im.get(), disks[b].c.im.get()) < 0;
                });
                for (long k : idx) {
                    out.boxes.push_back(boxes[k]);
                    out.is_real.push_back(disks[k].real);
                }
                out.working_precision = wp;
                return out;
            }
        }
        wp *= 2;
    }
}

inline std::vector<ComplexBox> ball_roots(const std::vector<mpq_class>& f, long p) {
    return ball_roots_detailed(f, p).boxes;
}

inline std::vector<ComplexBox> ball_roots(const Poly<Rational>& f, long p) {
    std::vector<mpq_class> c;
    for (const auto& x : f.coeffs()) c.push_back(x.value());
    return ball_roots(c, p);
}

inline std::vector<ComplexBox> ball_roots(const Poly<Integer>& f, long p) {
    std::vector<mpq_class> c;
    for (const auto& x : f.coeffs()) c.emplace_back(x.value());
    return ball_roots(c, p);
}

/// Boxes for sigma_i(alpha), i = 1..n, each of diameter at most 2^-p. The
/// roots are recomputed at doubled precision until the images are tight.
inline std::vector<ComplexBox> conjugates(const NFElem& alpha, long p) {
    const NumberField& K = alpha.parent();
    std::vector<mpq_class> f(K.modulus().begin(), K.modulus().end());
    std::vector<mpq_class> a;
    for (std::size_t i = 0; i < alpha.num().size(); ++i) a.push_back(alpha.coeff(i));
    for (long pp = std::max<long>(64, p);; pp *= 2) {
        if (pp > kMaxBallPrecision) throw PrecisionExhausted("conjugates exceeded the precision cap");
        auto roots = ball_roots(f, pp);
        std::vector<ComplexBox> out;
        bool ok = true;
        for (const auto& r : roots) {
            out.push_back(poly_eval(a, r));
            if (!out.back().diameter_at_most_2exp(p)) {
                ok = false;
                break;
            }
        }
        if (ok) return out;
    }
}

} // namespace ringtower
