#pragma once

// Torsion test for number field elements.
//
// A torsion element is an algebraic integer unit whose conjugates all have
// absolute value 1. A non-torsion unit of degree d has a conjugate of
// absolute value above 1 + log(d)/(6 d^2). Tightening balls around |sigma_i|
// therefore decides the question: one ball entirely above 1 rules torsion
// out, all balls below the threshold force it.

#include <cmath>
#include <cstdint>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "../core/errors.hpp"
#include "../matrix/charpoly.hpp"
#include "../matrix/matrix.hpp"
#include "../nf/number_field.hpp"
#include "../rational.hpp"
#include "ball.hpp"
#include "roots.hpp"

namespace ringtower {

/// 1 + log(d) / (6 d^2).
inline double dobrowolski_threshold(long d) {
    if (d < 1) throw InvalidParameter("degree must be positive");
    double dd = static_cast<double>(d);
    return 1.0 + std::log(dd) / (6.0 * dd * dd);
}

/// The same constant rounded downward at precision `prec`.
inline Float dobrowolski_threshold_lower(long d, mpfr_prec_t prec) {
    if (d < 1) throw InvalidParameter("degree must be positive");
    Float t(prec), den(prec);
    mpfr_set_si(t.get(), d, MPFR_RNDD);
    mpfr_log(t.get(), t.get(), MPFR_RNDD);
    mpfr_set_si(den.get(), 6 * d * d, MPFR_RNDU);
    mpfr_div(t.get(), t.get(), den.get(), MPFR_RNDD);
    mpfr_add_ui(t.get(), t.get(), 1, MPFR_RNDD);
    return t;
}

inline std::uint64_t euler_phi(std::uint64_t k) {
    std::uint64_t r = k;
    for (std::uint64_t q = 2; q * q <= k; ++q) {
        if (k % q) continue;
        while (k % q == 0) k /= q;
        r -= r / q;
    }
    if (k > 1) r -= r / k;
    return r;
}

struct TorsionResult {
    bool torsion = false;
    /// multiplicative order when torsion, else 0
    std::uint64_t order = 0;
    /// precision of the deciding ball computation; 0 for exact shortcuts
    long precision = 0;
};

inline std::string to_string(const TorsionResult& r) {
    return r.torsion ? "torsion, order " + std::to_string(r.order) : std::string("not torsion");
}

namespace torsion_detail {

/// True when the characteristic polynomial of x has integer coefficients.
inline bool is_algebraic_integer(const NFElem& x) {
    if (x.den() == 1) return true;
    const NumberField& K = x.parent();
    const long n = K.degree();
    std::vector<std::vector<Rational>> rows;
    NFElem cur = x;
    for (long j = 0; j < n; ++j) {
        std::vector<Rational> r;
        for (long i = 0; i < n; ++i) r.emplace_back(cur.coeff(static_cast<std::size_t>(i)));
        rows.push_back(std::move(r));
        cur = cur * K.gen();
    }
    Poly<Rational> cp = charpoly(make_matrix<Rational>(QQ(), rows));
    for (const auto& c : cp.coeffs())
        if (c.den() != 1) return false;
    return true;
}

} // namespace torsion_detail

/// Decides whether alpha is a root of unity; on success the order is the
/// least k with alpha^k = 1, found among the k with phi(k) | [K:Q].
inline TorsionResult is_torsion(const NFElem& alpha) {
    if (alpha.is_zero()) throw DivisionByZero();
    const NumberField& K = alpha.parent();
    const long d = K.degree();
    TorsionResult res;
    if (alpha.is_rational()) {
        mpq_class q = alpha.coeff(0);
        if (q == 1 || q == -1) {
            res.torsion = true;
            res.order = q == 1 ? 1 : 2;
        }
        return res;
    }
    // torsion elements are integral units
    mpq_class N = nf_norm(alpha);
    if (N != 1 && N != -1) return res;
    if (!torsion_detail::is_algebraic_integer(alpha)) return res;

    for (long p = 64;; p *= 2) {
        if (p > kMaxBallPrecision) throw PrecisionExhausted("torsion test exceeded the precision cap");
        Float thr = dobrowolski_threshold_lower(d, p);
        auto boxes = conjugates(alpha, p);
        bool all_below = true;
        for (const auto& b : boxes) {
            RealBall a = abs(b);
            Float lo = a.lower(), up = a.upper();
            if (mpfr_cmp_ui(lo.get(), 1) > 0) {
                res.precision = p;
                return res;
            }
            if (mpfr_cmp(up.get(), thr.get()) >= 0) all_below = false;
        }
        if (!all_below) continue;
        res.precision = p;
        // phi(k) >= sqrt(k/2), so phi(k) | d forces k <= 2 d^2
        const std::uint64_t kmax = 2 * static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
        NFElem pw = K.one();
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            pw = pw * alpha;
            if (pw.is_one()) {
                if (static_cast<std::uint64_t>(d) % euler_phi(k) != 0)
                    throw TorsionCertificationFailed("order violates phi(k) | d");
                res.torsion = true;
                res.order = k;
                return res;
            }
        }
        throw TorsionCertificationFailed("ball test reported torsion but no power is 1");
    }
}

/// Exact reference: alpha^k = 1 for some k with phi(k) | d.
inline TorsionResult is_torsion_exact(const NFElem& alpha) {
    if (alpha.is_zero()) throw DivisionByZero();
    const std::uint64_t d = static_cast<std::uint64_t>(alpha.parent().degree());
    TorsionResult res;
    NFElem pw = alpha.parent().one();
    for (std::uint64_t k = 1; k <= 2 * d * d; ++k) {
        pw = pw * alpha;
        if (pw.is_one() && d % euler_phi(k) == 0) {
            res.torsion = true;
            res.order = k;
            return res;
        }
    }
    return res;
}

} // namespace ringtower
