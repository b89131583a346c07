#pragma once

// Prime ideals above p by Kummer-Dedekind, with valuation elements.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "../core/errors.hpp"
#include "../nmod_poly.hpp"
#include "../zmod.hpp"
#include "ideal.hpp"
#include "order.hpp"

namespace ringtower {

class PrimeIdeal {
public:
    PrimeIdeal(TwoGenIdeal ideal, mpz_class p, long residue_degree, long ramification)
        : ideal_(std::move(ideal)), p_(std::move(p)), f_(residue_degree), e_(ramification),
          val_(std::make_shared<ValCache>()) {}

    const TwoGenIdeal& ideal() const { return ideal_; }
    operator const TwoGenIdeal&() const { return ideal_; }
    const mpz_class& p() const { return p_; }
    long residue_degree() const { return f_; }
    long ramification() const { return e_; }
    mpz_class norm() const { return zz::pow(p_, static_cast<unsigned long>(f_)); }

    /// gamma with v_P(beta) = max{k : gamma^k beta in O}, computed on first
    /// use as g2 / alpha: the second generator of P^-1 = <1, g2 / alpha>.
    const NFElem& val_elem() const {
        std::call_once(val_->once, [&] {
            const Order& O = ideal_.order();
            NFElem alpha = ideal_.alpha().to_field();
            mpz_class g2 = order_denominator(O, alpha);
            while (zz::divides(p_, g2)) g2 /= p_;
            val_->gamma = order_inverse(alpha).scale(mpq_class(g2));
        });
        return val_->gamma;
    }

private:
    struct ValCache {
        std::once_flag once;
        NFElem gamma;
    };
    TwoGenIdeal ideal_;
    mpz_class p_;
    long f_, e_;
    std::shared_ptr<ValCache> val_;
};

inline std::string to_string(const PrimeIdeal& P) { return to_string(P.ideal()); }

/// v_P(beta) for beta != 0 in the order, by repeated multiplication with the
/// valuation element. `cap` >= 0 stops counting early.
inline long valuation(const NFElem& beta, const PrimeIdeal& P, long cap = -1) {
    if (beta.is_zero()) throw DivisionByZero();
    const Order& O = P.ideal().order();
    if (!O.contains(beta)) throw InvalidParameter("valuation of a non-integral element");
    const NFElem& g = P.val_elem();
    NFElem x = beta;
    long k = 0;
    while (cap < 0 || k < cap) {
        x = x * g;
        if (!O.contains(x)) break;
        ++k;
    }
    return k;
}

inline long valuation(const OrderElem& beta, const PrimeIdeal& P, long cap = -1) {
    return valuation(beta.to_field(), P, cap);
}

/// v_P(<a, alpha>) = min(v_P(a), v_P(alpha)), with v_P(a) = e v_p(a).
inline long valuation(const TwoGenIdeal& A, const PrimeIdeal& P) {
    if (&A.order() != &P.ideal().order()) throw MixedParents();
    mpz_class a = A.a();
    long vp = 0;
    while (zz::divides(P.p(), a)) {
        a /= P.p();
        ++vp;
    }
    long va = vp * P.ramification();
    if (va == 0) return 0;
    if (A.alpha().is_zero()) return va;
    return valuation(A.alpha(), P, va);
}

/// Primes above p: f = prod g_i^e_i mod p gives P_i = <p, g_i(theta)>.
/// A positive max_residue_degree keeps only primes of at most that degree.
/// Index divisors are refused: for an order flagged maximal, the check is
/// p | disc(f) / disc(O); otherwise p | disc(f).
inline std::vector<PrimeIdeal> prime_decomposition(const Order& O, std::uint64_t p, long max_residue_degree = 0) {
    if (!nmod::is_prime(p)) throw InvalidParameter("p must be prime");
    const mpz_class pz(static_cast<unsigned long>(p));
    if (O.is_maximal()) {
        mpq_class ratio = mpq_class(O.poly_discriminant()) / O.discriminant();
        if (ratio.get_den() != 1 || zz::divides(pz, ratio.get_num()))
            throw IndexDivisor("p divides the index of the equation order");
    } else if (zz::divides(pz, O.poly_discriminant())) {
        throw IndexDivisor("p divides disc(f) and the order is not known to be maximal");
    }
    const NumberField& K = O.field();
    const long n = K.degree();
    nmod_poly::Vec fp;
    for (const auto& c : K.modulus()) fp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    std::vector<PrimeIdeal> out;
    PrimeSet S{pz};
    for (auto& [g, e] : nmod_poly::factor(fp, p, max_residue_degree)) {
        long d = nmod_poly::deg(g);
        OrderElem alpha;
        if (d == n) {
            IntVec c(n, 0);
            c[0] = pz;
            alpha = O.element(std::move(c));
        } else {
            std::vector<mpz_class> gc;
            for (auto x : g) gc.emplace_back(static_cast<unsigned long>(x));
            alpha = O.from_field(K.from_coeffs(std::move(gc)));
            if (!is_normal(pz, alpha)) {
                // v_P(g(theta)) >= 2 happens only when P is ramified; g + p fixes it
                IntVec c = O.from_field(alpha.to_field() + K.from_int(pz)).coords();
                alpha = O.element(std::move(c));
                if (!is_normal(pz, alpha)) throw IndexDivisor("no {p}-normal generator from the factor");
            }
        }
        TwoGenIdeal I(O, pz, std::move(alpha), S, true);
        I.set_cached_norm(zz::pow(pz, static_cast<unsigned long>(d)));
        out.emplace_back(std::move(I), pz, d, e);
    }
    return out;
}

/// All primes of norm at most `bound`, by increasing p.
inline std::vector<PrimeIdeal> primes_up_to_norm(const Order& O, std::uint64_t bound) {
    std::vector<PrimeIdeal> out;
    for (std::uint64_t p = 2; p <= bound; p = nmod::next_prime(p)) {
        long maxdeg = 0;
        for (mpz_class q = p; q <= bound; q *= p) ++maxdeg;
        for (auto& P : prime_decomposition(O, p, maxdeg)) out.push_back(std::move(P));
    }
    return out;
}

} // namespace ringtower
