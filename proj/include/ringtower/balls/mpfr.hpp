#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace ringtower {

/// Owning wrapper around an mpfr_t. The precision travels with the value.
class Float {
public:
    explicit Float(mpfr_prec_t prec = 53) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Float(const Float& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Float(Float&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Float& operator=(const Float& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Float& operator=(Float&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Float() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact value (finite inputs only).
    mpq_class to_mpq() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

    static Float from_ui_2exp(unsigned long m, long e, mpfr_prec_t prec) {
        Float f(prec);
        mpfr_set_ui_2exp(f.v_, m, e, MPFR_RNDU);
        return f;
    }

    std::string to_decimal(std::size_t digits) const {
        if (mpfr_zero_p(v_)) return "0";
        char* s = nullptr;
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&s, fmt.c_str(), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

} // namespace ringtower
