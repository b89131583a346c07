#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace ringtower {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, period 2^64.
/// Output for a given seed is identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() { return next(); }

    /// Uniform in [0, bound), rejection sampling; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r < limit) return r % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
    }

    /// Uniform in [0, bound) for arbitrary-precision bound > 0.
    mpz_class below(const mpz_class& bound) {
        std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 64;
        for (;;) {
            mpz_class r = 0;
            for (std::size_t got = 0; got < bits; got += 64) {
                r <<= 64;
                std::uint64_t w = next();
                mpz_class t;
                mpz_import(t.get_mpz_t(), 1, 1, sizeof w, 0, 0, &w);
                r += t;
            }
            mpz_class span = mpz_class(1) << static_cast<mp_bitcnt_t>(((bits + 63) / 64) * 64);
            mpz_class limit = span - span % bound;
            if (r < limit) return r % bound;
        }
    }

    bool coin() { return next() >> 63; }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace ringtower
