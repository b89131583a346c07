#pragma once

// Packed exponent vectors.
//
// A monomial in k variables is stored as k+1 unsigned fields of `bits` bits,
// most significant first: the total degree, then the exponents of x_0, x_1,
// ... Fields are laid out across 64-bit words from the high end, so unsigned
// lexicographic comparison of the word sequence is exactly the graded
// lexicographic order with x_0 > x_1 > ... . Adding packed words adds the
// exponents provided no field overflows, which the caller guarantees by
// choosing `bits` large enough for the total degree of the result.

#include <cstdint>
#include <vector>

#include "../core/errors.hpp"

namespace ringtower::mono {

inline int bits_for_degree(std::uint64_t deg) {
    if (deg < (1ULL << 8)) return 8;
    if (deg < (1ULL << 16)) return 16;
    if (deg < (1ULL << 32)) return 32;
    return 64;
}

struct Layout {
    int nvars = 0;
    int bits = 8;

    Layout() = default;
    Layout(int n, int b) : nvars(n), bits(b) {}

    int fields_per_word() const { return 64 / bits; }
    int nwords() const { return (nvars + 1 + fields_per_word() - 1) / fields_per_word(); }
    std::uint64_t mask() const { return bits == 64 ? ~0ULL : ((1ULL << bits) - 1); }

    int word_of(int field) const { return field / fields_per_word(); }
    int shift_of(int field) const { return 64 - bits * (field % fields_per_word() + 1); }

    std::uint64_t get(const std::uint64_t* m, int field) const {
        return (m[word_of(field)] >> shift_of(field)) & mask();
    }
    void set(std::uint64_t* m, int field, std::uint64_t v) const {
        int w = word_of(field), s = shift_of(field);
        m[w] = (m[w] & ~(mask() << s)) | (v << s);
    }

    std::uint64_t total_degree(const std::uint64_t* m) const { return get(m, 0); }
    std::uint64_t exponent(const std::uint64_t* m, int var) const { return get(m, var + 1); }

    void pack(const std::vector<std::uint64_t>& e, std::uint64_t* out) const {
        for (int w = 0; w < nwords(); ++w) out[w] = 0;
        std::uint64_t d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        if (bits < 64 && d > mask()) throw InvalidParameter("exponent overflow in monomial packing");
        set(out, 0, d);
        for (int i = 0; i < nvars; ++i) set(out, i + 1, e[i]);
    }

    std::vector<std::uint64_t> unpack(const std::uint64_t* m) const {
        std::vector<std::uint64_t> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = get(m, i + 1);
        return e;
    }

    /// True when every exponent of a is at least the matching one of b.
    bool divides(const std::uint64_t* b, const std::uint64_t* a) const {
        for (int i = 0; i <= nvars; ++i)
            if (get(a, i) < get(b, i)) return false;
        return true;
    }
};

inline int compare(const std::uint64_t* a, const std::uint64_t* b, int nw) {
    for (int i = 0; i < nw; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

inline bool equal(const std::uint64_t* a, const std::uint64_t* b, int nw) {
    for (int i = 0; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline void add(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, int nw) {
    for (int i = 0; i < nw; ++i) out[i] = a[i] + b[i];
}

/// Requires b | a field-wise.
inline void sub(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, int nw) {
    for (int i = 0; i < nw; ++i) out[i] = a[i] - b[i];
}

} // namespace ringtower::mono
