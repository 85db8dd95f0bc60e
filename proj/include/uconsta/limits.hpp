#pragma once

#include <cstdint>

namespace uconsta {

// Desk-scale resource limits. The defaults keep full verification sweeps in
// the minutes range on a laptop; all of them can be raised by callers that
// know what they are doing (hard compile-time bounds still apply, see
// kMaxExtensionDegree in field.hpp).
struct Limits {
    unsigned max_p = 13;          // largest admitted prime
    unsigned max_m = 6;           // largest admitted extension degree
    unsigned max_n = 128;         // largest admitted code length p^s
    unsigned enum_cap_bits = 22;  // codeword enumeration cap: p^(m*dim) <= 2^bits
    unsigned dual_cap_bits = 20;  // ambient dual scan cap: |R|^n <= 2^bits
};

/// base^exp, saturating at UINT64_MAX.
inline uint64_t saturating_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    while (exp--) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

/// Exact integer test base^exp <= 2^bits (bits < 64).
inline bool pow_fits_bits(uint64_t base, uint64_t exp, unsigned bits) {
    return saturating_pow(base, exp) <= (uint64_t{1} << bits);
}

}  // namespace uconsta
