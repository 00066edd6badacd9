#pragma once

#include <cstdint>

#include "bkss/errors.hpp"

namespace bkss {

// Arithmetic helpers for coefficients modulo a small runtime modulus
// (p or p^2).  Values are kept normalized in [0, m).

inline int32_t modNorm(int64_t x, int32_t m) {
    int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<int32_t>(r);
}

inline int32_t modAdd(int32_t a, int32_t b, int32_t m) { return modNorm(int64_t(a) + b, m); }
inline int32_t modSub(int32_t a, int32_t b, int32_t m) { return modNorm(int64_t(a) - b, m); }
inline int32_t modMul(int32_t a, int32_t b, int32_t m) { return modNorm(int64_t(a) * b, m); }
inline int32_t modNeg(int32_t a, int32_t m) { return modNorm(-int64_t(a), m); }

/// Inverse of a unit modulo m (extended Euclid; works modulo p and p^2).
inline int32_t modInv(int32_t a, int32_t m) {
    int64_t t = 0, newT = 1, r = m, newR = modNorm(a, m);
    while (newR != 0) {
        int64_t q = r / newR;
        int64_t tmp = t - q * newT;
        t = newT; newT = tmp;
        tmp = r - q * newR;
        r = newR; newR = tmp;
    }
    if (r != 1) throw UsageError("modInv: not a unit");
    return modNorm(t, m);
}

inline int32_t modPow(int32_t a, int64_t e, int32_t m) {
    if (e < 0) return modPow(modInv(a, m), -e, m);
    int64_t base = modNorm(a, m), acc = 1 % m;
    while (e > 0) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<int32_t>(acc);
}

}  // namespace bkss
