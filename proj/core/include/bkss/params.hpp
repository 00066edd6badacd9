#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bkss/errors.hpp"

namespace bkss {

/// Coefficient mode for the graded rings.  mod-p is the working mode;
/// mod-p2 exists for the power-operation lifts (one exact division by
/// p); p-local-window selects exact p-local rationals inside the
/// formal-group-law engine.
enum class CoeffMode : uint8_t { ModP = 0, ModP2 = 1, PLocalWindow = 2 };

std::string toString(CoeffMode m);

/// Global computation context: the prime, the height, the degree
/// window and the truncations.  All internal degrees are stored in
/// units of 2 (every raw degree is even), so |u| = p^{n-1}-1,
/// |v| = p^n-1 and |t_k| = p^k-1.
struct Params {
    int32_t p = 3;           // odd prime
    int32_t n = 4;           // height, > 1 (the main checks need > 3)
    int64_t degMin = -320;   // window bounds, units of 2
    int64_t degMax = 320;
    int32_t uTrunc = 100;    // u^uTrunc = 0 in A and C(j) arithmetic
    int32_t tBound = 5;      // largest retained t-generator index
    int32_t sMax = 3;        // largest cohomological degree
    CoeffMode mode = CoeffMode::ModP;
    // Window-derived caps.  weightCap bounds the total t-weight of the
    // tensor words enumerated per (s, degree); uDivCap bounds the
    // u-divisions retained for B = A/(u^infty).  Zero means "derive a
    // default from the window".
    int32_t weightCap = 0;
    int32_t uDivCap = 0;

    void validate() const;
    /// Stable fingerprint of every field that affects computed data.
    uint64_t fingerprint() const;
    std::string describe() const;
};

/// Constants derived from (p, n): internal degrees, e(i), principal
/// representatives, the torsion integers a_i and the exponents b_{n,i}.
class Derived {
  public:
    Derived() = default;
    explicit Derived(const Params& par);

    int32_t p = 3, n = 4;
    int64_t uDeg = 0;    // p^{n-1} - 1
    int64_t vDeg = 0;    // p^n - 1
    int64_t pn = 0;      // p^n, the normal-form exponent bound
    int32_t weightCap = 0;
    int32_t uDivCap = 0;

    int64_t tDeg(int32_t k) const;                 // p^k - 1
    int64_t pPow(int32_t k) const;                 // p^k
    static int64_t ipow(int64_t b, int32_t e);

    /// e(i) = (p^i - 1)/(p - 1); e(0) = 0.
    int64_t e(int32_t i) const;
    /// Principal representative of i modulo n-1, in {0, .., n-2}.
    int32_t rep(int32_t i) const;
    /// The torsion integer a_i: a_0 = 1, a_i = p a_{i-1}, with the
    /// extra p-1 when i > 1 and rep(i) = 1.
    int64_t a(int32_t i) const;
    /// b_{n,i} for indices i = k(n-1)+1:
    /// (p^n-1)(p^{k(n-1)}-1)/(p^{n-1}-1).
    int64_t bExp(int32_t i) const;

    /// Largest i such that a_i fits the u-window (used to bound the
    /// x-family reach).
    int32_t iMax() const { return iMax_; }

  private:
    int32_t iMax_ = 0;
    std::vector<int64_t> aTable_;
};

/// Bundled parameters + derived constants; every module takes a
/// const Context&.
struct Context {
    Params par;
    Derived dv;

    explicit Context(const Params& p) : par(p), dv(p) { par.validate(); }

    int32_t mod() const { return par.mode == CoeffMode::ModP2 ? par.p * par.p : par.p; }
};

}  // namespace bkss
