#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bkss/params.hpp"
#include "bkss/scalar.hpp"

namespace bkss {

/// Truncation range for u-exponents: terms with uExp outside [lo, hi)
/// are dropped.  A and C(j) use [0, j); B uses [-uDivCap, 0) (the class
/// of x/u^0 is zero there).
struct URange {
    int32_t lo = 0;
    int32_t hi = 0;
    bool contains(int32_t a) const { return a >= lo && a < hi; }
};

/// Homogeneous element of the graded coefficient rings: a finite sum of
/// monomials u^a v^b with scalar coefficients mod p (or mod p^2 in lift
/// mode).  The v-exponent of each term is determined by the common
/// internal degree: deg = a*|u| + b*|v|, so only the u-exponent is
/// stored.  Negative u-exponents represent u-divided sums in
/// B = A/(u^infty).
class APoly {
  public:
    APoly() = default;
    APoly(int64_t deg, int32_t mod) : deg_(deg), mod_(mod) {}

    /// Monomial u^a v^b; the degree is computed from the context.
    static APoly mono(const Derived& dv, int32_t a, int64_t b, int32_t c, int32_t mod);
    static APoly one(int32_t mod) { return mono(Derived(), 0, 0, 1, mod); }

    int64_t degree() const { return deg_; }
    int32_t mod() const { return mod_; }
    bool isZero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<int32_t, int32_t>& terms() const { return terms_; }

    /// v-exponent of the term with u-exponent a (requires integrality).
    int64_t vExp(const Derived& dv, int32_t a) const;
    /// Coefficient of u^a (zero when absent).
    int32_t coeff(int32_t a) const;
    /// Smallest u-exponent present; throws on zero.
    int32_t uValuation() const;

    void addTerm(int32_t a, int32_t c);

    APoly& operator+=(const APoly& o);
    APoly& operator-=(const APoly& o);
    friend APoly operator+(APoly x, const APoly& y) { x += y; return x; }
    friend APoly operator-(APoly x, const APoly& y) { x -= y; return x; }
    bool operator==(const APoly& o) const { return deg_ == o.deg_ && mod_ == o.mod_ && terms_ == o.terms_; }

    APoly scaled(int32_t c) const;
    APoly negated() const { return scaled(mod_ - 1); }

    /// Truncate to the given u-range.
    APoly truncated(const URange& r) const;
    /// Multiply by v^k (degree shift, u-exponents unchanged).
    APoly vShifted(int64_t k, const Derived& dv) const;
    /// Multiply by u^k.
    APoly uShifted(int32_t k, const Derived& dv) const;

    /// Reduce a mod-p^2 element to mod p.
    APoly reducedModP(int32_t p) const;

    std::string str(const Derived& dv) const;

  private:
    int64_t deg_ = 0;
    int32_t mod_ = 3;
    std::map<int32_t, int32_t> terms_;  // uExp -> coefficient
};

/// Product, truncated to the u-range.  Throws UsageError on mixed
/// coefficient modes.
APoly aMul(const APoly& x, const APoly& y, const URange& r, const Derived& dv);
APoly aPow(const APoly& x, int64_t e, const URange& r, const Derived& dv);

/// The elements x_i: x_0 = v and
///   x_i = x_{i-1}^p                              (i = 1 or rep(i) != 1)
///   x_i = x_{i-1}^p - u^{b_{n,i}} v^{p^i-p^{i-1}+1}   (i > 1, rep(i) = 1),
/// truncated at the context's uTrunc.  x_i = v^{p^i} mod (u).
APoly xFamily(const Context& cx, int32_t i);

}  // namespace bkss
