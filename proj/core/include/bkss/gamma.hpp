#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bkss/a_poly.hpp"
#include "bkss/params.hpp"

namespace bkss {

inline constexpr int32_t kMaxT = 6;

/// Exponent vector of a Gamma monomial; index k-1 holds the exponent of
/// t_k.  Normal form keeps every exponent below p^n; raw (pre-rewrite)
/// exponents may be larger.
using TExps = std::array<uint32_t, kMaxT>;

inline TExps texpsOne() { return TExps{}; }
inline bool texpsIsOne(const TExps& e) {
    for (auto x : e) if (x) return false;
    return true;
}
inline TExps texpsMul(const TExps& a, const TExps& b) {
    TExps r{};
    for (int i = 0; i < kMaxT; ++i) r[i] = a[i] + b[i];
    return r;
}
inline TExps texpsGen(int32_t k, uint32_t e = 1) {
    TExps r{};
    r[k - 1] = e;
    return r;
}
std::string texpsStr(const TExps& e);

/// A-linear combination of normal-form Gamma monomials, homogeneous of
/// a fixed internal degree.
class GammaElt {
  public:
    GammaElt() = default;
    GammaElt(int64_t deg, int32_t mod) : deg_(deg), mod_(mod) {}

    int64_t degree() const { return deg_; }
    int32_t mod() const { return mod_; }
    bool isZero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<TExps, APoly>& terms() const { return terms_; }

    void add(const TExps& e, const APoly& c);
    GammaElt& operator+=(const GammaElt& o);
    GammaElt& operator-=(const GammaElt& o);
    friend GammaElt operator+(GammaElt a, const GammaElt& b) { a += b; return a; }
    friend GammaElt operator-(GammaElt a, const GammaElt& b) { a -= b; return a; }
    bool operator==(const GammaElt& o) const { return deg_ == o.deg_ && terms_ == o.terms_; }

    GammaElt scaled(int32_t c) const;
    GammaElt negated() const { return scaled(mod_ - 1); }
    APoly coeff(const TExps& e) const;

    std::string str(const Derived& dv) const;

  private:
    int64_t deg_ = 0;
    int32_t mod_ = 3;
    std::map<TExps, APoly> terms_;
};

/// Element of Gamma (x) _A Gamma: pairs of normal-form monomials with
/// the A-coefficient kept on the far left.
struct TPair {
    TExps l{}, r{};
    auto operator<=>(const TPair&) const = default;
};

class TensorElt {
  public:
    TensorElt() = default;
    TensorElt(int64_t deg, int32_t mod) : deg_(deg), mod_(mod) {}

    int64_t degree() const { return deg_; }
    int32_t mod() const { return mod_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<TPair, APoly>& terms() const { return terms_; }

    void add(const TPair& k, const APoly& c);
    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    TensorElt scaled(int32_t c) const;
    TensorElt negated() const { return scaled(mod_ - 1); }
    bool operator==(const TensorElt& o) const { return deg_ == o.deg_ && terms_ == o.terms_; }

    std::string str(const Derived& dv) const;

  private:
    int64_t deg_ = 0;
    int32_t mod_ = 3;
    std::map<TPair, APoly> terms_;
};

/// One summand of a rewrite rule t_k^{p^n} -> sum of raw terms
/// u^{da} v^{db} scalar * t^{factor}.
struct RawRuleTerm {
    int32_t da = 0;
    int64_t db = 0;
    int32_t scalar = 1;
    TExps factor{};
};

/// Normal-form arithmetic in Gamma = E(n)_*E(n)/I_{n-1} over A, with
/// the structure maps eta_R, Delta, epsilon and the conjugation.  The
/// relations for k < n and the coproducts for k <= n come from the
/// displayed structure formulas; rules and coproducts beyond that range
/// are installed by the formal-group-law engine.
class GammaCtx {
  public:
    explicit GammaCtx(const Context& cx);

    const Context& context() const { return *cx_; }
    int32_t mod() const { return mod_; }

    int64_t weight(const TExps& e) const;
    int64_t monoDegree(const TExps& e, int32_t a, int64_t b) const;

    /// Normal form of u^a v^b c * t^raw, truncated at u^uHi.
    GammaElt normalMono(TExps raw, int32_t a, int64_t b, int32_t c, int32_t uHi) const;
    GammaElt normalOne(const TExps& raw, int32_t uHi) const {
        return normalMono(raw, 0, 0, 1, uHi);
    }

    GammaElt mul(const GammaElt& x, const GammaElt& y, int32_t uHi) const;
    GammaElt mulCoeff(const GammaElt& x, const APoly& c, int32_t uHi) const;
    GammaElt pow(const GammaElt& x, int64_t e, int32_t uHi) const;
    /// Algebra Frobenius: p-th power of every monomial and coefficient.
    GammaElt frobenius(const GammaElt& x, int32_t uHi) const;

    /// eta_R(v^b) and eta_R of a general coefficient element.
    const GammaElt& etaRvPow(int64_t b, int32_t uHi) const;
    GammaElt etaR(const APoly& x, int32_t uHi) const;

    /// Delta(t_k) with the far-left coefficient convention; trivial
    /// legs included.
    const TensorElt& deltaGen(int32_t k) const;
    const TensorElt& deltaPow(int32_t k, uint32_t e, int32_t uHi) const;
    TensorElt deltaMono(const TExps& e, int32_t uHi) const;
    TensorElt tensorMul(const TensorElt& x, const TensorElt& y, int32_t uHi) const;

    /// Conjugation (antipode) c(t_k) and its multiplicative extension.
    const GammaElt& conjGen(int32_t k) const;
    GammaElt conjMono(const TExps& e, int32_t uHi) const;
    GammaElt conj(const GammaElt& x, int32_t uHi) const;

    bool hasRule(int32_t k) const;
    const std::vector<RawRuleTerm>& rule(int32_t k) const;
    /// Installed by the FGL engine for n <= k < tBound.
    void installRule(int32_t k, std::vector<RawRuleTerm> terms);
    /// Installed by the FGL engine for n < k <= tBound.
    void installDelta(int32_t k, TensorElt d);

    /// The p-divided binomial correction b_i of the coproduct:
    /// sum_{0<j<p} (1/p) C(p,j) t_1^{j p^i} (x) t_1^{(p-j) p^i}.
    TensorElt bCorrection(int32_t i) const;

  private:
    const Context* cx_;
    int32_t mod_;
    int64_t pn_;
    std::vector<std::vector<RawRuleTerm>> rules_;          // [k], 1-based
    std::vector<bool> hasRule_;
    mutable std::vector<TensorElt> delta_;                 // [k], 1-based
    mutable std::vector<bool> hasDelta_;
    mutable std::vector<GammaElt> conj_;                   // [k], 1-based
    mutable std::vector<bool> hasConj_;
    mutable std::map<std::pair<int64_t, int32_t>, GammaElt> etaRvCache_;
    mutable std::map<std::array<int64_t, 3>, TensorElt> deltaPowCache_;

    void buildPaperRules();
    void buildPaperDeltas();
    void buildConj(int32_t k) const;
};

}  // namespace bkss
