#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bkss/gamma.hpp"

namespace bkss {

inline constexpr int32_t kMaxSlots = 4;  // sMax <= 3 plus one for d

/// Which comodule the cochains take coefficients in.
struct ComoduleTag {
    enum Kind : uint8_t { K = 0, C = 1, A = 2, B = 3 };
    Kind kind = K;
    int32_t j = 1;  // only for C(j)

    static ComoduleTag k() { return {K, 1}; }
    static ComoduleTag c(int32_t j) { return {C, j}; }
    static ComoduleTag a() { return {A, 0}; }
    static ComoduleTag b() { return {B, 0}; }

    bool operator==(const ComoduleTag& o) const {
        return kind == o.kind && (kind != C || j == o.j);
    }
    std::string str() const;
    /// Admissible u-exponents of coefficients.
    URange uRange(const Context& cx) const;
};

/// Key of one cochain term: the tensor word (slot-major exponents of
/// normal-form monomials) plus the u-exponent of the far-left
/// coefficient monomial.  The v-exponent is determined by the cochain's
/// internal degree.  Canonical order: graded-lexicographic on
/// (t-weight, exponents, u-exponent).
struct CKey {
    int64_t w = 0;
    std::array<uint16_t, kMaxSlots * kMaxT> e{};
    int32_t a = 0;

    auto operator<=>(const CKey&) const = default;

    TExps slot(int32_t i) const {
        TExps r{};
        for (int k = 0; k < kMaxT; ++k) r[k] = e[i * kMaxT + k];
        return r;
    }
    void setSlot(int32_t i, const TExps& s) {
        for (int k = 0; k < kMaxT; ++k) e[i * kMaxT + k] = static_cast<uint16_t>(s[k]);
    }
    bool slotTrivial(int32_t i) const {
        for (int k = 0; k < kMaxT; ++k)
            if (e[i * kMaxT + k]) return false;
        return true;
    }
};

/// Element of the reduced cobar complex Omega^s_Gamma M: a finite sum
/// of terms  u^a v^b c * (m_1 (x) ... (x) m_s)  with epsilon-reduced
/// normal-form slots and the coefficient on the far left.
class Cochain {
  public:
    Cochain() = default;
    Cochain(ComoduleTag tag, int32_t s, int64_t deg, int32_t mod)
        : tag_(tag), s_(s), deg_(deg), mod_(mod) {}

    ComoduleTag tag() const { return tag_; }
    int32_t s() const { return s_; }
    int64_t degree() const { return deg_; }
    int32_t mod() const { return mod_; }
    bool isZero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<CKey, int32_t>& terms() const { return terms_; }

    void add(const CKey& k, int32_t c);
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { a += b; return a; }
    friend Cochain operator-(Cochain a, const Cochain& b) { a -= b; return a; }
    bool operator==(const Cochain& o) const {
        return tag_ == o.tag_ && s_ == o.s_ && deg_ == o.deg_ && terms_ == o.terms_;
    }
    Cochain scaled(int32_t c) const;
    Cochain negated() const { return scaled(mod_ - 1); }

    int64_t maxWeight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.w; }

    std::string str(const Derived& dv) const;

  private:
    ComoduleTag tag_;
    int32_t s_ = 0;
    int64_t deg_ = 0;
    int32_t mod_ = 3;
    std::map<CKey, int32_t> terms_;
};

/// Cobar-complex operations over a fixed Gamma context.
class CobarCtx {
  public:
    explicit CobarCtx(const GammaCtx& g) : g_(&g), cx_(&g.context()) {}

    const GammaCtx& gamma() const { return *g_; }
    const Context& context() const { return *cx_; }

    /// v-exponent of a term (from the degree bookkeeping).
    int64_t vExpOf(const Cochain& x, const CKey& k) const;

    Cochain zero(ComoduleTag tag, int32_t s, int64_t deg) const {
        return Cochain(tag, s, deg, cx_->par.p);
    }
    /// Embed a coefficient-ring element as an s = 0 cochain.
    Cochain fromCoeff(ComoduleTag tag, const APoly& x) const;
    /// The s = 1 cochain c * t^{e} (coefficient monomial times one slot).
    Cochain word1(ComoduleTag tag, int64_t deg, int32_t a, const TExps& e,
                  int32_t c = 1) const;

    /// The cobar differential Omega^s -> Omega^{s+1}; for s = 0 this is
    /// eta_R - eta_L.
    Cochain d(const Cochain& x) const;

    /// Concatenation product.  Throws UsageError on mismatched tags.
    Cochain cup(const Cochain& x, const Cochain& y) const;
    /// Left multiplication by a coefficient element.
    Cochain mulCoeff(const Cochain& x, const APoly& w) const;
    /// Right multiplication by eta_R(w) on the last slot.
    Cochain mulRightUnit(const Cochain& x, const APoly& w) const;
    /// Algebra Frobenius (p-th power of coefficient and slots).
    Cochain frobenius(const Cochain& x) const;

    /// Reduce to a smaller comodule (A -> C(j) -> K, A -> B by u-division).
    Cochain reduceTo(const Cochain& x, ComoduleTag tag) const;
    /// Divide by u^k (move an A- or C-cochain into B, or shift B).
    Cochain uDivide(const Cochain& x, int32_t k, ComoduleTag tag) const;
    /// Multiply by u^k.
    Cochain uMultiply(const Cochain& x, int32_t k) const;
    /// Extract the coefficient layer at u-exponent a0 as a mod-u cochain
    /// of degree deg - a0 |u|.
    Cochain uLayer(const Cochain& x, int32_t a0) const;
    /// Smallest u-exponent appearing; throws on zero cochains.
    int32_t uValuation(const Cochain& x) const;

  private:
    const GammaCtx* g_;
    const Context* cx_;

    struct WTerm {
        int32_t a;
        int64_t b;
        int32_t c;
        std::vector<TExps> slots;
    };
    void emit(Cochain& out, WTerm t, const URange& range) const;
    /// Insert the coefficient monomial u^ap v^bp cp immediately left of
    /// slot idx, crossing tensor signs with eta_R as needed.
    void crossCollect(WTerm t, int32_t idx, int32_t ap, int64_t bp, int32_t cp,
                      const URange& range, std::vector<WTerm>& sink) const;
    void crossLeft(Cochain& out, WTerm t, int32_t idx, int32_t ap, int64_t bp,
                   int32_t cp, const URange& range) const;
};

}  // namespace bkss
