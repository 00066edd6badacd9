#include "bkss/cobar.hpp"

#include <algorithm>
#include <sstream>

namespace bkss {

std::string ComoduleTag::str() const {
    switch (kind) {
        case K: return "K";
        case C: return "C(" + std::to_string(j) + ")";
        case A: return "A";
        case B: return "B";
    }
    return "?";
}

URange ComoduleTag::uRange(const Context& cx) const {
    switch (kind) {
        case K: return {0, 1};
        case C: return {0, std::min(j, cx.par.uTrunc)};
        case A: return {0, cx.par.uTrunc};
        case B: return {-cx.dv.uDivCap, 0};
    }
    return {0, 0};
}

void Cochain::add(const CKey& k, int32_t c) {
    c = modNorm(c, mod_);
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second = modAdd(it->second, c, mod_);
        if (it->second == 0) terms_.erase(it);
    }
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.isZero()) return *this;
    if (isZero()) { *this = o; return *this; }
    if (!(tag_ == o.tag_) || s_ != o.s_ || deg_ != o.deg_)
        throw UsageError("Cochain: incompatible sum");
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += o.negated(); }

Cochain Cochain::scaled(int32_t c) const {
    Cochain r(tag_, s_, deg_, mod_);
    c = modNorm(c, mod_);
    if (c == 0) return r;
    for (auto& [k, x] : terms_) r.add(k, modMul(x, c, mod_));
    return r;
}

std::string Cochain::str(const Derived& dv) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        int64_t b = (deg_ - k.a * dv.uDeg - k.w) / dv.vDeg;
        os << c;
        if (k.a) os << "*u^" << k.a;
        if (b) os << "*v^" << b;
        for (int i = 0; i < s_; ++i) {
            os << (i ? "(x)" : "*");
            os << texpsStr(k.slot(i));
        }
    }
    return os.str();
}

int64_t CobarCtx::vExpOf(const Cochain& x, const CKey& k) const {
    const Derived& dv = cx_->dv;
    int64_t num = x.degree() - int64_t(k.a) * dv.uDeg - k.w;
    if (num % dv.vDeg != 0) throw UsageError("cochain term with non-integral v-exponent");
    return num / dv.vDeg;
}

Cochain CobarCtx::fromCoeff(ComoduleTag tag, const APoly& x) const {
    URange r = tag.uRange(*cx_);
    Cochain out(tag, 0, x.degree(), cx_->par.p);
    for (auto& [a, c] : x.terms()) {
        if (a < r.lo) throw WindowError("coefficient below the u-division cap");
        if (!r.contains(a)) continue;
        CKey k;
        k.a = a;
        out.add(k, c);
    }
    return out;
}

Cochain CobarCtx::word1(ComoduleTag tag, int64_t deg, int32_t a, const TExps& e,
                        int32_t c) const {
    Cochain out(tag, 1, deg, cx_->par.p);
    CKey k;
    k.w = g_->weight(e);
    k.setSlot(0, e);
    k.a = a;
    out.add(k, c);
    vExpOf(out, k);  // degree sanity
    return out;
}

void CobarCtx::emit(Cochain& out, WTerm t, const URange& range) const {
    if (t.c == 0) return;
    if (t.a >= range.hi) return;
    if (t.a < range.lo) throw WindowError("u-division cap exceeded");
    CKey k;
    int64_t w = 0;
    for (size_t i = 0; i < t.slots.size(); ++i) {
        if (texpsIsOne(t.slots[i])) return;  // epsilon-reduced complex
        k.setSlot(static_cast<int32_t>(i), t.slots[i]);
        w += g_->weight(t.slots[i]);
    }
    k.w = w;
    k.a = t.a;
    out.add(k, t.c);
}

void CobarCtx::crossCollect(WTerm t, int32_t idx, int32_t ap, int64_t bp, int32_t cp,
                            const URange& range, std::vector<WTerm>& sink) const {
    t.a += ap;
    t.c = modMul(t.c, cp, cx_->par.p);
    if (t.c == 0 || t.a >= range.hi) return;
    if (bp == 0 || idx == 0) {
        t.b += bp;
        sink.push_back(std::move(t));
        return;
    }
    int32_t budget = range.hi - t.a;
    const Derived& dv = cx_->dv;
    GammaElt g = g_->mul(g_->normalOne(t.slots[idx - 1], budget),
                         g_->etaRvPow(bp, budget), budget);
    for (auto& [mono, P] : g.terms()) {
        for (auto& [a2, c2] : P.terms()) {
            WTerm t2 = t;
            t2.slots[idx - 1] = mono;
            crossCollect(std::move(t2), idx - 1, a2, P.vExp(dv, a2), c2, range, sink);
        }
    }
}

void CobarCtx::crossLeft(Cochain& out, WTerm t, int32_t idx, int32_t ap, int64_t bp,
                         int32_t cp, const URange& range) const {
    std::vector<WTerm> sink;
    crossCollect(std::move(t), idx, ap, bp, cp, range, sink);
    for (auto& w : sink) emit(out, std::move(w), range);
}

Cochain CobarCtx::d(const Cochain& x) const {
    const Derived& dv = cx_->dv;
    if (x.s() + 1 > kMaxSlots) throw UsageError("d: cohomological degree too large");
    URange range = x.tag().uRange(*cx_);
    Cochain out(x.tag(), x.s() + 1, x.degree(), cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        int64_t b = vExpOf(x, key);
        std::vector<TExps> slots(x.s());
        for (int32_t i = 0; i < x.s(); ++i) slots[i] = key.slot(i);

        // coaction on the coefficient: eta_R - eta_L, prepended
        int32_t budget = range.hi - key.a;
        if (budget > 0) {
            const GammaElt& ev = g_->etaRvPow(b, budget);
            for (auto& [mono, P] : ev.terms()) {
                if (texpsIsOne(mono)) continue;  // the eta_L part cancels it
                for (auto& [da, dc] : P.terms()) {
                    WTerm t;
                    t.a = key.a + da;
                    t.b = P.vExp(dv, da);
                    t.c = modMul(c, dc, cx_->par.p);
                    t.slots.reserve(slots.size() + 1);
                    t.slots.push_back(mono);
                    for (auto& s : slots) t.slots.push_back(s);
                    emit(out, std::move(t), range);
                }
            }
        }

        // alternating reduced coproducts
        for (int32_t i = 0; i < x.s(); ++i) {
            int32_t sign = (i % 2 == 0) ? cx_->par.p - 1 : 1;  // (-1)^{i+1}
            TensorElt D = g_->deltaMono(slots[i], std::max(budget, 1));
            for (auto& [pr, P] : D.terms()) {
                if (texpsIsOne(pr.l) || texpsIsOne(pr.r)) continue;
                WTerm t;
                t.a = key.a;
                t.b = b;
                t.c = modMul(c, sign, cx_->par.p);
                t.slots.reserve(slots.size() + 1);
                for (int32_t q = 0; q < i; ++q) t.slots.push_back(slots[q]);
                t.slots.push_back(pr.l);
                t.slots.push_back(pr.r);
                for (int32_t q = i + 1; q < x.s(); ++q) t.slots.push_back(slots[q]);
                for (auto& [ap, cp] : P.terms())
                    crossLeft(out, t, i, ap, P.vExp(dv, ap), cp, range);
            }
        }
    }
    return out;
}

static ComoduleTag cupTag(const ComoduleTag& a, const ComoduleTag& b) {
    if (a.kind == ComoduleTag::B || b.kind == ComoduleTag::B) {
        const ComoduleTag& other = a.kind == ComoduleTag::B ? b : a;
        if (other.kind == ComoduleTag::B)
            throw UsageError("cup: B (x) B is undefined");
        if (other.kind != ComoduleTag::A)
            throw UsageError("cup: B pairs only with A-cochains");
        return ComoduleTag::b();
    }
    if (a.kind == b.kind) {
        if (a.kind == ComoduleTag::C)
            return ComoduleTag::c(std::min(a.j, b.j));
        return a;
    }
    if (a.kind == ComoduleTag::A) return b;
    if (b.kind == ComoduleTag::A) return a;
    return ComoduleTag::k();  // C(j) against K
}

Cochain CobarCtx::cup(const Cochain& x, const Cochain& y) const {

    ComoduleTag tag = cupTag(x.tag(), y.tag());
    if (x.s() + y.s() > kMaxSlots) throw UsageError("cup: too many slots");
    URange range = tag.uRange(*cx_);
    Cochain out(tag, x.s() + y.s(), x.degree() + y.degree(), cx_->par.p);
    for (auto& [kx, cxv] : x.terms()) {
        int64_t bx = vExpOf(x, kx);
        for (auto& [ky, cyv] : y.terms()) {
            int64_t by = vExpOf(y, ky);
            WTerm t;
            t.a = kx.a;
            t.b = bx;
            t.c = cxv;
            t.slots.reserve(x.s() + y.s());
            for (int32_t i = 0; i < x.s(); ++i) t.slots.push_back(kx.slot(i));
            for (int32_t i = 0; i < y.s(); ++i) t.slots.push_back(ky.slot(i));
            crossLeft(out, std::move(t), x.s(), ky.a, by, cyv, range);
        }
    }
    return out;
}

Cochain CobarCtx::mulCoeff(const Cochain& x, const APoly& w) const {

    URange range = x.tag().uRange(*cx_);
    Cochain out(x.tag(), x.s(), x.degree() + w.degree(), cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        for (auto& [aw, cw] : w.terms()) {
            CKey k = key;
            k.a += aw;
            if (k.a >= range.hi) continue;
            if (k.a < range.lo) throw WindowError("u-division cap exceeded");
            out.add(k, modMul(c, cw, cx_->par.p));
        }
    }
    return out;
}

Cochain CobarCtx::mulRightUnit(const Cochain& x, const APoly& w) const {
    if (x.s() == 0)
        throw UsageError("mulRightUnit needs at least one slot");
    const Derived& dv = cx_->dv;
    URange range = x.tag().uRange(*cx_);
    Cochain out(x.tag(), x.s(), x.degree() + w.degree(), cx_->par.p);
    int32_t last = x.s() - 1;
    for (auto& [key, c] : x.terms()) {
        int64_t b = vExpOf(x, key);
        int32_t budget = range.hi - key.a;
        if (budget <= 0) continue;
        GammaElt g = g_->mul(g_->normalOne(key.slot(last), budget), g_->etaR(w, budget),
                             budget);
        for (auto& [mono, P] : g.terms()) {
            WTerm t;
            t.a = key.a;
            t.b = b;
            t.c = c;
            t.slots.resize(x.s());
            for (int32_t i = 0; i < x.s(); ++i) t.slots[i] = key.slot(i);
            t.slots[last] = mono;
            for (auto& [ap, cp] : P.terms())
                crossLeft(out, t, last, ap, P.vExp(dv, ap), cp, range);
        }
    }
    return out;
}

Cochain CobarCtx::frobenius(const Cochain& x) const {
    const Derived& dv = cx_->dv;
    URange range = x.tag().uRange(*cx_);
    Cochain out(x.tag(), x.s(), x.degree() * dv.p, cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        int64_t b = vExpOf(x, key);
        std::vector<WTerm> partial;
        WTerm seed;
        seed.a = key.a * dv.p;
        seed.b = b * dv.p;
        seed.c = c;  // c^p = c mod p
        partial.push_back(std::move(seed));
        for (int32_t i = 0; i < x.s() && !partial.empty(); ++i) {
            TExps pe{};
            TExps se = key.slot(i);
            for (int k = 0; k < kMaxT; ++k) pe[k] = se[k] * dv.p;
            std::vector<WTerm> next;
            for (auto& t : partial) {
                int32_t budget = range.hi - t.a;
                if (budget <= 0) continue;
                GammaElt g = g_->normalOne(pe, budget);
                for (auto& [mono, P] : g.terms()) {
                    for (auto& [ap, cp] : P.terms()) {
                        // the power's coefficients sit left of slot i and
                        // cross the finished slots
                        WTerm t2 = t;
                        t2.slots.push_back(mono);
                        crossCollect(std::move(t2), i, ap, P.vExp(dv, ap), cp, range, next);
                    }
                }
            }
            partial = std::move(next);
        }
        for (auto& t : partial) emit(out, std::move(t), range);
    }
    return out;
}

Cochain CobarCtx::reduceTo(const Cochain& x, ComoduleTag tag) const {
    URange r = tag.uRange(*cx_);
    URange rx = x.tag().uRange(*cx_);
    if (x.tag().kind == ComoduleTag::B || tag.kind == ComoduleTag::B)
        throw UsageError("reduceTo: use uDivide for B");
    if (r.hi > rx.hi) throw UsageError("reduceTo: target is not a quotient");
    Cochain out(tag, x.s(), x.degree(), cx_->par.p);
    for (auto& [k, c] : x.terms())
        if (k.a < r.hi) out.add(k, c);
    return out;
}

Cochain CobarCtx::uDivide(const Cochain& x, int32_t k, ComoduleTag tag) const {
    URange r = tag.uRange(*cx_);
    Cochain out(tag, x.s(), x.degree() - k * cx_->dv.uDeg, cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        CKey nk = key;
        nk.a -= k;
        if (nk.a >= r.hi) continue;
        if (nk.a < r.lo) throw WindowError("uDivide: u-division cap exceeded");
        out.add(nk, c);
    }
    return out;
}

Cochain CobarCtx::uMultiply(const Cochain& x, int32_t k) const {
    URange r = x.tag().uRange(*cx_);
    Cochain out(x.tag(), x.s(), x.degree() + k * cx_->dv.uDeg, cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        CKey nk = key;
        nk.a += k;
        if (!r.contains(nk.a)) continue;
        out.add(nk, c);
    }
    return out;
}

Cochain CobarCtx::uLayer(const Cochain& x, int32_t a0) const {
    Cochain out(ComoduleTag::k(), x.s(), x.degree() - a0 * cx_->dv.uDeg, cx_->par.p);
    for (auto& [key, c] : x.terms()) {
        if (key.a != a0) continue;
        CKey nk = key;
        nk.a = 0;
        out.add(nk, c);
    }
    return out;
}

int32_t CobarCtx::uValuation(const Cochain& x) const {
    if (x.isZero()) throw UsageError("uValuation of zero cochain");
    int32_t v = x.terms().begin()->first.a;
    for (auto& [k, c] : x.terms()) v = std::min(v, k.a);
    return v;
}

}  // namespace bkss
