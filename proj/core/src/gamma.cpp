#include "bkss/gamma.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace bkss {

std::string texpsStr(const TExps& e) {
    if (texpsIsOne(e)) return "1";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < kMaxT; ++k) {
        if (!e[k]) continue;
        if (!first) os << "*";
        first = false;
        os << "t" << (k + 1);
        if (e[k] != 1) os << "^" << e[k];
    }
    return os.str();
}

void GammaElt::add(const TExps& e, const APoly& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

GammaElt& GammaElt::operator+=(const GammaElt& o) {
    if (o.isZero()) return *this;
    if (isZero()) { *this = o; return *this; }
    if (deg_ != o.deg_) throw UsageError("GammaElt: mixed degrees in sum");
    for (auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

GammaElt& GammaElt::operator-=(const GammaElt& o) { return *this += o.negated(); }

GammaElt GammaElt::scaled(int32_t c) const {
    GammaElt r(deg_, mod_);
    for (auto& [e, p] : terms_) r.add(e, p.scaled(c));
    return r;
}

APoly GammaElt::coeff(const TExps& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return APoly(0, mod_);
    return it->second;
}

std::string GammaElt::str(const Derived& dv) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str(dv) << ")*" << texpsStr(e);
    }
    return os.str();
}

void TensorElt::add(const TPair& k, const APoly& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    if (o.isZero()) return *this;
    if (isZero()) { *this = o; return *this; }
    if (deg_ != o.deg_) throw UsageError("TensorElt: mixed degrees in sum");
    for (auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) { *this += o.negated(); return *this; }

TensorElt TensorElt::scaled(int32_t c) const {
    TensorElt r(deg_, mod_);
    for (auto& [e, p] : terms_) r.add(e, p.scaled(c));
    return r;
}

std::string TensorElt::str(const Derived& dv) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str(dv) << ")*" << texpsStr(e.l) << " (x) " << texpsStr(e.r);
    }
    return os.str();
}

GammaCtx::GammaCtx(const Context& cx)
    : cx_(&cx), mod_(cx.par.p), pn_(cx.dv.pn) {
    rules_.resize(kMaxT + 1);
    hasRule_.assign(kMaxT + 1, false);
    delta_.resize(kMaxT + 1);
    hasDelta_.assign(kMaxT + 1, false);
    conj_.resize(kMaxT + 1);
    hasConj_.assign(kMaxT + 1, false);
    buildPaperRules();
    buildPaperDeltas();
}

int64_t GammaCtx::weight(const TExps& e) const {
    int64_t w = 0;
    for (int k = 0; k < kMaxT; ++k)
        if (e[k]) w += int64_t(e[k]) * cx_->dv.tDeg(k + 1);
    return w;
}

int64_t GammaCtx::monoDegree(const TExps& e, int32_t a, int64_t b) const {
    return weight(e) + a * cx_->dv.uDeg + b * cx_->dv.vDeg;
}

void GammaCtx::buildPaperRules() {
    const Derived& dv = cx_->dv;
    int32_t n = dv.n, tB = cx_->par.tBound;
    // 0 = v t_k^{p^n} + u t_{k+1}^{p^{n-1}} - u^{p^{k+1}} t_{k+1}
    //       - t_k eta_R(v^{p^k})                          for k < n,
    // solved for t_k^{p^n}; eta_R(v^{p^k}) is the Frobenius power
    // v^{p^k} + u^{p^k} t_1^{p^{n-1+k}} - u^{p^{k+1}} t_1^{p^k}.
    for (int32_t k = 1; k < n && k + 1 <= tB; ++k) {
        std::vector<RawRuleTerm> rt;
        int64_t pk = dv.pPow(k), pk1 = dv.pPow(k + 1);
        rt.push_back({0, pk - 1, 1, texpsGen(k)});
        rt.push_back({static_cast<int32_t>(pk), -1, 1,
                      texpsMul(texpsGen(k), texpsGen(1, static_cast<uint32_t>(dv.pPow(n - 1 + k))))});
        rt.push_back({static_cast<int32_t>(pk1), -1, mod_ - 1,
                      texpsMul(texpsGen(k), texpsGen(1, static_cast<uint32_t>(pk)))});
        rt.push_back({static_cast<int32_t>(pk1), -1, 1, texpsGen(k + 1)});
        rt.push_back({1, -1, mod_ - 1, texpsGen(k + 1, static_cast<uint32_t>(dv.pPow(n - 1)))});
        rules_[k] = std::move(rt);
        hasRule_[k] = true;
    }
}

TensorElt GammaCtx::bCorrection(int32_t i) const {
    const Derived& dv = cx_->dv;
    int32_t p = dv.p;
    TensorElt out(p * dv.pPow(i) * (p - 1), mod_);
    int64_t binom = 1;
    for (int32_t j = 1; j < p; ++j) {
        binom = binom * (p - j + 1) / j;  // C(p, j)
        int64_t c = binom / p;
        TPair pr{texpsGen(1, static_cast<uint32_t>(j * dv.pPow(i))),
                 texpsGen(1, static_cast<uint32_t>((p - j) * dv.pPow(i)))};
        out.add(pr, APoly::mono(dv, 0, 0, modNorm(c, mod_), mod_));
    }
    return out;
}

void GammaCtx::buildPaperDeltas() {
    const Derived& dv = cx_->dv;
    int32_t n = dv.n, tB = cx_->par.tBound;
    for (int32_t k = 1; k <= n && k <= tB; ++k) {
        TensorElt d(dv.tDeg(k), mod_);
        for (int32_t i = 0; i <= k; ++i) {
            TPair pr{i == 0 ? texpsOne() : texpsGen(i),
                     i == k ? texpsOne() : texpsGen(k - i, static_cast<uint32_t>(dv.pPow(i)))};
            d.add(pr, APoly::mono(dv, 0, 0, 1, mod_));
        }
        if (k == n) {
            TensorElt corr = bCorrection(n - 2);
            for (auto& [pr, c] : corr.terms())
                d.add(pr, c.uShifted(1, dv).negated());
        }
        delta_[k] = std::move(d);
        hasDelta_[k] = true;
    }
}

bool GammaCtx::hasRule(int32_t k) const {
    return k >= 1 && k <= kMaxT && hasRule_[k];
}

const std::vector<RawRuleTerm>& GammaCtx::rule(int32_t k) const {
    if (!hasRule(k))
        throw RangeError("Gamma rewrite rule for t_" + std::to_string(k) +
                         " is outside the certified range");
    return rules_[k];
}

void GammaCtx::installRule(int32_t k, std::vector<RawRuleTerm> terms) {
    const Derived& dv = cx_->dv;
    if (k < dv.n || k + 1 > cx_->par.tBound)
        throw UsageError("installRule: index out of range");
    // The u-free part of any valid rule is v^{p^k-1} t_k.
    for (auto& t : terms) {
        if (t.da == 0 &&
            !(t.factor == texpsGen(k) && t.db == dv.pPow(k) - 1 && t.scalar == 1))
            throw Error("installRule: unexpected u-free leading part");
    }
    rules_[k] = std::move(terms);
    hasRule_[k] = true;
}

void GammaCtx::installDelta(int32_t k, TensorElt d) {
    if (k <= cx_->dv.n || k > cx_->par.tBound)
        throw UsageError("installDelta: index out of range");
    delta_[k] = std::move(d);
    hasDelta_[k] = true;
}

GammaElt GammaCtx::normalMono(TExps raw, int32_t a, int64_t b, int32_t c,
                              int32_t uHi) const {
    const Derived& dv = cx_->dv;
    for (int k = cx_->par.tBound; k < kMaxT; ++k)
        if (raw[k]) throw RangeError("t-generator index beyond tBound");
    int32_t budget = uHi - a;
    GammaElt out(monoDegree(raw, a, b), mod_);
    if (budget <= 0 || modNorm(c, mod_) == 0) return out;

    // Worklist rewriting of every exponent >= p^n.  The u-free branch
    // of each rule strictly decreases the exponent sum; the remaining
    // branches raise the u-exponent, which the budget bounds.
    struct W {
        TExps e;
        int32_t da;
        int64_t db;
        int32_t c;
    };
    std::vector<W> work{{raw, 0, 0, modNorm(c, mod_)}};
    while (!work.empty()) {
        W w = work.back();
        work.pop_back();
        if (w.c == 0 || w.da >= budget) continue;
        int k = -1;
        for (int i = 0; i < kMaxT; ++i)
            if (w.e[i] >= pn_) { k = i + 1; break; }
        if (k < 0) {
            out.add(w.e, APoly::mono(dv, a + w.da, b + w.db, w.c, mod_));
            continue;
        }
        const auto& rt = rule(k);
        w.e[k - 1] -= static_cast<uint32_t>(pn_);
        for (const auto& t : rt) {
            W w2;
            w2.e = texpsMul(w.e, t.factor);
            w2.da = w.da + t.da;
            w2.db = w.db + t.db;
            w2.c = modMul(w.c, t.scalar, mod_);
            if (w2.da < budget && w2.c != 0) work.push_back(std::move(w2));
        }
    }
    return out;
}

static GammaElt gammaShift(const GammaElt& g, int32_t a, int64_t b, int32_t c,
                           int32_t uHi, const Derived& dv) {
    GammaElt out(g.degree() + a * dv.uDeg + b * dv.vDeg, g.mod());
    for (auto& [e, P] : g.terms()) {
        APoly q(P.degree() + a * dv.uDeg + b * dv.vDeg, P.mod());
        for (auto& [ua, uc] : P.terms()) {
            int32_t na = ua + a;
            if (na < uHi) q.addTerm(na, modMul(uc, c, P.mod()));
        }
        out.add(e, q);
    }
    return out;
}

GammaElt GammaCtx::mul(const GammaElt& x, const GammaElt& y, int32_t uHi) const {
    const Derived& dv = cx_->dv;
    GammaElt out(x.degree() + y.degree(), mod_);
    for (auto& [e1, P1] : x.terms())
        for (auto& [e2, P2] : y.terms()) {
            TExps raw = texpsMul(e1, e2);
            for (auto& [a1, c1] : P1.terms()) {
                int64_t b1 = P1.vExp(dv, a1);
                for (auto& [a2, c2] : P2.terms()) {
                    int64_t b2 = P2.vExp(dv, a2);
                    out += normalMono(raw, a1 + a2, b1 + b2, modMul(c1, c2, mod_), uHi);
                }
            }
        }
    return out;
}

GammaElt GammaCtx::mulCoeff(const GammaElt& x, const APoly& c, int32_t uHi) const {
    const Derived& dv = cx_->dv;
    GammaElt out(x.degree() + c.degree(), mod_);
    for (auto& [a, s] : c.terms())
        out += gammaShift(x, a, c.vExp(dv, a), s, uHi, dv);
    return out;
}

GammaElt GammaCtx::pow(const GammaElt& x, int64_t e, int32_t uHi) const {
    if (e < 0) throw UsageError("GammaCtx::pow: negative exponent");
    GammaElt acc(0, mod_);
    acc.add(texpsOne(), APoly::mono(cx_->dv, 0, 0, 1, mod_));
    GammaElt base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, uHi);
        base = mul(base, base, uHi);
        e >>= 1;
    }
    return acc;
}

GammaElt GammaCtx::frobenius(const GammaElt& x, int32_t uHi) const {
    const Derived& dv = cx_->dv;
    GammaElt out(x.degree() * dv.p, mod_);
    for (auto& [e, P] : x.terms()) {
        TExps pe{};
        for (int i = 0; i < kMaxT; ++i) pe[i] = e[i] * dv.p;
        for (auto& [a, c] : P.terms()) {
            int64_t b = P.vExp(dv, a);
            out += normalMono(pe, a * dv.p, b * dv.p, modPow(c, dv.p, mod_), uHi);
        }
    }
    return out;
}

const GammaElt& GammaCtx::etaRvPow(int64_t b, int32_t uHi) const {
    auto key = std::make_pair(b, uHi);
    auto it = etaRvCache_.find(key);
    if (it != etaRvCache_.end()) return it->second;

    const Derived& dv = cx_->dv;
    GammaElt res;
    if (b == 0) {
        res = GammaElt(0, mod_);
        res.add(texpsOne(), APoly::mono(dv, 0, 0, 1, mod_));
    } else if (b == 1) {
        res = GammaElt(dv.vDeg, mod_);
        res.add(texpsOne(), APoly::mono(dv, 0, 1, 1, mod_));
        res.add(texpsGen(1, static_cast<uint32_t>(dv.pPow(dv.n - 1))),
                APoly::mono(dv, 1, 0, 1, mod_));
        res.add(texpsGen(1), APoly::mono(dv, dv.p, 0, mod_ - 1, mod_));
    } else if (b == -1) {
        // eta_R(v)^{-1} = v^{-1} sum_r (-1)^r eps^r for the u-positive
        // part eps = v^{-1}(eta_R(v) - v).
        GammaElt eps(0, mod_);
        eps.add(texpsGen(1, static_cast<uint32_t>(dv.pPow(dv.n - 1))),
                APoly::mono(dv, 1, -1, 1, mod_));
        eps.add(texpsGen(1), APoly::mono(dv, dv.p, -1, mod_ - 1, mod_));
        GammaElt acc(0, mod_);
        acc.add(texpsOne(), APoly::mono(dv, 0, 0, 1, mod_));
        GammaElt cur = acc;
        int32_t sign = 1;
        while (true) {
            cur = mul(cur, eps, uHi);
            if (cur.isZero()) break;
            sign = -sign;
            acc += sign > 0 ? cur : cur.negated();
        }
        res = gammaShift(acc, 0, -1, 1, uHi, dv);
    } else {
        const GammaElt& base = etaRvPow(b > 0 ? 1 : -1, uHi);
        res = pow(base, b > 0 ? b : -b, uHi);
    }
    auto [pos, ok] = etaRvCache_.emplace(key, std::move(res));
    (void)ok;
    return pos->second;
}

GammaElt GammaCtx::etaR(const APoly& x, int32_t uHi) const {
    const Derived& dv = cx_->dv;
    GammaElt out(x.degree(), mod_);
    for (auto& [a, c] : x.terms()) {
        int64_t b = x.vExp(dv, a);
        out += gammaShift(etaRvPow(b, uHi), a, 0, c, uHi, dv);
    }
    return out;
}

const TensorElt& GammaCtx::deltaGen(int32_t k) const {
    if (k < 1 || k > cx_->par.tBound || !hasDelta_[k])
        throw RangeError("Delta(t_" + std::to_string(k) + ") outside certified range");
    return delta_[k];
}

TensorElt GammaCtx::tensorMul(const TensorElt& x, const TensorElt& y, int32_t uHi) const {
    const Derived& dv = cx_->dv;
    URange ar{0, cx_->par.uTrunc};
    TensorElt out(x.degree() + y.degree(), mod_);
    for (auto& [p1, P1] : x.terms())
        for (auto& [p2, P2] : y.terms()) {
            APoly Pg = aMul(P1, P2, ar, dv);
            if (Pg.isZero()) continue;
            GammaElt right = normalMono(texpsMul(p1.r, p2.r), 0, 0, 1, uHi);
            TExps lraw = texpsMul(p1.l, p2.l);
            for (auto& [rMono, RP] : right.terms()) {
                for (auto& [aR, cR] : RP.terms()) {
                    int64_t bR = RP.vExp(dv, aR);
                    // v-exponents produced between the legs cross the
                    // tensor sign as eta_R(v^bR) into the left leg.
                    GammaElt left = bR == 0
                        ? normalMono(lraw, aR, 0, cR, uHi)
                        : gammaShift(mul(normalMono(lraw, 0, 0, cR, uHi),
                                         etaRvPow(bR, uHi), uHi),
                                     aR, 0, 1, uHi, dv);
                    for (auto& [lMono, LP] : left.terms()) {
                        APoly cf = aMul(Pg, LP, ar, dv);
                        out.add(TPair{lMono, rMono}, cf);
                    }
                }
            }
        }
    return out;
}

const TensorElt& GammaCtx::deltaPow(int32_t k, uint32_t e, int32_t uHi) const {
    std::array<int64_t, 3> key{k, e, uHi};
    auto it = deltaPowCache_.find(key);
    if (it != deltaPowCache_.end()) return it->second;

    TensorElt res;
    if (e == 0) {
        res = TensorElt(0, mod_);
        res.add(TPair{}, APoly::mono(cx_->dv, 0, 0, 1, mod_));
    } else if (e == 1) {
        res = deltaGen(k);
    } else {
        const TensorElt& half = deltaPow(k, e / 2, uHi);
        res = tensorMul(half, half, uHi);
        if (e & 1) res = tensorMul(res, deltaGen(k), uHi);
    }
    auto [pos, ok] = deltaPowCache_.emplace(key, std::move(res));
    (void)ok;
    return pos->second;
}

TensorElt GammaCtx::deltaMono(const TExps& e, int32_t uHi) const {
    TensorElt acc(0, mod_);
    acc.add(TPair{}, APoly::mono(cx_->dv, 0, 0, 1, mod_));
    for (int k = 0; k < kMaxT; ++k)
        if (e[k]) acc = tensorMul(acc, deltaPow(k + 1, e[k], uHi), uHi);
    return acc;
}

void GammaCtx::buildConj(int32_t k) const {
    const Derived& dv = cx_->dv;
    int32_t uHi = cx_->par.uTrunc;
    if (k == 1) {
        GammaElt c1(dv.tDeg(1), mod_);
        c1.add(texpsGen(1), APoly::mono(dv, 0, 0, mod_ - 1, mod_));
        conj_[1] = std::move(c1);
        hasConj_[1] = true;
        return;
    }
    // Antipode axiom: sum over Delta(t_k) of eta_R(coeff) c(l) r = 0;
    // the (t_k (x) 1)-term is the unknown.
    const TensorElt& d = deltaGen(k);
    GammaElt acc(dv.tDeg(k), mod_);
    TExps principal = texpsGen(k);
    for (auto& [pr, P] : d.terms()) {
        if (pr.l == principal && texpsIsOne(pr.r)) continue;
        if (pr.l[k - 1] != 0)
            throw Error("conj: coproduct has a non-principal t_k left leg");
        GammaElt term = mul(etaR(P, uHi), conjMono(pr.l, uHi), uHi);
        term = mul(term, normalMono(pr.r, 0, 0, 1, uHi), uHi);
        acc += term;
    }
    conj_[k] = acc.negated();
    hasConj_[k] = true;
}

const GammaElt& GammaCtx::conjGen(int32_t k) const {
    if (k < 1 || k > cx_->par.tBound)
        throw RangeError("conj(t_" + std::to_string(k) + ") outside range");
    if (!hasConj_[k]) {
        for (int32_t i = 1; i <= k; ++i)
            if (!hasConj_[i]) buildConj(i);
    }
    return conj_[k];
}

GammaElt GammaCtx::conjMono(const TExps& e, int32_t uHi) const {
    GammaElt acc(0, mod_);
    acc.add(texpsOne(), APoly::mono(cx_->dv, 0, 0, 1, mod_));
    for (int k = 0; k < kMaxT; ++k)
        if (e[k]) acc = mul(acc, pow(conjGen(k + 1), e[k], uHi), uHi);
    return acc;
}

GammaElt GammaCtx::conj(const GammaElt& x, int32_t uHi) const {
    GammaElt out(x.degree(), mod_);
    for (auto& [e, P] : x.terms())
        out += mul(etaR(P, uHi), conjMono(e, uHi), uHi);
    return out;
}

}  // namespace bkss
