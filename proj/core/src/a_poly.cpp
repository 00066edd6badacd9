#include "bkss/a_poly.hpp"

#include <sstream>

namespace bkss {

APoly APoly::mono(const Derived& dv, int32_t a, int64_t b, int32_t c, int32_t mod) {
    APoly r(a * dv.uDeg + b * dv.vDeg, mod);
    r.addTerm(a, modNorm(c, mod));
    return r;
}

int64_t APoly::vExp(const Derived& dv, int32_t a) const {
    int64_t num = deg_ - a * dv.uDeg;
    if (num % dv.vDeg != 0) throw UsageError("APoly: non-integral v-exponent");
    return num / dv.vDeg;
}

int32_t APoly::coeff(int32_t a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

int32_t APoly::uValuation() const {
    if (terms_.empty()) throw UsageError("uValuation of zero");
    return terms_.begin()->first;
}

void APoly::addTerm(int32_t a, int32_t c) {
    c = modNorm(c, mod_);
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
        it->second = modAdd(it->second, c, mod_);
        if (it->second == 0) terms_.erase(it);
    }
}

APoly& APoly::operator+=(const APoly& o) {
    if (o.isZero()) return *this;
    if (isZero()) { *this = o; return *this; }
    if (mod_ != o.mod_) throw UsageError("APoly: mixed coefficient modes");
    if (deg_ != o.deg_) throw UsageError("APoly: mixed degrees in sum");
    for (auto& [a, c] : o.terms_) addTerm(a, c);
    return *this;
}

APoly& APoly::operator-=(const APoly& o) { return *this += o.negated(); }

APoly APoly::scaled(int32_t c) const {
    c = modNorm(c, mod_);
    APoly r(deg_, mod_);
    if (c == 0) return r;
    for (auto& [a, x] : terms_) r.addTerm(a, modMul(x, c, mod_));
    return r;
}

APoly APoly::truncated(const URange& r) const {
    APoly out(deg_, mod_);
    for (auto& [a, c] : terms_)
        if (r.contains(a)) out.addTerm(a, c);
    return out;
}

APoly APoly::vShifted(int64_t k, const Derived& dv) const {
    APoly out(deg_ + k * dv.vDeg, mod_);
    for (auto& [a, c] : terms_) out.addTerm(a, c);
    return out;
}

APoly APoly::uShifted(int32_t k, const Derived& dv) const {
    APoly out(deg_ + k * dv.uDeg, mod_);
    for (auto& [a, c] : terms_) out.addTerm(a + k, c);
    return out;
}

APoly APoly::reducedModP(int32_t p) const {
    APoly out(deg_, p);
    for (auto& [a, c] : terms_) out.addTerm(a, modNorm(c, p));
    return out;
}

std::string APoly::str(const Derived& dv) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (a != 0) os << "*u^" << a;
        int64_t b = vExp(dv, a);
        if (b != 0) os << "*v^" << b;
    }
    return os.str();
}

APoly aMul(const APoly& x, const APoly& y, const URange& r, const Derived&) {
    if (x.mod() != y.mod()) throw UsageError("aMul: mixed coefficient modes");
    APoly out(x.degree() + y.degree(), x.mod());
    for (auto& [a1, c1] : x.terms())
        for (auto& [a2, c2] : y.terms()) {
            int32_t a = a1 + a2;
            if (!r.contains(a)) continue;
            out.addTerm(a, modMul(c1, c2, x.mod()));
        }
    return out;
}

APoly aPow(const APoly& x, int64_t e, const URange& r, const Derived& dv) {
    if (e < 0) throw UsageError("aPow: negative exponent");
    APoly acc = APoly::mono(dv, 0, 0, 1, x.mod());
    APoly base = x;
    while (e > 0) {
        if (e & 1) acc = aMul(acc, base, r, dv);
        base = aMul(base, base, r, dv);
        e >>= 1;
    }
    return acc;
}

APoly xFamily(const Context& cx, int32_t i) {
    const Derived& dv = cx.dv;
    if (i < 0) throw UsageError("xFamily: i must be >= 0");
    if (i > dv.iMax() + 1) throw RangeError("xFamily: index out of window reach");
    URange r{0, cx.par.uTrunc};
    APoly x = APoly::mono(dv, 0, 1, 1, cx.mod());  // x_0 = v
    for (int32_t k = 1; k <= i; ++k) {
        x = aPow(x, dv.p, r, dv);
        if (k > 1 && dv.rep(k) == 1) {
            int64_t b = dv.bExp(k);
            if (b < cx.par.uTrunc) {
                int64_t ve = dv.pPow(k) - dv.pPow(k - 1) + 1;
                x -= APoly::mono(dv, static_cast<int32_t>(b), ve, 1, cx.mod());
            }
        }
    }
    return x;
}

}  // namespace bkss
