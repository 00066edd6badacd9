#include "bkss/params.hpp"

#include <sstream>

namespace bkss {

std::string toString(CoeffMode m) {
    switch (m) {
        case CoeffMode::ModP: return "mod-p";
        case CoeffMode::ModP2: return "mod-p2";
        case CoeffMode::PLocalWindow: return "p-local-window";
    }
    return "?";
}

static bool isPrime(int64_t x) {
    if (x < 2) return false;
    for (int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

void Params::validate() const {
    if (p < 3 || !isPrime(p)) throw UsageError("p must be an odd prime >= 3");
    if (n <= 1) throw UsageError("height n must be > 1");
    if (degMin > 0 || degMax < 0) throw UsageError("degree window must contain 0");
    if (uTrunc < 1) throw UsageError("uTrunc must be >= 1");
    if (tBound < n) throw UsageError("tBound must be >= n");
    if (tBound > 6) throw UsageError("tBound > 6 is not supported");
    if (sMax < 1 || sMax > 3) throw UsageError("sMax must be in 1..3");
    if (weightCap < 0 || uDivCap < 0) throw UsageError("caps must be >= 0");
}

uint64_t Params::fingerprint() const {
    // FNV-1a over the describing string; stable across runs.
    std::string s = describe();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Params::describe() const {
    std::ostringstream os;
    os << "p=" << p << ";n=" << n << ";degMin=" << degMin << ";degMax=" << degMax
       << ";uTrunc=" << uTrunc << ";tBound=" << tBound << ";sMax=" << sMax
       << ";mode=" << toString(mode) << ";weightCap=" << weightCap
       << ";uDivCap=" << uDivCap;
    return os.str();
}

int64_t Derived::ipow(int64_t b, int32_t e) {
    int64_t r = 1;
    for (int32_t i = 0; i < e; ++i) r *= b;
    return r;
}

Derived::Derived(const Params& par) : p(par.p), n(par.n) {
    uDeg = ipow(p, n - 1) - 1;
    vDeg = ipow(p, n) - 1;
    pn = ipow(p, n);
    // Default weight cap: enough to hold the Massey representatives of
    // the degree-2 generators (k_{n-1} needs (p+2)(p^n-1)/..; in
    // practice a little over 5 |v| at p=3, n=4) plus solver slack.
    weightCap = par.weightCap > 0 ? par.weightCap
                                  : static_cast<int32_t>(5 * vDeg + uDeg + 14);
    uDivCap = par.uDivCap > 0 ? par.uDivCap : par.uTrunc;

    aTable_.push_back(1);  // a_0
    // a_i grows geometrically; tabulate until it clears every window
    // the drivers can reach.
    int64_t cap = 8 * static_cast<int64_t>(par.uTrunc) + 64;
    for (int32_t i = 1;; ++i) {
        int64_t ai = p * aTable_.back();
        if (i > 1 && rep(i) == 1) ai += p - 1;
        aTable_.push_back(ai);
        if (ai > cap) {
            iMax_ = i;
            break;
        }
    }
}

int64_t Derived::tDeg(int32_t k) const { return ipow(p, k) - 1; }

int64_t Derived::pPow(int32_t k) const { return ipow(p, k); }

int64_t Derived::e(int32_t i) const {
    if (i < 0) throw UsageError("e(i): i must be >= 0");
    return (ipow(p, i) - 1) / (p - 1);
}

int32_t Derived::rep(int32_t i) const {
    int32_t m = n - 1;
    int32_t r = i % m;
    if (r < 0) r += m;
    return r;
}

int64_t Derived::a(int32_t i) const {
    if (i < 0) throw UsageError("a_i: i must be >= 0");
    if (i >= static_cast<int32_t>(aTable_.size())) {
        int64_t ai = aTable_.back();
        for (int32_t k = static_cast<int32_t>(aTable_.size()); k <= i; ++k) {
            ai *= p;
            if (k > 1 && rep(k) == 1) ai += p - 1;
        }
        return ai;
    }
    return aTable_[i];
}

int64_t Derived::bExp(int32_t i) const {
    if (i <= 1 || rep(i) != 1)
        throw UsageError("bExp: defined for i = k(n-1)+1, i > 1");
    int32_t k = (i - 1) / (n - 1);
    return (ipow(p, n) - 1) * (ipow(p, k * (n - 1)) - 1) / (ipow(p, n - 1) - 1);
}

}  // namespace bkss
