#include <doctest.h>

#include <random>

#include "bkss/gamma.hpp"

using namespace bkss;

namespace {

struct Fix {
    Context cx;
    GammaCtx g;
    Fix() : cx(Params{}), g(cx) {}
    int32_t full() const { return cx.par.uTrunc; }
};

}  // namespace

TEST_CASE("eta_R on generators") {
    Fix f;
    const Derived& dv = f.cx.dv;

    // eta_R(u) = u: u is a pure coefficient, nothing to check beyond
    // eta_R of u-multiples staying put.
    APoly u = APoly::mono(dv, 1, 0, 1, 3);
    GammaElt eu = f.g.etaR(u, f.full());
    CHECK(eu.size() == 1);
    CHECK(eu.coeff(texpsOne()) == u);

    // eta_R(v) = v + u t_1^{27} - u^3 t_1
    GammaElt ev = f.g.etaR(APoly::mono(dv, 0, 1, 1, 3), f.full());
    CHECK(ev.coeff(texpsOne()) == APoly::mono(dv, 0, 1, 1, 3));
    CHECK(ev.coeff(texpsGen(1, 27)) == APoly::mono(dv, 1, 0, 1, 3));
    CHECK(ev.coeff(texpsGen(1)) == APoly::mono(dv, 3, 0, 2, 3));
    CHECK(ev.size() == 3);

    // eta_R(v^2) mod u^2 = v^2 + 2 u v t_1^27
    GammaElt ev2 = f.g.etaR(APoly::mono(dv, 0, 2, 1, 3), 2);
    CHECK(ev2.coeff(texpsOne()) == APoly::mono(dv, 0, 2, 1, 3));
    CHECK(ev2.coeff(texpsGen(1, 27)) == APoly::mono(dv, 1, 1, 2, 3));
    CHECK(ev2.size() == 2);

    // eta_R is a ring map: eta_R(v^a v^b) = eta_R(v^a) eta_R(v^b)
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        int64_t a = std::uniform_int_distribution<int64_t>(-5, 5)(rng);
        int64_t b = std::uniform_int_distribution<int64_t>(-5, 5)(rng);
        GammaElt lhs = f.g.etaRvPow(a + b, 12);
        GammaElt rhs = f.g.mul(f.g.etaRvPow(a, 12), f.g.etaRvPow(b, 12), 12);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("normal form rewriting") {
    Fix f;
    const Derived& dv = f.cx.dv;

    // t_1^2 is already normal
    GammaElt t12 = f.g.normalOne(texpsGen(1, 2), f.full());
    CHECK(t12.size() == 1);
    CHECK(t12.coeff(texpsGen(1, 2)) == APoly::mono(dv, 0, 0, 1, 3));

    // mod u: t_1^{p^n} = v^{p-1} t_1
    GammaElt r = f.g.normalOne(texpsGen(1, 81), 1);
    CHECK(r.size() == 1);
    CHECK(r.coeff(texpsGen(1)) == APoly::mono(dv, 0, 2, 1, 3));

    // over A: t_1^{81} = v^{-1}(t_1 eta_R(v^3) + u^9 t_2 - u t_2^{27})
    GammaElt full = f.g.normalOne(texpsGen(1, 81), f.full());
    GammaElt expect = f.g.mulCoeff(
        f.g.mul(f.g.normalOne(texpsGen(1), f.full()), f.g.etaRvPow(3, f.full()), f.full()),
        APoly::mono(dv, 0, -1, 1, 3), f.full());
    GammaElt t2term(f.cx.dv.tDeg(1) * 81, 3);
    t2term.add(texpsGen(2), APoly::mono(dv, 9, -1, 1, 3));
    t2term.add(texpsGen(2, 27), APoly::mono(dv, 1, -1, 2, 3));
    expect += t2term;
    CHECK(full == expect);

    // rewriting a normal form is the identity, and the rewriting is
    // degree-preserving, on random raw monomials
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        TExps e{};
        e[0] = std::uniform_int_distribution<uint32_t>(0, 200)(rng);
        e[1] = std::uniform_int_distribution<uint32_t>(0, 120)(rng);
        e[2] = std::uniform_int_distribution<uint32_t>(0, 80)(rng);
        e[3] = std::uniform_int_distribution<uint32_t>(0, 50)(rng);
        GammaElt nf = f.g.normalOne(e, 40);
        int64_t deg = f.g.weight(e);
        CHECK(nf.degree() == deg);
        for (auto& [m, c] : nf.terms()) {
            for (int i = 0; i < kMaxT; ++i) CHECK(m[i] < 81);
            CHECK(c.degree() + f.g.weight(m) == deg);
            // idempotence on each normal monomial
            GammaElt again = f.g.normalOne(m, 40);
            CHECK(again.size() == 1);
            CHECK(again.coeff(m) == APoly::mono(dv, 0, 0, 1, 3));
        }
    }
}

TEST_CASE("coproduct of the generators") {
    Fix f;
    const Derived& dv = f.cx.dv;

    // Delta(t_1) = t_1 (x) 1 + 1 (x) t_1
    const TensorElt& d1 = f.g.deltaGen(1);
    CHECK(d1.terms().size() == 2);
    CHECK(d1.terms().count(TPair{texpsGen(1), texpsOne()}) == 1);
    CHECK(d1.terms().count(TPair{texpsOne(), texpsGen(1)}) == 1);

    // Delta(t_2) = t_2 (x) 1 + t_1 (x) t_1^p + 1 (x) t_2
    const TensorElt& d2 = f.g.deltaGen(2);
    CHECK(d2.terms().size() == 3);
    CHECK(d2.terms().count(TPair{texpsGen(1), texpsGen(1, 3)}) == 1);

    // Delta(t_4) = sum t_i (x) t_{4-i}^{3^i} - u * b_2
    const TensorElt& d4 = f.g.deltaGen(4);
    CHECK(d4.terms().size() == 5 + 2);
    auto it = d4.terms().find(TPair{texpsGen(1, 9), texpsGen(1, 18)});
    REQUIRE(it != d4.terms().end());
    // (1/3)C(3,1) = 1, so the coefficient is -u
    CHECK(it->second == APoly::mono(dv, 1, 0, 2, 3));
}

TEST_CASE("counit and coassociativity on generators") {
    Fix f;
    // (eps (x) 1) Delta(t_k) = t_k = (1 (x) eps) Delta(t_k): collect the
    // trivial-leg terms of Delta(t_k).
    for (int k = 1; k <= 5; ++k) {
        if (k > 4) break;  // k = 5 until the FGL engine installs it
        const TensorElt& d = f.g.deltaGen(k);
        GammaElt left(d.degree(), 3), right(d.degree(), 3);
        for (auto& [pr, c] : d.terms()) {
            if (texpsIsOne(pr.l)) right += f.g.mulCoeff(f.g.normalOne(pr.r, f.full()), c, f.full());
            if (texpsIsOne(pr.r)) left += f.g.mulCoeff(f.g.normalOne(pr.l, f.full()), c, f.full());
        }
        GammaElt tk = f.g.normalOne(texpsGen(k), f.full());
        CHECK(left == tk);
        CHECK(right == tk);
    }
}

TEST_CASE("conjugation") {
    Fix f;
    const Derived& dv = f.cx.dv;

    // c(1) = 1
    GammaElt one = f.g.conjMono(texpsOne(), f.full());
    CHECK(one.size() == 1);

    // c(t_1) = -t_1
    const GammaElt& c1 = f.g.conjGen(1);
    CHECK(c1.size() == 1);
    CHECK(c1.coeff(texpsGen(1)) == APoly::mono(dv, 0, 0, 2, 3));

    // antipode axiom mu (c (x) 1) Delta(t_k) = 0 for k = 2..4
    for (int k = 2; k <= 4; ++k) {
        const TensorElt& d = f.g.deltaGen(k);
        GammaElt acc(d.degree(), 3);
        for (auto& [pr, P] : d.terms()) {
            GammaElt t = f.g.mul(f.g.etaR(P, f.full()), f.g.conjMono(pr.l, f.full()), f.full());
            t = f.g.mul(t, f.g.normalOne(pr.r, f.full()), f.full());
            acc += t;
        }
        CHECK(acc.isZero());
    }
}
