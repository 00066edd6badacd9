#include <doctest.h>

#include <random>

#include "bkss/a_poly.hpp"

using namespace bkss;

namespace {

Context defaultCtx() { return Context(Params{}); }

APoly randomHomogeneous(const Context& cx, std::mt19937_64& rng) {
    const Derived& dv = cx.dv;
    // pick a degree of the form a0*|u| + b0*|v| and add a few terms in
    // the same degree class
    std::uniform_int_distribution<int32_t> ad(0, 12);
    std::uniform_int_distribution<int64_t> bd(-6, 6);
    std::uniform_int_distribution<int32_t> cd(1, cx.par.p - 1);
    int32_t a0 = ad(rng);
    int64_t b0 = bd(rng);
    APoly x = APoly::mono(dv, a0, b0, cd(rng), cx.par.p);
    for (int i = 0; i < 3; ++i) {
        // u^{a0+k|v|} v^{b0-k|u|} has the same degree
        int32_t k = std::uniform_int_distribution<int32_t>(0, 1)(rng);
        int32_t a = a0 + k * static_cast<int32_t>(dv.vDeg);
        if (a < cx.par.uTrunc)
            x += APoly::mono(dv, a, b0 - k * dv.uDeg, cd(rng), cx.par.p);
    }
    return x;
}

}  // namespace

TEST_CASE("monomial products and characteristic p") {
    Context cx = defaultCtx();
    const Derived& dv = cx.dv;
    URange r{0, cx.par.uTrunc};

    APoly u = APoly::mono(dv, 1, 0, 1, 3);
    APoly u2 = APoly::mono(dv, 2, 0, 1, 3);
    CHECK(aMul(u, u2, r, dv) == APoly::mono(dv, 3, 0, 1, 3));

    APoly v = APoly::mono(dv, 0, 1, 1, 3);
    APoly vPlusU = v;  // v + u is not homogeneous; use v + u^{40} v^{-12}
    vPlusU += APoly::mono(dv, 40, -12, 1, 3);
    APoly one = APoly::mono(dv, 0, 0, 1, 3);
    CHECK(aMul(vPlusU, one, r, dv) == vPlusU);

    CHECK(v.scaled(3).isZero());
    CHECK((v + v + v).isZero());
}

TEST_CASE("ring axioms on random homogeneous elements") {
    Context cx = defaultCtx();
    const Derived& dv = cx.dv;
    URange r{0, cx.par.uTrunc};
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 1000; ++iter) {
        APoly x = randomHomogeneous(cx, rng);
        APoly y = randomHomogeneous(cx, rng);
        APoly z = randomHomogeneous(cx, rng);
        CHECK(aMul(aMul(x, y, r, dv), z, r, dv) == aMul(x, aMul(y, z, r, dv), r, dv));
        CHECK(aMul(x, y, r, dv) == aMul(y, x, r, dv));
        if (y.degree() == z.degree())
            CHECK(aMul(x, y + z, r, dv) == aMul(x, y, r, dv) + aMul(x, z, r, dv));
    }
}

TEST_CASE("mixed coefficient modes are rejected") {
    Context cx = defaultCtx();
    const Derived& dv = cx.dv;
    URange r{0, cx.par.uTrunc};
    APoly x = APoly::mono(dv, 0, 1, 1, 3);
    APoly y = APoly::mono(dv, 0, 1, 1, 9);
    CHECK_THROWS_AS(aMul(x, y, r, dv), UsageError);
}

TEST_CASE("x-family") {
    Context cx = defaultCtx();
    const Derived& dv = cx.dv;

    CHECK(xFamily(cx, 0) == APoly::mono(dv, 0, 1, 1, 3));   // x_0 = v
    CHECK(xFamily(cx, 2) == APoly::mono(dv, 0, 9, 1, 3));   // x_2 = v^9
    CHECK(xFamily(cx, 3) == APoly::mono(dv, 0, 27, 1, 3));

    // x_4 = x_3^3 - u^80 v^55
    APoly x4 = xFamily(cx, 4);
    APoly expect = APoly::mono(dv, 0, 81, 1, 3);
    expect -= APoly::mono(dv, 80, 55, 1, 3);
    CHECK(x4 == expect);

    // x_i = v^{p^i} mod u, for all i in reach
    for (int i = 0; i <= 5; ++i) {
        APoly xi = xFamily(cx, i).truncated({0, 1});
        CHECK(xi == APoly::mono(dv, 0, dv.pPow(i), 1, 3));
    }
}
