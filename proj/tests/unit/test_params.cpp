#include <doctest.h>

#include "bkss/params.hpp"

using namespace bkss;

static Context defaultCtx() {
    Params par;
    return Context(par);
}

TEST_CASE("derived constants at p=3, n=4") {
    Context cx = defaultCtx();
    const Derived& dv = cx.dv;

    CHECK(dv.uDeg == 26);
    CHECK(dv.vDeg == 80);
    CHECK(dv.pn == 81);
    CHECK(dv.tDeg(1) == 2);
    CHECK(dv.tDeg(5) == 242);

    CHECK(dv.e(0) == 0);
    CHECK(dv.e(1) == 1);
    CHECK(dv.e(2) == 4);
    CHECK(dv.e(3) == 13);

    CHECK(dv.rep(0) == 0);
    CHECK(dv.rep(1) == 1);
    CHECK(dv.rep(3) == 0);
    CHECK(dv.rep(4) == 1);

    // a_0..a_4 = 1, 3, 9, 27, 83
    CHECK(dv.a(0) == 1);
    CHECK(dv.a(1) == 3);
    CHECK(dv.a(2) == 9);
    CHECK(dv.a(3) == 27);
    CHECK(dv.a(4) == 83);
    // independent re-evaluation of the recursion
    int64_t ai = 1;
    for (int i = 1; i <= 7; ++i) {
        ai *= 3;
        if (i > 1 && dv.rep(i) == 1) ai += 2;
        CHECK(dv.a(i) == ai);
        CHECK(dv.a(i) > dv.a(i - 1));
    }

    CHECK(dv.bExp(4) == 80);  // (p^4-1)(p^3-1)/(p^3-1)
    CHECK(dv.bExp(7) == 80 * 28);
}

TEST_CASE("parameter validation") {
    Params par;
    par.p = 4;
    CHECK_THROWS_AS(par.validate(), UsageError);
    par = Params{};
    par.tBound = 3;
    CHECK_THROWS_AS(par.validate(), UsageError);
    par = Params{};
    par.degMin = 10;
    CHECK_THROWS_AS(par.validate(), UsageError);
    par = Params{};
    CHECK_NOTHROW(par.validate());
}

TEST_CASE("fingerprint distinguishes contexts") {
    Params a, b;
    b.p = 5;
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(a.fingerprint() == Params{}.fingerprint());
}
