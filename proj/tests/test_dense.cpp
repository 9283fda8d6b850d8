#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "carlitz/dense_series.hpp"
#include "carlitz/series.hpp"

using namespace carlitz;

namespace {

RationalSeries random_dense(std::mt19937& rng, int order, bool unit) {
    RationalSeries s(order);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int i = 0; i <= order; ++i) s.at(i) = make_rational(num(rng), den(rng));
    if (unit) s.at(0) = 1;
    return s;
}

}  // namespace

TEST_CASE("dense matches sparse on univariate work") {
    std::mt19937 rng(101);
    const int n = 12;
    Truncation tr;
    tr[Var::t] = n;
    tr.weight_cap = n;
    for (int rep = 0; rep < 25; ++rep) {
        RationalSeries a = random_dense(rng, n, true);
        RationalSeries b = random_dense(rng, n, false);
        MultiSeries am(tr), bm(tr);
        for (int i = 0; i <= n; ++i) {
            am.add_term(exps(i), a[i]);
            bm.add_term(exps(i), b[i]);
        }
        RationalSeries prod = a * b;
        MultiSeries prodm = am * bm;
        RationalSeries inv = a.invert();
        MultiSeries invm = am.invert();
        for (int i = 0; i <= n; ++i) {
            CHECK(prod[i] == prodm.coefficient(exps(i)));
            CHECK(inv[i] == invm.coefficient(exps(i)));
        }
    }
}

TEST_CASE("dense invert and sqrt round-trip") {
    std::mt19937 rng(103);
    const int n = 40;
    for (int rep = 0; rep < 10; ++rep) {
        RationalSeries a = random_dense(rng, n, true);
        RationalSeries prod = a * a.invert();
        CHECK(prod[0] == 1);
        for (int i = 1; i <= n; ++i) CHECK(sgn(prod[i]) == 0);
        RationalSeries r = a.sqrt();
        RationalSeries sq = r * r;
        for (int i = 0; i <= n; ++i) CHECK(sq[i] == a[i]);
    }
}

TEST_CASE("dense exact division shifts valuations") {
    const int n = 10;
    RationalSeries t = RationalSeries::variable(n);
    RationalSeries one = RationalSeries::constant(Rational(1), n);
    RationalSeries f = (t * t) * (one + 3 * t);
    RationalSeries q = f.divide_exact(t * t);
    CHECK(q[0] == 1);
    CHECK(q[1] == 3);
    CHECK(q.order() == n - 2);
    CHECK_THROWS_AS((one + t).divide_exact(t), std::domain_error);
}

TEST_CASE("dual numbers implement the product rule") {
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int rep = 0; rep < 200; ++rep) {
        Dual a{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
        Dual b{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
        Dual p = a * b;
        CHECK(p.a == a.a * b.a);
        CHECK(p.b == a.a * b.b + a.b * b.a);
        if (sgn(a.a) != 0) {
            Dual i = coeff_inverse(a);
            Dual unit = a * i;
            CHECK(unit.a == 1);
            CHECK(sgn(unit.b) == 0);
        }
    }
    // sqrt consistency: d/dq sqrt(q)|_{q=9} = 1/6
    Dual s = coeff_sqrt(Dual{Rational(9), Rational(1)});
    CHECK(s.a == 3);
    CHECK(s.b == Rational(1, 6));
}

TEST_CASE("dual dense run differentiates a known series") {
    // f(t, q) = 1/(1 - q t): d/dq at q=1 has coefficient n t^n
    const int n = 12;
    DualSeries t = DualSeries::variable(n);
    DualSeries one = DualSeries::constant(Dual(Rational(1)), n);
    DualSeries q = DualSeries::constant(Dual(Rational(1), Rational(1)), n);
    DualSeries f = (one - q * t).invert();
    for (int i = 0; i <= n; ++i) {
        CHECK(f[i].a == 1);
        CHECK(f[i].b == i);
    }
}
