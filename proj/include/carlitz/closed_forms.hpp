#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/dense_series.hpp"
#include "carlitz/series.hpp"

namespace carlitz {

// ---------------------------------------------------------------------------
// Generic formula builders. Each takes the variable assignment as series
// objects, so one implementation serves the full multivariate expansion, the
// (x, q)-specialized expansion, and the dense univariate fast paths
// (including dual-number runs for d/dq at q = 1). x = t^2 throughout.
// ---------------------------------------------------------------------------

// Small root of (yfac * a_unit) u^2 - b u + c = 0 via the 1 - sqrt(1 - 4w)
// branch; yfac carries the non-unit factor (so the division is exact).
template <class S>
S catalan_small_root(const S& a_unit, const S& yfac, const S& b, const S& c, const S& one) {
    S w = yfac * a_unit * c * (b * b).invert();
    S g = one - (one - 4 * w).sqrt();
    return g.divide_exact(yfac) * b * (2 * a_unit).invert();
}

// Section-2 kernel roots (p = q case). The kernel factors into the two
// sign-branches (1-u)(1-yu) -/+ sqrt(x) P_q(u); each branch is a quadratic
// A u^2 - B u + C whose finite branch is returned. (The paper's displayed
// root formulas do not satisfy the kernel as printed; these do by
// construction and reproduce the printed series.)
template <class S>
std::pair<S, S> sec2_roots(const S& t, const S& y, const S& q, const S& one) {
    auto root = [&](int sigma) {
        S a_unit = one - sigma * (t * (q - one));
        S b = (one + y) + sigma * (t * (2 * y - q * y - q));
        S c = one - sigma * (t * (q - one));
        return catalan_small_root(a_unit, y, b, c, one);
    };
    return {root(+1), root(-1)};
}

// Theorem of section 2: F(1;x,y,q,q).
template <class S>
S sec2_f1(const S& t, const S& y, const S& q, const S& one) {
    auto [up, um] = sec2_roots(t, y, q, one);
    S num = (up - one) * (um - one) * y * (y - one);
    S den = up * um * y * (y - 2) + (up + um) * y - 2 * y + one;
    return num.divide_exact(den);
}

// G^bt evaluated at a series point u0 (the gluing generating function is
// rational in u, so evaluation is a polynomial plug-in plus one inversion).
template <class S>
S sec3_gbt_at(const S& u0, const S& t, const S& y, const S& p, const S& q, const S& one) {
    S x = t * t;
    S omyu = one - y * u0;
    S num = x * y * omyu;
    S den = (one - p * q * x) * omyu * omyu -
            x * y * u0 * ((p + q) - y * u0 * (p + q - one));
    return num * den.invert();
}

// Root u' of the section-3 single-kernel equation.
template <class S>
S sec3_uprime(const S& t, const S& y, const S& p, const S& q, const S& one) {
    S x = t * t;
    S a_unit = one + p * (one - q) * x;
    S b = one + y - p * q * x - x * y * (one - p) * (one - q);
    S c = one + q * (one - p) * x;
    return catalan_small_root(a_unit, y, b, c, one);
}

// G^t(1;x,y,p,q). The first displayed term y(u'-1)/(yu'+q(1-yu')) divides two
// non-units; it is restated through the exact factorization
// u' - 1 = x (y + q - qy) W with W a unit, which the kernel equation forces.
template <class S>
S sec3_gt1(const S& t, const S& y, const S& p, const S& q, const S& one) {
    S x = t * t;
    S uprime = sec3_uprime(t, y, p, q, one);
    S w = (uprime - one).divide_exact(x * (y + q - q * y));
    S term1 = y * x * w * (one + x * y * (one - q) * w).invert();
    S omyu = one - y * uprime;
    S den2 = (one - p * q * x) * omyu * omyu - x * y * uprime * (p + q) * omyu -
             x * y * y * uprime * uprime;
    S term2 = x * y * y * uprime * (uprime - one) * den2.invert();
    return term1 + term2;
}

// Kernel of the G^t functional equation, cleared by (1-u)(1-yu).
template <class S>
S sec3_kq(const S& u0, const S& t, const S& y, const S& p, const S& q, const S& one) {
    S x = t * t;
    return (one - p * q * x) * (one - u0) * (one - y * u0) + q * x * (one - y * u0) -
           p * x * y * u0 * (one - u0) + x * y * u0;
}

// Numerator of the solved G^t functional equation, cleared by (1-u)(1-yu)^2.
// (Only q appears: the p-marks enter through the kernel.)
template <class S>
S sec3_gt_num(const S& u0, const S& gbt_at_u0, const S& gt1, const S& t, const S& y,
              const S& q, const S& one) {
    S x = t * t;
    S omu = one - u0;
    S omyu = one - y * u0;
    return x * y * omu * omyu + (x * y * y * u0 * u0 + q * x * y * u0 * omyu) * omu * gbt_at_u0 +
           (x * y * u0 + q * x * omyu) * omyu * gt1;
}

// G^t(u0;x,y,p,q) for a series point u0 (exact division by the kernel, whose
// t-valuation is 1 at the section-3 kernel roots).
template <class S>
S sec3_gt_at(const S& u0, const S& gt1, const S& t, const S& y, const S& p, const S& q,
             const S& one) {
    S gbt = sec3_gbt_at(u0, t, y, p, q, one);
    S num = sec3_gt_num(u0, gbt, gt1, t, y, q, one);
    S den = sec3_kq(u0, t, y, p, q, one) * (one - y * u0);
    return num.divide_exact(den);
}

// Section-3 kernel roots u± = 1 + ((p+q)x ± sqrt((p-q)^2 x^2 + 4x)) / (2(1-pqx)),
// the radical factored as t * sqrt(4 + (p-q)^2 t^2).
template <class S>
std::pair<S, S> sec3_kernel_roots(const S& t, const S& p, const S& q, const S& one) {
    S x = t * t;
    S rad = (one + (p - q) * (p - q) * x * Rational(1, 4)).sqrt();
    S s = t * (2 * rad);
    S inv2 = (2 * (one - p * q * x)).invert();
    return {one + ((p + q) * x + s) * inv2, one + ((p + q) * x - s) * inv2};
}

// G(1;x,y,p,q), the main section-3 theorem. The last displayed line is taken
// as G^t(1;x,y,p,q) + G^b(1;x,y,p,q): the printed argument order would make
// the two summands identical, which breaks the p<->q symmetry the class has
// and disagrees with enumeration; the functional equation forces this
// reading.
template <class S>
S sec3_g1(const S& t, const S& y, const S& p, const S& q, const S& one) {
    auto [up, um] = sec3_kernel_roots(t, p, q, one);
    S du = up - um;
    S gt1 = sec3_gt1(t, y, p, q, one);
    S gt1_sw = sec3_gt1(t, y, q, p, one);

    S iy_up = (one - y * up).invert();
    S iy_um = (one - y * um).invert();
    S omup = one - up;
    S omum = one - um;

    S l1 = y * (y - one) * omup * omum * iy_up * iy_um;

    S br2 = up * up * omup * sec3_gbt_at(up, t, y, p, q, one) * iy_up * iy_up -
            um * um * omum * sec3_gbt_at(um, t, y, p, q, one) * iy_um * iy_um;
    S l2 = y * y * omup * omum * br2.divide_exact(du);

    auto gt_both = [&](const S& u0) {
        S direct = sec3_gt_at(u0, gt1, t, y, p, q, one);
        S swapped = sec3_gt_at(u0, gt1_sw, t, y, q, p, one);
        return (one - p * (one - u0)) * direct + (one - q * (one - u0)) * swapped;
    };
    S br34 = y * um * iy_um * gt_both(um) - y * up * iy_up * gt_both(up);
    S l34 = omup * omum * br34.divide_exact(du);

    S l5 = y * omup * omum * iy_up * iy_um * (gt1 + gt1_sw);
    return l1 + l2 + l34 + l5;
}

// Printed corollary G(1;x,x,q,q) with the degree-8 polynomial A, verbatim
// (reading the x^4 display as q^4 + q^2 + 4q + 1).
template <class S>
S g1_xx_qq_direct(const S& t, const S& q, const S& one) {
    S x = t * t;
    auto xpow = [&](int k) {
        S r = one;
        for (int i = 0; i < k; ++i) r = r * x;
        return r;
    };
    S q2 = q * q;
    S qm1 = q - one;
    S qm1_2 = qm1 * qm1;

    S d1 = one - 3 * x + x * x + q2 * x * x - q2 * x - 2 * (q * x * x);
    S d2 = one + x + x * x + q2 * x * x - q2 * x - 2 * (q * x * x);

    S a = one - 3 * ((q2 + 1) * x) + q * (3 * (q * q2) + 10 * q - 2) * xpow(2) -
          (q2 + 1) * (q2 * q2 + 11 * q2 - 6 * q - 4) * xpow(3) +
          qm1 * (6 * (q * q2 * q2) + 17 * (q * q2) - 7 * q2 - 5 * q - 3) * xpow(4) -
          (q2 + 1) * (q2 * q2 + 11 * q2 - 6 * q - 4) * qm1_2 * xpow(5) +
          q * (3 * (q * q2) + 10 * q - 2) * qm1_2 * qm1_2 * xpow(6) -
          3 * ((q2 + 1) * (qm1_2 * qm1_2 * qm1_2)) * xpow(7) +
          qm1_2 * qm1_2 * qm1_2 * qm1_2 * xpow(8);

    S bn = q * q2 * x * x - q * q2 * x - 3 * (q2 * x * x) + q2 * x + 3 * (q * x * x) -
           q * x - x * x + q + x + one;

    S term1 = x * x * a * (d1 * d1 * d2 * d2).invert();
    S rad = (d1 * d2).sqrt();
    S term2 = xpow(4) * bn * bn * (d1 * d2 * rad).invert();
    return term1 - term2;
}

// Printed perimeter generating function for convex Carlitz polyominoes; the
// variable v marks ONE perimeter unit (coefficient of v^{2n} counts
// perimeter-2n polyominoes).
template <class S>
S convex_carlitz_gf_direct(const S& v, const S& one) {
    auto P = [&](std::initializer_list<long> cs) {
        S r = one * Rational(0);
        S vp = one;
        for (long c : cs) {
            if (c != 0) r = r + vp * Rational(c);
            vp = vp * v;
        }
        return r;
    };
    S num1 = P({1, 0, -3, 0, 0, 0, 4, 0, 3, 0, 4, 0, 0, 0, -3, 0, 1});
    S d1 = P({1, 0, -3, 0, 1});
    S d2 = P({1, 0, 1, 0, 1});
    S v4 = v * v * v * v;
    S term1 = v4 * num1 * (d1 * d1 * d2 * d2).invert();
    S b = P({-1, 0, -1, 0, 1});
    S rad = (d1 * d2).sqrt();
    S term2 = v4 * v4 * b * b * (d1 * d2 * rad).invert();
    return term1 - term2;
}

// Printed closed form of d/dq G(1;x,x,q,q) at q=1; z marks the half-perimeter.
template <class S>
S dq_g1_closed(const S& z, const S& one) {
    auto P = [&](std::initializer_list<long> cs) {
        S r = one * Rational(0);
        S zp = one;
        for (long c : cs) {
            if (c != 0) r = r + zp * Rational(c);
            zp = zp * z;
        }
        return r;
    };
    S i14 = P({1, -4}).invert();
    S i14_2 = i14 * i14;
    S term1 = 2 * (z * z * z * P({1, -5, 10, -12, 16}) * (i14 * i14_2));
    S rinv = P({1, -4}).sqrt().invert();
    S term2 = 4 * (z * z * z * z * P({-1, 0, 4}) * (i14_2 * rinv));
    return term1 + term2;
}

// Printed four-term perimeter form for column-convex Carlitz polyominoes
// (the section-2 equation); v marks one perimeter unit.
template <class S>
S cc_carlitz_gf_direct(const S& v, const S& one) {
    auto P = [&](std::initializer_list<long> cs) {
        S r = one * Rational(0);
        S vp = one;
        for (long c : cs) {
            if (c != 0) r = r + vp * Rational(c);
            vp = vp * v;
        }
        return r;
    };
    S den = 4 * P({-18, 0, 36, 0, -27, 0, 8});
    S r1 = P({1, -2, 1, -4, 4}).sqrt();   // 4v^4+v^2+1 - 2v(1+2v^2)
    S r2 = P({1, 2, 1, 4, 4}).sqrt();     // 4v^4+v^2+1 + 2v(1+2v^2)
    S e1 = P({1, 0, -1}) * P({-21, 0, 42, 0, -45, 0, 20});
    S e2 = P({1, -1}) * P({9, 0, -9, 2}) * P({1, 2, 1}) * r1;
    S e3 = P({1, 1}) * P({-9, 0, 9, 2}) * P({1, -2, 1}) * r2;
    S e4 = 3 * (P({1, 0, -2, 0, 1}) * (r1 * r2));
    return (e1 + e2 - e3 + e4).divide_exact(den);
}

// ---------------------------------------------------------------------------
// Multivariate evaluators with explicit truncation bookkeeping.
// ---------------------------------------------------------------------------

enum class GFTarget {
    F1_qq,
    F1_00,
    CC_CARLITZ_PERIM,
    GBT_U,
    GT_U,
    GT_1,
    G1_FULL,
    G1_XX_QQ,
    CONVEX_CARLITZ_PERIM,
    DQ_G1_AT_1,
    DQ_F1_AT_1,
    U_PLUS_MINUS_SEC2,
    U_PRIME_SEC3,
    U_PM_KERNEL_SEC3,
};

namespace detail_cf {

struct Ctx {
    Truncation tr;
    MultiSeries one, t, y, p, q, u;
};

// Per-variable caps deliberately exceed what the weight cap can let through:
// the weight cap is then the only binding constraint inside exact divisions,
// which keeps the dropped-quotient region an ideal.
inline Ctx make_ctx(int order, int guard, bool with_y, bool with_pq, bool with_u) {
    Truncation tr;
    int w = 2 * order + guard;
    tr[Var::t] = w;
    tr[Var::y] = with_y ? w / 2 + 2 : 0;
    tr[Var::p] = with_pq ? w / 2 + 3 : 0;
    tr[Var::q] = with_pq ? w + 3 : 0;
    tr[Var::u] = with_u ? order + 3 : 0;
    tr.weight_cap = w;
    Ctx c{tr,
          MultiSeries::constant(1, tr),
          MultiSeries::monomial(Var::t, 1, tr),
          with_y ? MultiSeries::monomial(Var::y, 1, tr) : MultiSeries(tr),
          with_pq ? MultiSeries::monomial(Var::p, 1, tr) : MultiSeries(tr),
          with_pq ? MultiSeries::monomial(Var::q, 1, tr) : MultiSeries(tr),
          with_u ? MultiSeries::monomial(Var::u, 1, tr) : MultiSeries(tr)};
    return c;
}

inline MultiSeries finish(MultiSeries s, int order) {
    Truncation tr = s.truncation();
    tr.weight_cap = 2 * order;
    return s.chopped(tr);
}

}  // namespace detail_cf

// Roots of the section-2 kernel, as series in (t, y) with polynomial
// q-coefficients; each satisfies K(u;x,y,q,q) = 0 to the stated order.
inline std::pair<MultiSeries, MultiSeries> roots_sec2(int order) {
    auto c = detail_cf::make_ctx(order, 6, true, true, false);
    auto [up, um] = sec2_roots(c.t, c.y, c.q, c.one);
    return {detail_cf::finish(up, order), detail_cf::finish(um, order)};
}

// F(1;x,y,q,q): series in (t, y, q), even in t.
inline MultiSeries f1_qq(int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    auto c = detail_cf::make_ctx(order, 6, true, true, false);
    return detail_cf::finish(sec2_f1(c.t, c.y, c.q, c.one), order);
}

// F(1;x,y,0,0) through the q = 0 root specialization v±.
inline MultiSeries f1_00(int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    auto c = detail_cf::make_ctx(order, 6, true, true, false);
    auto [up, um] = sec2_roots(c.t, c.y, c.q, c.one);
    MultiSeries vp = up.substitute(Var::q, Rational(0));
    MultiSeries vm = um.substitute(Var::q, Rational(0));
    MultiSeries num = (vp - 1) * (vm - 1) * c.y * (c.y - 1);
    MultiSeries den = vp * vm * c.y * (c.y - 2) + (vp + vm) * c.y - 2 * c.y + 1;
    return detail_cf::finish(num.divide_exact(den), order);
}

// G^bt(u;x,y,p,q) expanded in u (coefficient of u^{a-1} is the class with
// a-cell first column).
inline MultiSeries gbt_u(int order) {
    auto c = detail_cf::make_ctx(order, 2, true, true, true);
    MultiSeries x = c.t * c.t;
    MultiSeries omyu = c.one - c.y * c.u;
    MultiSeries num = x * c.y * omyu;
    MultiSeries den = (c.one - c.p * c.q * x) * omyu * omyu -
                      x * c.y * c.u * ((c.p + c.q) - c.y * c.u * (c.p + c.q - 1));
    return detail_cf::finish(num * den.invert(), order);
}

// G^t(1;x,y,p,q).
inline MultiSeries gt_1(int order) {
    auto c = detail_cf::make_ctx(order, 8, true, true, false);
    return detail_cf::finish(sec3_gt1(c.t, c.y, c.p, c.q, c.one), order);
}

// G^t(u;x,y,p,q) expanded in u.
inline MultiSeries gt_u(int order) {
    auto c = detail_cf::make_ctx(order, 8, true, true, true);
    MultiSeries gt1 = sec3_gt1(c.t, c.y, c.p, c.q, c.one);
    MultiSeries x = c.t * c.t;
    MultiSeries omyu = c.one - c.y * c.u;
    MultiSeries den_bt = (c.one - c.p * c.q * x) * omyu * omyu -
                         x * c.y * c.u * ((c.p + c.q) - c.y * c.u * (c.p + c.q - 1));
    MultiSeries gbt_ctx = (x * c.y * omyu) * den_bt.invert();
    MultiSeries num = sec3_gt_num(c.u, gbt_ctx, gt1, c.t, c.y, c.q, c.one);
    MultiSeries den = sec3_kq(c.u, c.t, c.y, c.p, c.q, c.one) * omyu;
    return detail_cf::finish(num * den.invert(), order);
}

// u' of section 3, as a series in (t, y) with polynomial (p, q) coefficients.
inline MultiSeries u_prime_sec3(int order) {
    auto c = detail_cf::make_ctx(order, 6, true, true, false);
    return detail_cf::finish(sec3_uprime(c.t, c.y, c.p, c.q, c.one), order);
}

// Section-3 kernel roots u±(x;p,q).
inline std::pair<MultiSeries, MultiSeries> kernel_roots_sec3(int order) {
    auto c = detail_cf::make_ctx(order, 4, true, true, false);
    auto [up, um] = sec3_kernel_roots(c.t, c.p, c.q, c.one);
    return {detail_cf::finish(up, order), detail_cf::finish(um, order)};
}

// G(1;x,y,p,q), the full statistics generating function for convex
// polyominoes.
inline MultiSeries g1_full(int order) {
    auto c = detail_cf::make_ctx(order, 10, true, true, false);
    return detail_cf::finish(sec3_g1(c.t, c.y, c.p, c.q, c.one), order);
}

// G(1;x,x,q,q) from the printed corollary closed form.
inline MultiSeries g1_xx_qq(int order) {
    auto c = detail_cf::make_ctx(order, 6, false, true, false);
    return detail_cf::finish(g1_xx_qq_direct(c.t, c.q, c.one), order);
}

// ---------------------------------------------------------------------------
// Univariate fast paths (dense, for the long perimeter runs).
// ---------------------------------------------------------------------------

// Column-convex Carlitz counts by half-perimeter n = 0..nmax, from the
// printed four-radical perimeter form.
inline std::vector<Integer> cc_carlitz_counts(int nmax) {
    int m = 2 * nmax + 2;
    RationalSeries v = RationalSeries::variable(m);
    RationalSeries one = RationalSeries::constant(Rational(1), m);
    RationalSeries gf = cc_carlitz_gf_direct(v, one);
    std::vector<Integer> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        const Rational& r = gf[2 * n];
        if (!is_integer(r)) throw std::logic_error("non-integer count coefficient");
        out[n] = r.get_num();
    }
    for (int k = 1; k <= std::min(2 * nmax + 1, gf.order()); k += 2)
        if (sgn(gf[k]) != 0) throw std::logic_error("odd perimeter coefficient nonzero");
    return out;
}

// F(1;x,x,c,c) as a dense series in t (x = t^2), over Rational or Dual
// coefficients. The q = 0 run must reproduce cc_carlitz_counts; the dual run
// at q = 1 + eps yields the level-sum derivative series.
template <class C>
DenseSeries<C> f1_xx_at_q(int nmax, const C& qval) {
    int m = 2 * nmax + 6;
    using S = DenseSeries<C>;
    S t = S::variable(m);
    S one = S::constant(C(1), m);
    S y = t * t;
    S q = S::constant(qval, m);
    return sec2_f1(t, y, q, one);
}

// G(1;x,x,c,c) as a dense series in t, through the full section-3 pipeline.
template <class C>
DenseSeries<C> g1_xx_at_q(int nmax, const C& qval) {
    int m = 2 * nmax + 18;
    using S = DenseSeries<C>;
    S t = S::variable(m);
    S one = S::constant(C(1), m);
    S y = t * t;
    S q = S::constant(qval, m);
    return sec3_g1(t, y, q, q, one);
}

// Convex Carlitz counts by half-perimeter, from the printed corollary form.
inline std::vector<Integer> convex_carlitz_counts(int nmax) {
    int m = 2 * nmax + 2;
    RationalSeries v = RationalSeries::variable(m);
    RationalSeries one = RationalSeries::constant(Rational(1), m);
    RationalSeries gf = convex_carlitz_gf_direct(v, one);
    std::vector<Integer> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        const Rational& r = gf[2 * n];
        if (!is_integer(r)) throw std::logic_error("non-integer count coefficient");
        out[n] = r.get_num();
    }
    for (int k = 1; k <= std::min(2 * nmax + 1, gf.order()); k += 2)
        if (sgn(gf[k]) != 0) throw std::logic_error("odd perimeter coefficient nonzero");
    return out;
}

// Coefficients of d/dq G(1;x,x,q,q)|_{q=1} by half-perimeter (total B+U over
// convex polyominoes), from the printed closed form.
inline std::vector<Integer> dq_g1_coefficients(int nmax) {
    RationalSeries z = RationalSeries::variable(nmax);
    RationalSeries one = RationalSeries::constant(Rational(1), nmax);
    RationalSeries s = dq_g1_closed(z, one);
    std::vector<Integer> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        if (!is_integer(s[n])) throw std::logic_error("non-integer level-sum coefficient");
        out[n] = s[n].get_num();
    }
    return out;
}

// Total B+U over column-convex polyominoes by half-perimeter, via the dual
// run of the section-2 pipeline (no closed form is printed for this one).
inline std::vector<Integer> dq_f1_coefficients(int nmax) {
    DualSeries s = f1_xx_at_q<Dual>(nmax, Dual(Rational(1), Rational(1)));
    std::vector<Integer> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        const Dual& d = s[2 * n];
        if (!is_integer(d.b)) throw std::logic_error("non-integer level-sum coefficient");
        out[n] = d.b.get_num();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Remaining multivariate evaluators built on the pieces above.
// ---------------------------------------------------------------------------

// Column-convex Carlitz perimeter GF as a MultiSeries in t (coefficient of
// t^{2n} counts perimeter-2n polyominoes).
inline MultiSeries cc_carlitz_perimeter_gf(int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    int m = 2 * order;
    RationalSeries v = RationalSeries::variable(m + 2);
    RationalSeries one = RationalSeries::constant(Rational(1), m + 2);
    RationalSeries gf = cc_carlitz_gf_direct(v, one);
    Truncation tr;
    tr[Var::t] = m;
    tr.weight_cap = m;
    MultiSeries out(tr);
    for (int k = 0; k <= m; ++k) out.add_term(exps(k), gf[k]);
    return out;
}

// Convex Carlitz perimeter GF as a MultiSeries in t. This one is indexed in
// unit-perimeter marks like the printed form: the coefficient of t^{2n}
// counts perimeter-2n polyominoes, and `order` bounds the printed power.
inline MultiSeries convex_carlitz_perimeter_gf(int order) {
    RationalSeries v = RationalSeries::variable(order + 2);
    RationalSeries one = RationalSeries::constant(Rational(1), order + 2);
    RationalSeries gf = convex_carlitz_gf_direct(v, one);
    Truncation tr;
    tr[Var::t] = order;
    tr.weight_cap = order;
    MultiSeries out(tr);
    for (int k = 0; k <= order; ++k) out.add_term(exps(k), gf[k]);
    return out;
}

// d/dq G(1;x,x,q,q)|_{q=1} as a MultiSeries in t (coefficient of t^{2n} is
// the half-perimeter-n value).
inline MultiSeries dq_g1_at_1(int order) {
    std::vector<Integer> c = dq_g1_coefficients(order);
    Truncation tr;
    tr[Var::t] = 2 * order;
    tr.weight_cap = 2 * order;
    MultiSeries out(tr);
    for (int n = 0; n <= order; ++n) out.add_term(exps(2 * n), Rational(c[n]));
    return out;
}

// d/dq F(1;x,x,q,q)|_{q=1} via dual_derivative_at_one on F(1;x,y,q,q), then
// y = x. (The dense dual route must agree; tests pin both.)
inline MultiSeries dq_f1_at_1(int order) {
    MultiSeries f1 = f1_qq(order);
    MultiSeries deriv = f1.dual_derivative_at_one(Var::q).second;
    return deriv.substitute(Var::y,
                            MultiSeries::monomial(Var::t, 2, deriv.truncation()));
}

inline const char* target_name(GFTarget t) {
    switch (t) {
        case GFTarget::F1_qq: return "f1-qq";
        case GFTarget::F1_00: return "f1-00";
        case GFTarget::CC_CARLITZ_PERIM: return "cc-carlitz-perim";
        case GFTarget::GBT_U: return "gbt-u";
        case GFTarget::GT_U: return "gt-u";
        case GFTarget::GT_1: return "gt-1";
        case GFTarget::G1_FULL: return "g1-full";
        case GFTarget::G1_XX_QQ: return "g1-xx-qq";
        case GFTarget::CONVEX_CARLITZ_PERIM: return "convex-carlitz-perim";
        case GFTarget::DQ_G1_AT_1: return "dq-g1";
        case GFTarget::DQ_F1_AT_1: return "dq-f1";
        case GFTarget::U_PLUS_MINUS_SEC2: return "u-pm-sec2";
        case GFTarget::U_PRIME_SEC3: return "u-prime-sec3";
        case GFTarget::U_PM_KERNEL_SEC3: return "u-pm-kernel-sec3";
    }
    return "?";
}

}  // namespace carlitz
