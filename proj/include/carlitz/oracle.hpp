#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "carlitz/polyomino.hpp"
#include "carlitz/series.hpp"

namespace carlitz {

// Dynamic-programming iteration of the column-decomposition recurrences,
// graded by column count m. Entry (a, m) holds the generating polynomial in
// (y, p, q) of the m-column members whose first column has a cells; the
// factor x^m is implicit. Every right-hand term of the recurrences appends
// one column, so layer m depends only on layer m-1 and the iteration is
// exact, including the self-referential s = a terms.
enum class Family { F, G_bt, G_t, G_b, G };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G_bt: return "G^bt";
        case Family::G_t: return "G^t";
        case Family::G_b: return "G^b";
        case Family::G: return "G";
    }
    return "?";
}

// Test hooks: deliberately wrong gluing weights for negative controls.
enum class OracleMutation {
    none,
    mislabel_bottom_levels,  // bottom-aligned gluings marked as top levels
    bump_inside_weight,      // strictly-inside multiplicity a-1-s off by one
};

struct ColumnIndexedGF {
    Family family = Family::F;
    int bound = 0;
    std::map<std::pair<int, int>, MultiSeries> entries;  // (a, m) -> poly(y,p,q)

    const MultiSeries* find(int a, int m) const {
        auto it = entries.find({a, m});
        return it == entries.end() ? nullptr : &it->second;
    }
};

namespace detail_oracle {

inline Truncation oracle_trunc(int n) {
    Truncation tr;
    tr[Var::y] = n - 1;
    tr[Var::p] = n;
    tr[Var::q] = n;
    return tr;
}

struct WeightBuilder {
    Truncation tr;
    MultiSeries w;
    explicit WeightBuilder(const Truncation& t) : tr(t), w(t) {}
    WeightBuilder& add(int ye, int pe, int qe, long c) {
        w.add_term(exps(0, ye, pe, qe), Rational(c));
        return *this;
    }
};

}  // namespace detail_oracle

// Column-convex family: the five-case first-column gluing recurrence.
//   F_a = x y^a + sum_{s<a} (a-1-s+p+q) x y^{a-s} F_s + pq x F_a
//       + 2 sum_{s=2..a} x (y^{a+1-s}+...+y^{a-1}) F_s
//       + sum_{s>a} x (2(y+...+y^{a-1}) + p + q) F_s
//       + sum_{s>=a+2} (s-1-a) x F_s
inline MultiSeries f_gluing_weight(int a, int s, const Truncation& tr,
                                   OracleMutation mut = OracleMutation::none) {
    detail_oracle::WeightBuilder b(tr);
    if (s < a) {
        long inside = a - 1 - s;
        if (mut == OracleMutation::bump_inside_weight) ++inside;
        b.add(a - s, 0, 0, inside);
        if (mut == OracleMutation::mislabel_bottom_levels)
            b.add(a - s, 0, 1, 2);
        else
            b.add(a - s, 1, 0, 1).add(a - s, 0, 1, 1);
        if (s >= 2)
            for (int j = a + 1 - s; j <= a - 1; ++j) b.add(j, 0, 0, 2);
    } else if (s == a) {
        b.add(0, 1, 1, 1);
        for (int j = 1; j <= a - 1; ++j) b.add(j, 0, 0, 2);
    } else {
        for (int j = 1; j <= a - 1; ++j) b.add(j, 0, 0, 2);
        b.add(0, 1, 0, 1).add(0, 0, 1, 1);
        if (s >= a + 2) b.add(0, 0, 0, s - 1 - a);
    }
    return b.w;
}

inline ColumnIndexedGF run_F(int n, OracleMutation mut = OracleMutation::none) {
    if (n < 2) throw std::invalid_argument("oracle bound must be >= 2");
    Truncation tr = detail_oracle::oracle_trunc(n);
    ColumnIndexedGF out;
    out.family = Family::F;
    out.bound = n;
    for (int a = 1; a <= n - 1; ++a)
        out.entries.emplace(std::pair{a, 1}, MultiSeries::monomial(Var::y, a, tr));
    for (int m = 2; m <= n - 1; ++m) {
        for (int a = 1; a <= n - m; ++a) {
            MultiSeries acc(tr);
            for (int s = 1; s <= n - m + 1; ++s) {
                const MultiSeries* prev = out.find(s, m - 1);
                if (prev && !prev->is_zero()) acc += f_gluing_weight(a, s, tr, mut) * *prev;
            }
            out.entries.emplace(std::pair{a, m}, std::move(acc));
        }
    }
    return out;
}

struct GChain {
    ColumnIndexedGF bt, t, b, g;
};

// Convex families, in dependency order  G^bt -> G^t (and mirrored G^b) -> G.
// The G_a self term is pq x G_a: the recurrence display drops the pq mark its
// own kernel (1 - pqx + ...) requires, and the unmarked variant disagrees
// with direct enumeration, so the marked form is used. In the m-graded
// iteration the self term is an ordinary layer transition.
inline GChain run_G_chain(int n) {
    if (n < 2) throw std::invalid_argument("oracle bound must be >= 2");
    Truncation tr = detail_oracle::oracle_trunc(n);
    GChain out;
    out.bt.family = Family::G_bt;
    out.t.family = Family::G_t;
    out.b.family = Family::G_b;
    out.g.family = Family::G;
    out.bt.bound = out.t.bound = out.b.bound = out.g.bound = n;

    for (int a = 1; a <= n - 1; ++a) {
        MultiSeries base = MultiSeries::monomial(Var::y, a, tr);
        out.bt.entries.emplace(std::pair{a, 1}, base);
        out.t.entries.emplace(std::pair{a, 1}, base);
        out.b.entries.emplace(std::pair{a, 1}, base);
        out.g.entries.emplace(std::pair{a, 1}, base);
    }

    using detail_oracle::WeightBuilder;
    for (int m = 2; m <= n - 1; ++m) {
        for (int a = 1; a <= n - m; ++a) {
            MultiSeries acc_bt(tr), acc_t(tr), acc_b(tr), acc_g(tr);
            for (int s = 1; s <= n - m + 1; ++s) {
                const MultiSeries* bt_p = out.bt.find(s, m - 1);
                const MultiSeries* t_p = out.t.find(s, m - 1);
                const MultiSeries* b_p = out.b.find(s, m - 1);
                const MultiSeries* g_p = out.g.find(s, m - 1);
                if (!bt_p) continue;

                if (s < a) {
                    // second column strictly inside / bottom- / top-aligned
                    WeightBuilder wbt(tr);
                    wbt.add(a - s, 0, 0, a - 1 - s).add(a - s, 1, 0, 1).add(a - s, 0, 1, 1);
                    acc_bt += wbt.w * *bt_p;

                    WeightBuilder wt_bt(tr);
                    wt_bt.add(a - s, 0, 0, a - 1 - s).add(a - s, 0, 1, 1);
                    acc_t += wt_bt.w * *bt_p;
                    WeightBuilder wt_t(tr);
                    wt_t.add(a - s, 1, 0, 1);
                    if (s >= 2)
                        for (int j = a + 1 - s; j <= a - 1; ++j) wt_t.add(j, 0, 0, 1);
                    acc_t += wt_t.w * *t_p;

                    WeightBuilder wb_bt(tr);
                    wb_bt.add(a - s, 0, 0, a - 1 - s).add(a - s, 1, 0, 1);
                    acc_b += wb_bt.w * *bt_p;
                    WeightBuilder wb_b(tr);
                    wb_b.add(a - s, 0, 1, 1);
                    if (s >= 2)
                        for (int j = a + 1 - s; j <= a - 1; ++j) wb_b.add(j, 0, 0, 1);
                    acc_b += wb_b.w * *b_p;

                    WeightBuilder wg_bt(tr), wg_t(tr), wg_b(tr);
                    wg_bt.add(a - s, 0, 0, a - 1 - s);
                    wg_t.add(a - s, 1, 0, 1);
                    wg_b.add(a - s, 0, 1, 1);
                    acc_g += wg_bt.w * *bt_p + wg_t.w * *t_p + wg_b.w * *b_p;
                } else if (s == a) {
                    WeightBuilder pq(tr);
                    pq.add(0, 1, 1, 1);
                    acc_bt += pq.w * *bt_p;
                    WeightBuilder hang(tr);
                    for (int j = 1; j <= a - 1; ++j) hang.add(j, 0, 0, 1);
                    acc_t += (pq.w + hang.w) * *t_p;
                    acc_b += (pq.w + hang.w) * *b_p;
                    acc_g += pq.w * *g_p;
                } else {
                    WeightBuilder hang(tr);
                    for (int j = 1; j <= a - 1; ++j) hang.add(j, 0, 0, 1);
                    WeightBuilder qm(tr), pm(tr), pq_sum(tr);
                    qm.add(0, 0, 1, 1);
                    pm.add(0, 1, 0, 1);
                    pq_sum.add(0, 1, 0, 1).add(0, 0, 1, 1);
                    acc_t += (hang.w + qm.w) * *t_p;
                    acc_b += (hang.w + pm.w) * *b_p;
                    MultiSeries wg = pq_sum.w;
                    if (s >= a + 2) {
                        WeightBuilder lin(tr);
                        lin.add(0, 0, 0, s - 1 - a);
                        wg += lin.w;
                    }
                    acc_g += hang.w * (*t_p + *b_p) + wg * *g_p;
                }

                if (2 <= s && s <= a) {
                    // hanging-below family for G (both orientations)
                    WeightBuilder hang(tr);
                    for (int j = a + 1 - s; j <= a - 1; ++j) hang.add(j, 0, 0, 1);
                    acc_g += hang.w * (*t_p + *b_p);
                }
            }
            out.bt.entries.emplace(std::pair{a, m}, std::move(acc_bt));
            out.t.entries.emplace(std::pair{a, m}, std::move(acc_t));
            out.b.entries.emplace(std::pair{a, m}, std::move(acc_b));
            out.g.entries.emplace(std::pair{a, m}, std::move(acc_g));
        }
    }
    return out;
}

// Assemble sum_{a,m} x^m (entry) [u^{a-1}] as a series in (t, y, p, q [, u]),
// keeping only terms with m + e <= bound (the exact half-perimeter window the
// DP populates).
inline MultiSeries assemble(const ColumnIndexedGF& gf, bool with_u,
                            int weight_guard = 0) {
    int n = gf.bound;
    Truncation tr;
    tr[Var::t] = 2 * n;
    tr[Var::y] = n - 1;
    tr[Var::p] = n;
    tr[Var::q] = n;
    tr[Var::u] = with_u ? n : 0;
    tr.weight_cap = 2 * n + weight_guard;
    MultiSeries out(tr);
    for (const auto& [key, poly] : gf.entries) {
        auto [a, m] = key;
        poly.for_each_term([&](const Exps& e, const Rational& c) {
            if (m + e[static_cast<int>(Var::y)] > n) return;
            Exps ne = e;
            ne[static_cast<int>(Var::t)] = 2 * m;
            ne[static_cast<int>(Var::u)] = with_u ? a - 1 : 0;
            out.add_term(ne, c);
        });
    }
    return out;
}

// F(1), dF/du at u=1, from the oracle table.
struct FBoundary {
    MultiSeries f1, df1;
};

inline FBoundary oracle_f_boundary(const ColumnIndexedGF& f) {
    int n = f.bound;
    Truncation tr;
    tr[Var::t] = 2 * n;
    tr[Var::y] = n - 1;
    tr[Var::p] = n;
    tr[Var::q] = n;
    tr.weight_cap = 2 * n;
    FBoundary out{MultiSeries(tr), MultiSeries(tr)};
    for (const auto& [key, poly] : f.entries) {
        auto [a, m] = key;
        poly.for_each_term([&](const Exps& e, const Rational& c) {
            if (m + e[static_cast<int>(Var::y)] > n) return;
            Exps ne = e;
            ne[static_cast<int>(Var::t)] = 2 * m;
            out.f1.add_term(ne, c);
            if (a >= 2) out.df1.add_term(ne, c * (a - 1));
        });
    }
    return out;
}

// Residual of the section-2 functional equation with denominators cleared:
//   [(1-u)^2 (1-yu)^2 - x P_q(u) P_p(u)] F(u)
//     - xy (1-u)^2 (1-yu)
//     - [2xyu(1-u)(1-yu) + x(p+q)(1-u)(1-yu)^2 - x(1-yu)^2] F(1)
//     - x(1-u)(1-yu)^2 F'(1)
// Must vanish identically within the half-perimeter window.
inline MultiSeries kernel_residual(int n, OracleMutation mut = OracleMutation::none) {
    ColumnIndexedGF f = run_F(n, mut);
    MultiSeries fu = assemble(f, true);
    FBoundary fb = oracle_f_boundary(f);

    Truncation tr;
    tr[Var::t] = 2 * n + 2;
    tr[Var::y] = n + 3;
    tr[Var::p] = n + 2;
    tr[Var::q] = n + 2;
    tr[Var::u] = n + 6;
    tr.weight_cap = 2 * n;

    MultiSeries one = MultiSeries::constant(1, tr);
    MultiSeries t = MultiSeries::monomial(Var::t, 1, tr);
    MultiSeries x = MultiSeries::monomial(Var::t, 2, tr);
    MultiSeries y = MultiSeries::monomial(Var::y, 1, tr);
    MultiSeries p = MultiSeries::monomial(Var::p, 1, tr);
    MultiSeries q = MultiSeries::monomial(Var::q, 1, tr);
    MultiSeries u = MultiSeries::monomial(Var::u, 1, tr);

    auto P = [&](const MultiSeries& c) {
        return c * y * u * (u - 1) - y * u * u - c * u + 2 * y * u + c - 1;
    };
    MultiSeries omu = one - u;
    MultiSeries omyu = one - y * u;
    MultiSeries lhs = (omu * omu * omyu * omyu - x * P(q) * P(p)) * fu.with_truncation(tr);
    MultiSeries rhs = x * y * omu * omu * omyu +
                      (2 * x * y * u * omu * omyu + x * (p + q) * omu * omyu * omyu -
                       x * omyu * omyu) *
                          fb.f1.with_truncation(tr) +
                      x * omu * omyu * omyu * fb.df1.with_truncation(tr);
    return lhs - rhs;
}

}  // namespace carlitz
