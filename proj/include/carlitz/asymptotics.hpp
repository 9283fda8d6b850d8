#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/closed_forms.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

// Thin RAII wrapper over mpfr_t, fixed precision per value, round-to-nearest.
// Enough surface for evaluating the asymptotic formulas with guard digits.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(long x, mpfr_prec_t prec = 256) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Integer& z, mpfr_prec_t prec = 256) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Rational& q, mpfr_prec_t prec = 256) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec = 256) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_si(long e) const {
        BigFloat r(prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 50) const {
        mpfr_exp_t e;
        char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(raw);
        mpfr_free_str(raw);
        bool neg = !mant.empty() && mant[0] == '-';
        std::string digits_only = neg ? mant.substr(1) : mant;
        std::string out = (neg ? "-" : "");
        out += "0." + digits_only + "e" + std::to_string(e);
        return out;
    }

  private:
    mpfr_t v_;
};

// The four asymptotic targets: counts of column-convex / convex Carlitz
// polyominoes with perimeter 2n, and the total of B+U over the column-convex
// / convex classes with perimeter 2n.
enum class AsymTarget { cc_carlitz, cc_levels, convex_carlitz, convex_levels };

inline const char* asym_target_name(AsymTarget t) {
    switch (t) {
        case AsymTarget::cc_carlitz: return "cc-carlitz";
        case AsymTarget::cc_levels: return "cc-levels";
        case AsymTarget::convex_carlitz: return "convex-carlitz";
        case AsymTarget::convex_levels: return "convex-levels";
    }
    return "?";
}

// Leading-order predictions. Defaults carry ~77 decimal digits so that a
// 50-digit report is never limited by evaluation error.
inline BigFloat predict(AsymTarget target, long n, mpfr_prec_t prec = 256) {
    BigFloat pi = BigFloat::pi(prec);
    BigFloat nn = BigFloat::from(n, prec);
    switch (target) {
        case AsymTarget::cc_carlitz: {
            // 9 sqrt(2) (14 + 3 sqrt(3)) / 2704 * 4^n / sqrt(pi n^3)
            BigFloat c = BigFloat::from(9L, prec) * BigFloat::from(2L, prec).sqrt() *
                         (BigFloat::from(14L, prec) +
                          BigFloat::from(3L, prec) * BigFloat::from(3L, prec).sqrt()) /
                         BigFloat::from(2704L, prec);
            return c * BigFloat::from(4L, prec).pow_si(n) / (pi * nn.pow_si(3)).sqrt();
        }
        case AsymTarget::cc_levels: {
            // [(1588-999 sqrt2) sqrt(5 sqrt2 - 7) + 6(51 sqrt2 - 28) sqrt(99 sqrt2 - 140)]
            //   / 2209 * ((3+2 sqrt2)/2)^n / sqrt(pi n)
            BigFloat s2 = BigFloat::from(2L, prec).sqrt();
            BigFloat c =
                ((BigFloat::from(1588L, prec) - BigFloat::from(999L, prec) * s2) *
                     (BigFloat::from(5L, prec) * s2 - BigFloat::from(7L, prec)).sqrt() +
                 BigFloat::from(6L, prec) *
                     (BigFloat::from(51L, prec) * s2 - BigFloat::from(28L, prec)) *
                     (BigFloat::from(99L, prec) * s2 - BigFloat::from(140L, prec)).sqrt()) /
                BigFloat::from(2209L, prec);
            BigFloat base = (BigFloat::from(3L, prec) + BigFloat::from(2L, prec) * s2) /
                            BigFloat::from(2L, prec);
            return c * base.pow_si(n) / (pi * nn).sqrt();
        }
        case AsymTarget::convex_carlitz: {
            // (n+1)/10 * ((3+sqrt5)/2)^(n-2)
            BigFloat base = (BigFloat::from(3L, prec) + BigFloat::from(5L, prec).sqrt()) /
                            BigFloat::from(2L, prec);
            return BigFloat::from(n + 1, prec) / BigFloat::from(10L, prec) *
                   base.pow_si(n - 2);
        }
        case AsymTarget::convex_levels:
            // n^2 4^(n-4)
            return nn.pow_si(2) * BigFloat::from(4L, prec).pow_si(n - 4);
    }
    throw std::invalid_argument("unknown asymptotic target");
}

// Exact coefficient a(n) for a target, from the corresponding exact series.
inline std::vector<Integer> exact_coefficients(AsymTarget target, int nmax) {
    switch (target) {
        case AsymTarget::cc_carlitz: return cc_carlitz_counts(nmax);
        case AsymTarget::cc_levels: return dq_f1_coefficients(nmax);
        case AsymTarget::convex_carlitz: return convex_carlitz_counts(nmax);
        case AsymTarget::convex_levels: return dq_g1_coefficients(nmax);
    }
    throw std::invalid_argument("unknown asymptotic target");
}

struct ConvergenceRow {
    long n = 0;
    Integer exact;
    BigFloat predicted;
    BigFloat ratio;  // exact / predicted
};

struct ConvergenceReport {
    AsymTarget target = AsymTarget::cc_carlitz;
    std::vector<ConvergenceRow> rows;
    bool gap_decreasing = false;  // |ratio - 1| strictly decreasing across rows
};

inline ConvergenceReport convergence_report(AsymTarget target,
                                            const std::vector<long>& checkpoints,
                                            mpfr_prec_t prec = 256) {
    if (checkpoints.empty()) throw std::invalid_argument("no checkpoints");
    long nmax = *std::max_element(checkpoints.begin(), checkpoints.end());
    std::vector<Integer> coeffs = exact_coefficients(target, static_cast<int>(nmax));
    ConvergenceReport rep;
    rep.target = target;
    BigFloat one = BigFloat::from(1L, prec);
    for (long n : checkpoints) {
        ConvergenceRow row;
        row.n = n;
        row.exact = coeffs.at(static_cast<std::size_t>(n));
        row.predicted = predict(target, n, prec);
        row.ratio = BigFloat::from(row.exact, prec) / row.predicted;
        rep.rows.push_back(std::move(row));
    }
    rep.gap_decreasing = true;
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
        BigFloat a = (rep.rows[i].ratio - one).abs();
        BigFloat b = (rep.rows[i + 1].ratio - one).abs();
        if (!(b < a)) rep.gap_decreasing = false;
    }
    return rep;
}

// a(n+1)/a(n) for the convex Carlitz counts, as a BigFloat.
inline BigFloat convex_carlitz_growth_ratio(long n, mpfr_prec_t prec = 256) {
    std::vector<Integer> c = convex_carlitz_counts(static_cast<int>(n) + 1);
    return BigFloat::from(c.at(n + 1), prec) / BigFloat::from(c.at(n), prec);
}

}  // namespace carlitz
