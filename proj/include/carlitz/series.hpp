#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/rational.hpp"

namespace carlitz {

// Formal variables, in fixed order. t is the half-step variable: x = t^2 by
// global convention, so sqrt(x) is an honest monomial. y marks the row-type
// statistic, p/q mark bottom/top levels, u is the catalytic variable indexing
// the first-column size.
enum class Var : int { t = 0, y = 1, p = 2, q = 3, u = 4 };

inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"t", "y", "p", "q", "u"};

// weight(monomial) = t_exp + 2*y_exp. Since x = t^2 marks one column and y
// marks one row-type unit, weight/2 is the half-perimeter grading; capping it
// truncates a series at a fixed half-perimeter exactly.
inline constexpr int kWeight[kNumVars] = {1, 2, 0, 0, 0};

using Exps = std::array<int, kNumVars>;

namespace detail {
// Exponents packed into 12-bit fields, t in the most significant field, so
// uint64 comparison is lexicographic in (t, y, p, q, u). Packing is additive
// as long as each exponent stays below 4096, which the caps guarantee.
inline constexpr int kFieldBits = 12;
inline constexpr int kMaxExp = (1 << kFieldBits) - 1;

inline std::uint64_t pack(const Exps& e) {
    std::uint64_t k = 0;
    for (int i = 0; i < kNumVars; ++i) k = (k << kFieldBits) | static_cast<std::uint64_t>(e[i]);
    return k;
}

inline Exps unpack(std::uint64_t k) {
    Exps e{};
    for (int i = kNumVars - 1; i >= 0; --i) {
        e[i] = static_cast<int>(k & kMaxExp);
        k >>= kFieldBits;
    }
    return e;
}

inline int weight_of(const Exps& e) {
    int w = 0;
    for (int i = 0; i < kNumVars; ++i) w += kWeight[i] * e[i];
    return w;
}
}  // namespace detail

// Truncation policy: per-variable degree caps plus an optional cap on the
// (t + 2y) weight. cap == 0 means the variable does not occur. Every stored
// term satisfies the policy; queries beyond it are errors, never silent zeros.
struct Truncation {
    static constexpr int kUnbounded = detail::kMaxExp;
    static constexpr int kNoWeightCap = -1;

    std::array<int, kNumVars> cap{0, 0, 0, 0, 0};
    int weight_cap = kNoWeightCap;

    int& operator[](Var v) { return cap[static_cast<int>(v)]; }
    int operator[](Var v) const { return cap[static_cast<int>(v)]; }

    bool admits(const Exps& e) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > cap[i]) return false;
        return weight_cap == kNoWeightCap || detail::weight_of(e) <= weight_cap;
    }

    Truncation meet(const Truncation& o) const {
        Truncation r;
        for (int i = 0; i < kNumVars; ++i) r.cap[i] = std::min(cap[i], o.cap[i]);
        if (weight_cap == kNoWeightCap)
            r.weight_cap = o.weight_cap;
        else if (o.weight_cap == kNoWeightCap)
            r.weight_cap = weight_cap;
        else
            r.weight_cap = std::min(weight_cap, o.weight_cap);
        return r;
    }

    bool operator==(const Truncation& o) const = default;
};

// Sparse truncated multivariate formal power series over Rational.
// Deterministic term order (packed lex on exponents); no stored zeros.
class MultiSeries {
  public:
    MultiSeries() = default;
    explicit MultiSeries(Truncation tr) : tr_(tr) {}

    static MultiSeries constant(const Rational& c, Truncation tr) {
        MultiSeries s(tr);
        s.add_term(Exps{}, c);
        return s;
    }

    static MultiSeries monomial(Var v, int k, Truncation tr, const Rational& c = 1) {
        Exps e{};
        e[static_cast<int>(v)] = k;
        if (!tr.admits(e))
            throw std::invalid_argument("monomial outside the truncation policy");
        MultiSeries s(tr);
        s.add_term(e, c);
        return s;
    }

    const Truncation& truncation() const { return tr_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Exact stored coefficient; querying beyond the truncation signals
    // insufficient order rather than returning zero.
    const Rational& coefficient(const Exps& e) const {
        if (!tr_.admits(e))
            throw std::out_of_range("coefficient query beyond truncation caps");
        auto it = terms_.find(detail::pack(e));
        static const Rational kZero = 0;
        return it == terms_.end() ? kZero : it->second;
    }

    void add_term(const Exps& e, const Rational& c) {
        if (sgn(c) == 0 || !tr_.admits(e)) return;
        Rational canon = c;
        canon.canonicalize();  // entry point for caller-supplied values
        auto key = detail::pack(e);
        auto [it, inserted] = terms_.emplace(key, canon);
        if (!inserted) {
            it->second += canon;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    template <class F>
    void for_each_term(F&& f) const {
        for (const auto& [k, c] : terms_) f(detail::unpack(k), c);
    }

    MultiSeries operator-() const {
        MultiSeries r(tr_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    MultiSeries& operator+=(const MultiSeries& o) { return *this = *this + o; }
    MultiSeries& operator-=(const MultiSeries& o) { return *this = *this - o; }
    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r(a.tr_.meet(b.tr_));
        for (const auto& [k, c] : a.terms_) r.accumulate(k, c);
        for (const auto& [k, c] : b.terms_) r.accumulate(k, c);
        return r;
    }

    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r(a.tr_.meet(b.tr_));
        for (const auto& [k, c] : a.terms_) r.accumulate(k, c);
        for (const auto& [k, c] : b.terms_) {
            Rational n = -c;
            r.accumulate(k, n);
        }
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r(a.tr_.meet(b.tr_));
        const MultiSeries& outer = a.terms_.size() <= b.terms_.size() ? a : b;
        const MultiSeries& inner = a.terms_.size() <= b.terms_.size() ? b : a;
        Rational prod;
        for (const auto& [ka, ca] : outer.terms_) {
            Exps ea = detail::unpack(ka);
            for (const auto& [kb, cb] : inner.terms_) {
                Exps e = detail::unpack(kb);
                for (int i = 0; i < kNumVars; ++i) e[i] += ea[i];
                if (!r.tr_.admits(e)) continue;
                prod = ca * cb;
                r.accumulate(detail::pack(e), prod);
            }
        }
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const Rational& c) {
        MultiSeries r(a.tr_);
        if (sgn(c) == 0) return r;
        for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * c);
        return r;
    }
    friend MultiSeries operator*(const Rational& c, const MultiSeries& a) { return a * c; }
    friend MultiSeries operator*(const MultiSeries& a, long c) { return a * Rational(c); }
    friend MultiSeries operator*(long c, const MultiSeries& a) { return a * Rational(c); }

    friend MultiSeries operator+(const MultiSeries& a, long c) {
        MultiSeries r = a;
        r.add_term(Exps{}, Rational(c));
        return r;
    }
    friend MultiSeries operator+(long c, const MultiSeries& a) { return a + c; }
    friend MultiSeries operator-(const MultiSeries& a, long c) { return a + (-c); }
    friend MultiSeries operator-(long c, const MultiSeries& a) { return (-a) + c; }

    Rational constant_term() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Multiplicative inverse; requires a nonzero constant term. Newton
    // iteration with a doubling weight schedule so only the last step runs at
    // full size; without a weight cap, iterates to a fixed point.
    MultiSeries invert() const {
        Rational c0 = constant_term();
        if (sgn(c0) == 0) throw std::domain_error("invert: zero constant term");
        MultiSeries x = constant(1 / c0, tr_);
        if (tr_.weight_cap == Truncation::kNoWeightCap) {
            for (int guard = 0; guard < 64; ++guard) {
                MultiSeries nx = x * (constant(2, tr_) - *this * x);
                if (nx.terms_ == x.terms_) break;
                x = std::move(nx);
            }
            return x;
        }
        for (int w : newton_schedule()) {
            Truncation step = tr_;
            step.weight_cap = w;
            x = x.with_truncation(step);
            MultiSeries fx = chopped(step) * x;
            x = x * (constant(2, step) - fx);
        }
        // weight-0 variables (p, q, u) advance only I-adically; polish to a
        // fixed point
        for (int guard = 0; guard < 64; ++guard) {
            MultiSeries nx = x * (constant(2, tr_) - *this * x);
            if (nx == x) break;
            x = std::move(nx);
        }
        return x;
    }

    // Square root with positive constant-term branch. The constant term must
    // be the square of a rational; zero constant terms are the caller's job
    // (factor out even monomials first).
    MultiSeries sqrt() const {
        Rational c0 = constant_term();
        if (sgn(c0) == 0)
            throw std::domain_error("sqrt: zero constant term (factor first)");
        Rational r0 = rational_sqrt(c0);
        MultiSeries x = constant(r0, tr_);
        Rational half(1, 2);
        if (tr_.weight_cap == Truncation::kNoWeightCap) {
            for (int guard = 0; guard < 64; ++guard) {
                MultiSeries nx = (x + *this * x.invert()) * half;
                if (nx.terms_ == x.terms_) break;
                x = std::move(nx);
            }
            return x;
        }
        for (int w : newton_schedule()) {
            Truncation step = tr_;
            step.weight_cap = w;
            x = x.with_truncation(step);
            MultiSeries ax = chopped(step) * x.invert();
            x = (x + ax) * half;
        }
        for (int guard = 0; guard < 64; ++guard) {
            MultiSeries nx = (x + *this * x.invert()) * half;
            if (nx == x) break;
            x = std::move(nx);
        }
        return x;
    }

    // Exact division: *this must be divisible by g. The quotient is only
    // determined up to cap(f) - minterm(g), so the result's caps tighten
    // accordingly; remainder terms whose quotient falls beyond the tightened
    // caps are undetermined and get dropped.
    MultiSeries divide_exact(const MultiSeries& g) const {
        if (g.terms_.empty()) throw std::domain_error("division by zero series");
        auto mg_key = g.terms_.begin()->first;
        if (mg_key == 0) return *this * g.invert();  // unit divisor
        Exps mg = detail::unpack(mg_key);
        const Rational& cg = g.terms_.begin()->second;

        Truncation meet = tr_.meet(g.tr_);
        Truncation out = meet;
        for (int i = 0; i < kNumVars; ++i) out.cap[i] = std::max(0, meet.cap[i] - mg[i]);
        if (meet.weight_cap != Truncation::kNoWeightCap)
            out.weight_cap = meet.weight_cap - detail::weight_of(mg);

        MultiSeries h(out);
        MultiSeries r = *this;
        while (!r.terms_.empty()) {
            auto it = r.terms_.begin();
            Exps mr = detail::unpack(it->first);
            Exps qe{};
            bool neg = false;
            for (int i = 0; i < kNumVars; ++i) {
                qe[i] = mr[i] - mg[i];
                if (qe[i] < 0) {
                    neg = true;
                    qe[i] = 0;
                }
            }
            if (!out.admits(qe)) {
                r.terms_.erase(it);  // beyond the determined zone
                continue;
            }
            if (neg) throw std::domain_error("divide_exact: inexact division");
            Rational qc = it->second / cg;
            h.add_term(qe, qc);
            MultiSeries mono(r.tr_);
            mono.add_term(qe, qc);
            r = r - mono * g;
        }
        return h;
    }

    // Formal partial derivative; the variable's cap drops by one.
    MultiSeries derive(Var v) const {
        int i = static_cast<int>(v);
        if (tr_.cap[i] == 0) throw std::invalid_argument("derive: variable not present");
        Truncation out = tr_;
        out.cap[i] = std::max(0, tr_.cap[i] == Truncation::kUnbounded
                                     ? Truncation::kUnbounded
                                     : tr_.cap[i] - 1);
        MultiSeries r(out);
        for (const auto& [k, c] : terms_) {
            Exps e = detail::unpack(k);
            if (e[i] == 0) continue;
            Rational nc = c * e[i];
            --e[i];
            r.add_term(e, nc);
        }
        return r;
    }

    // var := rational constant (exact Horner evaluation; the variable leaves
    // the support and its cap drops to 0).
    MultiSeries substitute(Var v, const Rational& value) const {
        int i = static_cast<int>(v);
        Truncation out = tr_;
        out.cap[i] = 0;
        MultiSeries r(out);
        for (const auto& [k, c] : terms_) {
            Exps e = detail::unpack(k);
            int k_v = e[i];
            e[i] = 0;
            Rational scaled = c;
            for (int j = 0; j < k_v; ++j) scaled *= value;
            r.add_term(e, scaled);
        }
        return r;
    }

    // var := series with zero constant term (composition finite under
    // truncation). A nonzero constant term would need infinitely many terms
    // below the caps and is rejected; constants go through the Rational
    // overload.
    MultiSeries substitute(Var v, const MultiSeries& s) const {
        int i = static_cast<int>(v);
        if (s.tr_.cap[i] != 0)
            for (const auto& [k, c] : s.terms_)
                if (detail::unpack(k)[i] != 0)
                    throw std::invalid_argument("substitute: series involves the variable");
        if (sgn(s.constant_term()) != 0)
            throw std::invalid_argument(
                "substitute: nonzero constant term in a non-constant substitution");
        // Horner over descending degree buckets.
        std::map<int, MultiSeries> buckets;
        Truncation base = tr_;
        base.cap[i] = 0;
        Truncation out = base.meet(s.tr_);
        for (const auto& [k, c] : terms_) {
            Exps e = detail::unpack(k);
            int d = e[i];
            e[i] = 0;
            auto [it, fresh] = buckets.try_emplace(d, base);
            it->second.add_term(e, c);
        }
        MultiSeries acc(out);
        int prev = -1;
        for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
            if (prev >= 0)
                for (int j = 0; j < prev - it->first; ++j) acc = acc * s;
            acc = acc + it->second;
            prev = it->first;
        }
        if (prev > 0)
            for (int j = 0; j < prev; ++j) acc = acc * s;
        return acc;
    }

    MultiSeries swap_vars(Var a, Var b) const {
        int i = static_cast<int>(a), j = static_cast<int>(b);
        Truncation out = tr_;
        std::swap(out.cap[i], out.cap[j]);
        MultiSeries r(out);
        for (const auto& [k, c] : terms_) {
            Exps e = detail::unpack(k);
            std::swap(e[i], e[j]);
            r.add_term(e, c);
        }
        return r;
    }

    // Tighter copy (drops terms beyond the new policy).
    MultiSeries chopped(const Truncation& ntr) const {
        MultiSeries r(tr_.meet(ntr));
        for (const auto& [k, c] : terms_)
            if (r.tr_.admits(detail::unpack(k))) r.terms_.emplace(k, c);
        return r;
    }

    // Reinterpret under a different policy (may widen; terms that no longer
    // fit are dropped). Sound only when the caller knows the dropped region
    // carries no information, e.g. inside Newton schedules.
    MultiSeries with_truncation(const Truncation& ntr) const {
        MultiSeries r(ntr);
        for (const auto& [k, c] : terms_)
            if (ntr.admits(detail::unpack(k))) r.terms_.emplace(k, c);
        return r;
    }

    // (value at var=1, derivative at var=1), both exact. Valid when the
    // series is polynomial in var within its caps, which is the only mode the
    // evaluators use (level statistics have bounded degree at fixed order).
    std::pair<MultiSeries, MultiSeries> dual_derivative_at_one(Var v) const {
        return {substitute(v, Rational(1)), derive(v).substitute(v, Rational(1))};
    }

    bool even_in(Var v) const {
        int i = static_cast<int>(v);
        for (const auto& [k, c] : terms_)
            if (detail::unpack(k)[i] % 2 != 0) return false;
        return true;
    }

    // All terms with the given exponents at `fixed` vars, as a series in the
    // remaining ones (exponents of fixed vars zeroed).
    MultiSeries slice(const std::vector<std::pair<Var, int>>& fixed) const {
        Truncation out = tr_;
        for (auto [v, k] : fixed) out.cap[static_cast<int>(v)] = 0;
        MultiSeries r(out);
        for (const auto& [k, c] : terms_) {
            Exps e = detail::unpack(k);
            bool match = true;
            for (auto [v, d] : fixed) {
                if (e[static_cast<int>(v)] != d) {
                    match = false;
                    break;
                }
                e[static_cast<int>(v)] = 0;
            }
            if (match) r.add_term(e, c);
        }
        return r;
    }

    bool operator==(const MultiSeries& o) const { return terms_ == o.terms_; }

    // Equality of all coefficients with weight <= w (caps permitting).
    friend bool equal_through_weight(const MultiSeries& a, const MultiSeries& b, int w) {
        MultiSeries d = a - b;
        for (const auto& [k, c] : d.terms_)
            if (detail::weight_of(detail::unpack(k)) <= w) return false;
        return true;
    }

    friend bool zero_through_weight(const MultiSeries& a, int w) {
        for (const auto& [k, c] : a.terms_)
            if (detail::weight_of(detail::unpack(k)) <= w) return false;
        return true;
    }

  private:
    void accumulate(std::uint64_t key, const Rational& c) {
        if (!tr_.admits(detail::unpack(key))) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    // Weight caps 1, 2, 4, ..., full.
    std::vector<int> newton_schedule() const {
        std::vector<int> ws;
        for (int w = 1; w < tr_.weight_cap; w *= 2) ws.push_back(w);
        ws.push_back(tr_.weight_cap);
        return ws;
    }

    Truncation tr_;
    std::map<std::uint64_t, Rational> terms_;
};

inline Exps exps(int t, int y = 0, int p = 0, int q = 0, int u = 0) {
    return Exps{t, y, p, q, u};
}

}  // namespace carlitz
