#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "carlitz/rational.hpp"

namespace carlitz {

// First-order jet (a + b*eps, eps^2 = 0). Running a series pipeline over
// Dual coefficients with q = 1 + eps computes the value and q-derivative at
// q = 1 in one pass (the second route for dual_derivative_at_one).
struct Dual {
    Rational a, b;

    Dual() : a(0), b(0) {}
    Dual(long v) : a(v), b(0) {}
    Dual(Rational v) : a(std::move(v)), b(0) {}
    Dual(Rational v, Rational d) : a(std::move(v)), b(std::move(d)) {}

    bool operator==(const Dual& o) const { return a == o.a && b == o.b; }

    Dual& operator+=(const Dual& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend Dual operator+(Dual x, const Dual& y) { return x += y; }
    friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
    friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
};

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const Dual& c) { return sgn(c.a) == 0 && sgn(c.b) == 0; }

inline Rational coeff_inverse(const Rational& c) {
    if (sgn(c) == 0) throw std::domain_error("inverse of zero");
    return 1 / c;
}
inline Dual coeff_inverse(const Dual& c) {
    if (sgn(c.a) == 0) throw std::domain_error("inverse of zero-valued dual");
    Rational ia = 1 / c.a;
    return {ia, -c.b * ia * ia};
}

inline Rational coeff_sqrt(const Rational& c) { return rational_sqrt(c); }
inline Dual coeff_sqrt(const Dual& c) {
    Rational r = rational_sqrt(c.a);
    if (sgn(r) == 0) throw std::domain_error("dual sqrt at zero");
    return {r, c.b / (2 * r)};
}

// Dense truncated power series in one formal variable, coefficients in C
// (Rational or Dual). The fast path for the long univariate runs: perimeter
// generating functions to order ~1600.
template <class C>
class DenseSeries {
  public:
    DenseSeries() : c_(1) {}
    explicit DenseSeries(int order) : c_(order + 1) {}
    DenseSeries(std::vector<C> coeffs, int order) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    static DenseSeries constant(C v, int order) {
        DenseSeries s(order);
        s.c_[0] = std::move(v);
        return s;
    }

    static DenseSeries variable(int order) {
        DenseSeries s(order);
        if (order >= 1) s.c_[1] = C(1);
        return s;
    }

    // p(x) = coeffs[0] + coeffs[1] x + ...
    static DenseSeries polynomial(std::initializer_list<long> coeffs, int order) {
        DenseSeries s(order);
        int i = 0;
        for (long v : coeffs) {
            if (i > order) break;
            s.c_[i++] = C(v);
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_.at(i); }
    C& at(int i) { return c_.at(i); }
    const std::vector<C>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const C& v : c_)
            if (!carlitz::is_zero(v)) return false;
        return true;
    }

    friend DenseSeries operator+(const DenseSeries& a, const DenseSeries& b) {
        DenseSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend DenseSeries operator-(const DenseSeries& a, const DenseSeries& b) {
        DenseSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend DenseSeries operator-(const DenseSeries& a) {
        DenseSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend DenseSeries operator*(const DenseSeries& a, const DenseSeries& b) {
        DenseSeries r(std::min(a.order(), b.order()));
        mul_into(r.c_, a.c_, b.c_, r.order());
        return r;
    }
    friend DenseSeries operator*(const DenseSeries& a, const C& s) {
        DenseSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] * s;
        return r;
    }
    friend DenseSeries operator*(const C& s, const DenseSeries& a) { return a * s; }
    friend DenseSeries operator*(const DenseSeries& a, long s) { return a * C(s); }
    friend DenseSeries operator*(long s, const DenseSeries& a) { return a * C(s); }
    friend DenseSeries operator+(const DenseSeries& a, long s) {
        DenseSeries r = a;
        r.c_[0] += C(s);
        return r;
    }
    friend DenseSeries operator+(long s, const DenseSeries& a) { return a + s; }
    friend DenseSeries operator-(const DenseSeries& a, long s) { return a + (-s); }
    friend DenseSeries operator-(long s, const DenseSeries& a) { return (-a) + s; }

    DenseSeries shifted(int k) const {  // multiply by x^k
        DenseSeries r(order());
        for (int i = order(); i >= k; --i) r.c_[i] = c_[i - k];
        return r;
    }

    DenseSeries truncated(int order) const {
        std::vector<C> v(c_.begin(),
                         c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
        return DenseSeries(std::move(v), order);
    }

    DenseSeries invert() const {
        if (carlitz::is_zero(c_[0])) throw std::domain_error("invert: zero constant term");
        int n = order();
        std::vector<C> x{coeff_inverse(c_[0])};
        int k = 1;
        while (k <= n) {
            k = std::min(2 * k, n + 1);
            // x <- x(2 - f x) mod t^k
            std::vector<C> fx(k);
            mul_into(fx, c_, x, k - 1);
            for (C& v : fx) v = -v;
            fx[0] += C(2);
            std::vector<C> nx(k);
            mul_into(nx, x, fx, k - 1);
            x = std::move(nx);
        }
        x.resize(n + 1);
        return DenseSeries(std::move(x), n);
    }

    DenseSeries sqrt() const {
        int n = order();
        std::vector<C> x{coeff_sqrt(c_[0])};
        C half = C(1) * frac_half();
        int k = 1;
        while (k <= n) {
            k = std::min(2 * k, n + 1);
            DenseSeries xk(std::vector<C>(x), k - 1);
            DenseSeries ax = truncated(k - 1) * xk.invert();
            x.resize(k);
            for (int i = 0; i < k; ++i) x[i] = (x[i] + ax.c_[i]) * half;
        }
        x.resize(n + 1);
        return DenseSeries(std::move(x), n);
    }

    // Exact division by a series whose lowest nonzero coefficient sits at
    // index k: shift down and invert the unit part. Orders shrink by k.
    DenseSeries divide_exact(const DenseSeries& g) const {
        int k = 0;
        while (k <= g.order() && carlitz::is_zero(g.c_[k])) ++k;
        if (k > g.order()) throw std::domain_error("division by zero series");
        for (int i = 0; i < std::min(k, order() + 1); ++i)
            if (!carlitz::is_zero(c_[i])) throw std::domain_error("divide_exact: inexact");
        int n = std::min(order(), g.order()) - k;
        if (n < 0) throw std::domain_error("divide_exact: empty result order");
        DenseSeries num(n), den(n);
        for (int i = 0; i <= n; ++i) {
            if (i + k <= order()) num.c_[i] = c_[i + k];
            if (i + k <= g.order()) den.c_[i] = g.c_[i + k];
        }
        return num * den.invert();
    }

    DenseSeries derive() const {
        DenseSeries r(std::max(0, order() - 1));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i + 1] * C(i + 1);
        return r;
    }

  private:
    static Rational frac_half() { return Rational(1, 2); }

    static void mul_into(std::vector<C>& out, const std::vector<C>& a,
                         const std::vector<C>& b, int order) {
        for (C& v : out) v = C(0);
        int na = static_cast<int>(a.size()) - 1, nb = static_cast<int>(b.size()) - 1;
        for (int i = 0; i <= std::min(na, order); ++i) {
            if (carlitz::is_zero(a[i])) continue;
            int jm = std::min(nb, order - i);
            for (int j = 0; j <= jm; ++j) {
                if (!carlitz::is_zero(b[j])) out[i + j] += a[i] * b[j];
            }
        }
    }

    std::vector<C> c_;
};

using RationalSeries = DenseSeries<Rational>;
using DualSeries = DenseSeries<Dual>;

}  // namespace carlitz
