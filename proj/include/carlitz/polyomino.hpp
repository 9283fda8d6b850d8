#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "carlitz/rational.hpp"

namespace carlitz {

// One column: a contiguous vertical run of `height` cells whose lowest cell
// sits in row `bottom`.
struct ColumnSpan {
    int bottom = 0;
    int height = 1;

    int top() const { return bottom + height; }  // position above the top cell
    bool operator==(const ColumnSpan&) const = default;
};

// A column-convex polyomino as its left-to-right column list, normalized so
// the first column starts at row 0. Consecutive columns must share at least
// one row (edge connectivity).
class ColumnConvexPoly {
  public:
    explicit ColumnConvexPoly(std::vector<ColumnSpan> cols) : cols_(std::move(cols)) {
        if (cols_.empty()) throw std::invalid_argument("polyomino needs at least one column");
        if (cols_.front().bottom != 0)
            throw std::invalid_argument("first column must start at row 0");
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (cols_[i].height < 1) throw std::invalid_argument("column height must be >= 1");
            if (i + 1 < cols_.size()) {
                const auto& a = cols_[i];
                const auto& b = cols_[i + 1];
                if (b.bottom > a.bottom + a.height - 1 || b.top() - 1 < a.bottom)
                    throw std::invalid_argument("consecutive columns must overlap");
            }
        }
    }

    static ColumnConvexPoly from_pairs(std::initializer_list<std::pair<int, int>> bh) {
        std::vector<ColumnSpan> cols;
        for (auto [b, h] : bh) cols.push_back({b, h});
        return ColumnConvexPoly(std::move(cols));
    }

    const std::vector<ColumnSpan>& columns() const { return cols_; }
    int column_count() const { return static_cast<int>(cols_.size()); }

  private:
    std::vector<ColumnSpan> cols_;
};

// The statistic vector of one polyomino. `rows` is the number of occupied
// rows (the occupied rows of a column-convex polyomino form one contiguous
// band). `east_edges` counts cells with no right neighbor; for row-convex
// polyominoes east_edges == rows, and it is the row-type statistic the column
// gluing recurrences track, so all column-convex series here are graded by
// cols + east_edges.
struct PolyStats {
    int cols = 0;
    int rows = 0;
    int east_edges = 0;
    int bottom_levels = 0;  // adjacent pairs with equal bottoms (B)
    int top_levels = 0;     // adjacent pairs with equal tops (U)

    int perimeter() const { return 2 * (rows + cols); }
    int gf_half_perimeter() const { return cols + east_edges; }
};

inline PolyStats stats(const ColumnConvexPoly& poly) {
    const auto& c = poly.columns();
    PolyStats s;
    s.cols = static_cast<int>(c.size());
    int lo = c[0].bottom, hi = c[0].top();
    for (const auto& col : c) {
        lo = std::min(lo, col.bottom);
        hi = std::max(hi, col.top());
    }
    s.rows = hi - lo;
    s.east_edges = c.back().height;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i].bottom == c[i + 1].bottom) ++s.bottom_levels;
        if (c[i].top() == c[i + 1].top()) ++s.top_levels;
        int overlap = std::min(c[i].top(), c[i + 1].top()) -
                      std::max(c[i].bottom, c[i + 1].bottom);
        s.east_edges += c[i].height - overlap;
    }
    return s;
}

inline bool is_carlitz(const PolyStats& s) {
    return s.bottom_levels == 0 && s.top_levels == 0;
}
inline bool is_carlitz(const ColumnConvexPoly& poly) { return is_carlitz(stats(poly)); }

// Row-convexity scan: every occupied row must be one contiguous run of
// columns. Column-convex + row-convex = convex.
inline bool is_convex(const ColumnConvexPoly& poly) {
    const auto& c = poly.columns();
    int lo = c[0].bottom, hi = c[0].top();
    for (const auto& col : c) {
        lo = std::min(lo, col.bottom);
        hi = std::max(hi, col.top());
    }
    for (int r = lo; r < hi; ++r) {
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(c.size()); ++i) {
            if (c[i].bottom <= r && r < c[i].top()) {
                if (first < 0) first = i;
                last = i;
            }
        }
        for (int i = first; i <= last; ++i)
            if (!(c[i].bottom <= r && r < c[i].top())) return false;
    }
    return true;
}

inline bool tops_nonincreasing(const ColumnConvexPoly& poly) {
    const auto& c = poly.columns();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i + 1].top() > c[i].top()) return false;
    return true;
}

inline bool bottoms_nondecreasing(const ColumnConvexPoly& poly) {
    const auto& c = poly.columns();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i + 1].bottom < c[i].bottom) return false;
    return true;
}

// Counts grow like 4^n; past this bound a run would eat the machine unless
// the caller raises the limit explicitly.
inline constexpr int kDefaultSafetyBound = 16;

struct GeneratorOptions {
    int safety_bound = kDefaultSafetyBound;
};

namespace detail_gen {

template <class F>
void extend(std::vector<ColumnSpan>& cols, int lo, int hi, int bound, F& visit) {
    visit(cols);
    int v = static_cast<int>(cols.size());
    if (v + 1 + (hi - lo) > bound) return;
    ColumnSpan prev = cols.back();
    // children in increasing (bottom, height): DFS preorder is lexicographic
    for (int b = prev.bottom - (bound - 1); b <= prev.bottom + prev.height - 1; ++b) {
        for (int h = std::max(1, prev.bottom - b + 1); h <= bound - v - 1; ++h) {
            if (b + h - 1 < prev.bottom) continue;
            int nlo = std::min(lo, b), nhi = std::max(hi, b + h);
            if (v + 1 + (nhi - nlo) <= bound) {
                cols.push_back({b, h});
                extend(cols, nlo, nhi, bound, visit);
                cols.pop_back();
            }
        }
    }
}

}  // namespace detail_gen

// Visits every normalized column-convex polyomino with rows + cols <= n,
// each exactly once, in a deterministic DFS-preorder (lexicographic on the
// column sequence). Restricting to a fixed first-column height gives the
// deterministic work partitioning.
template <class F>
void for_each_column_convex_first_height(int n, int first_height, F&& visit) {
    if (1 + first_height > n) return;
    std::vector<ColumnSpan> cols{{0, first_height}};
    auto cb = [&](const std::vector<ColumnSpan>& cs) { visit(cs); };
    detail_gen::extend(cols, 0, first_height, n, cb);
}

template <class F>
void for_each_column_convex(int n, F&& visit, const GeneratorOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("half-perimeter bound must be >= 2");
    if (n > opt.safety_bound)
        throw std::invalid_argument(
            "bound exceeds the safety limit; raise GeneratorOptions::safety_bound explicitly");
    for (int h1 = 1; h1 <= n - 1; ++h1)
        for_each_column_convex_first_height(n, h1, visit);
}

enum class PolyClass { column_convex, convex };

// Exact counts (and optional p^B q^U refinement) by half-perimeter. For the
// column-convex class the half-perimeter statistic is cols + east_edges (the
// grading of the series this library produces); for convex polyominoes that
// equals rows + cols.
struct CountTable {
    struct Entry {
        Integer count = 0;
        std::map<std::pair<int, int>, Integer> pq;  // (B, U) -> count
    };
    int bound = 0;
    PolyClass cls = PolyClass::column_convex;
    bool carlitz_only = false;
    bool full_stats = false;
    std::map<int, Entry> rows;  // half-perimeter -> entry

    void merge(const CountTable& o) {
        for (const auto& [n, e] : o.rows) {
            auto& mine = rows[n];
            mine.count += e.count;
            for (const auto& [bu, c] : e.pq) mine.pq[bu] += c;
        }
    }
};

inline CountTable count_by_stats(int n, PolyClass cls, bool carlitz_only,
                                 bool full_stats = false, int threads = 1,
                                 const GeneratorOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("half-perimeter bound must be >= 2");
    if (n > opt.safety_bound)
        throw std::invalid_argument(
            "bound exceeds the safety limit; raise GeneratorOptions::safety_bound explicitly");

    auto run_partition = [&](int h1, CountTable& out) {
        for_each_column_convex_first_height(n, h1, [&](const std::vector<ColumnSpan>& cols) {
            ColumnConvexPoly poly{std::vector<ColumnSpan>(cols)};
            PolyStats s = stats(poly);
            int half = cls == PolyClass::convex ? s.rows + s.cols : s.gf_half_perimeter();
            if (half > n) return;
            if (carlitz_only && !is_carlitz(s)) return;
            if (cls == PolyClass::convex && !is_convex(poly)) return;
            auto& e = out.rows[half];
            e.count += 1;
            if (full_stats) e.pq[{s.bottom_levels, s.top_levels}] += 1;
        });
    };

    std::vector<CountTable> parts(n);
    if (threads <= 1) {
        for (int h1 = 1; h1 <= n - 1; ++h1) run_partition(h1, parts[h1 - 1]);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = std::max(1, threads);
        for (std::size_t w = 0; w < stride; ++w) {
            pool.emplace_back([&, w] {
                for (int h1 = 1 + static_cast<int>(w); h1 <= n - 1;
                     h1 += static_cast<int>(stride))
                    run_partition(h1, parts[h1 - 1]);
            });
        }
        for (auto& th : pool) th.join();
    }

    CountTable total;
    total.bound = n;
    total.cls = cls;
    total.carlitz_only = carlitz_only;
    total.full_stats = full_stats;
    for (int h = 2; h <= n; ++h) total.rows[h];  // ensure explicit zero rows
    for (const auto& part : parts) total.merge(part);
    return total;
}

// Family membership keys for the consistency checks: first-column size a,
// column count m, row statistic e, bottom/top levels. The convex families
// use rows (== east_edges there); the unrestricted family uses east_edges.
struct FamilyKey {
    int a = 0, m = 0, e = 0, B = 0, U = 0;
    auto operator<=>(const FamilyKey&) const = default;
};
using FamilyTable = std::map<FamilyKey, Integer>;

struct BruteFamilies {
    FamilyTable f;      // column-convex, graded by east_edges
    FamilyTable g_bt;   // convex, tops nonincreasing and bottoms nondecreasing
    FamilyTable g_t;    // convex, tops nonincreasing
    FamilyTable g_b;    // convex, bottoms nondecreasing
    FamilyTable g;      // convex
};

inline BruteFamilies brute_family_tables(int n, const GeneratorOptions& opt = {}) {
    BruteFamilies out;
    for_each_column_convex(
        n,
        [&](const std::vector<ColumnSpan>& cols) {
            ColumnConvexPoly poly{std::vector<ColumnSpan>(cols)};
            PolyStats s = stats(poly);
            int a = cols.front().height;
            if (s.gf_half_perimeter() <= n)
                out.f[{a, s.cols, s.east_edges, s.bottom_levels, s.top_levels}] += 1;
            if (s.rows + s.cols <= n && is_convex(poly)) {
                FamilyKey k{a, s.cols, s.rows, s.bottom_levels, s.top_levels};
                out.g[k] += 1;
                bool t = tops_nonincreasing(poly), b = bottoms_nondecreasing(poly);
                if (t) out.g_t[k] += 1;
                if (b) out.g_b[k] += 1;
                if (t && b) out.g_bt[k] += 1;
            }
        },
        opt);
    return out;
}

}  // namespace carlitz
