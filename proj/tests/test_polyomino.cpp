#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "carlitz/polyomino.hpp"

using namespace carlitz;

TEST_CASE("stats of the small shapes") {
    PolyStats cell = stats(ColumnConvexPoly::from_pairs({{0, 1}}));
    CHECK(cell.rows == 1);
    CHECK(cell.cols == 1);
    CHECK(cell.bottom_levels == 0);
    CHECK(cell.top_levels == 0);
    CHECK(cell.perimeter() == 4);
    CHECK(is_carlitz(cell));

    PolyStats domino = stats(ColumnConvexPoly::from_pairs({{0, 1}, {0, 1}}));
    CHECK(domino.rows == 1);
    CHECK(domino.cols == 2);
    CHECK(domino.bottom_levels == 1);
    CHECK(domino.top_levels == 1);
    CHECK(domino.perimeter() == 6);
    CHECK_FALSE(is_carlitz(domino));

    PolyStats stair = stats(ColumnConvexPoly::from_pairs({{0, 2}, {1, 2}}));
    CHECK(stair.rows == 3);
    CHECK(stair.cols == 2);
    CHECK(stair.bottom_levels == 0);
    CHECK(stair.top_levels == 0);
    CHECK(stair.perimeter() == 10);
    CHECK(is_carlitz(stair));
}

TEST_CASE("invalid column sequences are rejected") {
    CHECK_THROWS_AS(ColumnConvexPoly::from_pairs({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnConvexPoly::from_pairs({{0, 1}, {-2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnConvexPoly::from_pairs({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnConvexPoly::from_pairs({{0, 0}}), std::invalid_argument);
}

TEST_CASE("convexity scan") {
    CHECK(is_convex(ColumnConvexPoly::from_pairs({{0, 4}})));
    // row 0 covered by columns 1 and 3 but not 2
    CHECK_FALSE(is_convex(ColumnConvexPoly::from_pairs({{0, 3}, {1, 1}, {0, 3}})));
    CHECK(is_convex(ColumnConvexPoly::from_pairs({{0, 3}, {0, 2}, {0, 1}})));
    // cross / plus shape is convex
    CHECK(is_convex(ColumnConvexPoly::from_pairs({{0, 1}, {-1, 3}, {0, 1}})));
}

TEST_CASE("generator: exact small counts and determinism") {
    std::vector<std::vector<ColumnSpan>> first, second;
    for_each_column_convex(3, [&](const std::vector<ColumnSpan>& c) { first.push_back(c); });
    for_each_column_convex(3, [&](const std::vector<ColumnSpan>& c) { second.push_back(c); });
    CHECK(first == second);
    CHECK(first.size() == 3);  // cell, vertical domino, horizontal domino

    int n2 = 0;
    for_each_column_convex(2, [&](const std::vector<ColumnSpan>&) { ++n2; });
    CHECK(n2 == 1);

    // uniqueness of normalized representatives
    std::set<std::vector<std::pair<int, int>>> seen;
    for_each_column_convex(7, [&](const std::vector<ColumnSpan>& c) {
        std::vector<std::pair<int, int>> key;
        for (auto s : c) key.emplace_back(s.bottom, s.height);
        CHECK(seen.insert(key).second);
    });
}

TEST_CASE("generator refuses bounds beyond the safety limit") {
    CHECK_THROWS_AS(for_each_column_convex(17, [](const std::vector<ColumnSpan>&) {}),
                    std::invalid_argument);
    GeneratorOptions opt;
    opt.safety_bound = 18;
    int count = 0;
    CHECK_NOTHROW(count_by_stats(4, PolyClass::column_convex, false, false, 1, opt));
    (void)count;
    CHECK_THROWS_AS(count_by_stats(1, PolyClass::column_convex, false), std::invalid_argument);
}

TEST_CASE("column-convex Carlitz counts by half-perimeter") {
    CountTable t = count_by_stats(6, PolyClass::column_convex, true);
    std::vector<long> got;
    for (auto& [n, e] : t.rows) got.push_back(e.count.get_si());
    CHECK(got == std::vector<long>{1, 1, 1, 5, 14});
}

TEST_CASE("convex Carlitz counts by half-perimeter") {
    CountTable t = count_by_stats(5, PolyClass::convex, true);
    std::vector<long> got;
    for (auto& [n, e] : t.rows) got.push_back(e.count.get_si());
    CHECK(got == std::vector<long>{1, 1, 1, 5});
}

TEST_CASE("full statistics polynomial at half-perimeter 3 (convex)") {
    CountTable t = count_by_stats(3, PolyClass::convex, false, true);
    const auto& e = t.rows.at(3);
    CHECK(e.count == 2);
    CHECK(e.pq.at({0, 0}) == 1);  // vertical domino
    CHECK(e.pq.at({1, 1}) == 1);  // horizontal domino: one bottom + one top level
}

TEST_CASE("structural invariants over the generated set") {
    Integer carlitz_total = 0, all_total = 0;
    std::map<int, std::map<std::pair<int, int>, long>> pq_by_n;
    for_each_column_convex(8, [&](const std::vector<ColumnSpan>& c) {
        PolyStats s = stats(ColumnConvexPoly{std::vector<ColumnSpan>(c)});
        CHECK(s.perimeter() == 2 * (s.rows + s.cols));
        CHECK(s.bottom_levels >= 0);
        CHECK(s.bottom_levels <= s.cols - 1);
        CHECK(s.top_levels <= s.cols - 1);
        CHECK(s.east_edges >= s.rows);
        if (is_convex(ColumnConvexPoly{std::vector<ColumnSpan>(c)}))
            CHECK(s.east_edges == s.rows);
        ++all_total;
        if (is_carlitz(s)) ++carlitz_total;
        if (s.gf_half_perimeter() <= 8)
            pq_by_n[s.gf_half_perimeter()][{s.bottom_levels, s.top_levels}] += 1;
    });
    CHECK(carlitz_total <= all_total);
    // upside-down reflection swaps B and U, so the aggregated table is
    // symmetric under (B, U) -> (U, B)
    for (auto& [n, table] : pq_by_n)
        for (auto& [bu, cnt] : table)
            CHECK(table[{bu.second, bu.first}] == cnt);
}

TEST_CASE("carlitz counts never exceed unrestricted counts per class") {
    for (PolyClass cls : {PolyClass::column_convex, PolyClass::convex}) {
        CountTable all = count_by_stats(7, cls, false);
        CountTable carlitz = count_by_stats(7, cls, true);
        for (auto& [n, e] : carlitz.rows) CHECK(e.count <= all.rows.at(n).count);
    }
}

TEST_CASE("partitioned runs merge to the single-threaded table") {
    CountTable seq = count_by_stats(8, PolyClass::column_convex, false, true, 1);
    CountTable par = count_by_stats(8, PolyClass::column_convex, false, true, 4);
    REQUIRE(seq.rows.size() == par.rows.size());
    for (auto& [n, e] : seq.rows) {
        CHECK(par.rows.at(n).count == e.count);
        CHECK(par.rows.at(n).pq == e.pq);
    }
}
