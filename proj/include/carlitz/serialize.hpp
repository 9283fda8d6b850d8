#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "carlitz/polyomino.hpp"
#include "carlitz/series.hpp"
#include "carlitz/version.hpp"

namespace carlitz {

using nlohmann::json;

// Series wire format: integers as decimal strings, terms in the engine's
// deterministic order, truncation caps recorded alongside.
inline json to_json(const MultiSeries& s) {
    const Truncation& tr = s.truncation();
    json caps = json::object();
    std::vector<std::string> vars;
    for (int i = 0; i < kNumVars; ++i) {
        if (tr.cap[i] > 0) {
            vars.push_back(kVarNames[i]);
            caps[kVarNames[i]] =
                tr.cap[i] >= Truncation::kUnbounded ? json() : json(tr.cap[i]);
        }
    }
    if (tr.weight_cap != Truncation::kNoWeightCap) caps["weight"] = tr.weight_cap;
    json terms = json::array();
    s.for_each_term([&](const Exps& e, const Rational& c) {
        json term;
        term["exps"] = e;
        term["num"] = decimal(c.get_num());
        term["den"] = decimal(c.get_den());
        terms.push_back(std::move(term));
    });
    return json{{"variables", vars}, {"caps", caps}, {"terms", terms}};
}

inline MultiSeries series_from_json(const json& j) {
    Truncation tr;
    const json& caps = j.at("caps");
    for (int i = 0; i < kNumVars; ++i) {
        if (caps.contains(kVarNames[i])) {
            const json& c = caps[kVarNames[i]];
            tr.cap[i] = c.is_null() ? Truncation::kUnbounded : c.get<int>();
        }
    }
    if (caps.contains("weight")) tr.weight_cap = caps["weight"].get<int>();
    MultiSeries s(tr);
    for (const json& term : j.at("terms")) {
        Exps e{};
        int i = 0;
        for (const json& v : term.at("exps")) e[i++] = v.get<int>();
        s.add_term(e, rational_from_decimal(term.at("num").get<std::string>(),
                                            term.at("den").get<std::string>()));
    }
    return s;
}

inline json to_json(const CountTable& t) {
    json rows = json::array();
    for (const auto& [n, e] : t.rows) {
        json row{{"n", n}, {"count", decimal(e.count)}};
        if (t.full_stats) {
            json pq = json::array();
            for (const auto& [bu, c] : e.pq)
                pq.push_back(json{{"B", bu.first}, {"U", bu.second}, {"count", decimal(c)}});
            row["pq"] = std::move(pq);
        }
        rows.push_back(std::move(row));
    }
    return json{{"version", kVersion},
                {"class", t.cls == PolyClass::convex ? "convex" : "cc"},
                {"carlitz", t.carlitz_only},
                {"bound", t.bound},
                {"rows", rows}};
}

}  // namespace carlitz
