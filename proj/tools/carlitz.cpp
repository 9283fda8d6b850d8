// Command-line interface: exact enumeration, series expansion, consistency
// checking, and asymptotic validation for Carlitz polyomino counting.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carlitz/asymptotics.hpp"
#include "carlitz/closed_forms.hpp"
#include "carlitz/consistency.hpp"
#include "carlitz/polyomino.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/version.hpp"

namespace fs = std::filesystem;
using namespace carlitz;

namespace {

std::optional<fs::path> cache_root(const std::string& flag_value, bool no_cache) {
    if (no_cache) return std::nullopt;
    if (!flag_value.empty()) return fs::path(flag_value);
    if (const char* env = std::getenv("CARLITZ_CACHE_DIR")) return fs::path(env);
    return std::nullopt;  // caching is opt-in
}

struct SeriesPayload {
    json j;                 // {"series": ...} or {"plus": ..., "minus": ...}
    bool pair = false;
};

// Univariate list views per target: kind 0 = not univariate, 1 = coefficient
// of t^{2n} listed at index n (half-perimeter indexing), 2 = coefficient of
// t^k listed at index k (unit-perimeter indexing, like the printed form).
int univariate_kind(GFTarget t) {
    switch (t) {
        case GFTarget::CC_CARLITZ_PERIM:
        case GFTarget::DQ_G1_AT_1:
        case GFTarget::DQ_F1_AT_1:
            return 1;
        case GFTarget::CONVEX_CARLITZ_PERIM:
            return 2;
        default:
            return 0;
    }
}

MultiSeries dq_f1_univariate(int order) {
    std::vector<Integer> c = dq_f1_coefficients(order);
    Truncation tr;
    tr[Var::t] = 2 * order;
    tr.weight_cap = 2 * order;
    MultiSeries out(tr);
    for (int n = 0; n <= order; ++n) out.add_term(exps(2 * n), Rational(c[n]));
    return out;
}

SeriesPayload evaluate_target(GFTarget target, int order) {
    SeriesPayload p;
    switch (target) {
        case GFTarget::F1_qq: p.j = json{{"series", to_json(f1_qq(order))}}; break;
        case GFTarget::F1_00: p.j = json{{"series", to_json(f1_00(order))}}; break;
        case GFTarget::CC_CARLITZ_PERIM:
            p.j = json{{"series", to_json(cc_carlitz_perimeter_gf(order))}};
            break;
        case GFTarget::GBT_U: p.j = json{{"series", to_json(gbt_u(order))}}; break;
        case GFTarget::GT_U: p.j = json{{"series", to_json(gt_u(order))}}; break;
        case GFTarget::GT_1: p.j = json{{"series", to_json(gt_1(order))}}; break;
        case GFTarget::G1_FULL: p.j = json{{"series", to_json(g1_full(order))}}; break;
        case GFTarget::G1_XX_QQ: p.j = json{{"series", to_json(g1_xx_qq(order))}}; break;
        case GFTarget::CONVEX_CARLITZ_PERIM:
            p.j = json{{"series", to_json(convex_carlitz_perimeter_gf(order))}};
            break;
        case GFTarget::DQ_G1_AT_1: p.j = json{{"series", to_json(dq_g1_at_1(order))}}; break;
        case GFTarget::DQ_F1_AT_1:
            p.j = json{{"series", to_json(dq_f1_univariate(order))}};
            break;
        case GFTarget::U_PLUS_MINUS_SEC2: {
            auto [up, um] = roots_sec2(order);
            p.j = json{{"plus", to_json(up)}, {"minus", to_json(um)}};
            p.pair = true;
            break;
        }
        case GFTarget::U_PRIME_SEC3:
            p.j = json{{"series", to_json(u_prime_sec3(order))}};
            break;
        case GFTarget::U_PM_KERNEL_SEC3: {
            auto [up, um] = kernel_roots_sec3(order);
            p.j = json{{"plus", to_json(up)}, {"minus", to_json(um)}};
            p.pair = true;
            break;
        }
    }
    return p;
}

std::string rational_str(const Rational& r) {
    return is_integer(r) ? decimal(r.get_num())
                         : decimal(r.get_num()) + "/" + decimal(r.get_den());
}

void print_series_terms(std::ostream& os, const MultiSeries& s) {
    s.for_each_term([&](const Exps& e, const Rational& c) {
        os << rational_str(c);
        for (int i = 0; i < kNumVars; ++i)
            if (e[i]) os << " " << kVarNames[i] << "^" << e[i];
        os << "\n";
    });
}

std::vector<Rational> coefficient_list(const MultiSeries& s, int order, int kind) {
    std::vector<Rational> out;
    for (int i = 0; i <= order; ++i) {
        Exps e = exps(kind == 1 ? 2 * i : i);
        out.push_back(s.coefficient(e));
    }
    return out;
}

int run_enumerate(int n, const std::string& cls, bool carlitz, bool full_stats,
                  const std::string& format, int threads, int safety) {
    GeneratorOptions opt;
    opt.safety_bound = safety;
    PolyClass pc = cls == "convex" ? PolyClass::convex : PolyClass::column_convex;
    CountTable tab = count_by_stats(n, pc, carlitz, full_stats, threads, opt);
    if (format == "json") {
        std::cout << to_json(tab).dump(2) << "\n";
        return 0;
    }
    if (format == "csv") std::cout << "n,count\n";
    for (const auto& [half, e] : tab.rows) {
        if (format == "bfile")
            std::cout << half << " " << e.count.get_str() << "\n";
        else if (format == "csv")
            std::cout << half << "," << e.count.get_str() << "\n";
        else {
            std::cout << half << "\t" << e.count.get_str();
            if (full_stats) {
                std::cout << "\t";
                bool first = true;
                for (const auto& [bu, c] : e.pq) {
                    if (!first) std::cout << " + ";
                    first = false;
                    std::cout << c.get_str();
                    if (bu.first) std::cout << "*p^" << bu.first;
                    if (bu.second) std::cout << "*q^" << bu.second;
                }
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_series(const std::string& target_name, int order, const std::string& format,
               const std::string& cache_dir, bool no_cache, bool allow_large) {
    std::optional<GFTarget> target;
    for (int i = 0; i <= static_cast<int>(GFTarget::U_PM_KERNEL_SEC3); ++i) {
        GFTarget t = static_cast<GFTarget>(i);
        if (target_name == carlitz::target_name(t)) target = t;
    }
    if (!target) {
        std::cerr << "unknown target '" << target_name << "'\n";
        return 2;
    }
    // the u-expanded and full-statistics targets grow quickly with order
    int soft_cap = 64;
    switch (*target) {
        case GFTarget::GBT_U:
        case GFTarget::GT_U: soft_cap = 9; break;
        case GFTarget::G1_FULL: soft_cap = 11; break;
        case GFTarget::F1_qq:
        case GFTarget::F1_00:
        case GFTarget::GT_1: soft_cap = 14; break;
        case GFTarget::DQ_F1_AT_1: soft_cap = 300; break;
        case GFTarget::G1_XX_QQ: soft_cap = 40; break;
        case GFTarget::U_PLUS_MINUS_SEC2:
        case GFTarget::U_PRIME_SEC3:
        case GFTarget::U_PM_KERNEL_SEC3: soft_cap = 14; break;
        default: soft_cap = 1000; break;
    }
    if (order > soft_cap && !allow_large) {
        std::cerr << "order " << order << " exceeds the safety cap " << soft_cap
                  << " for this target; pass --allow-large to override\n";
        return 2;
    }

    auto root = cache_root(cache_dir, no_cache);
    fs::path entry;
    json payload;
    bool from_cache = false;
    if (root) {
        entry = *root / (target_name + "-" + std::to_string(order) + ".json");
        if (fs::exists(entry)) {
            std::ifstream in(entry);
            json j = json::parse(in, nullptr, false);
            if (!j.is_discarded() && j.value("version", "") == kVersion &&
                j.value("target", "") == target_name && j.value("order", -1) == order) {
                payload = std::move(j);
                from_cache = true;
            }
            // stale or foreign entries are ignored, never trusted
        }
    }
    if (!from_cache) {
        SeriesPayload p = evaluate_target(*target, order);
        payload = std::move(p.j);
        payload["version"] = kVersion;
        payload["target"] = target_name;
        payload["order"] = order;
        if (root) {
            fs::create_directories(*root);
            std::ofstream out(entry);
            out << payload.dump(2) << "\n";
        }
    }

    int kind = univariate_kind(*target);
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return 0;
    }
    if (!payload.contains("series")) {
        for (const char* side : {"plus", "minus"}) {
            std::cout << side << ":\n";
            print_series_terms(std::cout, series_from_json(payload[side]));
        }
        return 0;
    }
    MultiSeries s = series_from_json(payload["series"]);
    if (kind == 0) {
        if (format != "text") {
            std::cerr << "format '" << format << "' needs a univariate target\n";
            return 2;
        }
        print_series_terms(std::cout, s);
        return 0;
    }
    std::vector<Rational> coeffs = coefficient_list(s, order, kind);
    if (format == "bfile") {
        for (int i = 0; i <= order; ++i)
            std::cout << i << " " << rational_str(coeffs[i]) << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (int i = 0; i <= order; ++i)
            std::cout << i << "," << rational_str(coeffs[i]) << "\n";
    } else {
        bool first = true;
        for (const Rational& c : coeffs) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << rational_str(c);
        }
        std::cout << "\n";
    }
    return 0;
}

int run_check(int n, int safety) {
    GeneratorOptions opt;
    opt.safety_bound = safety;
    CheckReport rep = run_consistency(n, OracleMutation::none, opt);
    for (const auto& s : rep.passed) std::cout << "PASS " << s << "\n";
    for (const auto& s : rep.failures) std::cout << "FAIL " << s << "\n";
    std::cout << (rep.ok ? "all checks passed" : "CHECK FAILED") << "\n";
    return rep.ok ? 0 : 1;
}

int run_asympt(const std::string& target_name, long n, const std::string& checkpoints,
               const std::string& format, int digits) {
    std::optional<AsymTarget> target;
    for (AsymTarget t : {AsymTarget::cc_carlitz, AsymTarget::cc_levels,
                         AsymTarget::convex_carlitz, AsymTarget::convex_levels})
        if (target_name == asym_target_name(t)) target = t;
    if (!target) {
        std::cerr << "unknown target '" << target_name << "'\n";
        return 2;
    }
    if (checkpoints.empty()) {
        if (n < 2) {
            std::cerr << "need -n or --checkpoints\n";
            return 2;
        }
        std::cout << predict(*target, n).str(digits) << "\n";
        return 0;
    }
    std::vector<long> ns;
    std::stringstream ss(checkpoints);
    std::string tok;
    while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
    ConvergenceReport rep = convergence_report(*target, ns);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(json{{"n", r.n},
                                {"exact", r.exact.get_str()},
                                {"predicted", r.predicted.str(digits)},
                                {"ratio", r.ratio.str(digits)}});
        std::cout << json{{"target", target_name},
                          {"rows", rows},
                          {"gap_decreasing", rep.gap_decreasing}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (format == "csv") std::cout << "n,exact,predicted,ratio\n";
    for (const auto& r : rep.rows) {
        const char* sep = format == "csv" ? "," : "\t";
        std::cout << r.n << sep << r.exact.get_str() << sep << r.predicted.str(digits)
                  << sep << r.ratio.str(digits) << "\n";
    }
    std::cout << "|ratio-1| strictly decreasing: " << (rep.gap_decreasing ? "yes" : "no")
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and series toolkit for Carlitz polyominoes"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count polyominoes by half-perimeter");
    int n = 6;
    std::string cls = "cc";
    bool carlitz_flag = false, full_stats = false;
    std::string format = "text";
    int threads = 1, safety = kDefaultSafetyBound;
    enumerate->add_option("-n", n, "half-perimeter bound");
    enumerate->add_option("--class", cls, "cc (column-convex) or convex")
        ->check(CLI::IsMember({"cc", "convex"}));
    enumerate->add_flag("--carlitz", carlitz_flag, "Carlitz polyominoes only");
    enumerate->add_flag("--full-stats", full_stats, "emit the (p,q) level polynomials");
    enumerate->add_option("--format", format, "text, json, csv or bfile")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
    enumerate->add_option("--threads", threads, "worker threads (deterministic merge)");
    enumerate->add_option("--safety-bound", safety, "raise the enumeration size guard");

    // series
    auto* series = app.add_subcommand("series", "expand a generating function");
    std::string target = "cc-carlitz-perim";
    int order = 10;
    std::string cache_dir;
    bool no_cache = false, allow_large = false;
    std::string sformat = "text";
    series->add_option("--target", target, "generating function name")->required();
    series->add_option("--order", order, "truncation order")->required();
    series->add_option("--format", sformat, "text, json, csv or bfile")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
    series->add_option("--cache-dir", cache_dir,
                       "coefficient cache directory (or CARLITZ_CACHE_DIR)");
    series->add_flag("--no-cache", no_cache, "bypass the cache");
    series->add_flag("--allow-large", allow_large, "override per-target order caps");

    // check
    auto* check = app.add_subcommand("check", "run the consistency suite");
    int check_n = 8;
    int check_safety = kDefaultSafetyBound;
    check->add_option("-n", check_n, "half-perimeter bound for the suite");
    check->add_option("--safety-bound", check_safety, "raise the enumeration size guard");

    // asympt
    auto* asympt = app.add_subcommand("asympt", "asymptotic predictions and convergence");
    std::string atarget = "cc-carlitz";
    long an = 0;
    std::string checkpoints;
    std::string aformat = "text";
    int digits = 50;
    asympt->add_option("--target", atarget,
                       "cc-carlitz, cc-levels, convex-carlitz or convex-levels");
    asympt->add_option("-n", an, "evaluate the prediction at this index");
    asympt->add_option("--checkpoints", checkpoints, "comma-separated exact/predicted table");
    asympt->add_option("--format", aformat, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    asympt->add_option("--digits", digits, "significant digits in printed reals");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate)
            return run_enumerate(n, cls, carlitz_flag, full_stats, format, threads, safety);
        if (*series) return run_series(target, order, sformat, cache_dir, no_cache, allow_large);
        if (*check) return run_check(check_n, check_safety);
        if (*asympt) return run_asympt(atarget, an, checkpoints, aformat, digits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
