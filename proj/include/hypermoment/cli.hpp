#pragma once

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermoment/checks.hpp"
#include "hypermoment/hypermoment.hpp"
#include "hypermoment/parallel.hpp"

namespace hypermoment::cli {

// exit codes: 0 success, 1 usage error, 2 precision loss, 3 method
// inapplicable, 4 identity violation
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_precision = 2, exit_inapplicable = 3,
                exit_violation = 4 };

struct RunConfig {
    std::string command;  // hp | check | moments
    i64 prime = 0;
    i64 prime_lo = 0;
    i64 prime_hi = 0;
    std::string datum;         // named selector, e.g. HD(3,1) or HD(2,4,3)
    std::string alpha, beta;   // explicit comma-separated rationals
    std::string method = "auto";
    i64 m_max = 6;
    bool square_argument = false;
    std::string format = "csv";
    std::string out;           // empty = stdout
    int threads = 0;
};

struct Output {
    std::string text;
    int exit_code = exit_ok;
};

namespace detail {

inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t slash = item.find('/');
        if (slash == std::string::npos)
            out.emplace_back(std::stoll(item), 1);
        else
            out.emplace_back(std::stoll(item.substr(0, slash)), std::stoll(item.substr(slash + 1)));
    }
    return out;
}

inline HGDatum parse_datum(const RunConfig& cfg) {
    if (!cfg.datum.empty()) {
        std::string s = cfg.datum;
        std::erase(s, ' ');
        for (const HGDatum& d : named_data_catalog())
            if (d.name == s) return d;
        throw Error("unknown datum selector: " + cfg.datum);
    }
    if (cfg.alpha.empty() || cfg.beta.empty()) throw Error("need --datum or --alpha/--beta");
    return validate_datum(parse_rationals(cfg.alpha), parse_rationals(cfg.beta), "custom");
}

inline Method parse_method(const std::string& m, const HGDatum& d, const PrimeContext& ctx,
                           bool batch) {
    if (m == "charsum") return Method::charsum;
    if (m == "dft") return Method::dft;
    if (m == "curve") return Method::curve;
    if (m == "algebraic") return Method::algebraic;
    if (m == "auto") return resolve_method(d, ctx, batch);
    throw Error("unknown method: " + m);
}

inline int map_exit(const std::exception& e) {
    if (dynamic_cast<const PrecisionLoss*>(&e)) return exit_precision;
    if (dynamic_cast<const NonSplitPrime*>(&e)) return exit_inapplicable;
    if (dynamic_cast<const MethodInapplicable*>(&e)) return exit_inapplicable;
    if (dynamic_cast<const SmallPrime*>(&e)) return exit_inapplicable;
    if (dynamic_cast<const NotAlgebraicDatum*>(&e)) return exit_inapplicable;
    if (dynamic_cast<const IdentityViolation*>(&e)) return exit_violation;
    return exit_usage;
}

inline nlohmann::json config_echo(const RunConfig& cfg) {
    return {{"command", cfg.command}, {"prime", cfg.prime},     {"prime_lo", cfg.prime_lo},
            {"prime_hi", cfg.prime_hi}, {"datum", cfg.datum},   {"alpha", cfg.alpha},
            {"beta", cfg.beta},       {"method", cfg.method},   {"m_max", cfg.m_max},
            {"square", cfg.square_argument},                    {"format", cfg.format}};
}

inline std::string json_document(const RunConfig& cfg, nlohmann::json rows, double wall_ms) {
    nlohmann::json doc;
    doc["metadata"] = {{"version", version}, {"config", config_echo(cfg)}, {"wall_time_ms", wall_ms}};
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// hp: one row per lambda in F_p.
// ---------------------------------------------------------------------------

inline Output cmd_hp(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    try {
        HGDatum d = detail::parse_datum(cfg);
        PrimeContext ctx = build_context(cfg.prime);
        Method method = detail::parse_method(cfg.method, d, ctx, true);
        const i64 p = ctx.p;

        GaussTable gauss;
        const GaussTable* gp = nullptr;
        HGTable table;
        if (method == Method::charsum) {
            gauss = gauss_table(ctx);
            table.num.assign(static_cast<size_t>(p), 0);
            table.num[0] = 1;
            for (i64 lam = 1; lam < p; ++lam) {
                HGValue v = hp_charsum(d, lam, ctx, gauss);
                if (v.den != 1 && table.den == 1) {
                    table.den = v.den;
                    for (i64 j = 0; j < lam; ++j) table.num[static_cast<size_t>(j)] *= v.den;
                }
                table.num[static_cast<size_t>(lam)] = (table.den == v.den) ? v.value : v.value * table.den;
            }
        } else {
            if (method == Method::dft) {
                gauss = gauss_table(ctx);
                gp = &gauss;
            }
            table = hp_table(d, ctx, method, gp);
        }

        // exact value column: integers, or a/p in lowest terms for the
        // denominator-p data
        auto value_string = [&](i64 lam) {
            i64 num = table.num[static_cast<size_t>(lam)];
            if (table.den == 1 || num == 0) return std::to_string(num);
            i64 g = std::gcd(num < 0 ? -num : num, table.den);
            if (g == table.den) return std::to_string(num / g);
            return std::to_string(num / g) + "/" + std::to_string(table.den / g);
        };

        const char* mname = method_name(method);
        if (cfg.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (i64 lam = 0; lam < p; ++lam)
                rows.push_back({{"lambda", lam}, {"value", value_string(lam)}, {"method", mname}});
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return {detail::json_document(cfg, std::move(rows), ms), exit_ok};
        }
        std::string text = "lambda,value,method\n";
        for (i64 lam = 0; lam < p; ++lam)
            text += std::to_string(lam) + "," + value_string(lam) + "," + mname + "\n";
        return {text, exit_ok};
    } catch (const std::exception& e) {
        return {std::string("error: ") + e.what() + "\n", detail::map_exit(e)};
    }
}

// ---------------------------------------------------------------------------
// moments: per-prime moment reports, rows sorted by (m, p).
// ---------------------------------------------------------------------------

inline Output cmd_moments(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    try {
        HGDatum d = detail::parse_datum(cfg);
        std::vector<i64> primes;
        for (i64 p : primes_in(std::max<i64>(3, cfg.prime_lo), cfg.prime_hi))
            if (p > 2 && d.m % p != 0) primes.push_back(p);

        std::vector<std::vector<MomentReport>> per_prime(primes.size());
        parallel_for(static_cast<i64>(primes.size()), [&](i64 idx) {
            i64 p = primes[static_cast<size_t>(idx)];
            PrimeContext ctx = build_context(p);
            Method method;
            try {
                method = detail::parse_method(cfg.method, d, ctx, true);
            } catch (const Error&) {
                return;  // no applicable method at this prime: skip
            }
            if ((method == Method::dft || method == Method::charsum) && (p - 1) % d.m != 0) return;
            if (method == Method::curve && (!curve_degree(d) || p < 5)) return;
            if (method == Method::algebraic && (!algebraic_case(d) || p <= 3)) return;
            GaussTable gauss;
            const GaussTable* gp = nullptr;
            if (method == Method::dft || method == Method::charsum) {
                gauss = gauss_table(ctx);
                gp = &gauss;
            }
            HGTable hp = hp_table(d, ctx, method == Method::charsum ? Method::dft : method, gp);
            for (i64 m = 1; m <= cfg.m_max; ++m) {
                MomentReport rep = moment_report(d, m, p, hp, cfg.square_argument);
                per_prime[static_cast<size_t>(idx)].push_back(rep);
                if (moment_law(d) == MomentLaw::O3Normalized1) {
                    // second normalization logged for inspection
                    MomentReport alt = rep;
                    alt.normalization_exponent = static_cast<double>(m + 1);
                    alt.normalized = hypermoment::detail::normalized_value(
                        rep.raw_num, rep.raw_den, p, alt.normalization_exponent);
                    alt.target = std::nan("");
                    alt.abs_error = std::nan("");
                    per_prime[static_cast<size_t>(idx)].push_back(alt);
                }
            }
        }, cfg.threads);

        std::vector<MomentReport> rows;
        for (i64 m = 1; m <= cfg.m_max; ++m)
            for (const auto& reports : per_prime)
                for (const MomentReport& rep : reports)
                    if (rep.m == m) rows.push_back(rep);

        if (cfg.format == "json") {
            nlohmann::json jrows = nlohmann::json::array();
            for (const MomentReport& rep : rows)
                jrows.push_back({{"p", rep.p},
                                 {"m", rep.m},
                                 {"raw_sum", rep.raw_sum_string()},
                                 {"normalization_exponent", rep.normalization_exponent},
                                 {"normalized", rep.normalized},
                                 {"target", std::isnan(rep.target) ? "nan" : detail::fmt12(rep.target)},
                                 {"abs_error", std::isnan(rep.abs_error) ? "nan" : detail::fmt12(rep.abs_error)}});
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return {detail::json_document(cfg, std::move(jrows), ms), exit_ok};
        }
        std::string text = "p,m,raw_sum,normalization_exponent,normalized,target,abs_error\n";
        for (const MomentReport& rep : rows) {
            text += std::to_string(rep.p) + "," + std::to_string(rep.m) + "," +
                    rep.raw_sum_string() + "," + detail::fmt12(rep.normalization_exponent) +
                    "," + detail::fmt12(rep.normalized) + "," +
                    (std::isnan(rep.target) ? "nan" : detail::fmt12(rep.target)) + "," +
                    (std::isnan(rep.abs_error) ? "nan" : detail::fmt12(rep.abs_error)) + "\n";
        }
        return {text, exit_ok};
    } catch (const std::exception& e) {
        return {std::string("error: ") + e.what() + "\n", detail::map_exit(e)};
    }
}

// ---------------------------------------------------------------------------
// check: the identity suite over a prime range, JSON report.
// ---------------------------------------------------------------------------

inline Output cmd_check(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    const i64 hi = cfg.prime_hi > 0 ? cfg.prime_hi : 97;
    std::vector<checks::CheckResult> results;
    results.push_back(checks::check_gauss_jacobi_suite(std::min<i64>(hi, 200)));
    results.push_back(checks::check_cross_agreement(std::min<i64>(hi, 300)));
    results.push_back(checks::check_algebraic_formulas(std::min<i64>(hi, 300), std::min<i64>(hi, 1000)));
    results.push_back(checks::check_transformations(std::min<i64>(hi, 500)));
    results.push_back(checks::check_trace_nulls(std::min<i64>(hi, 200)));
    results.push_back(checks::check_trace_eta_oracles(std::min<i64>(hi, 150), 210));
    results.push_back(checks::check_cross_formula(std::min<i64>(hi, 150)));
    results.push_back(checks::check_exact_moments(std::min<i64>(hi, 300), std::min<i64>(hi, 1000),
                                                  std::min<i64>(hi, 300)));
    results.push_back(checks::check_combinatorics());

    bool all_pass = true;
    nlohmann::json jrows = nlohmann::json::array();
    for (const checks::CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        jrows.push_back({{"check", r.name},
                         {"pass", r.pass},
                         {"instances", r.instances},
                         {"notes", r.notes},
                         {"failures", r.failures}});
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {detail::json_document(cfg, std::move(jrows), ms),
            all_pass ? exit_ok : exit_violation};
}

inline Output run(const RunConfig& cfg) {
    if (cfg.command == "hp") return cmd_hp(cfg);
    if (cfg.command == "moments") return cmd_moments(cfg);
    if (cfg.command == "check") return cmd_check(cfg);
    return {"error: unknown command\n", exit_usage};
}

}  // namespace hypermoment::cli
