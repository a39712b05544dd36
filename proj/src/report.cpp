#include "blrc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace blrc {

using nlohmann::json;

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

json rows_hex(const BitMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_hex());
    return rows;
}

}  // namespace

Conformance check_conformance(const BlrcCode& code, const RepairProfile& profile) {
    const auto& pg = code.pg();
    Conformance c;
    c.vartheta = vartheta(pg.s, pg.t, pg.alpha);
    c.rank_parity_even = (pg.s + pg.t + 1 - pg.alpha) % 2 == 0;
    const Rational m(static_cast<std::int64_t>(code.m()));
    c.rank_sandwich = m <= c.vartheta + 1 && (!c.rank_parity_even || c.vartheta <= m);

    c.applicable = pg.s > 1;
    if (!c.applicable) return c;
    c.repair_bounds = profile.r <= pg.s && profile.a >= pg.t + 1;
    c.tolerance_bound = std::all_of(profile.symbols.begin(), profile.symbols.end(),
                           [&](const SymbolProfile& s) { return s.delta >= pg.t + 1; });
    c.rate_lower = rate_lower(pg.s, pg.t + 1);
    c.rate_upper = rate_upper(pg.s, pg.t + 1);
    const auto measured = rate(code).rate;
    c.rate_within_bounds = measured >= c.rate_lower && (!c.rate_upper || measured <= *c.rate_upper);
    return c;
}

json to_json(const PgParams& pg) {
    return {{"s", pg.s},
            {"t", pg.t},
            {"alpha", pg.alpha},
            {"num_points", pg.num_points},
            {"num_lines", pg.num_lines},
            {"class", std::string(to_string(pg.pg_class))},
            {"grid_degenerate", pg.grid_degenerate}};
}

json code_to_json(const BlrcCode& code) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = code.n();
    j["k"] = code.k();
    j["info_set"] = code.info_set();
    j["H"] = rows_hex(code.parity_check());
    j["G"] = rows_hex(code.generator());
    return j;
}

json profile_to_json(const RepairProfile& profile) {
    json per_r = json::array(), per_a = json::array(), per_delta = json::array(), supports = json::array(),
         blocking = json::array();
    for (const auto& s : profile.symbols) {
        per_r.push_back(s.r);
        per_a.push_back(s.a);
        per_delta.push_back(s.delta);
        supports.push_back(s.repair_sets);
        blocking.push_back(s.blocking_set);
    }
    return {{"mode", std::string(to_string(profile.mode))},
            {"r_bound", profile.r_bound},
            {"overall", {{"r", profile.r}, {"a", profile.a}, {"delta", profile.delta}}},
            {"balanced", profile.balanced},
            {"r_i", per_r},
            {"a_i", per_a},
            {"delta_i", per_delta},
            {"repair_sets", supports},
            {"blocking_sets", blocking}};
}

json analysis_json(const BlrcCode& code, const RepairProfile& profile) {
    const auto c = check_conformance(code, profile);
    const auto rt = rate(code);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["geometry"] = code.geometry().label();
    j["pg"] = to_json(code.pg());
    j["n"] = code.n();
    j["k"] = code.k();
    j["m"] = code.m();
    j["rate"] = to_string(rt.rate);
    j["rate_decimal"] = boost::rational_cast<double>(rt.rate);
    j["footprint"] = to_string(rt.footprint);
    j["profile"] = profile_to_json(profile);
    // delta is a minimum blocking-set size: every symbol survives delta-1
    // unavailable nodes, and some set of delta nodes blocks local repair.
    j["guaranteed_unavailable"] = profile.delta ? profile.delta - 1 : 0;
    j["blocking_unavailable"] = profile.delta;
    json conf;
    conf["applicable"] = c.applicable;
    conf["vartheta"] = to_string(c.vartheta);
    conf["rank_parity_even"] = c.rank_parity_even;
    conf["rank_sandwich"] = c.rank_sandwich;
    if (c.applicable) {
        conf["repair_bounds"] = c.repair_bounds;
        conf["tolerance_bound"] = c.tolerance_bound;
        conf["rate_within_bounds"] = c.rate_within_bounds;
        conf["rate_lower"] = to_string(c.rate_lower);
        conf["rate_upper"] = c.rate_upper ? json(to_string(*c.rate_upper)) : json(nullptr);
    }
    j["conformance"] = conf;
    return j;
}

std::string profile_csv(const RepairProfile& profile) {
    std::ostringstream out;
    out << "i,r,a,delta\n";
    for (std::size_t i = 0; i < profile.symbols.size(); ++i) {
        const auto& s = profile.symbols[i];
        out << i << ',' << s.r << ',' << s.a << ',' << s.delta << '\n';
    }
    return out.str();
}

json simulation_json(const SimulationReport& report) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] = report.model;
    if (report.model == "iid") {
        j["p"] = report.p;
    } else {
        j["u"] = report.u;
        j["exhaustive"] = report.exhaustive;
    }
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["r_bound"] = report.r_bound;
    j["cases"] = report.cases;
    j["failures"] = report.failures;
    j["success_fraction"] = report.success_fraction;
    j["all_symbols_fraction"] = report.all_symbols_fraction;
    j["mean_retrieved"] = report.mean_retrieved;
    j["per_symbol_success"] = report.per_symbol_success;
    if (report.failure_witness) {
        j["failure_witness"] = {{"symbol", report.failure_witness->first},
                                {"unavailable", report.failure_witness->second}};
    }
    return j;
}

std::string simulation_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "symbol,success_fraction\n";
    for (std::size_t i = 0; i < report.per_symbol_success.size(); ++i) {
        out << i << ',' << fixed6(report.per_symbol_success[i]) << '\n';
    }
    out << "all," << fixed6(report.success_fraction) << '\n';
    out << "# model=" << report.model;
    if (report.model == "iid") {
        out << " p=" << fixed6(report.p);
    } else {
        out << " u=" << report.u << " exhaustive=" << (report.exhaustive ? "true" : "false");
    }
    out << " trials=" << report.trials << " seed=" << report.seed << " cases=" << report.cases
        << " failures=" << report.failures << " all_symbols_fraction=" << fixed6(report.all_symbols_fraction)
        << " mean_retrieved=" << fixed6(report.mean_retrieved) << '\n';
    return out.str();
}

json bounds_json(const std::vector<RateBounds>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"r", r.r},
                       {"a", r.a},
                       {"rate_lower", to_string(r.lower)},
                       {"rate_upper", r.upper ? json(to_string(*r.upper)) : json(nullptr)},
                       {"applicable", r.upper.has_value()},
                       {"vartheta", to_string(r.vartheta)}});
    }
    return {{"schema_version", kSchemaVersion}, {"rows", arr}};
}

namespace {

json entry_json(const CatalogEntry& e) {
    return {{"r", e.r},
            {"a", e.a},
            {"s", e.s},
            {"t", e.t},
            {"from_dual", e.from_dual},
            {"source", e.source},
            {"n", e.n},
            {"rate_estimate", to_string(e.rate_estimate)},
            {"rate_estimate_decimal", boost::rational_cast<double>(e.rate_estimate)},
            {"estimator", e.estimator_used},
            {"passes_filter", e.passes_filter}};
}

}  // namespace

json catalog_json(const Catalog& catalog) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["estimator"] = std::string(to_string(catalog.options.estimator));
    j["max_n"] = catalog.options.max_n;
    j["min_rate"] = to_string(catalog.options.min_rate);
    json pairs = json::array();
    if (catalog.grid_family) {
        pairs.push_back({{"family", "(r,2)"}, {"r_min", catalog.grid_family->lo}, {"r_max", catalog.grid_family->hi}});
    }
    for (const auto& e : catalog.sporadic()) pairs.push_back(entry_json(e));
    j["pairs"] = pairs;
    json all = json::array();
    for (const auto& e : catalog.candidates) all.push_back(entry_json(e));
    j["candidates"] = all;
    return j;
}

std::string catalog_csv(const Catalog& catalog) {
    std::ostringstream out;
    out << "r,a,s,t,from_dual,n,rate_estimate,estimator,passes_filter\n";
    for (const auto& e : catalog.candidates) {
        out << e.r << ',' << e.a << ',' << e.s << ',' << e.t << ',' << (e.from_dual ? "true" : "false") << ','
            << e.n << ',' << to_string(e.rate_estimate) << ',' << e.estimator_used << ','
            << (e.passes_filter ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace blrc
