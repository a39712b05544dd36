#include "blrc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blrc/bounds.hpp"
#include "blrc/code.hpp"
#include "blrc/error.hpp"
#include "blrc/geometry.hpp"
#include "blrc/repair.hpp"
#include "blrc/report.hpp"

namespace blrc::cli {

namespace {

struct GeometrySpec {
    std::string input;
    std::string kind;
    std::size_t s = 0;
    unsigned q = 0;
    bool dual = false;
};

void add_geometry_options(CLI::App* cmd, GeometrySpec& spec, bool positional_kind) {
    if (positional_kind) {
        cmd->add_option("kind", spec.kind, "grid | symplectic | elliptic | hyperoval")->required();
    } else {
        cmd->add_option("--input,-i", spec.input, "incidence file");
        cmd->add_option("--geometry,-g", spec.kind, "grid | symplectic | elliptic | hyperoval");
    }
    cmd->add_option("--s", spec.s, "grid size parameter s");
    cmd->add_option("--q", spec.q, "field order q");
    cmd->add_flag("--dual", spec.dual, "use the dual geometry");
}

IncidenceStructure make_geometry(const GeometrySpec& spec) {
    IncidenceStructure inc;
    if (!spec.input.empty()) {
        inc = load(std::filesystem::path(spec.input));
    } else if (spec.kind == "grid") {
        if (spec.s < 1) throw InvalidArgument("grid needs --s >= 1");
        inc = grid(spec.s);
    } else if (spec.kind == "symplectic") {
        inc = symplectic_gq(spec.q);
    } else if (spec.kind == "elliptic") {
        inc = elliptic_quadric_gq(spec.q);
    } else if (spec.kind == "hyperoval") {
        inc = hyperoval_gq(spec.q);
    } else if (spec.kind.empty()) {
        throw InvalidArgument("give --input FILE or --geometry KIND");
    } else {
        throw InvalidArgument("unknown geometry '" + spec.kind + "'");
    }
    return spec.dual ? dual(inc) : inc;
}

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoul(text);
            return {v, v};
        }
        return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw InvalidArgument("bad range '" + text + "' (expected LO..HI or N)");
    }
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InvalidArgument("bad rational '" + text + "' (expected P/Q)");
    }
}

// Writes to --output if set, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw IoError("write failed for " + path);
}

std::string summary_text(const IncidenceStructure& inc, const PgParams& pg) {
    std::ostringstream s;
    s << (inc.label().empty() ? "geometry" : inc.label()) << ": pg(" << pg.s << "," << pg.t << "," << pg.alpha
      << ") points=" << pg.num_points << " lines=" << pg.num_lines << " class=" << to_string(pg.pg_class)
      << (pg.grid_degenerate ? " (grid-degenerate)" : "") << '\n';
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced locally repairable codes from partial geometries"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    std::string format;
    app.add_option("--output,-o", output, "output path (default: stdout)");
    app.add_option("--format,-f", format, "csv | json")->check(CLI::IsMember({"csv", "json", "text"}));

    GeometrySpec construct_spec;
    auto* construct = app.add_subcommand("construct", "build a geometry and write its incidence file");
    add_geometry_options(construct, construct_spec, true);

    GeometrySpec validate_spec;
    auto* validate = app.add_subcommand("validate", "check the partial geometry axioms");
    add_geometry_options(validate, validate_spec, false);

    GeometrySpec analyze_spec;
    bool exhaustive = false;
    std::optional<std::size_t> r_override;
    double guard = kDefaultSearchGuard;
    bool export_code = false;
    auto* analyze = app.add_subcommand("analyze", "build the code and measure r, a, delta");
    add_geometry_options(analyze, analyze_spec, false);
    analyze->add_flag("--exhaustive", exhaustive, "search the whole dual code instead of the lines");
    analyze->add_option("--r", r_override, "repair degree bound for Omega_r (default: measured r)");
    analyze->add_option("--guard", guard, "work limit for exhaustive searches")->check(CLI::PositiveNumber);
    analyze->add_flag("--export-code", export_code, "emit n, k, info_set, H and G instead of metrics");

    GeometrySpec simulate_spec;
    std::optional<double> iid_p;
    std::optional<std::size_t> adversarial_u;
    SimulationOptions sim;
    std::optional<std::uint64_t> seed;
    bool sim_exhaustive = false;
    auto* simulate = app.add_subcommand("simulate", "local repairability under unavailable nodes");
    add_geometry_options(simulate, simulate_spec, false);
    auto* p_opt = simulate->add_option("--p", iid_p, "iid unavailability probability")->check(CLI::Range(0.0, 1.0));
    auto* u_opt = simulate->add_option("--u", adversarial_u, "adversarial unavailable-set size");
    p_opt->excludes(u_opt);
    simulate->add_option("--trials", sim.trials, "trials (iid) or samples per symbol (adversarial)");
    simulate->add_option("--seed", seed, "PRNG seed");
    simulate->add_option("--r", sim.r, "repair degree bound (default: s)");
    simulate->add_flag("--exhaustive", sim_exhaustive, "use exhaustive repair alternatives");
    simulate->add_option("--guard", sim.guard, "work limit for exhaustive searches")->check(CLI::PositiveNumber);

    std::string r_range = "2..10", a_range = "2..10";
    auto* bounds = app.add_subcommand("bounds", "rate bounds table");
    bounds->add_option("--r", r_range, "repair degree range LO..HI");
    bounds->add_option("--a", a_range, "alternativity range LO..HI");

    CatalogOptions cat;
    std::string min_rate = "1/3";
    std::string estimator = std::string(to_string(cat.estimator));
    auto* catalog_cmd = app.add_subcommand("catalog", "practical (r,a) pairs from known generalized quadrangles");
    catalog_cmd->add_option("--max-n", cat.max_n, "maximum code length");
    catalog_cmd->add_option("--min-rate", min_rate, "rates must exceed this (P/Q)");
    catalog_cmd->add_option("--estimator", estimator, "theorem-upper-bound | theorem-lower-bound | exact-rank");

    std::vector<std::string> argv_store{"blrc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (construct->parsed()) {
            const auto inc = make_geometry(construct_spec);
            const auto pg = validate_pg(inc);
            std::ostringstream file;
            save(inc, file);
            if (output.empty()) {
                out << file.str();
                err << summary_text(inc, pg);
            } else {
                emit(file.str(), output, out);
                out << (format == "json" ? to_json(pg).dump(2) + "\n" : summary_text(inc, pg));
            }
        } else if (validate->parsed()) {
            const auto inc = make_geometry(validate_spec);
            const auto pg = validate_pg(inc);
            emit(format == "json" ? to_json(pg).dump(2) + "\n" : summary_text(inc, pg), output, out);
        } else if (analyze->parsed()) {
            const auto code = build_code(make_geometry(analyze_spec));
            if (export_code) {
                emit(code_to_json(code).dump(2) + "\n", output, out);
            } else {
                const auto mode = exhaustive ? MetricMode::Exhaustive : MetricMode::Geometric;
                const auto profile = repair_profile(code, mode, r_override, guard);
                emit(format == "csv" ? profile_csv(profile) : analysis_json(code, profile).dump(2) + "\n", output,
                     out);
            }
        } else if (simulate->parsed()) {
            const auto code = build_code(make_geometry(simulate_spec));
            AvailabilityModel model;
            if (iid_p) {
                if (!seed) throw InvalidArgument("--seed is required for the iid model");
                model = IidUnavailability{*iid_p};
            } else if (adversarial_u) {
                model = AdversarialUnavailability{*adversarial_u};
            } else {
                throw InvalidArgument("give --p (iid) or --u (adversarial)");
            }
            sim.seed = seed.value_or(0);
            sim.mode = sim_exhaustive ? MetricMode::Exhaustive : MetricMode::Geometric;
            const auto report = simulate_availability(code, model, sim);
            emit(format == "json" ? simulation_json(report).dump(2) + "\n" : simulation_csv(report), output, out);
        } else if (bounds->parsed()) {
            const auto rows = bounds_table(parse_range(r_range), parse_range(a_range));
            emit(format == "json" ? bounds_json(rows).dump(2) + "\n" : bounds_csv(rows), output, out);
        } else if (catalog_cmd->parsed()) {
            cat.min_rate = parse_rational(min_rate);
            cat.estimator = parse_estimator(estimator);
            const auto result = catalog(cat);
            emit(format == "csv" ? catalog_csv(result) : catalog_json(result).dump(2) + "\n", output, out);
        }
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return kGuard;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const RepairError& e) {
        err << "repair error: " << e.what() << '\n';
        return kRepair;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace blrc::cli
