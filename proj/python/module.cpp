#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "blrc/bounds.hpp"
#include "blrc/cli.hpp"
#include "blrc/code.hpp"
#include "blrc/error.hpp"
#include "blrc/geometry.hpp"
#include "blrc/repair.hpp"
#include "blrc/report.hpp"

namespace py = pybind11;
using namespace blrc;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

Rational from_fraction(const py::handle& value) {
    const auto f = py::module_::import("fractions").attr("Fraction")(value);
    return Rational(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
}

py::array_t<std::uint8_t> to_array(const BitMatrix& m) {
    py::array_t<std::uint8_t> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m.get(r, c);
    }
    return out;
}

py::array_t<std::uint8_t> to_array(const std::vector<std::uint8_t>& v) {
    py::array_t<std::uint8_t> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

MetricMode mode_of(bool exhaustive) { return exhaustive ? MetricMode::Exhaustive : MetricMode::Geometric; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Balanced locally repairable codes from partial geometries";

    auto base = py::register_exception<Error>(m, "BlrcError", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<RepairError>(m, "RepairError", base.ptr());

    py::class_<IncidenceStructure>(m, "IncidenceStructure")
        .def(py::init<std::size_t, std::vector<PointSet>, std::string>(), py::arg("num_points"), py::arg("lines"),
             py::arg("label") = "")
        .def_property_readonly("num_points", &IncidenceStructure::num_points)
        .def_property_readonly("num_lines", &IncidenceStructure::num_lines)
        .def_property_readonly("lines", &IncidenceStructure::lines)
        .def_property_readonly("label", &IncidenceStructure::label)
        .def("canonical", &IncidenceStructure::canonical)
        .def("__eq__", [](const IncidenceStructure& a, const IncidenceStructure& b) { return a == b; })
        .def("__repr__", [](const IncidenceStructure& g) {
            return "<IncidenceStructure '" + g.label() + "' points=" + std::to_string(g.num_points()) +
                   " lines=" + std::to_string(g.num_lines()) + ">";
        });

    py::class_<PgParams>(m, "PgParams")
        .def_readonly("s", &PgParams::s)
        .def_readonly("t", &PgParams::t)
        .def_readonly("alpha", &PgParams::alpha)
        .def_readonly("num_points", &PgParams::num_points)
        .def_readonly("num_lines", &PgParams::num_lines)
        .def_readonly("grid_degenerate", &PgParams::grid_degenerate)
        .def_property_readonly("pg_class", [](const PgParams& p) { return std::string(to_string(p.pg_class)); })
        .def("to_dict", [](const PgParams& p) { return to_python(to_json(p)); })
        .def("__eq__", [](const PgParams& a, const PgParams& b) { return a == b; })
        .def("__repr__", [](const PgParams& p) {
            return "pg(" + std::to_string(p.s) + "," + std::to_string(p.t) + "," + std::to_string(p.alpha) + ")";
        });

    m.def("grid", &grid, py::arg("s"));
    m.def("symplectic_gq", &symplectic_gq, py::arg("q"));
    m.def("elliptic_quadric_gq", &elliptic_quadric_gq, py::arg("q"));
    m.def("hyperoval_gq", &hyperoval_gq, py::arg("q"));
    m.def("dual", &dual, py::arg("geometry"));
    m.def("validate_pg", &validate_pg, py::arg("geometry"));
    m.def("make_pg_params", &make_pg_params, py::arg("s"), py::arg("t"), py::arg("alpha"));
    m.def("incidence_matrix", [](const IncidenceStructure& g) { return to_array(incidence_matrix(g)); },
          py::arg("geometry"));
    m.def("load", py::overload_cast<const std::filesystem::path&>(&load), py::arg("path"));
    m.def("save", py::overload_cast<const IncidenceStructure&, const std::filesystem::path&>(&save),
          py::arg("geometry"), py::arg("path"));
    m.def(
        "loads",
        [](const std::string& text) {
            std::istringstream in(text);
            return load(in);
        },
        py::arg("text"));
    m.def(
        "dumps",
        [](const IncidenceStructure& g) {
            std::ostringstream out;
            save(g, out);
            return out.str();
        },
        py::arg("geometry"));

    py::class_<BlrcCode>(m, "Code")
        .def_property_readonly("n", &BlrcCode::n)
        .def_property_readonly("k", &BlrcCode::k)
        .def_property_readonly("m", &BlrcCode::m)
        .def_property_readonly("info_set", &BlrcCode::info_set)
        .def_property_readonly("parity_rows", &BlrcCode::parity_rows)
        .def_property_readonly("pg", &BlrcCode::pg)
        .def_property_readonly("geometry", &BlrcCode::geometry)
        .def_property_readonly("parity_check", [](const BlrcCode& c) { return to_array(c.parity_check()); })
        .def_property_readonly("generator", [](const BlrcCode& c) { return to_array(c.generator()); })
        .def_property_readonly("incidence", [](const BlrcCode& c) { return to_array(c.incidence()); })
        .def_property_readonly("rate", [](const BlrcCode& c) { return fraction(rate(c).rate); })
        .def("to_dict", [](const BlrcCode& c) { return to_python(code_to_json(c)); })
        .def("__repr__", [](const BlrcCode& c) {
            return "<Code n=" + std::to_string(c.n()) + " k=" + std::to_string(c.k()) + ">";
        });

    m.def("build_code", &build_code, py::arg("geometry"));
    m.def(
        "encode",
        [](const BlrcCode& c, const std::vector<std::uint8_t>& message) { return to_array(encode(c, message)); },
        py::arg("code"), py::arg("message"));
    m.def(
        "reconstruct",
        [](const BlrcCode& c, const std::vector<std::size_t>& coords, const std::vector<std::uint8_t>& values) {
            return to_array(reconstruct(c, coords, values));
        },
        py::arg("code"), py::arg("coords"), py::arg("values"));
    m.def(
        "is_information_set",
        [](const BlrcCode& c, const std::vector<std::size_t>& coords) { return is_information_set(c, coords); },
        py::arg("code"), py::arg("coords"));
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("guard") = kDefaultMdsGuard);

    m.def(
        "repair_profile",
        [](const BlrcCode& c, bool exhaustive, std::optional<std::size_t> r, double guard) {
            RepairProfile profile;
            {
                py::gil_scoped_release release;
                profile = repair_profile(c, mode_of(exhaustive), r, guard);
            }
            return to_python(profile_to_json(profile));
        },
        py::arg("code"), py::arg("exhaustive") = false, py::arg("r") = py::none(),
        py::arg("guard") = kDefaultSearchGuard);
    m.def(
        "analyze",
        [](const BlrcCode& c, bool exhaustive, std::optional<std::size_t> r, double guard) {
            RepairProfile profile;
            {
                py::gil_scoped_release release;
                profile = repair_profile(c, mode_of(exhaustive), r, guard);
            }
            return to_python(analysis_json(c, profile));
        },
        py::arg("code"), py::arg("exhaustive") = false, py::arg("r") = py::none(),
        py::arg("guard") = kDefaultSearchGuard);
    m.def(
        "repair_symbol",
        [](const BlrcCode& c, const Received& received, std::size_t i, const std::vector<std::size_t>& unavailable,
           bool exhaustive, std::optional<std::size_t> r) {
            const auto res = repair_symbol(c, received, i, unavailable, mode_of(exhaustive), r);
            py::dict out;
            out["value"] = res.value;
            out["alternative"] = res.alternative;
            out["support"] = res.used.support;
            out["line"] = res.used.line ? py::cast(*res.used.line) : py::none();
            out["retrieved"] = res.retrieved;
            return out;
        },
        py::arg("code"), py::arg("received"), py::arg("i"), py::arg("unavailable") = std::vector<std::size_t>{},
        py::arg("exhaustive") = false, py::arg("r") = py::none());
    m.def(
        "simulate",
        [](const BlrcCode& c, std::optional<double> p, std::optional<std::size_t> u, std::size_t trials,
           std::optional<std::uint64_t> seed, bool exhaustive, std::optional<std::size_t> r) {
            if (p.has_value() == u.has_value()) throw InvalidArgument("give exactly one of p (iid) or u (adversarial)");
            if (p && !seed) throw InvalidArgument("seed is required for the iid model");
            SimulationOptions opts;
            opts.trials = trials;
            opts.seed = seed.value_or(0);
            opts.mode = mode_of(exhaustive);
            opts.r = r;
            const AvailabilityModel model =
                p ? AvailabilityModel{IidUnavailability{*p}} : AvailabilityModel{AdversarialUnavailability{*u}};
            return to_python(simulation_json(simulate_availability(c, model, opts)));
        },
        py::arg("code"), py::arg("p") = py::none(), py::arg("u") = py::none(), py::arg("trials") = 1000,
        py::arg("seed") = py::none(), py::arg("exhaustive") = false, py::arg("r") = py::none());

    m.def("vartheta", [](std::size_t s, std::size_t t, std::size_t a) { return fraction(vartheta(s, t, a)); },
          py::arg("s"), py::arg("t"), py::arg("alpha"));
    m.def("rate_lower", [](std::size_t r, std::size_t a) { return fraction(rate_lower(r, a)); }, py::arg("r"),
          py::arg("a"));
    m.def(
        "rate_upper",
        [](std::size_t r, std::size_t a) -> py::object {
            const auto u = rate_upper(r, a);
            return u ? fraction(*u) : py::none();
        },
        py::arg("r"), py::arg("a"));
    m.def(
        "bounds_table",
        [](std::pair<std::size_t, std::size_t> r, std::pair<std::size_t, std::size_t> a) {
            py::list rows;
            for (const auto& b : bounds_table({r.first, r.second}, {a.first, a.second})) {
                py::dict row;
                row["r"] = b.r;
                row["a"] = b.a;
                row["rate_lower"] = fraction(b.lower);
                row["rate_upper"] = b.upper ? fraction(*b.upper) : py::none();
                row["vartheta"] = fraction(b.vartheta);
                rows.append(row);
            }
            return rows;
        },
        py::arg("r_range") = std::pair<std::size_t, std::size_t>{2, 10},
        py::arg("a_range") = std::pair<std::size_t, std::size_t>{2, 10});
    m.def(
        "catalog",
        [](std::size_t max_n, const py::object& min_rate, const std::string& estimator) {
            CatalogOptions opts;
            opts.max_n = max_n;
            opts.min_rate = from_fraction(min_rate);
            opts.estimator = parse_estimator(estimator);
            return to_python(catalog_json(catalog(opts)));
        },
        py::arg("max_n") = 100, py::arg("min_rate") = "1/3", py::arg("estimator") = "theorem-upper-bound");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
