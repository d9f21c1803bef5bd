#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "subdiv/analysis.hpp"
#include "subdiv/catalog.hpp"
#include "subdiv/conversion.hpp"
#include "subdiv/io.hpp"
#include "subdiv/polygon.hpp"

namespace py = pybind11;
using namespace subdiv;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

SubdivisionScheme scheme_from_arg(const py::object& arg) {
    if (py::isinstance<py::str>(arg)) return catalog_get(arg.cast<std::string>());
    if (py::isinstance<py::dict>(arg)) {
        py::dict d = arg.cast<py::dict>();
        nlohmann::json j = nlohmann::json::object();
        j["name"] = d.contains("name") ? d["name"].cast<std::string>() : std::string("anonymous");
        j["arity"] = d.contains("arity") ? d["arity"].cast<int>() : 2;
        j["first_index"] = d.contains("first_index") ? d["first_index"].cast<int>() : 0;
        auto coeffs = nlohmann::json::array();
        for (const auto& c : d["coefficients"]) coeffs.push_back(py::str(c).cast<std::string>());
        j["coefficients"] = std::move(coeffs);
        return mask_from_json(j);
    }
    throw py::type_error("scheme must be a catalog name or a mask dict");
}

Polygon polygon_from_arg(const py::iterable& pts, bool closed) {
    std::vector<std::vector<Rational>> points;
    for (const auto& row : pts) {
        std::vector<Rational> p;
        for (const auto& coord : row.cast<py::iterable>())
            p.push_back(parse_rational_token(py::str(coord).cast<std::string>()));
        points.push_back(std::move(p));
    }
    return Polygon(closed ? Topology::closed : Topology::open, std::move(points));
}

py::list polygon_to_py(const Polygon& p) {
    py::list out;
    for (const auto& pt : p.points()) {
        py::list row;
        for (const auto& c : pt) row.append(py::str(c.to_string()));
        out.append(row);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(subdivq, m) {
    m.doc() = "exact-arithmetic binary-to-quaternary subdivision toolkit";

    m.def("catalog_names", &catalog_names, "names of the built-in schemes");
    m.def(
        "catalog",
        [](const std::string& name) { return json_to_py(mask_to_json(catalog_get(name))); },
        py::arg("name"), "built-in scheme as a mask dict");

    m.def(
        "convert",
        [](const py::object& scheme, const std::string& method) {
            SubdivisionScheme binary = scheme_from_arg(scheme);
            if (method == "symbol")
                return json_to_py(nlohmann::json{
                    {"mask", mask_to_json(convert_via_symbol(binary))}});
            ConversionResult res = convert(binary);
            if (method == "both" && res.quaternary.mask != convert_via_symbol(binary).mask)
                throw std::runtime_error("oracle mismatch between formulas and symbol product");
            return json_to_py(to_json(res));
        },
        py::arg("scheme"), py::arg("method") = "both",
        "derive the relaxed quaternary counterpart of an even-point dual binary scheme");

    m.def(
        "refine",
        [](const py::object& scheme, const py::iterable& points, int steps, bool closed) {
            SubdivisionScheme s = scheme_from_arg(scheme);
            RefinementTrace trace = refine(polygon_from_arg(points, closed), s, steps);
            py::list levels;
            for (const auto& level : trace.levels) levels.append(polygon_to_py(level));
            return levels;
        },
        py::arg("scheme"), py::arg("points"), py::arg("steps") = 1, py::arg("closed") = true,
        "refine a control polygon; returns every level, coordinates as exact strings");

    m.def(
        "holder_regularity",
        [](const py::object& scheme) {
            return json_to_py(to_json(holder_regularity(scheme_from_arg(scheme))));
        },
        py::arg("scheme"));

    m.def(
        "regularity_pair",
        [](const py::object& scheme) {
            return json_to_py(to_json(regularity_pair_report(scheme_from_arg(scheme))));
        },
        py::arg("scheme"));

    m.def(
        "precision",
        [](const py::object& scheme, int max_degree) {
            return json_to_py(to_json(degree_of_precision(scheme_from_arg(scheme), max_degree)));
        },
        py::arg("scheme"), py::arg("max_degree") = 16);

    m.def(
        "convergence",
        [](const py::object& scheme) {
            return json_to_py(to_json(check_convergence_condition(scheme_from_arg(scheme))));
        },
        py::arg("scheme"));

    m.def(
        "rule_text",
        [](const py::object& scheme) { return expand_rule_text(scheme_from_arg(scheme)); },
        py::arg("scheme"), "per-phase refinement rules with exact fractions");

    m.def(
        "stencils",
        [](const py::object& scheme) {
            py::list out;
            for (const Stencil& st : stencils(scheme_from_arg(scheme))) {
                py::dict d;
                d["phase"] = st.phase;
                py::list offsets, weights;
                for (int o : st.offsets) offsets.append(o);
                for (const auto& w : st.weights) weights.append(py::str(w.to_string()));
                d["offsets"] = offsets;
                d["weights"] = weights;
                out.append(d);
            }
            return out;
        },
        py::arg("scheme"));
}
