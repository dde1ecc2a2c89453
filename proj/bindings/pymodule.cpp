#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "cohcfg/analysis.hpp"
#include "cohcfg/cartan.hpp"
#include "cohcfg/json_io.hpp"
#include "cohcfg/lie.hpp"
#include "cohcfg/recognition.hpp"
#include "cohcfg/wl.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace cohcfg;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

ColoredGraph graph_from_rows(const std::vector<std::vector<Color>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Color> colors;
    colors.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("color matrix must be square");
        colors.insert(colors.end(), row.begin(), row.end());
    }
    return ColoredGraph(n, std::move(colors));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coherent configurations: WL closure, Cartan schemes, structure analysis, recognition";

    m.def("verify", [](const std::vector<std::vector<Color>>& rows) {
        auto r = verify_coherence(graph_from_rows(rows));
        if (auto* v = std::get_if<ViolationReport>(&r))
            return json_to_py(json{{"coherent", false}, {"violation", to_json(*v)}});
        return json_to_py(json{{"coherent", true}, {"config", to_json(std::get<CoherentConfiguration>(r))}});
    }, py::arg("colors"), "Check the coherent configuration axioms of a colored graph.");

    m.def("wl_close", [](const std::vector<std::vector<Color>>& rows) {
        const auto c = wl_closure(graph_from_rows(rows));
        json j = to_json(c.config);
        j["trace"] = to_json(c.trace);
        return json_to_py(j);
    }, py::arg("colors"), "Coherent closure by two-dimensional refinement.");

    m.def("point_extension", [](const std::vector<std::vector<Color>>& rows,
                                const std::vector<std::size_t>& points) {
        const auto x = require_coherent(graph_from_rows(rows));
        return json_to_py(to_json(point_extension(x, points)));
    }, py::arg("colors"), py::arg("points"));

    m.def("m_extension", [](const std::vector<std::vector<Color>>& rows, int mm) {
        const auto x = require_coherent(graph_from_rows(rows));
        return json_to_py(to_json(m_extension(x, mm)));
    }, py::arg("colors"), py::arg("m") = 2);

    m.def("build_cartan", [](std::uint32_t q, const std::string& variant) {
        return json_to_py(to_json(cartan_scheme(q, variant)));
    }, py::arg("q"), py::arg("variant") = "sl2",
       "Cartan scheme bundle on q^2 + q points (rank q + 4).");

    m.def("analyze", [](const std::vector<std::vector<Color>>& rows) {
        return json_to_py(to_json(criterion_report(require_coherent(graph_from_rows(rows)))));
    }, py::arg("colors"), "Structure report with the 2c(k-1) < n criterion.");

    m.def("base_number", [](const std::vector<std::vector<Color>>& rows, std::size_t cap) -> py::object {
        const auto b = base_number(require_coherent(graph_from_rows(rows)), cap);
        if (!b) return py::none();
        return py::int_(*b);
    }, py::arg("colors"), py::arg("cap") = 5);

    m.def("aut_order", [](const std::vector<std::vector<Color>>& rows) {
        return aut_group(require_coherent(graph_from_rows(rows))).order();
    }, py::arg("colors"));

    m.def("recognize", [](const std::vector<std::vector<Color>>& rows) {
        return json_to_py(to_json(recognize_cartan(graph_from_rows(rows))));
    }, py::arg("colors"), "Six-step Cartan scheme recognition.");

    m.def("iso", [](const std::vector<std::vector<Color>>& a, const std::vector<std::vector<Color>>& b) {
        const auto r = iso_graphs(graph_from_rows(a), graph_from_rows(b));
        json maps = json::array();
        for (const auto& f : r.isomorphisms) maps.push_back(to_json(f));
        return json_to_py(json{{"algebraically_isomorphic", r.algebraically_isomorphic},
                               {"incompatibility", r.incompatibility},
                               {"isomorphisms", std::move(maps)}});
    }, py::arg("colors_a"), py::arg("colors_b"));

    m.def("lie_order", [](const std::string& family, unsigned l, std::uint64_t q) {
        return py::cast(lie_order(lie_family_from_name(family), l, q).str());
    }, py::arg("family"), py::arg("l"), py::arg("q"),
       "Order of the simple group, as a decimal string.");

    m.def("lie_bound", [](const std::string& family, unsigned l, std::uint64_t q) {
        return json_to_py(to_json(lie_bound_check(lie_family_from_name(family), l, q)));
    }, py::arg("family"), py::arg("l"), py::arg("q"),
       "Exact class-size inequality check with table data.");
}
