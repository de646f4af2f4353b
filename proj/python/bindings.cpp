#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loosepath/construct.hpp"
#include "loosepath/extract.hpp"
#include "loosepath/io.hpp"
#include "loosepath/search.hpp"
#include "loosepath/verify.hpp"

namespace py = pybind11;
using namespace loosepath;

namespace {

VertexSet edge_of(const std::vector<Vertex>& vs) { return VertexSet::from_vector(vs); }

py::object maybe_path(const std::optional<SPath>& p) {
    if (!p) return py::none();
    return py::cast(p->vertices);
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        default: return "exhausted";
    }
}

}  // namespace

PYBIND11_MODULE(loosepath, m) {
    m.doc() = "Red/blue witnesses for loose paths in 2s-uniform hypergraphs";

    py::register_exception<SoundnessError>(m, "SoundnessError");
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::enum_<Color>(m, "Color").value("Red", Color::Red).value("Blue", Color::Blue);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init<int, int, Color>(), py::arg("n_vertices"), py::arg("r"), py::arg("fill") = Color::Red)
        .def_property_readonly("n_vertices", &Coloring::n_vertices)
        .def_property_readonly("r", &Coloring::r)
        .def_property_readonly("edge_count", &Coloring::edge_count)
        .def("color", [](const Coloring& c, const std::vector<Vertex>& e) { return c.color(edge_of(e)); })
        .def("set", [](Coloring& c, const std::vector<Vertex>& e, Color col) { c.set(edge_of(e), col); })
        .def("at_rank", &Coloring::at_rank)
        .def("flip_rank", &Coloring::flip_rank)
        .def("swapped", &Coloring::swapped)
        .def("restricted", &Coloring::restricted)
        .def("to_json", [](const Coloring& c) { return coloring_to_json(c); })
        .def_static("from_json", [](const std::string& text) { return coloring_from_json(text); })
        .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
        .def("__repr__", [](const Coloring& c) {
            return "<Coloring N=" + std::to_string(c.n_vertices()) + " r=" + std::to_string(c.r()) + ">";
        });

    m.def("edge_rank", [](const std::vector<Vertex>& e, int n, int r) { return edge_rank(edge_of(e), n, r); });
    m.def("edge_unrank", [](std::uint64_t rank, int n, int r) { return edge_unrank(rank, n, r).to_vector(); });

    m.def("lower_bound_coloring", &lower_bound_coloring, py::arg("r"), py::arg("s"), py::arg("n"), py::arg("m"));

    m.def(
        "find_mono_path",
        [](const Coloring& c, Color color, int s, int k, std::uint64_t budget) {
            const auto res = find_mono_path(c, color, s, k, SearchBudget{budget, 0.0});
            return py::make_tuple(status_name(res.status), maybe_path(res.path));
        },
        py::arg("coloring"), py::arg("color"), py::arg("s"), py::arg("k"),
        py::arg("budget") = SearchBudget{}.node_limit);

    m.def(
        "extract",
        [](const Coloring& c, int n, int s, int target, bool with_trace) {
            Trace trace;
            const Witness w = extract(c, n, s, target, with_trace ? &trace : nullptr);
            py::dict out;
            out["color"] = w.color;
            out["vertices"] = w.path.vertices;
            out["length"] = w.path.length();
            if (with_trace) out["trace"] = trace.to_json();
            return out;
        },
        py::arg("coloring"), py::arg("n"), py::arg("s"), py::arg("target"), py::arg("trace") = false);

    m.def(
        "check_witness",
        [](const Coloring& c, Color color, int s, const std::vector<Vertex>& vertices, int n, int target) {
            const Params p{s, 2 * s, n, target, c.n_vertices()};
            return check_witness(c, Witness{color, SPath{s, 2 * s, vertices}}, p);
        },
        py::arg("coloring"), py::arg("color"), py::arg("s"), py::arg("vertices"), py::arg("n"), py::arg("target"));

    m.def(
        "exhaustive_verify", [](int n, int target) { return exhaustive_verify(n, target).to_json(); }, py::arg("n"),
        py::arg("target"), "Report JSON for every coloring of K^2_{n+2}.");
    m.def(
        "random_trials",
        [](int s, int n, int target, std::uint64_t trials, std::uint64_t seed) {
            return random_trials(s, n, target, trials, seed).to_json();
        },
        py::arg("s"), py::arg("n"), py::arg("target"), py::arg("trials"), py::arg("seed") = 0);
    m.def(
        "lower_bound_check", [](int r, int s, int n, int mm) { return lower_bound_check(r, s, n, mm).to_json(); },
        py::arg("r"), py::arg("s"), py::arg("n"), py::arg("m"));
}
