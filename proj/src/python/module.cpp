// Python bindings: problems, constructions, topology, critical points,
// Hodge numbers, audits and rendering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "patchwork/audits.hpp"
#include "patchwork/bounds.hpp"
#include "patchwork/problem_io.hpp"
#include "patchwork/render.hpp"

namespace py = pybind11;
using namespace patchwork;

namespace {

std::vector<Coord> coords(const LatticePoint& p) { return {p.coords().begin(), p.coords().end()}; }

std::optional<LatticePoint> to_point(const std::optional<std::vector<Coord>>& v) {
  if (!v) return std::nullopt;
  return LatticePoint(*v);
}

LatticePoint origin_for(const Construction& p, const std::optional<std::vector<Coord>>& origin) {
  if (origin) return LatticePoint(*origin);
  return p.origin ? *p.origin : find_generic_origin(p.tri);
}

}  // namespace

PYBIND11_MODULE(_patchwork, m) {
  m.doc() = "Exact combinatorial patchworking";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<Construction>(m, "Problem")
      .def_static("from_json", [](const std::string& text) { return read_problem(text); }, py::arg("text"))
      .def("to_json", [](const Construction& p) { return write_problem(p); })
      .def_readonly("name", &Construction::name)
      .def_property_readonly("dimension", [](const Construction& p) { return p.tri.dim(); })
      .def_property_readonly("vertices",
                             [](const Construction& p) {
                               std::vector<std::vector<Coord>> out;
                               for (const auto& v : p.tri.vertices()) out.push_back(coords(v));
                               return out;
                             })
      .def_property_readonly("cells", [](const Construction& p) { return p.tri.cells(); })
      .def_property_readonly("signs",
                             [](const Construction& p) {
                               std::vector<std::string> out;
                               for (auto s : p.signs.values()) out.push_back(sign_symbol(s));
                               return out;
                             })
      .def_property_readonly("heights",
                             [](const Construction& p) {
                               std::vector<std::string> out;
                               for (const auto& h : p.heights) out.push_back(to_string(h));
                               return out;
                             })
      .def_property_readonly("ambient", [](const Construction& p) { return to_string(p.ambient.kind); })
      .def_property_readonly("origin",
                             [](const Construction& p) -> std::optional<std::vector<Coord>> {
                               if (!p.origin) return std::nullopt;
                               return coords(*p.origin);
                             })
      .def("__repr__", [](const Construction& p) {
        return "<Problem " + (p.name.empty() ? std::string("(unnamed)") : p.name) + ", n=" +
               std::to_string(p.tri.dim()) + ", " + std::to_string(p.tri.cells().size()) + " cells>";
      });

  m.def(
      "construct",
      [](const std::string& name, std::size_t n, Coord degree, std::vector<Coord> k) {
        return construct(name, ConstructionParams{n, degree, std::move(k)});
      },
      py::arg("name"), py::arg("n") = 2, py::arg("m") = 2, py::arg("k") = std::vector<Coord>{1, 1, 1});
  m.def("construction_names", &construction_names);

  m.def(
      "topology",
      [](const Construction& p) {
        const auto t = summarize(p.tri, p.signs, p.ambient);
        py::dict d;
        d["betti"] = t.betti;
        d["components"] = t.components;
        d["euler_characteristic"] = t.chi_faces;
        d["consistent"] = t.consistent();
        return d;
      },
      py::arg("problem"));
  m.def("betti", [](const Construction& p) { return betti_z2(build(p.tri, p.signs, p.ambient)); }, py::arg("problem"));
  m.def("euler_characteristic", [](const Construction& p) { return euler_characteristic(p.tri, p.signs, p.ambient); },
        py::arg("problem"));
  m.def("certify_convexity", [](const Construction& p) { return certify_convexity(p.tri, p.heights); },
        py::arg("problem"));

  m.def(
      "index_histogram",
      [](const Construction& p, const std::optional<std::vector<Coord>>& origin) {
        const auto h = index_histogram(p.tri, origin_for(p, origin), p.signs);
        py::dict d;
        d["origin"] = coords(h.origin);
        d["S"] = h.S;
        d["S_bar"] = h.S_bar;
        d["c_plus"] = h.c_plus;
        d["c_minus"] = h.c_minus;
        return d;
      },
      py::arg("problem"), py::arg("origin") = py::none());

  m.def("primitive_hodge_number", &primitive_hodge_number, py::arg("n"), py::arg("m"), py::arg("q"));
  m.def("hodge_numbers", [](std::size_t n, Coord degree) { return hodge_numbers(n, degree).h; }, py::arg("n"),
        py::arg("m"));

  m.def(
      "audit_suite",
      [](const Construction& p, const std::optional<std::vector<Coord>>& origin) {
        py::list out;
        for (const auto& r : audit_suite(p.tri, p.signs, p.ambient, origin ? to_point(origin) : p.origin)) {
          py::dict d;
          d["name"] = r.name;
          d["checked"] = r.checked;
          d["violations"] = r.violations;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("problem"), py::arg("origin") = py::none());

  m.def(
      "render_svg",
      [](const Construction& p, bool all_copies) { return render_svg(p.tri, p.signs, {.all_copies = all_copies}); },
      py::arg("problem"), py::arg("all_copies") = true);
  m.def("render_off", [](const Construction& p) { return render_off(p.tri, p.signs, p.ambient); }, py::arg("problem"));
}
