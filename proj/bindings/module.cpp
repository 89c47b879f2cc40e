#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gluings/deletion.hpp"
#include "gluings/enumerator.hpp"
#include "gluings/formulas.hpp"
#include "gluings/map_ops.hpp"

namespace py = pybind11;
using namespace gluings;

namespace {

py::int_ big(const BigInt& v) {
  const std::string s = to_decimal(v);
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

CountOptions opts(int max_arcs) { return CountOptions{{}, max_arcs}; }

// The recurrence caches live for the lifetime of the module; calls arrive
// with the GIL held, which serializes mutation.
SequenceCache& cache() {
  static SequenceCache c;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact counts of polygon gluings: enumeration, recurrences, closed forms, "
            "edge-deletion audits";

  py::class_<GluingDiagram>(m, "GluingDiagram")
      .def(py::init([](std::vector<int> parts, std::vector<int> pairing) {
             return GluingDiagram(FaceProfile(std::move(parts)), std::move(pairing));
           }),
           py::arg("parts"), py::arg("pairing"))
      .def_static("parse", [](const std::string& s) { return GluingDiagram::parse(s); })
      .def("to_text", &GluingDiagram::to_text)
      .def_property_readonly("parts",
                             [](const GluingDiagram& d) { return d.profile().parts(); })
      .def_property_readonly("pairing", &GluingDiagram::pairing)
      .def_property_readonly("edges", &GluingDiagram::edge_count)
      .def_property_readonly("faces", &GluingDiagram::face_count)
      .def("genus", [](const GluingDiagram& d) { return genus(d); })
      .def("is_connected", [](const GluingDiagram& d) { return is_connected(d); })
      .def("is_bicolored_valid", [](const GluingDiagram& d) { return is_bicolored_valid(d); })
      .def("__eq__", [](const GluingDiagram& a, const GluingDiagram& b) { return a == b; })
      .def("__hash__", [](const GluingDiagram& d) { return py::hash(py::str(d.to_text())); })
      .def("__repr__", [](const GluingDiagram& d) { return "GluingDiagram('" + d.to_text() + "')"; });

  m.def(
      "count_eps",
      [](int g, int edges, int faces, int max_arcs) {
        return big(count_eps(g, edges, faces, opts(max_arcs)));
      },
      py::arg("g"), py::arg("edges"), py::arg("faces"), py::arg("max_arcs") = kDefaultMaxArcs);
  m.def(
      "count_bicolored",
      [](int g, int edges, int faces, int max_arcs) {
        return big(count_bicolored(g, edges, faces, opts(max_arcs)));
      },
      py::arg("g"), py::arg("edges"), py::arg("faces"), py::arg("max_arcs") = kDefaultMaxArcs);
  m.def(
      "count_eps_tilde",
      [](int total_arcs, int face1_arcs, int faces, int max_arcs) {
        return big(count_eps_tilde(total_arcs, face1_arcs, faces, opts(max_arcs)));
      },
      py::arg("total_arcs"), py::arg("face1_arcs"), py::arg("faces") = 2,
      py::arg("max_arcs") = kDefaultMaxArcs);
  m.def(
      "genus_spectrum",
      [](std::vector<int> parts, bool bicolored) {
        const GenusSpectrum s = genus_spectrum(FaceProfile(std::move(parts)), bicolored);
        py::dict connected;
        for (const auto& [g, c] : s.connected) connected[py::int_(g)] = big(c);
        return py::make_tuple(connected, big(s.disconnected), big(s.total));
      },
      py::arg("parts"), py::arg("bicolored") = false,
      "per-genus connected counts, disconnected count, total involutions");

  m.def("classify_deletion",
        [](const GluingDiagram& d) { return std::string(to_string(classify_deletion(d))); });
  m.def(
      "delete_marked_edge",
      [](const GluingDiagram& d, bool bicolored) {
        DeletionOutcome out = delete_marked_edge(d, bicolored);
        py::list results;
        results.append(out.first);
        if (out.second) results.append(*out.second);
        return py::make_tuple(std::string(to_string(out.kind)), results);
      },
      py::arg("diagram"), py::arg("bicolored") = false);
  m.def(
      "audit_deletion_multiplicities",
      [](int g, int edges, int faces, int max_arcs) {
        return audit_report_json(audit_deletion_multiplicities(g, edges, faces, max_arcs));
      },
      py::arg("g"), py::arg("edges"), py::arg("faces"), py::arg("max_arcs") = kDefaultMaxArcs,
      "JSON report of the per-case preimage multiplicity audit");
  m.def(
      "audit_bicolored_deletion",
      [](int edges, int max_arcs) { return audit_report_json(audit_bicolored_deletion(edges, max_arcs)); },
      py::arg("edges"), py::arg("max_arcs") = kDefaultMaxArcs);

  m.def("eps_one_face", [](int g, int N) { return big(cache().eps_one_face(g, N)); });
  m.def("bicolored_one_face", [](int g, int N) { return big(cache().bicolored_one_face(g, N)); });
  m.def("closed_eps0_2", [](int N) { return big(closed_eps0_2(N)); });
  m.def("closed_eps1_2", [](int N) { return big(closed_eps1_2(N)); });
  m.def("closed_eps2_2", [](int N) { return big(closed_eps2_2(N)); });
  m.def("closed_B0_2", [](int N) { return big(closed_B0_2(N)); });
  m.def("closed_eps0_3", [](int N) { return big(closed_eps0_3(N)); });
  m.def("rec_eps0_2", [](int N) { return big(cache().rec_eps0_2(N)); });
  m.def("rec_B0_2", [](int N) { return big(cache().rec_B0_2(N)); });
  m.def("rec_eps_tilde",
        [](int total_arcs, int face1_arcs) { return big(cache().rec_eps_tilde(total_arcs, face1_arcs)); });
  m.def("rec_eps0_3", [](int N) { return big(cache().rec_eps0_3(N)); });
  m.def("rec_eps1_2", [](int N) { return big(cache().rec_eps1_2(N)); });
  m.def("identity_suite", [](int n_max) {
    SequenceCache local;
    return identity_suite(local, n_max).passed();
  });
}
