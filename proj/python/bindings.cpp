#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greenseq/classify.hpp"
#include "greenseq/construct.hpp"
#include "greenseq/disk.hpp"
#include "greenseq/error.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/io.hpp"

namespace py = pybind11;
using namespace greenseq;

namespace {

std::vector<std::vector<Int>> rows(const IntMatrix& m) { return m.to_rows(); }

}  // namespace

PYBIND11_MODULE(_greenseq, m) {
  m.doc() = "Quiver mutation and maximal green sequences";

  static py::exception<Error> error(m, "GreenseqError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](const std::vector<std::vector<Int>>& b) { return Quiver::from_exchange_matrix(IntMatrix::from_rows(b)); }),
           py::arg("exchange_matrix"))
      .def_static("from_arrows",
                  [](int n, const std::vector<std::tuple<int, int, Int>>& arrows) {
                    std::vector<Arrow> as;
                    for (const auto& [s, t, k] : arrows) as.push_back({s, t, k});
                    return Quiver::from_arrows(n, as);
                  },
                  py::arg("vertices"), py::arg("arrows"))
      .def_static("from_json", &parse_quiver_json)
      .def_static("load", [](const std::string& path) { return load_quiver(path); })
      .def_property_readonly("size", &Quiver::size)
      .def("exchange_matrix", [](const Quiver& q) { return rows(q.exchange_matrix()); })
      .def("arrows_from_to", &Quiver::arrows_from_to)
      .def("to_json", &quiver_to_json)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) { return "Quiver(" + quiver_to_json(q) + ")"; });

  m.def("mutate", py::overload_cast<const Quiver&, int>(&mutate), py::arg("quiver"), py::arg("k"));
  m.def("mutate_matrix",
        [](const std::vector<std::vector<Int>>& b, int mutable_count, int k) {
          return rows(mutate(IceQuiver(IntMatrix::from_rows(b), mutable_count), k).exchange_matrix());
        },
        py::arg("matrix"), py::arg("mutable"), py::arg("k"));
  m.def("full_subquiver", &full_subquiver);

  m.def("c_vector_trace", [](const Quiver& q, const GreenSequence& s) { return apply_green_sequence(q, s).trace; });
  m.def("check_maximal_green", [](const Quiver& q, const GreenSequence& s) {
    const Verdict v = check_maximal_green(q, s);
    return py::make_tuple(v.valid, v.reason);
  });
  m.def("is_maximal_green", &is_maximal_green);
  m.def("shortest_mgs",
        [](const Quiver& q, int depth, std::size_t nodes) {
          const SearchCertificate c = shortest_mgs(q, depth, nodes);
          py::dict out;
          out["minimal_length"] = c.minimal_length;
          out["witness"] = c.witness;
          out["explored_depth"] = c.explored_depth;
          out["exhaustive"] = c.exhaustive;
          out["nodes"] = c.nodes;
          return out;
        },
        py::arg("quiver"), py::arg("depth"), py::arg("nodes") = kDefaultNodeBudget);
  m.def("restrict_mgs", &restrict_mgs, py::arg("quiver"), py::arg("sequence"), py::arg("subset"));

  m.def("classify", [](const Quiver& q) { return std::string(family_tag(family(classify(q)))); });
  m.def("length_formula", [](const Quiver& q) {
    const LengthFormula f = length_formula(q);
    py::dict breakdown;
    for (const auto& t : f.breakdown) breakdown[py::str(t.name)] = t.value;
    return py::make_tuple(std::string(family_tag(f.family)), f.length, breakdown);
  });
  m.def("min_length", &min_length);
  m.def("min_mgs", [](const Quiver& q) {
    const Construction c = min_mgs(q);
    return py::make_tuple(c.sequence, c.used_search);
  });

  m.def("triangulation_quiver",
        [](const std::string& json) { return adjacency_quiver(parse_triangulation_json(json)); });
  m.def("flip", [](const std::string& json, int label) {
    return triangulation_to_json(flip(parse_triangulation_json(json), label).triangulation);
  });
  m.def("type_iv_stages", [](const Quiver& q) {
    const TypeIVRun run = type_IV_stages(from_type_IV(q));
    return std::vector<GreenSequence>(run.stages.begin(), run.stages.end());
  });
}
