#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quivalg/corpus.hpp"
#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/reports.hpp"
#include "quivalg/structure.hpp"

namespace py = pybind11;
using namespace quivalg;

namespace {

PathAlgebra load(const std::string& text, const std::string& field) {
  return PathAlgebra::build(parse_quiver(text), Field::parse(field));
}

std::string decompose_json(const PathAlgebra& a, const std::string& map_text) {
  return decomposition_report(a, standard_decompose(a, map_from_json(a, Json::parse(map_text)))).dump();
}

bool check_map(const PathAlgebra& a, const std::string& map_text, const std::string& kind) {
  LinMap m = map_from_json(a, Json::parse(map_text));
  if (kind == "der") return is_derivation(a, m);
  if (kind == "jordan") return is_jordan_derivation(a, m);
  if (kind == "lie") return is_lie_derivation(a, m);
  throw InputError("kind must be der, jordan or lie");
}

std::string faithful_json(const PathAlgebra& a, const std::string& idempotent) {
  PierceBlocks b = pierce_decompose(a, parse_element(a, idempotent));
  Json j = pierce_report(a, b);
  j["left"] = faithfulness_report(a, bimodule_faithful(a, b, Side::Left));
  j["right"] = faithfulness_report(a, bimodule_faithful(a, b, Side::Right));
  return j.dump();
}

std::string verify_json(const std::string& theorems, std::size_t count, std::uint64_t seed,
                        const std::vector<std::string>& fields) {
  CorpusParams p;
  p.count = count;
  p.seed = seed;
  std::vector<Field> fs;
  for (const auto& f : fields) fs.push_back(Field::parse(f));
  std::vector<Check> checks = parse_check_list(theorems);
  VerifyReport r = verify_corpus(generate_corpus(p), checks, fs, seed);
  Json j;
  j["instances"] = r.instances;
  Json out = Json::array();
  for (const auto& f : r.fields) {
    for (const auto& c : f.checks) {
      out.push_back({{"field", f.field}, {"check", check_name(c.check)}, {"checked", c.checked},
                     {"not_applicable", c.not_applicable}, {"violations", c.violations}});
    }
  }
  j["results"] = std::move(out);
  j["ok"] = r.ok();
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_quivalg, m) {
  m.doc() = "Exact path algebra computations";
  static py::exception<Error> base(m, "QuivalgError");
  static py::exception<InputError> input(m, "InputError", base.ptr());
  static py::exception<PreconditionError> pre(m, "PreconditionError", base.ptr());
  static py::exception<TheoremViolation> theorem(m, "TheoremViolation", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre, e.what());
    } catch (const TheoremViolation& e) {
      py::set_error(theorem, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(input, e.what());
    }
  });

  py::class_<PathAlgebra>(m, "PathAlgebra")
      .def_property_readonly("dim", &PathAlgebra::dim)
      .def_property_readonly("basis", &PathAlgebra::basis_labels)
      .def_property_readonly("field", [](const PathAlgebra& a) { return a.field().name(); })
      .def_property_readonly("relation_free", &PathAlgebra::is_relation_free)
      .def_property_readonly("structure_constant_count", &PathAlgebra::structure_constant_count)
      .def("report", [](const PathAlgebra& a) { return algebra_report(a).dump(); });

  m.def("load", &load, py::arg("text"), py::arg("field") = "rat");
  m.def("axioms_hold", [](const PathAlgebra& a) { return check_axioms(a).all(); });
  m.def("derivation_dim", [](const PathAlgebra& a) { return derivation_space(a).dim(); });
  m.def("jordan_dim", [](const PathAlgebra& a) { return jordan_derivation_space(a).dim(); });
  m.def("lie_dim", [](const PathAlgebra& a) { return lie_derivation_space(a).dim(); });
  m.def("center_dim", [](const PathAlgebra& a) { return center(a).dim(); });
  m.def("commutator_dim", [](const PathAlgebra& a) { return commutator_subspace(a).dim(); });
  m.def("phi_dim", [](const PathAlgebra& a) { return central_phi_space(a).dim(); });
  m.def("jordan_equals_der", [](const PathAlgebra& a) {
    return jordan_derivation_space(a).space() == derivation_space(a).space();
  });
  m.def("lie_equals_der_plus_phi", [](const PathAlgebra& a) {
    return lie_derivation_space(a).space() ==
           subspace_sum(derivation_space(a).space(), central_phi_space(a).space());
  });
  m.def("central_derivations_vanish", &central_derivations_vanish);
  m.def("w_full", [](const PathAlgebra& a) { return w_saturate(a).full; });
  m.def("strip_report", [](const PathAlgebra& a) { return strip_report(strip_recursion_verify(a)).dump(); });
  m.def("decompose", &decompose_json, py::arg("algebra"), py::arg("map_json"));
  m.def("check", &check_map, py::arg("algebra"), py::arg("map_json"), py::arg("kind"));
  m.def("faithful", &faithful_json, py::arg("algebra"), py::arg("idempotent"));
  m.def("verify", &verify_json, py::arg("theorems"), py::arg("count"), py::arg("seed"),
        py::arg("fields") = std::vector<std::string>{"rat", "fp:5"});
}
