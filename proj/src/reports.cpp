#include "quivalg/reports.hpp"

#include <fstream>
#include <sstream>

#include "quivalg/errors.hpp"

namespace quivalg {

std::string scalar_json(const Scalar& s) { return s.report_str(); }

Json element_json(const PathAlgebra& a, const Vector& x) {
  Json out = Json::array();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) out.push_back(Json::array({a.basis_label(k), scalar_json(x[k])}));
  }
  return out;
}

Json algebra_report(const PathAlgebra& a) {
  Json j;
  j["field"] = a.field().name();
  j["vertices"] = a.quiver().vertex_count();
  j["arrows"] = a.quiver().arrow_count();
  j["relations"] = a.relations().size();
  j["path_count"] = a.paths().size();
  j["ideal_dim"] = a.ideal().dim();
  j["dimension"] = a.dim();
  j["basis"] = a.basis_labels();
  Json constants = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (const auto& e : a.basis_product(i, k).entries()) {
        constants.push_back(Json::array({i, k, e.index, scalar_json(e.value)}));
      }
    }
  }
  j["structure_constant_count"] = constants.size();
  j["structure_constants"] = std::move(constants);
  return j;
}

Json subspace_report(const PathAlgebra& a, const Subspace& s) {
  Json j;
  j["dimension"] = s.dim();
  Json basis = Json::array();
  for (const auto& v : s.dense_basis()) basis.push_back(element_json(a, v));
  j["basis"] = std::move(basis);
  return j;
}

Json map_json(const PathAlgebra& a, const LinMap& m) {
  Json j;
  j["basis"] = a.basis_labels();
  Json images = Json::object();
  for (std::size_t k = 0; k < a.dim(); ++k) images[a.basis_label(k)] = element_json(a, m.image(k));
  j["images"] = std::move(images);
  return j;
}

Json map_space_report(const PathAlgebra& a, const MapSpace& s) {
  Json j;
  j["kind"] = to_string(s.kind());
  j["dimension"] = s.dim();
  Json basis = Json::array();
  if (s.kind() == MapKind::GeneralizedPair) {
    for (const auto& [f, d] : s.pair_basis()) {
      Json p;
      p["f"] = map_json(a, f)["images"];
      p["d"] = map_json(a, d)["images"];
      basis.push_back(std::move(p));
    }
  } else {
    for (const auto& m : s.basis_maps()) basis.push_back(map_json(a, m)["images"]);
  }
  j["basis"] = std::move(basis);
  return j;
}

Json decomposition_report(const PathAlgebra& a, const Decomposition& d) {
  Json j;
  j["theta"] = map_json(a, d.theta)["images"];
  j["D"] = map_json(a, d.derivation)["images"];
  j["Phi"] = map_json(a, d.central)["images"];
  if (d.vertex_constants) {
    Json k = Json::object();
    for (std::size_t v = 0; v < d.vertex_constants->size(); ++v) {
      k[a.quiver().vertex_name(v)] = scalar_json((*d.vertex_constants)[v]);
    }
    j["k"] = std::move(k);
  } else {
    j["k"] = nullptr;
  }
  j["flags"] = {{"is_lie", d.is_lie},
                {"d_is_derivation", d.d_is_derivation},
                {"phi_central", d.phi_central},
                {"phi_kills_commutators", d.phi_kills_commutators},
                {"unique", d.unique}};
  return j;
}

Json pierce_report(const PathAlgebra& a, const PierceBlocks& b) {
  Json j;
  j["e"] = element_json(a, b.e);
  auto d = b.dims();
  j["dims"] = {{"eAe", d[0]}, {"eA(1-e)", d[1]}, {"(1-e)Ae", d[2]}, {"(1-e)A(1-e)", d[3]}};
  j["triangular"] = b.triangular();
  j["products_respect_blocks"] = b.products_respect_blocks;
  j["eAe"] = subspace_report(a, b.corner)["basis"];
  j["eA(1-e)"] = subspace_report(a, b.upper)["basis"];
  j["(1-e)Ae"] = subspace_report(a, b.lower)["basis"];
  j["(1-e)A(1-e)"] = subspace_report(a, b.rest)["basis"];
  return j;
}

Json faithfulness_report(const PathAlgebra& a, const Faithfulness& f) {
  Json j;
  j["faithful"] = f.faithful;
  j["annihilator_dim"] = f.annihilator_dim;
  j["witness"] = f.witness ? element_json(a, *f.witness) : Json(nullptr);
  j["witness_verified"] = f.witness_verified;
  return j;
}

Json w_report(const PathAlgebra& a, const WSaturation& w) {
  Json j;
  j["dimension"] = w.space.dim();
  j["algebra_dimension"] = a.dim();
  j["round_dims"] = w.dims;
  j["full"] = w.full;
  j["bound"] = w.full ? "equal: W(A) = A certified" : "lower bound only";
  return j;
}

Json strip_report(const StripReport& r) {
  Json j;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"source", l.source},
                      {"dims", {{"A'", l.dim_reduced}, {"M", l.dim_m}, {"B", l.dim_b}}},
                      {"triangular", l.triangular},
                      {"M_faithful_left", l.m_faithful_left},
                      {"M_faithful_right", l.m_faithful_right},
                      {"jordan_equals_der", l.jordan_equals_der},
                      {"jordan_basis_checked", l.jordan_basis_checked},
                      {"lie_basis_checked", l.lie_basis_checked},
                      {"w_full", l.w_full},
                      {"all_conditions_hold", l.all_conditions_hold}});
  }
  j["levels"] = std::move(levels);
  j["terminal_dim"] = r.terminal_dim;
  j["jordan_skipped"] = r.jordan_skipped;
  j["all_conditions_hold"] = r.all();
  return j;
}

namespace {

Scalar coefficient(const Field& f, const Json& c) {
  if (c.is_string()) return f.parse_scalar(c.get<std::string>());
  if (c.is_number_integer()) return f.parse_scalar(std::to_string(c.get<long long>()));
  throw InputError("coefficient must be a string or an integer");
}

Vector element_from_json(const PathAlgebra& a, const Json& terms, const std::string& where) {
  if (!terms.is_array()) throw InputError("image of " + where + " must be a list of [path, coeff] terms");
  Vector out = a.zero();
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) {
      throw InputError("image of " + where + ": each term must be [path, coeff]");
    }
    std::string label = t[0].get<std::string>();
    Scalar c = coefficient(a.field(), t[1]);
    if (label == "1") {
      out = out + c * a.unit();
      continue;
    }
    auto idx = a.basis_index(label);
    if (!idx) throw UnknownReference("unknown basis path '" + label + "' in image of " + where);
    out[*idx] += c;
  }
  return out;
}

}  // namespace

LinMap map_from_json(const PathAlgebra& a, const Json& j) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_object()) {
    throw InputError("map file must be an object with an \"images\" object");
  }
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw InputError("\"basis\" must be a list of path labels");
    std::vector<std::string> echo;
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) throw InputError("\"basis\" must be a list of path labels");
      echo.push_back(b.get<std::string>());
    }
    if (echo != a.basis_labels()) throw InputError("\"basis\" does not match the algebra basis");
  }
  std::vector<Vector> images(a.dim(), a.zero());
  for (const auto& [key, terms] : j["images"].items()) {
    auto idx = a.basis_index(key);
    if (!idx) throw UnknownReference("unknown basis path '" + key + "' in map file");
    images[*idx] = element_from_json(a, terms, key);
  }
  return LinMap::from_images(a.field(), images);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinMap load_map_file(const PathAlgebra& a, const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("map file is not valid JSON: ") + e.what());
  }
  return map_from_json(a, j);
}

}  // namespace quivalg
