#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "quivalg/corpus.hpp"
#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/path_algebra.hpp"
#include "quivalg/reports.hpp"
#include "quivalg/structure.hpp"

using namespace quivalg;

namespace {

enum Exit { kOk = 0, kInput = 1, kPrecondition = 2, kTheorem = 3 };

struct Options {
  std::string field = "rat";
  std::string format = "text";
  std::string input;
  std::string map_file;
  std::string kind = "lie";
  std::string idempotent;
  std::string theorems = "3.4,4.4,3.5,4.3,4.7";
  std::size_t corpus = 200;
  std::uint64_t seed = 1;
  CorpusParams params;
};

bool json_out(const Options& o) { return o.format == "json"; }

PathAlgebra load_algebra(const Options& o) {
  return PathAlgebra::build(parse_quiver(read_text_file(o.input)), Field::parse(o.field));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_basis(const PathAlgebra& a, const std::vector<Vector>& basis) {
  for (const auto& v : basis) std::cout << "  " << format_element(a, v) << "\n";
}

void print_map(const PathAlgebra& a, const LinMap& m, const std::string& indent) {
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector img = m.image(j);
    if (!is_zero(img)) std::cout << indent << a.basis_label(j) << " -> " << format_element(a, img) << "\n";
  }
}

int cmd_info(const Options& o) {
  PathAlgebra a = load_algebra(o);
  AxiomReport ax = check_axioms(a);
  if (json_out(o)) {
    Json j = algebra_report(a);
    j["axioms"] = {{"associative", ax.associative},
                   {"unital", ax.unital},
                   {"orthogonal_idempotents", ax.orthogonal_idempotents},
                   {"dimension_consistent", ax.dimension_consistent}};
    print_json(j);
  } else {
    std::cout << "field: " << a.field().name() << "\n"
              << "vertices: " << a.quiver().vertex_count() << ", arrows: " << a.quiver().arrow_count()
              << ", relations: " << a.relations().size() << "\n"
              << "paths: " << a.paths().size() << ", ideal dimension: " << a.ideal().dim() << "\n"
              << "dimension: " << a.dim() << "\n"
              << "structure constants: " << a.structure_constant_count() << "\n"
              << "axioms: " << (ax.all() ? "ok" : "FAILED") << "\n"
              << "basis:";
    for (const auto& l : a.basis_labels()) std::cout << " " << l;
    std::cout << "\n";
  }
  return ax.all() ? kOk : kTheorem;
}

int cmd_subspace(const Options& o, const std::string& title, const std::function<Subspace(const PathAlgebra&)>& f) {
  PathAlgebra a = load_algebra(o);
  Subspace s = f(a);
  if (json_out(o)) {
    Json j{{"subspace", title}};
    j.update(subspace_report(a, s));
    print_json(j);
  } else {
    std::cout << title << " dimension: " << s.dim() << "\n";
    print_basis(a, s.dense_basis());
  }
  return kOk;
}

int cmd_space(const Options& o, const std::function<MapSpace(const PathAlgebra&)>& f) {
  PathAlgebra a = load_algebra(o);
  MapSpace s = f(a);
  if (json_out(o)) {
    print_json(map_space_report(a, s));
  } else {
    std::cout << to_string(s.kind()) << " dimension: " << s.dim() << "\n";
    if (s.kind() == MapKind::GeneralizedPair) {
      std::size_t k = 0;
      for (const auto& [fm, dm] : s.pair_basis()) {
        std::cout << "pair " << ++k << "\n  f:\n";
        print_map(a, fm, "    ");
        std::cout << "  d:\n";
        print_map(a, dm, "    ");
      }
    } else {
      std::size_t k = 0;
      for (const auto& m : s.basis_maps()) {
        std::cout << "map " << ++k << "\n";
        print_map(a, m, "  ");
      }
    }
  }
  return kOk;
}

int cmd_decompose(const Options& o) {
  PathAlgebra a = load_algebra(o);
  LinMap theta = load_map_file(a, o.map_file);
  Decomposition d = standard_decompose(a, theta);
  if (json_out(o)) {
    print_json(decomposition_report(a, d));
  } else {
    std::cout << "D:\n";
    print_map(a, d.derivation, "  ");
    std::cout << "Phi:\n";
    print_map(a, d.central, "  ");
    if (d.vertex_constants) {
      std::cout << "k:";
      for (std::size_t v = 0; v < d.vertex_constants->size(); ++v) {
        std::cout << " " << a.quiver().vertex_name(v) << "=" << (*d.vertex_constants)[v].str();
      }
      std::cout << "\n";
    }
    std::cout << "is_lie: " << d.is_lie << "\nd_is_derivation: " << d.d_is_derivation
              << "\nphi_central: " << d.phi_central << "\nphi_kills_commutators: " << d.phi_kills_commutators
              << "\nunique: " << d.unique << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o) {
  PathAlgebra a = load_algebra(o);
  LinMap theta = load_map_file(a, o.map_file);
  bool result;
  if (o.kind == "der") {
    result = is_derivation(a, theta);
  } else if (o.kind == "jordan") {
    result = is_jordan_derivation(a, theta);
  } else {
    result = is_lie_derivation(a, theta);
  }
  if (json_out(o)) {
    print_json({{"kind", o.kind}, {"result", result}});
  } else {
    std::cout << o.kind << ": " << (result ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_peel(const Options& o) {
  PathAlgebra a = load_algebra(o);
  StripReport r = strip_recursion_verify(a);
  if (json_out(o)) {
    print_json(strip_report(r));
  } else {
    for (const auto& l : r.levels) {
      std::cout << "peel " << l.source << ": dims A'=" << l.dim_reduced << " M=" << l.dim_m << " B=" << l.dim_b
                << " faithful(left=" << l.m_faithful_left << ", right=" << l.m_faithful_right << ")"
                << " jordan_checked=" << l.jordan_basis_checked << " lie_checked=" << l.lie_basis_checked
                << " w_full=" << l.w_full << " ok=" << l.all_conditions_hold << "\n";
    }
    std::cout << "terminal dimension: " << r.terminal_dim << "\n"
              << "all conditions hold: " << (r.all() ? "true" : "false") << "\n";
  }
  return r.all() ? kOk : kTheorem;
}

int cmd_wsub(const Options& o) {
  PathAlgebra a = load_algebra(o);
  WSaturation w = w_saturate(a);
  if (json_out(o)) {
    print_json(w_report(a, w));
  } else {
    std::cout << "saturation dimension: " << w.space.dim() << " of " << a.dim() << "\n"
              << "rounds:";
    for (auto d : w.dims) std::cout << " " << d;
    std::cout << "\n" << (w.full ? "equal to the algebra (certified)" : "lower bound only") << "\n";
  }
  return kOk;
}

int cmd_faithful(const Options& o) {
  PathAlgebra a = load_algebra(o);
  PierceBlocks b = pierce_decompose(a, parse_element(a, o.idempotent));
  bool triangular = b.triangular();
  Faithfulness left = bimodule_faithful(a, b, Side::Left);
  Faithfulness right = bimodule_faithful(a, b, Side::Right);
  if (json_out(o)) {
    Json j = pierce_report(a, b);
    j["left"] = faithfulness_report(a, left);
    j["right"] = faithfulness_report(a, right);
    print_json(j);
  } else {
    auto d = b.dims();
    std::cout << "dims: eAe=" << d[0] << " eA(1-e)=" << d[1] << " (1-e)Ae=" << d[2] << " (1-e)A(1-e)=" << d[3]
              << "\n"
              << "(1-e)Ae is " << (triangular ? "zero" : "nonzero") << "\n";
    auto show = [&](const char* side, const Faithfulness& f) {
      std::cout << side << " faithful: " << (f.faithful ? "true" : "false");
      if (f.witness) {
        std::cout << " (annihilator dim " << f.annihilator_dim << ", witness " << format_element(a, *f.witness)
                  << (f.witness_verified ? ", verified" : ", NOT verified") << ")";
      }
      std::cout << "\n";
    };
    show("left", left);
    show("right", right);
  }
  return kOk;
}

Json verify_json(const VerifyReport& r) {
  Json j;
  j["instances"] = r.instances;
  j["seed"] = r.seed;
  Json fields = Json::array();
  for (const auto& f : r.fields) {
    Json checks = Json::array();
    for (const auto& c : f.checks) {
      checks.push_back({{"check", check_name(c.check)},
                        {"checked", c.checked},
                        {"not_applicable", c.not_applicable},
                        {"violations", c.violations},
                        {"failures", c.failures}});
    }
    fields.push_back({{"field", f.field}, {"checks", std::move(checks)}});
  }
  j["fields"] = std::move(fields);
  j["ok"] = r.ok();
  return j;
}

int cmd_verify(const Options& o, bool field_given) {
  std::vector<Check> checks = parse_check_list(o.theorems);
  std::vector<Field> fields;
  if (field_given) {
    fields.push_back(Field::parse(o.field));
  } else {
    fields = {Field::rationals(), Field::prime(5)};
  }
  std::vector<QuiverDocument> docs;
  if (!o.input.empty()) {
    docs.push_back(parse_quiver(read_text_file(o.input)));
  } else {
    CorpusParams p = o.params;
    p.count = o.corpus;
    p.seed = o.seed;
    docs = generate_corpus(p);
  }
  VerifyReport r = verify_corpus(docs, checks, fields, o.input.empty() ? o.seed : 0);
  if (json_out(o)) {
    print_json(verify_json(r));
  } else {
    std::cout << "instances: " << r.instances << "\n";
    for (const auto& f : r.fields) {
      for (const auto& c : f.checks) {
        std::cout << f.field << " " << check_name(c.check) << ": checked " << c.checked << ", not applicable "
                  << c.not_applicable << ", violations " << c.violations << "\n";
        for (const auto& msg : c.failures) std::cout << "  " << msg << "\n";
      }
    }
    std::cout << "elapsed: " << r.seconds << " s\n" << (r.ok() ? "PASS" : "FAIL") << "\n";
  }
  return r.ok() ? kOk : kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path algebras of acyclic quivers: derivations, Jordan and Lie derivations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "rat or fp:<p>")->capture_default_str();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto with_input = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "quiver document")->required();
    return sub;
  };
  CLI::App* info = with_input("info", "dimension, basis and structure constants");
  CLI::App* center_cmd = with_input("center", "center of the algebra");
  CLI::App* comm = with_input("commutators", "the commutator subspace [A, A]");
  CLI::App* der = with_input("der", "derivation space");
  CLI::App* jordan = with_input("jordan", "Jordan derivation space");
  CLI::App* lie = with_input("lie", "Lie derivation space");
  CLI::App* phi = with_input("phi", "central maps vanishing on commutators");
  CLI::App* jgen = with_input("jordan-generalized", "pairs (f, d) with f(x o y) = f(x) o y + x o d(y)");
  CLI::App* gjor = with_input("generalized-jordan", "pairs (f, d) with f(x o y) = f(x)y + f(y)x + x d(y) + y d(x)");
  CLI::App* decompose = with_input("decompose", "standard decomposition of a Lie derivation");
  decompose->add_option("--map", o.map_file, "map file (JSON)")->required();
  CLI::App* check = with_input("check", "test a map against a defining identity");
  check->add_option("--map", o.map_file, "map file (JSON)")->required();
  check->add_option("--kind", o.kind, "der, jordan or lie")->check(CLI::IsMember({"der", "jordan", "lie"}));
  CLI::App* peel = with_input("peel", "source-stripping recursion report");
  CLI::App* wsub = with_input("wsub", "saturation of idempotents and commutators");
  CLI::App* faithful = with_input("faithful", "Pierce blocks and bimodule faithfulness");
  faithful->add_option("--idempotent", o.idempotent, "idempotent expression, e.g. e_1+e_2")->required();
  CLI::App* verify = app.add_subcommand("verify", "run structural checks on a random corpus or one document");
  verify->add_option("input", o.input, "optional quiver document instead of the corpus");
  verify->add_option("--theorems", o.theorems, "comma-separated checks")->capture_default_str();
  verify->add_option("--corpus", o.corpus, "number of random instances")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--max-vertices", o.params.max_vertices)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--max-arrows", o.params.max_arrows)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--max-relations", o.params.max_relations)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--max-dim", o.params.max_dim)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (info->parsed()) return cmd_info(o);
    if (center_cmd->parsed()) return cmd_subspace(o, "center", [](const PathAlgebra& a) { return center(a); });
    if (comm->parsed()) {
      return cmd_subspace(o, "commutators", [](const PathAlgebra& a) { return commutator_subspace(a); });
    }
    if (der->parsed()) return cmd_space(o, derivation_space);
    if (jordan->parsed()) return cmd_space(o, jordan_derivation_space);
    if (lie->parsed()) return cmd_space(o, lie_derivation_space);
    if (phi->parsed()) return cmd_space(o, central_phi_space);
    if (jgen->parsed()) return cmd_space(o, jordan_generalized_space);
    if (gjor->parsed()) return cmd_space(o, generalized_jordan_space);
    if (decompose->parsed()) return cmd_decompose(o);
    if (check->parsed()) return cmd_check(o);
    if (peel->parsed()) return cmd_peel(o);
    if (wsub->parsed()) return cmd_wsub(o);
    if (faithful->parsed()) return cmd_faithful(o);
    if (verify->parsed()) return cmd_verify(o, app.count("--field") > 0);
  } catch (const CyclicQuiver& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kTheorem;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
