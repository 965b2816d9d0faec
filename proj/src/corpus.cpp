#include "quivalg/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>

#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/structure.hpp"

namespace quivalg {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

QuiverDocument random_document(std::mt19937_64& rng, const CorpusParams& p) {
  QuiverDocument doc;
  std::size_t n = uniform(rng, 1, p.max_vertices);
  for (std::size_t v = 0; v < n; ++v) doc.vertices.push_back("v" + std::to_string(v + 1));
  std::vector<std::size_t> rank(n);
  for (std::size_t v = 0; v < n; ++v) rank[v] = v;
  std::shuffle(rank.begin(), rank.end(), rng);

  std::size_t m = n < 2 ? 0 : uniform(rng, 0, p.max_arrows);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t x = uniform(rng, 0, n - 1);
    std::size_t y = uniform(rng, 0, n - 2);
    if (y >= x) ++y;
    if (rank[x] > rank[y]) std::swap(x, y);
    std::string name = "a" + std::to_string(k + 1);
    doc.arrows.push_back(ArrowDecl{name, doc.vertices[x], doc.vertices[y], 0});
    arrows.push_back(Arrow{name, x, y});
  }

  Quiver q(doc.vertices, arrows);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> parallel;
  std::vector<Path> long_paths;
  for (const auto& path : enumerate_paths(q)) {
    if (path.length() < 2) continue;
    long_paths.push_back(path);
    parallel[{path.source, path.target}].push_back(path);
  }
  static const int coefficients[] = {-2, -1, 1, 2, 3};
  auto coeff = [&] { return mpq_class(coefficients[rng() % 5]); };
  auto names = [&](const Path& path) {
    std::vector<std::string> out;
    for (std::size_t x : path.arrows) out.push_back(q.arrow(x).name);
    return out;
  };
  std::size_t r = long_paths.empty() ? 0 : uniform(rng, 0, p.max_relations);
  for (std::size_t k = 0; k < r; ++k) {
    const Path& first = long_paths[rng() % long_paths.size()];
    RelationDecl rel;
    rel.terms.push_back(TermDecl{coeff(), names(first)});
    const auto& group = parallel[{first.source, first.target}];
    if (group.size() > 1 && rng() % 2 == 0) {
      const Path* second = &group[rng() % group.size()];
      while (*second == first) second = &group[rng() % group.size()];
      rel.terms.push_back(TermDecl{coeff(), names(*second)});
    }
    doc.relations.push_back(std::move(rel));
  }
  return doc;
}

}  // namespace

std::vector<QuiverDocument> generate_corpus(const CorpusParams& params) {
  if (params.count == 0 || params.max_vertices == 0) throw InputError("corpus parameters must be positive");
  std::mt19937_64 rng(params.seed);
  std::vector<QuiverDocument> out;
  Field probe = Field::rationals();
  while (out.size() < params.count) {
    QuiverDocument doc = random_document(rng, params);
    if (PathAlgebra::build(doc, probe).dim() > params.max_dim) continue;
    out.push_back(std::move(doc));
  }
  return out;
}

namespace {

struct CheckKey {
  Check check;
  const char* number;
  const char* name;
};

constexpr CheckKey kKeys[] = {
    {Check::JordanIsDerivation, "3.4", "jordan-is-derivation"},
    {Check::LieStandardForm, "4.4", "lie-standard-form"},
    {Check::CentralDerivationsVanish, "3.5", "central-derivations-vanish"},
    {Check::WSaturationFull, "4.3", "w-saturation-full"},
    {Check::LieVertexConstants, "4.7", "lie-vertex-constants"},
    {Check::GeneralizedPairs, "3.7", "generalized-pairs"},
    {Check::LieAgreesOnPaths, "4.5", "lie-agrees-on-paths"},
    {Check::StripRecursion, "strip", "strip-recursion"},
};

}  // namespace

Check parse_check(std::string_view key) {
  for (const auto& k : kKeys) {
    if (key == k.number || key == k.name) return k.check;
  }
  throw InputError("unknown check '" + std::string(key) + "'");
}

std::string check_name(Check c) {
  for (const auto& k : kKeys) {
    if (k.check == c) return k.name;
  }
  return "?";
}

std::vector<Check> parse_check_list(std::string_view text) {
  std::vector<Check> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      Check c = parse_check(item);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

bool VerifyReport::ok() const {
  for (const auto& f : fields) {
    for (const auto& c : f.checks) {
      if (c.violations != 0) return false;
    }
  }
  return true;
}

namespace {

// Lazily computed spaces shared by the checks of one algebra.
class Workspace {
 public:
  explicit Workspace(const PathAlgebra& a) : a_(a) {}
  const MapSpace& der() { return get(der_, [&] { return derivation_space(a_); }); }
  const MapSpace& lie() { return get(lie_, [&] { return lie_derivation_space(a_); }); }
  const MapSpace& phi() { return get(phi_, [&] { return central_phi_space(a_); }); }
  const std::vector<Decomposition>& decompositions() {
    if (!decs_) {
      decs_.emplace();
      StandardDecomposer dec(a_);
      for (const auto& m : lie().basis_maps()) decs_->push_back(dec.decompose(m));
    }
    return *decs_;
  }
  bool relation_free_connected() const { return a_.is_relation_free() && a_.quiver().is_connected(); }

 private:
  template <class F>
  const MapSpace& get(std::optional<MapSpace>& slot, F make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }
  const PathAlgebra& a_;
  std::optional<MapSpace> der_, lie_, phi_;
  std::optional<std::vector<Decomposition>> decs_;
};

// Returns an empty string on success, a reason on violation, or "n/a".
std::string run_one(const PathAlgebra& a, Workspace& ws, Check check) {
  const bool char_two = a.field().characteristic() == 2;
  switch (check) {
    case Check::JordanIsDerivation:
      if (char_two) return "n/a";
      return jordan_derivation_space(a).space() == ws.der().space() ? "" : "JDer differs from Der";
    case Check::LieStandardForm: {
      if (subspace_sum(ws.der().space(), ws.phi().space()) != ws.lie().space()) return "LieDer != Der + Phi";
      for (const auto& d : ws.decompositions()) {
        if (!d.unique || !d.d_is_derivation || !d.phi_central || !d.phi_kills_commutators) {
          return "decomposition flags failed";
        }
        if (d.derivation + d.central != d.theta) return "D + Phi != Theta";
      }
      return "";
    }
    case Check::CentralDerivationsVanish:
      return central_derivations_vanish(a) ? "" : "nonzero derivation with central values";
    case Check::WSaturationFull:
      return w_saturate(a).full ? "" : "saturation stops below the algebra";
    case Check::LieVertexConstants: {
      if (!ws.relation_free_connected()) return "n/a";
      for (const auto& m : ws.der().basis_maps()) {
        if (!derivation_support_check(a, m)) return "derivation support pattern fails";
      }
      for (const auto& d : ws.decompositions()) {
        if (!d.vertex_constants) return "Phi(e_i) not a multiple of 1";
        if (!lie_characterization_check(a, d.theta, d).ok) return "Lie characterization fails";
      }
      return "";
    }
    case Check::GeneralizedPairs: {
      if (char_two) return "n/a";
      if (!check_generalized_pairs(a, jordan_generalized_space(a), PairLaw::JordanGeneralized).all()) return "Jordan generalized pair fails";
      if (!check_generalized_pairs(a, generalized_jordan_space(a), PairLaw::GeneralizedJordan).all()) return "generalized Jordan pair fails";
      return "";
    }
    case Check::LieAgreesOnPaths: {
      if (!ws.relation_free_connected()) return "n/a";
      for (const auto& d : ws.decompositions()) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          if (!a.basis_path(j).is_trivial() && d.derivation.image(j) != d.theta.image(j)) {
            return "D differs from Theta on a nontrivial path";
          }
        }
      }
      return "";
    }
    case Check::StripRecursion:
      return strip_recursion_verify(a).all() ? "" : "a peeling level fails";
  }
  return "unknown check";
}

}  // namespace

void run_checks(const PathAlgebra& a, const std::vector<Check>& checks, std::vector<CheckOutcome>& outcomes,
                const std::string& label) {
  Workspace ws(a);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    std::string result;
    try {
      result = run_one(a, ws, checks[k]);
    } catch (const TheoremViolation& e) {
      result = e.what();
    }
    CheckOutcome& o = outcomes[k];
    if (result == "n/a") {
      ++o.not_applicable;
    } else {
      ++o.checked;
      if (!result.empty()) {
        ++o.violations;
        o.failures.push_back(label + ": " + result);
      }
    }
  }
}

VerifyReport verify_corpus(const std::vector<QuiverDocument>& corpus, const std::vector<Check>& checks,
                           const std::vector<Field>& fields, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.instances = corpus.size();
  report.seed = seed;
  for (const auto& f : fields) {
    FieldOutcome fo{f.name(), {}};
    for (Check c : checks) fo.checks.push_back(CheckOutcome{c, 0, 0, 0, {}});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      PathAlgebra a = PathAlgebra::build(corpus[i], f);
      run_checks(a, checks, fo.checks, "instance " + std::to_string(i) + " over " + f.name());
    }
    report.fields.push_back(std::move(fo));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace quivalg
