// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "quivalg/corpus.hpp"
#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/reports.hpp"
#include "quivalg/structure.hpp"
#include "support.hpp"

using namespace quivalg;
using testing_support::fixture;
using testing_support::fixture_algebra;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Result&)>& body) {
  Result r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail << " exception: " << e.what();
  }
  if (!r.pass) ++failures;
  std::printf("criterion %2d: %s  %s |%s\n", n, r.pass ? "PASS" : "FAIL", title, r.detail.str().c_str());
  std::fflush(stdout);
}

std::string outcome_text(const VerifyReport& rep, std::size_t check_pos) {
  std::ostringstream out;
  for (const auto& f : rep.fields) {
    const auto& c = f.checks[check_pos];
    out << " " << f.field << ": checked=" << c.checked << " n/a=" << c.not_applicable << " violations=" << c.violations;
  }
  return out.str();
}

bool outcome_clean(const VerifyReport& rep, std::size_t check_pos, bool need_applicable) {
  for (const auto& f : rep.fields) {
    const auto& c = f.checks[check_pos];
    if (c.violations != 0) return false;
    if (need_applicable && c.checked == 0) return false;
    if (c.checked + c.not_applicable != rep.instances) return false;
  }
  return true;
}

oracle::FreeAlgebra oracle_of(const PathAlgebra& a) {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& arr : a.quiver().arrows()) arrows.emplace_back(int(arr.source), int(arr.target));
  return oracle::FreeAlgebra(int(a.quiver().vertex_count()), arrows);
}

}  // namespace

int main() {
  const CorpusParams params;  // 200 instances, seed 1, <= 8 vertices, <= 12 arrows, <= 3 relations
  const std::vector<Field> fields = {Field::rationals(), Field::prime(5)};
  std::vector<QuiverDocument> corpus;

  criterion(1, "fixture dimensions and the bound quotient basis", [&](Result& r) {
    auto t = Clock::now();
    r.detail << " T2..T6 dims";
    for (int n = 2; n <= 6; ++n) {
      auto a = testing_support::algebra(testing_support::line_quiver(n));
      r.require(a.dim() == std::size_t(n * (n + 1) / 2), "T" + std::to_string(n));
      r.detail << " " << a.dim();
    }
    auto free = fixture_algebra("six_vertex_free.quiver");
    auto bound = fixture_algebra("six_vertex_bound.quiver");
    const std::set<std::string> listed = {
        "e_1",         "e_2",         "e_3",         "e_4",
        "e_5",         "e_6",         "alpha",       "beta",
        "gamma",       "zeta",        "epsilon",     "eta",
        "alpha.beta",  "alpha.gamma", "alpha.beta.zeta", "alpha.gamma.zeta",
        "alpha.gamma.epsilon", "beta.zeta", "gamma.zeta", "gamma.epsilon"};
    auto labels = bound.basis_labels();
    std::set<std::string> got(labels.begin(), labels.end());
    r.require(free.dim() == 22, "free dim");
    r.require(bound.dim() == 20, "bound dim");
    r.require(got == listed, "basis set");
    double s = seconds_since(t);
    r.require(s < 1.0, "runtime");
    r.detail << "; dims " << free.dim() << "/" << bound.dim() << "; basis matches the 20 listed cosets; " << s << " s";
  });

  criterion(2, "JDer = Der on the 200-instance corpus over Q and F5", [&](Result& r) {
    auto t = Clock::now();
    corpus = generate_corpus(params);
    auto rep = verify_corpus(corpus, {Check::JordanIsDerivation}, fields, params.seed);
    double s = seconds_since(t);
    r.require(rep.instances == 200, "corpus size");
    r.require(outcome_clean(rep, 0, true), "violations");
    r.require(s < 120.0, "runtime");
    r.detail << outcome_text(rep, 0) << "; " << s << " s";
  });

  VerifyReport rest;
  double rest_seconds = 0;
  bool rest_ok = true;
  std::string rest_error;
  try {
    auto t = Clock::now();
    if (corpus.empty()) corpus = generate_corpus(params);
    rest = verify_corpus(corpus,
                         {Check::LieStandardForm, Check::CentralDerivationsVanish, Check::WSaturationFull,
                          Check::LieVertexConstants},
                         fields, params.seed);
    rest_seconds = seconds_since(t);
  } catch (const std::exception& e) {
    rest_ok = false;
    rest_error = e.what();
  }
  auto corpus_criterion = [&](int n, const char* title, std::size_t pos, bool need_applicable) {
    criterion(n, title, [&](Result& r) {
      r.require(rest_ok, "run: " + rest_error);
      if (!rest_ok) return;
      r.require(outcome_clean(rest, pos, need_applicable), "violations");
      r.detail << outcome_text(rest, pos);
    });
  };
  corpus_criterion(3, "LieDer = Der + Phi with unique decompositions", 0, true);
  corpus_criterion(4, "no nonzero derivation takes central values", 1, true);
  corpus_criterion(5, "idempotents and commutators generate the algebra", 2, true);
  corpus_criterion(6, "relation-free connected: Phi(e_i) in K1, support patterns", 3, true);
  std::printf("              (criteria 3-6 corpus run: %.2f s)\n", rest_seconds);

  criterion(7, "three-vertex Lie derivation end to end", [&](Result& r) {
    auto a = fixture_algebra("three_vertex.quiver");
    LinMap theta = load_map_file(a, fixture("three_vertex_theta.json"));
    r.require(is_lie_derivation(a, theta), "accepted as Lie");
    r.require(!is_derivation(a, theta), "rejected as derivation");
    auto d = standard_decompose(a, theta);
    r.require(d.unique, "unique");
    auto e = [&](std::size_t v) { return a.vertex_basis_index(v); };
    r.require(d.derivation.image(e(0)) == parse_element(a, "-alpha"), "D(e1)");
    r.require(d.derivation.image(e(1)) == parse_element(a, "alpha+beta"), "D(e2)");
    r.require(d.derivation.image(e(2)) == parse_element(a, "-beta"), "D(e3)");
    for (std::size_t v = 0; v < 3; ++v) {
      r.require(d.central.image(e(v)) == a.field().from_int(long(v) + 1) * a.unit(), "Phi(e" + std::to_string(v + 1) + ")");
    }
    r.require(d.derivation.image(*a.basis_index("alpha")) == a.zero(), "D(alpha)");
    r.require(d.central.image(*a.basis_index("beta")) == a.zero(), "Phi(beta)");
    r.require(d.vertex_constants && (*d.vertex_constants)[2] == a.field().from_int(3), "k");
    r.detail << " Lie yes, derivation no; D(e1)=-alpha D(e2)=alpha+beta D(e3)=-beta; Phi(e_i)=k_i*1, k=(1,2,3)";
  });

  criterion(8, "four-vertex example: faithfulness and zero block", [&](Result& r) {
    auto a = fixture_algebra("four_vertex.quiver");
    auto b = pierce_decompose(a, parse_element(a, "1-e_1"));
    auto left = bimodule_faithful(a, b, Side::Left);
    r.require(!left.faithful, "not faithful");
    r.require(left.witness.has_value() && left.witness_verified, "witness verified");
    auto c = pierce_decompose(a, parse_element(a, "e_1+e_2"));
    r.require(c.lower.is_zero(), "(1-e)Ae = 0");
    r.detail << " left-faithful=false, witness " << (left.witness ? format_element(a, *left.witness) : "-")
             << " verified; (1-e)Ae dim " << c.lower.dim();
  });

  criterion(9, "solver matches the independent oracle", [&](Result& r) {
    auto t2 = testing_support::algebra(testing_support::line_quiver(2));
    auto ex = fixture_algebra("three_vertex.quiver");
    auto ot2 = oracle_of(t2);
    auto oex = oracle_of(ex);
    using K = oracle::FreeAlgebra::Kind;
    struct Row {
      const char* what;
      std::size_t expected, solver, independent;
    } rows[] = {
        {"Der(T2)", 2, derivation_space(t2).dim(), ot2.solution_dim(K::Der)},
        {"LieDer(T2)", 4, lie_derivation_space(t2).dim(), ot2.solution_dim(K::Lie)},
        {"Der", 4, derivation_space(ex).dim(), oex.solution_dim(K::Der)},
        {"LieDer", 7, lie_derivation_space(ex).dim(), oex.solution_dim(K::Lie)},
        {"Z", 1, center(ex).dim(), oex.center_dim()},
        {"[A,A]", 2, commutator_subspace(ex).dim(), oex.commutator_dim()},
        // inner derivations: dim = dim A - dim Z
        {"Inn", 4, ex.dim() - center(ex).dim(), oex.inner_derivation_dim()},
    };
    for (const auto& row : rows) {
      r.require(row.solver == row.expected && row.independent == row.expected, row.what);
      r.detail << " " << row.what << "=" << row.solver << "/" << row.independent;
    }
  });

  criterion(10, "exhaustive algebra axioms and the characteristic-2 guard", [&](Result& r) {
    std::size_t algebras = 0;
    for (const char* name : {"line3.quiver", "six_vertex_bound.quiver", "six_vertex_free.quiver",
                             "four_vertex.quiver", "three_vertex.quiver"}) {
      for (Field f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        r.require(check_axioms(fixture_algebra(name, f)).all(), name);
        ++algebras;
      }
    }
    if (corpus.empty()) corpus = generate_corpus(params);
    for (const auto& doc : corpus) {
      for (const auto& f : fields) {
        r.require(check_axioms(PathAlgebra::build(doc, f)).all(), "corpus");
        ++algebras;
      }
    }
    bool guarded = false;
    try {
      jordan_derivation_space(fixture_algebra("four_vertex.quiver", Field::prime(2)));
    } catch (const CharTwoField&) {
      guarded = true;
    }
    r.require(guarded, "F2 guard");
    r.detail << " associativity, unit, orthogonal idempotents on " << algebras
             << " algebras; Jordan operations refuse F2";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
