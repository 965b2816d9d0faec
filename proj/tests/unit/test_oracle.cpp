#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "quivalg/corpus.hpp"
#include "quivalg/derivations.hpp"
#include "support.hpp"

using namespace quivalg;

namespace {

oracle::FreeAlgebra oracle_of(const QuiverDocument& doc) {
  std::vector<std::pair<int, int>> arrows;
  auto at = [&](const std::string& v) {
    return static_cast<int>(std::find(doc.vertices.begin(), doc.vertices.end(), v) - doc.vertices.begin());
  };
  for (const auto& a : doc.arrows) arrows.emplace_back(at(a.source), at(a.target));
  return oracle::FreeAlgebra(static_cast<int>(doc.vertices.size()), arrows);
}

void compare(const QuiverDocument& doc) {
  auto o = oracle_of(doc);
  auto a = PathAlgebra::build(doc, Field::rationals());
  REQUIRE(o.dim() == a.dim());
  CHECK(o.solution_dim(oracle::FreeAlgebra::Kind::Der) == derivation_space(a).dim());
  CHECK(o.solution_dim(oracle::FreeAlgebra::Kind::Lie) == lie_derivation_space(a).dim());
  CHECK(o.solution_dim(oracle::FreeAlgebra::Kind::Jordan) == jordan_derivation_space(a).dim());
  CHECK(o.center_dim() == center(a).dim());
  CHECK(o.commutator_dim() == commutator_subspace(a).dim());
  CHECK(o.inner_derivation_dim() == a.dim() - center(a).dim());
  // Phi consists of maps A/[A,A] -> Z(A)
  CHECK(central_phi_space(a).dim() == (a.dim() - o.commutator_dim()) * o.center_dim());
}

}  // namespace

TEST_CASE("oracle agrees on the relation-free examples") {
  for (const char* name : {"line3.quiver", "six_vertex_free.quiver", "four_vertex.quiver", "three_vertex.quiver"}) {
    CAPTURE(name);
    compare(parse_quiver(read_text_file(testing_support::fixture(name))));
  }
  for (int n = 1; n <= 5; ++n) compare(parse_quiver(testing_support::line_quiver(n)));
}

TEST_CASE("oracle agrees on random relation-free quivers") {
  CorpusParams p;
  p.count = 30;
  p.max_relations = 0;
  p.max_vertices = 6;
  p.max_arrows = 8;
  p.max_dim = 12;
  p.seed = 31;
  for (const auto& doc : generate_corpus(p)) compare(doc);
}
