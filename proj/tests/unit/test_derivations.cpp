#include <random>

#include "doctest.h"
#include "quivalg/corpus.hpp"
#include "quivalg/derivations.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/reports.hpp"
#include "support.hpp"

using namespace quivalg;
using testing_support::algebra;
using testing_support::fixture;
using testing_support::fixture_algebra;

namespace {

struct Dims {
  const char* fixture;
  std::size_t dim, der, lie, center, comm, phi;
};

LinMap random_combination(const MapSpace& s, std::mt19937_64& rng) {
  const Field& f = s.space().field();
  SparseVector v;
  for (const auto& b : s.space().basis()) v.add_scaled(f.from_int(static_cast<int>(rng() % 7) - 3), b);
  return LinMap::from_vector(f, s.algebra_dim(), v);
}

}  // namespace

TEST_CASE("space dimensions on the worked examples") {
  const Dims table[] = {
      {"line3.quiver", 6, 5, 8, 1, 3, 3},  {"six_vertex_bound.quiver", 20, 21, 27, 1, 14, 6},
      {"six_vertex_free.quiver", 22, 24, 30, 1, 16, 6}, {"four_vertex.quiver", 8, 10, 14, 1, 4, 4},
      {"three_vertex.quiver", 5, 4, 7, 1, 2, 3},
  };
  for (const auto& row : table) {
    CAPTURE(row.fixture);
    auto a = fixture_algebra(row.fixture);
    CHECK(a.dim() == row.dim);
    auto der = derivation_space(a);
    auto jor = jordan_derivation_space(a);
    auto lie = lie_derivation_space(a);
    auto phi = central_phi_space(a);
    CHECK(der.dim() == row.der);
    CHECK(jor.dim() == row.der);
    CHECK(lie.dim() == row.lie);
    CHECK(center(a).dim() == row.center);
    CHECK(commutator_subspace(a).dim() == row.comm);
    CHECK(phi.dim() == row.phi);
    CHECK(jor.space() == der.space());
    CHECK(subspace_sum(der.space(), phi.space()) == lie.space());
    CHECK(subspace_intersect(der.space(), phi.space()).is_zero());
  }
}

TEST_CASE("Kronecker-free two-vertex algebra") {
  auto a = algebra(testing_support::line_quiver(2));
  CHECK(derivation_space(a).dim() == 2);
  CHECK(lie_derivation_space(a).dim() == 4);
}

TEST_CASE("property: computed bases satisfy their identities; inclusions hold") {
  CorpusParams p;
  p.count = 25;
  p.max_dim = 14;
  p.seed = 3;
  for (const auto& doc : generate_corpus(p)) {
    for (Field f : {Field::rationals(), Field::prime(5)}) {
      auto a = PathAlgebra::build(doc, f);
      auto der = derivation_space(a);
      auto lie = lie_derivation_space(a);
      auto jor = jordan_derivation_space(a);
      for (const auto& m : der.basis_maps()) {
        CHECK(is_derivation(a, m));
        CHECK(is_jordan_derivation(a, m));
        CHECK(is_lie_derivation(a, m));
      }
      for (const auto& m : lie.basis_maps()) CHECK(is_lie_derivation(a, m));
      for (const auto& m : jor.basis_maps()) CHECK(is_jordan_derivation(a, m));
      CHECK(subspace_intersect(der.space(), lie.space()) == der.space());
      CHECK(subspace_intersect(der.space(), jor.space()) == der.space());
    }
  }
}

TEST_CASE("property: inner derivations span a space of dimension dim A - dim Z") {
  CorpusParams p;
  p.count = 25;
  p.max_dim = 16;
  p.seed = 4;
  for (const auto& doc : generate_corpus(p)) {
    auto a = PathAlgebra::build(doc, Field::rationals());
    auto der = derivation_space(a);
    std::vector<SparseVector> inner;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      LinMap ad = inner_derivation(a, a.basis_vector(i));
      CHECK(der.contains(ad));
      inner.push_back(ad.vectorize());
    }
    CHECK(Subspace::span(a.field(), a.dim() * a.dim(), inner).dim() == a.dim() - center(a).dim());
  }
}

TEST_CASE("property: vectorize and from_vector are inverse") {
  auto a = fixture_algebra("four_vertex.quiver");
  for (const auto& m : lie_derivation_space(a).basis_maps()) {
    CHECK(LinMap::from_vector(a.field(), a.dim(), m.vectorize()) == m);
  }
}

TEST_CASE("standard decomposition: unique, correct, linear") {
  std::mt19937_64 rng(17);
  for (const char* name : {"six_vertex_bound.quiver", "four_vertex.quiver", "three_vertex.quiver"}) {
    CAPTURE(name);
    auto a = fixture_algebra(name);
    auto lie = lie_derivation_space(a);
    auto der = derivation_space(a);
    auto phi = central_phi_space(a);
    StandardDecomposer dec(a);
    CHECK(dec.phi_dim() == phi.dim());
    for (int trial = 0; trial < 4; ++trial) {
      LinMap t1 = random_combination(lie, rng);
      LinMap t2 = random_combination(lie, rng);
      auto d1 = dec.decompose(t1);
      auto d2 = dec.decompose(t2);
      auto d12 = dec.decompose(t1 + t2);
      CHECK(d1.unique);
      CHECK(der.contains(d1.derivation));
      CHECK(phi.contains(d1.central));
      CHECK(d1.derivation + d1.central == t1);
      CHECK(d12.derivation == d1.derivation + d2.derivation);
      CHECK(d12.central == d1.central + d2.central);
      auto slow = standard_decompose(a, t1);
      CHECK(slow.derivation == d1.derivation);
    }
    CHECK_THROWS_AS(standard_decompose(a, LinMap::identity(a)), NotLieDerivation);
  }
}

TEST_CASE("the Lie derivation with vertex constants 1, 2, 3") {
  auto a = fixture_algebra("three_vertex.quiver");
  LinMap theta = load_map_file(a, fixture("three_vertex_theta.json"));
  CHECK(is_lie_derivation(a, theta));
  CHECK_FALSE(is_derivation(a, theta));
  auto d = standard_decompose(a, theta);
  REQUIRE(d.vertex_constants);
  const Field& f = a.field();
  CHECK((*d.vertex_constants)[0] == f.from_int(1));
  CHECK((*d.vertex_constants)[1] == f.from_int(2));
  CHECK((*d.vertex_constants)[2] == f.from_int(3));
  auto e = [&](int v) { return a.vertex_basis_index(static_cast<std::size_t>(v)); };
  CHECK(d.derivation.image(e(0)) == parse_element(a, "-alpha"));
  CHECK(d.derivation.image(e(1)) == parse_element(a, "alpha + beta"));
  CHECK(d.derivation.image(e(2)) == parse_element(a, "-beta"));
  CHECK(d.central.image(e(1)) == f.from_int(2) * a.unit());
  auto lc = lie_characterization_check(a, theta);
  CHECK(lc.ok);
  CHECK(lc.matches_decomposition);
  for (const auto& m : derivation_space(a).basis_maps()) CHECK(derivation_support_check(a, m));
  CHECK(derivation_support_check(a, LinMap::zero(a)));
  std::vector<Vector> images(a.dim(), a.zero());
  images[a.vertex_basis_index(0)] = a.vertex_idempotent(1);
  CHECK_FALSE(derivation_support_check(a, LinMap::from_images(a.field(), images)));
}

TEST_CASE("the zero-constant case is a derivation") {
  auto a = fixture_algebra("three_vertex.quiver");
  std::vector<Vector> images(a.dim(), a.zero());
  images[a.vertex_basis_index(0)] = parse_element(a, "-alpha");
  images[a.vertex_basis_index(1)] = parse_element(a, "alpha + beta");
  images[a.vertex_basis_index(2)] = parse_element(a, "-beta");
  LinMap d = LinMap::from_images(a.field(), images);
  CHECK(is_derivation(a, d));
  CHECK(standard_decompose(a, d).central.is_zero());
}

TEST_CASE("central derivations vanish; identity and multiplication maps") {
  for (const char* name : {"line3.quiver", "six_vertex_bound.quiver", "four_vertex.quiver"}) {
    auto a = fixture_algebra(name);
    CHECK(central_derivations_vanish(a));
    CHECK_FALSE(is_derivation(a, LinMap::identity(a)));
    CHECK(is_derivation(a, LinMap::zero(a)));
    CHECK(is_derivation(a, left_multiplication(a, a.zero())));
  }
}

TEST_CASE("generalized pair spaces") {
  for (const char* name : {"line3.quiver", "three_vertex.quiver", "four_vertex.quiver"}) {
    auto a = fixture_algebra(name);
    auto jg = jordan_generalized_space(a);
    auto gj = generalized_jordan_space(a);
    auto jg_check = check_generalized_pairs(a, jg, PairLaw::JordanGeneralized);
    CHECK(jg_check.all());
    CHECK(jg_check.f_unit_central);
    CHECK(check_generalized_pairs(a, gj, PairLaw::GeneralizedJordan).all());
    // left multiplication by a non-central element, paired with d = 0
    Vector u = a.basis_vector(a.vertex_basis_index(0));
    SparseVector pair = left_multiplication(a, u).vectorize();
    CHECK(gj.space().contains(pair));
    CHECK_FALSE(center(a).contains(u));
    // (L_z + D, D) with central z and a derivation D is always a pair
    Subspace fs = project_f(gj);
    for (const auto& m : derivation_space(a).basis_maps()) CHECK(fs.contains(m.vectorize()));
  }
}

TEST_CASE("precondition guards") {
  auto f2 = fixture_algebra("four_vertex.quiver", Field::prime(2));
  CHECK_THROWS_AS(jordan_derivation_space(f2), CharTwoField);
  CHECK_THROWS_AS(is_jordan_derivation(f2, LinMap::zero(f2)), CharTwoField);
  CHECK_THROWS_AS(jordan_generalized_space(f2), CharTwoField);
  CHECK_THROWS_AS(generalized_jordan_space(f2), CharTwoField);
  CHECK(derivation_space(f2).dim() > 0);

  auto bound = fixture_algebra("six_vertex_bound.quiver");
  CHECK_THROWS_AS(derivation_support_check(bound, LinMap::zero(bound)), HasRelations);
  CHECK_THROWS_AS(lie_characterization_check(bound, LinMap::zero(bound)), HasRelations);
  auto split = algebra("vertex 1 2 3\narrow a 1 2\n");
  CHECK_THROWS_AS(lie_characterization_check(split, LinMap::zero(split)), DisconnectedQuiver);
}
