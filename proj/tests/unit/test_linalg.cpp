#include <random>

#include "doctest.h"
#include "quivalg/linalg.hpp"

using namespace quivalg;

namespace {

Matrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(rng() % 100) < density) m.at(r, c) = f.from_int(static_cast<int>(rng() % 7) - 3);
    }
  }
  return m;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

std::vector<SparseVector> sparse_rows(const Matrix& m) {
  std::vector<SparseVector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(SparseVector::from_dense(m.row(r)));
  return out;
}

}  // namespace

TEST_CASE("sparse vectors combine entries and drop zeros") {
  Field q = Field::rationals();
  auto v = SparseVector::from_entries({{3, q.from_int(2)}, {1, q.one()}, {3, q.from_int(-2)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].index == 1);
  CHECK(v.find(3) == nullptr);
  auto w = SparseVector::from_dense(v.to_dense(q, 5));
  CHECK(v == w);
  w.add_scaled(q.from_int(-1), v);
  CHECK(w.empty());
}

TEST_CASE("rref of a known matrix") {
  Field q = Field::rationals();
  Matrix m = Matrix::from_rows(q, 3,
                               {{q.from_int(1), q.from_int(2), q.from_int(3)},
                                {q.from_int(2), q.from_int(4), q.from_int(6)},
                                {q.from_int(0), q.from_int(1), q.from_int(1)}});
  auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced.at(0, 2) == q.from_int(1));
  CHECK(r.reduced.at(1, 2) == q.from_int(1));
  CHECK(rank(m) == 2);
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(m * k.dense_basis()[0]));
}

TEST_CASE("property: rank-nullity, rref idempotence, sparse and dense routes agree") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 8;
      Matrix m = random_matrix(f, rng, rows, cols, 45);
      auto r = rref(m);
      CHECK(rref(r.reduced).reduced == r.reduced);
      Subspace k = kernel(m);
      CHECK(rank(m) + k.dim() == cols);
      for (const auto& v : k.dense_basis()) CHECK(is_zero(m * v));
      Subspace ns = nullspace(f, cols, sparse_rows(m));
      CHECK(ns == k);
      RowEchelon ech(f, cols);
      for (const auto& row : sparse_rows(m)) ech.insert(row);
      CHECK(ech.rank() == rank(m));
      CHECK(rank(m.transpose()) == rank(m));
    }
  }
}

TEST_CASE("property: dim(U + W) + dim(U n W) = dim U + dim W") {
  std::mt19937_64 rng(23);
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng() % 7;
      Subspace u = Subspace::span(f, n, rows_of(random_matrix(f, rng, rng() % 5, n, 40)));
      Subspace w = Subspace::span(f, n, rows_of(random_matrix(f, rng, rng() % 5, n, 40)));
      Subspace s = subspace_sum(u, w);
      Subspace i = subspace_intersect(u, w);
      CHECK(s.dim() + i.dim() == u.dim() + w.dim());
      for (const auto& v : i.dense_basis()) {
        CHECK(u.contains(v));
        CHECK(w.contains(v));
      }
      for (const auto& v : u.dense_basis()) CHECK(s.contains(v));
      CHECK(subspace_eq(subspace_sum(u, u), u));
      CHECK(subspace_intersect(u, Subspace::full(f, n)) == u);
      CHECK(subspace_intersect(u, Subspace::zero(f, n)).is_zero());
    }
  }
}

TEST_CASE("property: solve returns a solution exactly when one exists") {
  std::mt19937_64 rng(5);
  Field q = Field::rationals();
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix m = random_matrix(q, rng, rows, cols, 50);
    Vector x(cols);
    for (auto& c : x) c = q.from_int(static_cast<int>(rng() % 5) - 2);
    Vector b = m * x;
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
    std::vector<Scalar> rhs(b.begin(), b.end());
    auto sparse = solve_sparse(q, cols, sparse_rows(m), rhs);
    REQUIRE(sparse);
    CHECK(m * sparse->particular == b);
    CHECK(sparse->nullity == kernel(m).dim());
  }
  Matrix m = Matrix::from_rows(q, 1, {{q.one()}, {q.one()}});
  CHECK_FALSE(solve(m, {q.one(), q.zero()}));
  CHECK_FALSE(solve_sparse(q, 1, sparse_rows(m), {q.one(), q.zero()}));
}

TEST_CASE("subspace coordinates reconstruct members") {
  Field q = Field::rationals();
  Subspace s = Subspace::span(q, 3, std::vector<Vector>{{q.one(), q.one(), q.zero()}, {q.zero(), q.one(), q.one()}});
  Vector v{q.from_int(2), q.from_int(5), q.from_int(3)};
  auto c = s.coordinates(v);
  REQUIRE(c);
  Vector back = zero_vector(q, 3);
  auto basis = s.dense_basis();
  for (std::size_t k = 0; k < basis.size(); ++k) back = back + (*c)[k] * basis[k];
  CHECK(back == v);
  CHECK_FALSE(s.coordinates(Vector{q.one(), q.zero(), q.zero()}));
}
