#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivalg/field.hpp"

namespace quivalg {

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& s, Vector v);

struct Entry {
  std::size_t index;
  Scalar value;
};

/// Sparse vector: entries sorted by strictly increasing index, no zeros.
class SparseVector {
 public:
  SparseVector() = default;
  /// Entries may be unsorted and repeated; they are combined and zeros dropped.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector from_dense(const Vector& v);

  Vector to_dense(const Field& f, std::size_t n) const;

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry& operator[](std::size_t k) const { return entries_[k]; }
  const Entry& front() const { return entries_.front(); }

  /// Value at `index`, or nullptr when it is zero.
  const Scalar* find(std::size_t index) const;

  /// this += a * y
  void add_scaled(const Scalar& a, const SparseVector& y);
  void scale(const Scalar& a);
  SparseVector shifted(std::size_t offset) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b);
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

 private:
  friend class RowEchelon;
  std::vector<Entry> entries_;
};

/// Dense rectangular matrix over a field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Incremental Gaussian elimination on sparse rows. Pivot of a row is its
/// first nonzero column. Inserted rows are kept normalized (pivot = 1) and
/// free of earlier pivots to their left; `finalize()` brings the whole set
/// to reduced row echelon form.
class RowEchelon {
 public:
  RowEchelon(Field f, std::size_t cols);

  /// Returns true when the row was independent of the current rows.
  bool insert(SparseVector row);
  /// Residual of `row` modulo the current row space.
  SparseVector reduce(SparseVector row) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  /// Full back-substitution, then rows sorted by pivot.
  void finalize();
  const std::vector<SparseVector>& rows() const noexcept { return rows_; }
  /// Pivot column of rows()[k].
  std::size_t pivot(std::size_t k) const { return rows_[k].front().index; }

 private:
  SparseVector reduce_from(SparseVector row) const;

  Field field_;
  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// A subspace of K^n stored by its reduced row echelon basis.
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<SparseVector>& vectors);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_; }

  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  std::vector<Vector> dense_basis() const;
  std::vector<std::size_t> pivots() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Vector& v) const;
  /// Residual of `v` after elimination against the basis (zero iff member).
  SparseVector residual(const SparseVector& v) const;
  /// Coefficients of a member in terms of basis(); nullopt for non-members.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Field f, std::size_t ambient, std::vector<SparseVector> basis);
  friend Subspace nullspace(const Field&, std::size_t, const std::vector<SparseVector>&);

  Field field_;
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_eq(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Vector& v);

/// Solution space of the homogeneous system whose equations are `equations`
/// (each a row over `cols` unknowns). Result basis is in RREF.
Subspace nullspace(const Field& f, std::size_t cols, const std::vector<SparseVector>& equations);

struct SparseSolution {
  Vector particular;
  /// Dimension of the homogeneous solution space.
  std::size_t nullity;
};

/// Solves sum_c x_c * row[c] = rhs for each equation row; free unknowns
/// are set to zero. `rhs` is indexed like `equations`.
std::optional<SparseSolution> solve_sparse(const Field& f, std::size_t cols,
                                           const std::vector<SparseVector>& equations,
                                           const std::vector<Scalar>& rhs);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Dense Gauss-Jordan elimination, pivoting on the first nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace quivalg
