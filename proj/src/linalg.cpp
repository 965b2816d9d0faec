#include "quivalg/linalg.hpp"

#include <algorithm>

#include "quivalg/errors.hpp"

namespace quivalg {
namespace {

// out = v[0, pos) ++ (v[pos, end) + a * y). Requires y's indices >= v[pos].index.
void merge_tail(std::vector<Entry>& v, std::size_t pos, const Scalar& a, const std::vector<Entry>& y,
                std::vector<Entry>& scratch) {
  scratch.clear();
  scratch.reserve(v.size() + y.size());
  for (std::size_t i = 0; i < pos; ++i) scratch.push_back(std::move(v[i]));
  std::size_t i = pos;
  std::size_t j = 0;
  while (i < v.size() || j < y.size()) {
    if (j == y.size() || (i < v.size() && v[i].index < y[j].index)) {
      scratch.push_back(std::move(v[i++]));
    } else if (i == v.size() || y[j].index < v[i].index) {
      scratch.push_back(Entry{y[j].index, a * y[j].value});
      ++j;
    } else {
      Scalar s = v[i].value + a * y[j].value;
      if (!s.is_zero()) scratch.push_back(Entry{v[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  v.swap(scratch);
}

void require_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.field() != b.field()) {
    throw DimensionMismatch("subspaces live in different ambient spaces");
  }
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

// --- SparseVector ---------------------------------------------------------

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
  return out;
}

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.entries_.push_back(Entry{i, v[i]});
  }
  return out;
}

Vector SparseVector::to_dense(const Field& f, std::size_t n) const {
  Vector out = zero_vector(f, n);
  for (const auto& e : entries_) {
    if (e.index >= n) throw DimensionMismatch("sparse vector index out of range");
    out[e.index] = e.value;
  }
  return out;
}

const Scalar* SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != index) return nullptr;
  return &it->value;
}

void SparseVector::add_scaled(const Scalar& a, const SparseVector& y) {
  if (a.is_zero() || y.empty()) return;
  std::vector<Entry> scratch;
  // merge_tail needs y's indices >= v[pos]; merging from 0 satisfies it trivially
  merge_tail(entries_, 0, a, y.entries_, scratch);
}

void SparseVector::scale(const Scalar& a) {
  if (a.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= a;
}

SparseVector SparseVector::shifted(std::size_t offset) const {
  SparseVector out = *this;
  for (auto& e : out.entries_) e.index += offset;
  return out;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].index != b.entries_[i].index || a.entries_[i].value != b.entries_[i].value) return false;
  }
  return true;
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[r * cols_ + c];
}

Vector Matrix::row(std::size_t r) const {
  Vector out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) out.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes differ");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shapes differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shapes differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// --- RowEchelon -----------------------------------------------------------

RowEchelon::RowEchelon(Field f, std::size_t cols) : field_(f), cols_(cols), row_of_pivot_(cols, -1) {}

SparseVector RowEchelon::reduce_from(SparseVector row) const {
  std::vector<Entry> scratch;
  std::size_t pos = 0;
  auto& v = row.entries_;
  while (pos < v.size()) {
    std::ptrdiff_t k = row_of_pivot_[v[pos].index];
    if (k < 0) {
      ++pos;
      continue;
    }
    Scalar factor = -v[pos].value;
    merge_tail(v, pos, factor, rows_[static_cast<std::size_t>(k)].entries_, scratch);
  }
  return row;
}

SparseVector RowEchelon::reduce(SparseVector row) const {
  if (!row.empty() && row.entries_.back().index >= cols_) {
    throw DimensionMismatch("row index exceeds echelon column count");
  }
  return reduce_from(std::move(row));
}

bool RowEchelon::insert(SparseVector row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Scalar inv = row.entries_.front().value.inverse();
  row.scale(inv);
  row_of_pivot_[row.entries_.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

void RowEchelon::finalize() {
  std::sort(rows_.begin(), rows_.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    row_of_pivot_[rows_[k].front().index] = static_cast<std::ptrdiff_t>(k);
  }
  std::vector<Entry> scratch;
  for (std::size_t k = rows_.size(); k-- > 0;) {
    auto& v = rows_[k].entries_;
    // Later rows are already reduced, so eliminating one pivot column only
    // introduces non-pivot columns; coefficients can be read up front.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t i = 1; i < v.size(); ++i) {
      std::ptrdiff_t r = row_of_pivot_[v[i].index];
      if (r >= 0) hits.emplace_back(static_cast<std::size_t>(r), -v[i].value);
    }
    for (const auto& [r, factor] : hits) merge_tail(v, 1, factor, rows_[r].entries_, scratch);
  }
}

// --- Subspace -------------------------------------------------------------

Subspace::Subspace(Field f, std::size_t ambient, std::vector<SparseVector> basis)
    : field_(f), ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(f, ambient, {}); }

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<SparseVector> basis;
  basis.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(SparseVector::from_entries({Entry{i, f.one()}}));
  return Subspace(f, ambient, std::move(basis));
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<SparseVector>& vectors) {
  RowEchelon ech(f, ambient);
  for (const auto& v : vectors) {
    for (const auto& e : v.entries()) {
      if (!f.contains(e.value)) throw FieldMismatch("vector entries not in the subspace field");
    }
    ech.insert(v);
  }
  ech.finalize();
  return Subspace(f, ambient, ech.rows());
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
  std::vector<SparseVector> sparse;
  sparse.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    sparse.push_back(SparseVector::from_dense(v));
  }
  return span(f, ambient, sparse);
}

std::vector<Vector> Subspace::dense_basis() const {
  std::vector<Vector> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.to_dense(field_, ambient_));
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.front().index);
  return out;
}

SparseVector Subspace::residual(const SparseVector& v) const {
  if (!v.empty() && v.entries().back().index >= ambient_) {
    throw DimensionMismatch("vector longer than the ambient space");
  }
  // RREF rows vanish at each other's pivots, so the coefficients are v's
  // values at the pivot columns.
  SparseVector out = v;
  std::size_t k = 0;
  for (const auto& e : v.entries()) {
    while (k < basis_.size() && basis_[k].front().index < e.index) ++k;
    if (k == basis_.size()) break;
    if (basis_[k].front().index == e.index) out.add_scaled(-e.value, basis_[k]);
  }
  return out;
}

bool Subspace::contains(const SparseVector& v) const { return residual(v).empty(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  return contains(SparseVector::from_dense(v));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(v[b.front().index]);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  return a.basis_ == b.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  const std::size_t n = a.ambient();
  RowEchelon ech(a.field(), 2 * n);
  for (const auto& v : a.basis()) {
    SparseVector doubled = v;
    doubled.add_scaled(a.field().one(), v.shifted(n));
    ech.insert(std::move(doubled));
  }
  for (const auto& v : b.basis()) ech.insert(v);
  ech.finalize();
  std::vector<SparseVector> meet;
  for (const auto& row : ech.rows()) {
    if (row.front().index < n) continue;
    std::vector<Entry> back;
    for (const auto& e : row.entries()) back.push_back(Entry{e.index - n, e.value});
    meet.push_back(SparseVector::from_entries(std::move(back)));
  }
  return Subspace::span(a.field(), n, meet);
}

bool subspace_eq(const Subspace& a, const Subspace& b) { return a == b; }

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

Subspace nullspace(const Field& f, std::size_t cols, const std::vector<SparseVector>& equations) {
  // Eliminate in reversed column order: the free columns then become the
  // leading entries of the kernel vectors, which lands the basis directly
  // in RREF.
  RowEchelon ech(f, cols);
  for (const auto& eq : equations) {
    std::vector<Entry> rev;
    rev.reserve(eq.size());
    for (const auto& e : eq.entries()) {
      if (e.index >= cols) throw DimensionMismatch("equation index exceeds unknown count");
      rev.push_back(Entry{cols - 1 - e.index, e.value});
    }
    ech.insert(SparseVector::from_entries(std::move(rev)));
  }
  ech.finalize();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t k = 0; k < ech.rank(); ++k) is_pivot[cols - 1 - ech.pivot(k)] = true;
  std::vector<std::vector<Entry>> kernel_rows(cols);
  for (std::size_t f_col = 0; f_col < cols; ++f_col) {
    if (!is_pivot[f_col]) kernel_rows[f_col].push_back(Entry{f_col, f.one()});
  }
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    const auto& row = ech.rows()[k];
    std::size_t p = cols - 1 - row.front().index;
    for (std::size_t i = 1; i < row.size(); ++i) {
      kernel_rows[cols - 1 - row[i].index].push_back(Entry{p, -row[i].value});
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) basis.push_back(SparseVector::from_entries(std::move(kernel_rows[c])));
  }
  return Subspace(f, cols, std::move(basis));
}

std::optional<SparseSolution> solve_sparse(const Field& f, std::size_t cols,
                                           const std::vector<SparseVector>& equations,
                                           const std::vector<Scalar>& rhs) {
  if (rhs.size() != equations.size()) throw DimensionMismatch("one right-hand side per equation required");
  RowEchelon ech(f, cols + 1);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    SparseVector row = equations[i];
    if (!row.empty() && row.entries().back().index >= cols) {
      throw DimensionMismatch("equation index exceeds unknown count");
    }
    if (!rhs[i].is_zero()) row.add_scaled(f.one(), SparseVector::from_entries({Entry{cols, rhs[i]}}));
    ech.insert(std::move(row));
  }
  ech.finalize();
  SparseSolution sol{zero_vector(f, cols), cols};
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    const auto& row = ech.rows()[k];
    std::size_t p = row.front().index;
    if (p == cols) return std::nullopt;
    if (const Scalar* b = row.find(cols)) sol.particular[p] = *b;
    --sol.nullity;
  }
  return sol;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    }
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a.at(r, j).is_zero()) a.at(i, j) -= factor * a.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f_col = 0; f_col < m.cols(); ++f_col) {
    if (is_pivot[f_col]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f_col] = m.field().one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red.at(k, f_col);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.cols()) return std::nullopt;
    x[pivots[k]] = red.at(k, m.cols());
  }
  return x;
}

}  // namespace quivalg
