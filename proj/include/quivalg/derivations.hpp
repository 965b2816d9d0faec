#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivalg/linalg.hpp"
#include "quivalg/path_algebra.hpp"

namespace quivalg {

/// A linear self-map of an algebra: column j holds the coordinates of the
/// image of basis element j.
class LinMap {
 public:
  LinMap() : matrix_(Field::rationals(), 0, 0) {}
  explicit LinMap(Matrix m);
  static LinMap zero(const PathAlgebra& a);
  static LinMap identity(const PathAlgebra& a);
  /// Inverse of vectorize(): entry (row k, column j) sits at j * dim + k.
  static LinMap from_vector(const Field& f, std::size_t dim, const SparseVector& v);
  static LinMap from_images(const Field& f, const std::vector<Vector>& images);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector image(std::size_t j) const { return matrix_.column(j); }
  Vector apply(const Vector& x) const { return matrix_ * x; }
  SparseVector vectorize() const;

  LinMap operator+(const LinMap& o) const { return LinMap(matrix_ + o.matrix_); }
  LinMap operator-(const LinMap& o) const { return LinMap(matrix_ - o.matrix_); }
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const LinMap& a, const LinMap& b) { return a.matrix_ == b.matrix_; }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  Matrix matrix_;
};

enum class MapKind { Derivation, Jordan, Lie, CentralPhi, GeneralizedPair };

const char* to_string(MapKind k);

/// A space of linear maps, stored as a subspace of vectorized maps.
/// For GeneralizedPair the ambient is 2 * dim^2: the f-part first, then d.
class MapSpace {
 public:
  MapSpace(MapKind kind, std::size_t algebra_dim, Subspace space);

  MapKind kind() const noexcept { return kind_; }
  std::size_t algebra_dim() const noexcept { return algebra_dim_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const Subspace& space() const noexcept { return space_; }

  /// Basis as maps; for pair spaces use pair_basis().
  std::vector<LinMap> basis_maps() const;
  std::vector<std::pair<LinMap, LinMap>> pair_basis() const;
  bool contains(const LinMap& m) const;

 private:
  MapKind kind_;
  std::size_t algebra_dim_;
  Subspace space_;
};

MapSpace derivation_space(const PathAlgebra& a);
/// Throws CharTwoField in characteristic 2.
MapSpace jordan_derivation_space(const PathAlgebra& a);
MapSpace lie_derivation_space(const PathAlgebra& a);

/// Z(A) as a subspace of A.
Subspace center(const PathAlgebra& a);
/// [A, A] as a subspace of A.
Subspace commutator_subspace(const PathAlgebra& a);
/// Maps with image in Z(A) that vanish on [A, A].
MapSpace central_phi_space(const PathAlgebra& a);
/// All maps with image in Z(A) (ambient dim^2).
Subspace center_valued_maps(const PathAlgebra& a);

bool is_derivation(const PathAlgebra& a, const LinMap& m);
/// Throws CharTwoField in characteristic 2.
bool is_jordan_derivation(const PathAlgebra& a, const LinMap& m);
bool is_lie_derivation(const PathAlgebra& a, const LinMap& m);

/// y -> xy - yx.
LinMap inner_derivation(const PathAlgebra& a, const Vector& x);
/// y -> xy.
LinMap left_multiplication(const PathAlgebra& a, const Vector& x);

struct Decomposition {
  LinMap theta;
  LinMap derivation;
  LinMap central;
  /// Phi(e_v) = k_v * 1 when that holds for every vertex, else empty.
  std::optional<std::vector<Scalar>> vertex_constants;
  bool is_lie = false;
  bool d_is_derivation = false;
  bool phi_central = false;
  bool phi_kills_commutators = false;
  bool unique = false;
};

/// Theta = D + Phi with D a derivation and Phi in central_phi_space.
/// Throws NotLieDerivation, or NonUniqueDecomposition if the solution is not
/// unique (never expected).
Decomposition standard_decompose(const PathAlgebra& a, const LinMap& theta);

/// standard_decompose with the Phi-space system assembled once, for
/// decomposing many maps of the same algebra. Keeps a pointer to `a`.
class StandardDecomposer {
 public:
  explicit StandardDecomposer(const PathAlgebra& a);
  Decomposition decompose(const LinMap& theta) const;
  std::size_t phi_dim() const noexcept { return phis_.size(); }

 private:
  const PathAlgebra* a_;
  std::vector<LinMap> phis_;
  Subspace center_;
  std::vector<Vector> commutators_;
  std::vector<std::size_t> row_index_;
  std::vector<SparseVector> equations_;
};

/// Der(A) intersected with the center-valued maps is zero.
bool central_derivations_vanish(const PathAlgebra& a);

/// Pairs (f, d) with f(x o y) = f(x) o y + x o d(y). Throws CharTwoField.
MapSpace jordan_generalized_space(const PathAlgebra& a);
/// Pairs (f, d) with f(x o y) = f(x)y + f(y)x + x d(y) + y d(x). Throws CharTwoField.
MapSpace generalized_jordan_space(const PathAlgebra& a);

/// Per-basis-element confirmation that each f of a pair space is a
/// generalized derivation: f - L_{f(1)} is a derivation and the law
/// f(xy) = f(x)y + x d'(y) holds with d' = f - L_{f(1)}. For Jordan
/// generalized pairs f(1) must also be central; for generalized Jordan
/// pairs it need not be (every L_u is one, with d = 0), so centrality is
/// only recorded.
struct GeneralizedCheck {
  std::size_t checked = 0;
  bool unit_must_be_central = true;
  bool f_unit_central = true;
  bool remainder_is_derivation = true;
  bool generalized_law = true;
  bool all() const {
    return (f_unit_central || !unit_must_be_central) && remainder_is_derivation && generalized_law;
  }
};

enum class PairLaw { JordanGeneralized, GeneralizedJordan };

GeneralizedCheck check_generalized_pairs(const PathAlgebra& a, const MapSpace& pairs, PairLaw law);
/// The space of f-components of a pair space.
Subspace project_f(const MapSpace& pairs);

/// Support pattern of derivations of a relation-free path algebra: images of
/// trivial paths supported on non-loop paths touching the vertex, images of
/// nontrivial paths on parallel paths and extensions at either end.
/// Throws HasRelations.
bool derivation_support_check(const PathAlgebra& a, const LinMap& m);

struct LieCharacterization {
  bool ok = false;
  /// k_v with theta(e_v) - k_v * 1 following the derivation pattern.
  std::vector<Scalar> vertex_constants;
  /// The same constants are recovered from standard_decompose.
  bool matches_decomposition = false;
};

/// Throws HasRelations, DisconnectedQuiver or NotLieDerivation.
LieCharacterization lie_characterization_check(const PathAlgebra& a, const LinMap& theta);
/// Same, reusing a decomposition of theta.
LieCharacterization lie_characterization_check(const PathAlgebra& a, const LinMap& theta, const Decomposition& dec);

}  // namespace quivalg
