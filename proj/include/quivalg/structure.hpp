#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quivalg/derivations.hpp"
#include "quivalg/path_algebra.hpp"

namespace quivalg {

/// Four-block split of an algebra by an idempotent e. With the product
/// convention of PathAlgebra, `upper` = e A (1-e) holds the paths starting
/// outside e and ending inside it.
struct PierceBlocks {
  Vector e;
  Vector complement;
  Subspace corner;   // e A e
  Subspace upper;    // e A (1-e)
  Subspace lower;    // (1-e) A e
  Subspace rest;     // (1-e) A (1-e)
  /// Every product of block basis elements lands in the expected block.
  bool products_respect_blocks = false;

  std::array<std::size_t, 4> dims() const { return {corner.dim(), upper.dim(), lower.dim(), rest.dim()}; }
  bool triangular() const { return lower.is_zero(); }
};

/// Throws NotIdempotent when e * e != e.
PierceBlocks pierce_decompose(const PathAlgebra& a, const Vector& e);

struct OnePointPeel {
  std::size_t source;
  /// Algebra of the quiver without the source (and relations through it).
  PathAlgebra reduced;
  /// Blocks for e = 1 - e_source: corner ~ reduced, upper = M, rest = K.
  PierceBlocks blocks;
  /// Basis index in the original algebra of each basis element of `reduced`.
  std::vector<std::size_t> embedding;
  /// left_action[s] is the matrix of m -> a_s m on the basis of M.
  std::vector<Matrix> left_action;
  /// The embedding is an isomorphism of `reduced` onto the corner block.
  bool embedding_is_isomorphism = false;
};

/// Throws NotASource, or PreconditionError for a single-vertex quiver.
OnePointPeel one_point_peel(const PathAlgebra& a, std::size_t source);

enum class Side { Left, Right };

struct Faithfulness {
  bool faithful = false;
  std::size_t annihilator_dim = 0;
  /// First annihilator basis element, as an algebra element.
  std::optional<Vector> witness;
  /// The witness was re-multiplied against every module basis element.
  bool witness_verified = false;
};

/// Left: the ring acts by r * m; right: by m * r. Ring and module are
/// subspaces of the algebra.
Faithfulness bimodule_faithful(const PathAlgebra& a, const Subspace& ring, const Subspace& module, Side side);
/// Left: M = upper over the corner; right: over the rest block.
Faithfulness bimodule_faithful(const PathAlgebra& a, const PierceBlocks& blocks, Side side);

/// Block components of a derivation, Jordan derivation or Lie derivation
/// on a triangular split. All components are stored as maps on the whole
/// algebra, zero outside their block.
struct TriangularForm {
  MapKind kind = MapKind::Derivation;
  Vector m0;
  LinMap delta1;
  LinMap tau2;
  LinMap mu4;
  /// Lie only: corner-to-rest and rest-to-corner parts.
  std::optional<LinMap> mu1;
  std::optional<LinMap> delta4;

  /// delta1 and mu4 satisfy the identity of `kind` on their blocks.
  bool corner_laws = false;
  /// tau2(am) = a tau2(m) + delta1(a) m [- m mu1(a)].
  bool tau_left_law = false;
  /// tau2(mb) = tau2(m) b + m mu4(b) [- delta4(b) m].
  bool tau_right_law = false;
  /// Lie only: mu1, delta4 kill commutators and take central values.
  bool lie_side_conditions = true;
  /// Jordan with a one-dimensional rest block and M != 0: mu4 = 0.
  bool mu4_vanishing_checked = false;
  bool mu4_vanishes = true;

  bool all() const { return corner_laws && tau_left_law && tau_right_law && lie_side_conditions && mu4_vanishes; }
};

/// Throws BlockLeak when theta does not have the block pattern of `kind`
/// or the split is not triangular, PreconditionError for other kinds.
TriangularForm extract_triangular_form(const PathAlgebra& a, const PierceBlocks& blocks, const LinMap& theta,
                                       MapKind kind);

/// Inverse of extract_triangular_form on maps with the block pattern.
LinMap reassemble(const PathAlgebra& a, const PierceBlocks& blocks, const TriangularForm& form);

struct WSaturation {
  Subspace space;
  /// Dimensions of S_0, S_1, ... until stable.
  std::vector<std::size_t> dims;
  /// The result is only a lower bound for W(A); it is certified equal to
  /// the whole algebra exactly when `full`.
  bool full = false;
};

/// Closure of span(idempotents e_i, [A, A]) under products.
WSaturation w_saturate(const PathAlgebra& a);

struct StripLevel {
  std::string source;
  std::size_t dim_reduced = 0;
  std::size_t dim_m = 0;
  std::size_t dim_b = 0;
  bool triangular = false;
  bool m_faithful_left = false;
  bool m_faithful_right = false;
  /// JDer == Der at this level.
  bool jordan_equals_der = false;
  std::size_t jordan_basis_checked = 0;
  std::size_t lie_basis_checked = 0;
  bool w_full = false;
  bool all_conditions_hold = false;
};

struct StripReport {
  std::vector<StripLevel> levels;
  std::size_t terminal_dim = 0;
  bool jordan_skipped = false;
  bool all() const;
};

/// Peels the smallest source repeatedly down to a single vertex, checking
/// the block forms of every Jordan and Lie derivation basis element at each
/// level. Jordan checks are skipped in characteristic 2.
StripReport strip_recursion_verify(const PathAlgebra& a);

}  // namespace quivalg
