#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivalg/field.hpp"
#include "quivalg/linalg.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

/// A path of the quiver. `arrows` is in traversal order (first traversed
/// first); empty means the trivial path at `source` == `target`.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t vertex) { return Path{vertex, vertex, {}}; }
  bool is_trivial() const noexcept { return arrows.empty(); }
  std::size_t length() const noexcept { return arrows.size(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
};

/// The product x*y: defined (nonzero) when y ends where x starts; y is
/// traversed first.
std::optional<Path> multiply_paths(const Path& x, const Path& y);

/// All paths of an acyclic quiver: trivial paths in vertex order, then by
/// length, then lexicographically by arrow declaration index.
std::vector<Path> enumerate_paths(const Quiver& q);

/// "e_<vertex>" or traversal-order arrow names joined by '.'.
std::string path_label(const Quiver& q, const Path& p);

/// Parses a label produced by path_label; nullopt if it is not a path of q.
std::optional<Path> parse_path_label(const Quiver& q, std::string_view label);

/// Canonical path order used for enumeration and RREF pivoting.
bool path_less(const Path& a, const Path& b);

/// A linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;
};

/// Checks the relation conditions and canonicalises the terms (merged,
/// zero terms dropped). Throws InvalidRelation.
Relation make_relation(const Quiver& q, std::vector<std::pair<Scalar, Path>> terms);

/// Converts a documented relation over the given quiver and field.
Relation relation_from_decl(const Quiver& q, const Field& f, const RelationDecl& decl);

/// The finite dimensional algebra K(Q, rho) = KQ / <rho> with an explicit
/// basis of path cosets and a table of structure constants.
class PathAlgebra {
 public:
  /// Throws InvalidRelation for bad relations.
  static PathAlgebra build(Quiver q, std::vector<Relation> relations, Field f);
  static PathAlgebra build(const QuiverDocument& doc, Field f);

  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool is_relation_free() const noexcept { return relations_.empty(); }

  /// Every path of KQ in canonical order.
  const std::vector<Path>& paths() const noexcept { return paths_; }
  std::optional<std::size_t> path_index(const Path& p) const;
  /// The ideal <rho> as a subspace of KQ (ambient = paths().size()).
  const Subspace& ideal() const noexcept { return ideal_; }

  std::size_t dim() const noexcept { return basis_.size(); }
  /// Representative path of basis element i.
  const Path& basis_path(std::size_t i) const { return paths_[basis_.at(i)]; }
  std::string basis_label(std::size_t i) const { return path_label(quiver_, basis_path(i)); }
  std::vector<std::string> basis_labels() const;
  std::optional<std::size_t> basis_index(std::string_view label) const;
  /// Basis position of the trivial path at vertex v (trivial paths are never
  /// in the ideal, since relations have length >= 2).
  std::size_t vertex_basis_index(std::size_t v) const;

  /// Coset map KQ -> K(Q, rho); input indexed by paths().
  Vector reduce(const SparseVector& element) const;
  Vector reduce(const Vector& element) const;
  /// Coset of a single path.
  Vector coset(const Path& p) const;

  Vector basis_vector(std::size_t i) const;
  Vector unit() const;
  Vector vertex_idempotent(std::size_t v) const;
  Vector zero() const { return zero_vector(field_, dim()); }

  /// b_i * b_j in basis coordinates.
  const SparseVector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  /// Nonzero count of the structure-constant table.
  std::size_t structure_constant_count() const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector commutator(const Vector& x, const Vector& y) const;
  Vector jordan_product(const Vector& x, const Vector& y) const;

 private:
  PathAlgebra(Quiver q, std::vector<Relation> relations, Field f);

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_lookup_;
  Subspace ideal_;
  std::vector<std::size_t> basis_;
  std::vector<std::ptrdiff_t> basis_of_path_;
  std::vector<SparseVector> products_;
};

/// Exhaustive check of the algebra axioms on the basis.
struct AxiomReport {
  bool associative = true;
  bool unital = true;
  bool orthogonal_idempotents = true;
  bool dimension_consistent = true;
  bool all() const { return associative && unital && orthogonal_idempotents && dimension_consistent; }
};

AxiomReport check_axioms(const PathAlgebra& a);

/// Parses an element expression such as "e_1+e_2", "1-e_1" or
/// "2*alpha.beta - 1/2*gamma" ("1" alone is the unit). Throws InputError.
Vector parse_element(const PathAlgebra& a, std::string_view text);

/// Renders an element as "c*label + ..." ("0" for zero).
std::string format_element(const PathAlgebra& a, const Vector& x);

}  // namespace quivalg
