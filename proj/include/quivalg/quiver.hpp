#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace quivalg {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// Finite acyclic quiver. Vertices and arrows keep declaration order, which
/// is the canonical order used everywhere else. Multiple arrows between the
/// same pair of vertices are allowed.
class Quiver {
 public:
  Quiver() = default;
  /// Throws DuplicateName, UnknownReference or CyclicQuiver.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;

  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_.at(v); }

  /// A topological order of the vertices (sources first), computed once.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;
  bool is_connected() const;

  /// The quiver with vertex `v` and every arrow touching it removed.
  Quiver without_vertex(std::size_t v) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> topo_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
};

/// Returns a topological order of the graph, or throws CyclicQuiver with one
/// directed cycle written as vertex names (first vertex repeated at the end).
std::vector<std::size_t> validate_acyclic(const std::vector<std::string>& vertex_names,
                                          const std::vector<Arrow>& arrows);

// --- document format -------------------------------------------------------

struct ArrowDecl {
  std::string name;
  std::string source;
  std::string target;
  std::size_t line = 0;
};

struct TermDecl {
  mpq_class coefficient;
  /// Arrow names in traversal order (first traversed first).
  std::vector<std::string> arrows;
};

struct RelationDecl {
  std::vector<TermDecl> terms;
  std::size_t line = 0;
};

/// Parsed quiver-with-relations description, names still symbolic.
struct QuiverDocument {
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<RelationDecl> relations;
};

bool operator==(const QuiverDocument& a, const QuiverDocument& b);

/// Parses the line-oriented format:
///
///     vertex <name> [<name> ...]
///     arrow <name> <source> <end>
///     relation [-]<term> [+|- <term> ...]     term = [<coeff>*]<arrow>.<arrow>[...]
///     # comment
///
/// Throws ParseError (with line/column), DuplicateName or UnknownReference.
QuiverDocument parse_quiver(std::string_view text);

/// Canonical text of a document; parse_quiver(serialize(d)) == d.
std::string serialize(const QuiverDocument& doc);

/// Builds the validated quiver of a document (acyclicity enforced).
Quiver make_quiver(const QuiverDocument& doc);

}  // namespace quivalg
