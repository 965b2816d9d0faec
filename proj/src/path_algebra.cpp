#include "quivalg/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quivalg/errors.hpp"

namespace quivalg {

std::optional<Path> multiply_paths(const Path& x, const Path& y) {
  if (y.target != x.source) return std::nullopt;
  if (y.is_trivial()) return x;
  if (x.is_trivial()) return y;
  Path out{y.source, x.target, y.arrows};
  out.arrows.insert(out.arrows.end(), x.arrows.begin(), x.arrows.end());
  return out;
}

bool path_less(const Path& a, const Path& b) {
  if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
  if (a.is_trivial()) return a.source < b.source;
  if (a.length() != b.length()) return a.length() < b.length();
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
  std::vector<Path> all;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) all.push_back(Path::trivial(v));
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    frontier.push_back(Path{q.arrow(a).source, q.arrow(a).target, {a}});
  }
  // Terminates because the quiver is acyclic: lengths are bounded by the
  // vertex count.
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (std::size_t a : q.out_arrows(p.target)) {
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrow(a).target;
        next.push_back(std::move(ext));
      }
    }
    all.insert(all.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), path_less);
  return all;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k != 0) out += '.';
    out += q.arrow(p.arrows[k]).name;
  }
  return out;
}

std::optional<Path> parse_path_label(const Quiver& q, std::string_view label) {
  if (label.substr(0, 2) == "e_") {
    if (auto v = q.find_vertex(label.substr(2))) return Path::trivial(*v);
  }
  Path p;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = label.find('.', start);
    std::string_view name = label.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    auto a = q.find_arrow(name);
    if (!a) return std::nullopt;
    if (!p.arrows.empty() && q.arrow(p.arrows.back()).target != q.arrow(*a).source) return std::nullopt;
    if (p.arrows.empty()) p.source = q.arrow(*a).source;
    p.arrows.push_back(*a);
    p.target = q.arrow(*a).target;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

Relation make_relation(const Quiver& q, std::vector<std::pair<Scalar, Path>> terms) {
  if (terms.empty()) throw InvalidRelation("relation has no terms");
  const Path& first = terms.front().second;
  for (const auto& [c, p] : terms) {
    if (p.length() < 2) {
      throw InvalidRelation("relation term '" + path_label(q, p) + "' has length < 2");
    }
    if (p.source != first.source || p.target != first.target) {
      throw InvalidRelation("relation terms '" + path_label(q, first) + "' and '" + path_label(q, p) +
                            "' are not parallel");
    }
  }
  Relation rel;
  for (auto& [c, p] : terms) {
    auto it = std::find_if(rel.terms.begin(), rel.terms.end(), [&](const auto& t) { return t.second == p; });
    if (it != rel.terms.end()) {
      it->first += c;
    } else {
      rel.terms.emplace_back(std::move(c), std::move(p));
    }
  }
  rel.terms.erase(std::remove_if(rel.terms.begin(), rel.terms.end(), [](const auto& t) { return t.first.is_zero(); }),
                  rel.terms.end());
  if (rel.terms.empty()) throw InvalidRelation("relation has no nonzero coefficient");
  std::sort(rel.terms.begin(), rel.terms.end(), [](const auto& a, const auto& b) { return path_less(a.second, b.second); });
  return rel;
}

Relation relation_from_decl(const Quiver& q, const Field& f, const RelationDecl& decl) {
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& t : decl.terms) {
    Path p;
    for (const auto& name : t.arrows) {
      auto a = q.find_arrow(name);
      if (!a) throw UnknownReference("relation references unknown arrow '" + name + "'", decl.line);
      if (!p.arrows.empty() && q.arrow(p.arrows.back()).target != q.arrow(*a).source) {
        throw InvalidRelation("arrows in relation term do not compose at '" + name + "'", decl.line);
      }
      if (p.arrows.empty()) p.source = q.arrow(*a).source;
      p.arrows.push_back(*a);
      p.target = q.arrow(*a).target;
    }
    Scalar c;
    try {
      c = f.from_rational(t.coefficient);
    } catch (const InvalidField& e) {
      throw InvalidRelation(e.what(), decl.line);
    }
    terms.emplace_back(std::move(c), std::move(p));
  }
  try {
    return make_relation(q, std::move(terms));
  } catch (const InvalidRelation& e) {
    if (e.line() != 0) throw;
    throw InvalidRelation(e.what(), decl.line);
  }
}

// --- PathAlgebra -----------------------------------------------------------

PathAlgebra::PathAlgebra(Quiver q, std::vector<Relation> relations, Field f)
    : quiver_(std::move(q)), relations_(std::move(relations)), field_(f), ideal_(Subspace::zero(f, 0)) {}

PathAlgebra PathAlgebra::build(Quiver q, std::vector<Relation> relations, Field f) {
  for (auto& r : relations) {
    for (const auto& [c, p] : r.terms) {
      if (!f.contains(c)) throw InvalidRelation("relation coefficient is not in " + f.name());
    }
    r = make_relation(q, std::move(r.terms));
  }
  PathAlgebra alg(std::move(q), std::move(relations), f);
  alg.paths_ = enumerate_paths(alg.quiver_);
  for (std::size_t i = 0; i < alg.paths_.size(); ++i) {
    alg.path_lookup_.emplace(std::make_pair(alg.paths_[i].source, alg.paths_[i].arrows), i);
  }
  const std::size_t n_paths = alg.paths_.size();

  // <rho> is spanned by u * sigma * v over composable paths u, v.
  std::vector<SparseVector> generators;
  for (const auto& rel : alg.relations_) {
    const Path& shape = rel.terms.front().second;
    for (const auto& v : alg.paths_) {
      if (v.target != shape.source) continue;
      for (const auto& u : alg.paths_) {
        if (u.source != shape.target) continue;
        std::vector<Entry> entries;
        for (const auto& [c, p] : rel.terms) {
          Path full = *multiply_paths(u, *multiply_paths(p, v));
          entries.push_back(Entry{*alg.path_index(full), c});
        }
        generators.push_back(SparseVector::from_entries(std::move(entries)));
      }
    }
  }
  alg.ideal_ = Subspace::span(f, n_paths, generators);

  alg.basis_of_path_.assign(n_paths, -1);
  std::vector<bool> pivot(n_paths, false);
  for (auto p : alg.ideal_.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < n_paths; ++i) {
    if (pivot[i]) continue;
    alg.basis_of_path_[i] = static_cast<std::ptrdiff_t>(alg.basis_.size());
    alg.basis_.push_back(i);
  }

  const std::size_t d = alg.basis_.size();
  alg.products_.assign(d * d, SparseVector{});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (auto prod = multiply_paths(alg.basis_path(i), alg.basis_path(j))) {
        alg.products_[i * d + j] = SparseVector::from_dense(alg.coset(*prod));
      }
    }
  }
  return alg;
}

PathAlgebra PathAlgebra::build(const QuiverDocument& doc, Field f) {
  Quiver q = make_quiver(doc);
  std::vector<Relation> rels;
  rels.reserve(doc.relations.size());
  for (const auto& decl : doc.relations) rels.push_back(relation_from_decl(q, f, decl));
  return build(std::move(q), std::move(rels), f);
}

std::optional<std::size_t> PathAlgebra::path_index(const Path& p) const {
  auto it = path_lookup_.find(std::make_pair(p.source, p.arrows));
  if (it == path_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> PathAlgebra::basis_labels() const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_label(i));
  return out;
}

std::optional<std::size_t> PathAlgebra::basis_index(std::string_view label) const {
  auto p = parse_path_label(quiver_, label);
  if (!p) return std::nullopt;
  auto idx = path_index(*p);
  if (!idx || basis_of_path_[*idx] < 0) return std::nullopt;
  return static_cast<std::size_t>(basis_of_path_[*idx]);
}

std::size_t PathAlgebra::vertex_basis_index(std::size_t v) const {
  return static_cast<std::size_t>(basis_of_path_.at(*path_index(Path::trivial(v))));
}

Vector PathAlgebra::reduce(const SparseVector& element) const {
  SparseVector r = ideal_.residual(element);
  Vector out = zero();
  for (const auto& e : r.entries()) out[static_cast<std::size_t>(basis_of_path_[e.index])] = e.value;
  return out;
}

Vector PathAlgebra::reduce(const Vector& element) const {
  if (element.size() != paths_.size()) throw DimensionMismatch("element length differs from path count");
  return reduce(SparseVector::from_dense(element));
}

Vector PathAlgebra::coset(const Path& p) const {
  auto idx = path_index(p);
  if (!idx) throw InputError("not a path of this quiver: " + path_label(quiver_, p));
  return reduce(SparseVector::from_entries({Entry{*idx, field_.one()}}));
}

Vector PathAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero();
  v.at(i) = field_.one();
  return v;
}

Vector PathAlgebra::unit() const {
  Vector v = zero();
  for (std::size_t u = 0; u < quiver_.vertex_count(); ++u) v[vertex_basis_index(u)] = field_.one();
  return v;
}

Vector PathAlgebra::vertex_idempotent(std::size_t v) const { return basis_vector(vertex_basis_index(v)); }

std::size_t PathAlgebra::structure_constant_count() const {
  std::size_t n = 0;
  for (const auto& p : products_) n += p.size();
  return n;
}

Vector PathAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("element length differs from algebra dimension");
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& prod = basis_product(i, j);
      if (prod.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& e : prod.entries()) out[e.index] += c * e.value;
    }
  }
  return out;
}

Vector PathAlgebra::commutator(const Vector& x, const Vector& y) const { return multiply(x, y) - multiply(y, x); }

Vector PathAlgebra::jordan_product(const Vector& x, const Vector& y) const { return multiply(x, y) + multiply(y, x); }

AxiomReport check_axioms(const PathAlgebra& a) {
  AxiomReport rep;
  const std::size_t d = a.dim();
  const Field& f = a.field();
  auto times_basis_right = [&](const SparseVector& x, std::size_t k) {
    SparseVector out;
    for (const auto& e : x.entries()) out.add_scaled(e.value, a.basis_product(e.index, k));
    return out;
  };
  auto times_basis_left = [&](std::size_t i, const SparseVector& x) {
    SparseVector out;
    for (const auto& e : x.entries()) out.add_scaled(e.value, a.basis_product(i, e.index));
    return out;
  };
  for (std::size_t i = 0; i < d && rep.associative; ++i) {
    for (std::size_t j = 0; j < d && rep.associative; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (times_basis_right(a.basis_product(i, j), k) != times_basis_left(i, a.basis_product(j, k))) {
          rep.associative = false;
          break;
        }
      }
    }
  }
  SparseVector one = SparseVector::from_dense(a.unit());
  for (std::size_t i = 0; i < d; ++i) {
    SparseVector bi = SparseVector::from_entries({Entry{i, f.one()}});
    SparseVector left;
    SparseVector right;
    for (const auto& e : one.entries()) {
      left.add_scaled(e.value, a.basis_product(e.index, i));
      right.add_scaled(e.value, a.basis_product(i, e.index));
    }
    if (left != bi || right != bi) rep.unital = false;
  }
  const std::size_t n = a.quiver().vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const auto& prod = a.basis_product(a.vertex_basis_index(v), a.vertex_basis_index(w));
      SparseVector expect;
      if (v == w) expect = SparseVector::from_entries({Entry{a.vertex_basis_index(v), f.one()}});
      if (prod != expect) rep.orthogonal_idempotents = false;
    }
  }
  rep.dimension_consistent = a.dim() + a.ideal().dim() == a.paths().size();
  return rep;
}

namespace {

bool is_label_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '_' || c == '\'' || c == '.' || u >= 0x80;
}

}  // namespace

Vector parse_element(const PathAlgebra& a, std::string_view text) {
  const Field& f = a.field();
  Vector out = a.zero();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  auto fail = [&](const std::string& what) { throw ParseError(what, 1, pos + 1); };
  bool first = true;
  skip();
  if (pos == text.size()) fail("empty element expression");
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff = f.one();
    std::size_t start = pos;
    while (pos < text.size() && (is_label_char(text[pos]) || text[pos] == '/')) ++pos;
    std::string_view word = text.substr(start, pos - start);
    skip();
    if (pos < text.size() && text[pos] == '*') {
      coeff = f.parse_scalar(word);
      ++pos;
      skip();
      start = pos;
      while (pos < text.size() && is_label_char(text[pos])) ++pos;
      word = text.substr(start, pos - start);
    }
    if (word.empty()) fail("expected a path label");
    Vector term;
    if (word == "1") {
      term = a.unit();
    } else {
      auto p = parse_path_label(a.quiver(), word);
      if (!p) fail("unknown path '" + std::string(word) + "'");
      term = a.coset(*p);
    }
    if (negative) coeff = -coeff;
    out = out + coeff * term;
  }
  return out;
}

std::string format_element(const PathAlgebra& a, const Vector& x) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar c = x[i];
    bool negative = c.modulus() == 0 && sgn(c.rational()) < 0;
    if (negative) c = -c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (!c.is_one()) out << c.str() << '*';
    out << a.basis_label(i);
    first = false;
  }
  return first ? std::string("0") : out.str();
}

}  // namespace quivalg
