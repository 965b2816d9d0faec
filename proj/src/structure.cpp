#include "quivalg/structure.hpp"

#include <algorithm>
#include <limits>

#include "quivalg/errors.hpp"

namespace quivalg {

namespace {

Vector sandwich(const PathAlgebra& a, const Vector& left, const Vector& x, const Vector& right) {
  return a.multiply(a.multiply(left, x), right);
}

Subspace block_span(const PathAlgebra& a, const Vector& left, const Vector& right) {
  std::vector<Vector> parts;
  for (std::size_t j = 0; j < a.dim(); ++j) parts.push_back(sandwich(a, left, a.basis_vector(j), right));
  return Subspace::span(a.field(), a.dim(), parts);
}

// The block a product of an (l1, r1) element and an (l2, r2) element lands
// in, or -1 when the product is always zero. Index: 2 * left + right with
// 0 = e, 1 = 1 - e.
int product_block(int x, int y) {
  int xr = x % 2;
  int yl = y / 2;
  if (xr != yl) return -1;
  return (x / 2) * 2 + (y % 2);
}

}  // namespace

PierceBlocks pierce_decompose(const PathAlgebra& a, const Vector& e) {
  if (e.size() != a.dim()) throw DimensionMismatch("idempotent length differs from algebra dimension");
  if (a.multiply(e, e) != e) throw NotIdempotent("element is not idempotent");
  Vector c = a.unit() - e;
  PierceBlocks out{e,
                   c,
                   block_span(a, e, e),
                   block_span(a, e, c),
                   block_span(a, c, e),
                   block_span(a, c, c)};
  const Subspace* blocks[4] = {&out.corner, &out.upper, &out.lower, &out.rest};
  std::vector<Vector> bases[4];
  for (int k = 0; k < 4; ++k) bases[k] = blocks[k]->dense_basis();
  out.products_respect_blocks = true;
  for (int x = 0; x < 4 && out.products_respect_blocks; ++x) {
    for (int y = 0; y < 4 && out.products_respect_blocks; ++y) {
      int target = product_block(x, y);
      for (const auto& u : bases[x]) {
        for (const auto& v : bases[y]) {
          Vector p = a.multiply(u, v);
          bool ok = target < 0 ? is_zero(p) : blocks[target]->contains(p);
          if (!ok) {
            out.products_respect_blocks = false;
            break;
          }
        }
        if (!out.products_respect_blocks) break;
      }
    }
  }
  return out;
}

OnePointPeel one_point_peel(const PathAlgebra& a, std::size_t source) {
  const Quiver& q = a.quiver();
  if (q.vertex_count() < 2) throw PreconditionError("peeling needs at least two vertices");
  if (source >= q.vertex_count() || !q.in_arrows(source).empty()) {
    throw NotASource("vertex " + (source < q.vertex_count() ? q.vertex_name(source) : std::to_string(source)) + " is not a source");
  }
  Quiver reduced_quiver = q.without_vertex(source);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> vertex_map(q.vertex_count(), none);
  for (std::size_t v = 0, k = 0; v < q.vertex_count(); ++v) {
    if (v != source) vertex_map[v] = k++;
  }
  std::vector<std::size_t> arrow_map(q.arrow_count(), none);
  for (std::size_t x = 0, k = 0; x < q.arrow_count(); ++x) {
    if (q.arrow(x).source != source && q.arrow(x).target != source) arrow_map[x] = k++;
  }

  std::vector<Relation> kept;
  for (const auto& rel : a.relations()) {
    bool touches = std::any_of(rel.terms.begin(), rel.terms.end(), [&](const auto& t) {
      return t.second.source == source || t.second.target == source;
    });
    if (touches) continue;
    std::vector<std::pair<Scalar, Path>> terms;
    for (const auto& [c, p] : rel.terms) {
      Path moved{vertex_map[p.source], vertex_map[p.target], {}};
      for (std::size_t x : p.arrows) moved.arrows.push_back(arrow_map[x]);
      terms.emplace_back(c, std::move(moved));
    }
    kept.push_back(make_relation(reduced_quiver, std::move(terms)));
  }
  PathAlgebra reduced = PathAlgebra::build(std::move(reduced_quiver), std::move(kept), a.field());
  PierceBlocks blocks = pierce_decompose(a, a.unit() - a.vertex_idempotent(source));

  std::vector<std::size_t> embedding;
  bool iso = reduced.dim() == blocks.corner.dim();
  for (std::size_t k = 0; k < reduced.dim(); ++k) {
    auto idx = a.basis_index(reduced.basis_label(k));
    if (!idx) iso = false;
    embedding.push_back(idx.value_or(none));
  }
  auto embed = [&](const SparseVector& v) {
    std::vector<Entry> out;
    for (const auto& e : v.entries()) out.push_back(Entry{embedding[e.index], e.value});
    return SparseVector::from_entries(std::move(out));
  };
  if (iso) {
    for (std::size_t k = 0; k < reduced.dim() && iso; ++k) {
      if (!blocks.corner.contains(a.basis_vector(embedding[k]))) iso = false;
      for (std::size_t l = 0; l < reduced.dim() && iso; ++l) {
        if (embed(reduced.basis_product(k, l)) != a.basis_product(embedding[k], embedding[l])) iso = false;
      }
    }
  }

  std::vector<Matrix> action;
  if (iso) {
    std::vector<Vector> m_basis = blocks.upper.dense_basis();
    for (std::size_t s = 0; s < reduced.dim(); ++s) {
      Matrix act(a.field(), m_basis.size(), m_basis.size());
      Vector as = a.basis_vector(embedding[s]);
      for (std::size_t t = 0; t < m_basis.size(); ++t) {
        auto coords = blocks.upper.coordinates(a.multiply(as, m_basis[t]));
        if (!coords) throw BlockLeak("corner times M leaves M");
        act.set_column(t, *coords);
      }
      action.push_back(std::move(act));
    }
  }
  return OnePointPeel{source, std::move(reduced), std::move(blocks), std::move(embedding), std::move(action), iso};
}

Faithfulness bimodule_faithful(const PathAlgebra& a, const Subspace& ring, const Subspace& module, Side side) {
  if (ring.ambient() != a.dim() || module.ambient() != a.dim()) {
    throw DimensionMismatch("ring and module must be subspaces of the algebra");
  }
  std::vector<Vector> r = ring.dense_basis();
  std::vector<Vector> m = module.dense_basis();
  std::vector<SparseVector> equations;
  for (const auto& mt : m) {
    std::vector<std::vector<Entry>> acc(a.dim());
    for (std::size_t s = 0; s < r.size(); ++s) {
      Vector p = side == Side::Left ? a.multiply(r[s], mt) : a.multiply(mt, r[s]);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) acc[k].push_back(Entry{s, p[k]});
      }
    }
    for (auto& entries : acc) {
      if (!entries.empty()) equations.push_back(SparseVector::from_entries(std::move(entries)));
    }
  }
  Subspace ann = nullspace(a.field(), r.size(), equations);
  Faithfulness out;
  out.annihilator_dim = ann.dim();
  out.faithful = ann.is_zero();
  if (!out.faithful) {
    Vector w = a.zero();
    for (const auto& e : ann.basis().front().entries()) w = w + e.value * r[e.index];
    out.witness_verified = !is_zero(w);
    for (const auto& mt : m) {
      Vector p = side == Side::Left ? a.multiply(w, mt) : a.multiply(mt, w);
      if (!is_zero(p)) out.witness_verified = false;
    }
    out.witness = std::move(w);
  }
  return out;
}

Faithfulness bimodule_faithful(const PathAlgebra& a, const PierceBlocks& blocks, Side side) {
  return bimodule_faithful(a, side == Side::Left ? blocks.corner : blocks.rest, blocks.upper, side);
}

namespace {

// residual of the identity of `kind` for map f on the pair (x, y)
Vector law_residual(const PathAlgebra& a, const LinMap& f, MapKind kind, const Vector& x, const Vector& y) {
  switch (kind) {
    case MapKind::Derivation:
      return f.apply(a.multiply(x, y)) - a.multiply(f.apply(x), y) - a.multiply(x, f.apply(y));
    case MapKind::Jordan:
      return f.apply(a.jordan_product(x, y)) - a.jordan_product(f.apply(x), y) - a.jordan_product(x, f.apply(y));
    case MapKind::Lie:
      return f.apply(a.commutator(x, y)) - a.commutator(f.apply(x), y) - a.commutator(x, f.apply(y));
    default:
      throw PreconditionError("unsupported map kind");
  }
}

bool law_holds(const PathAlgebra& a, const LinMap& f, MapKind kind, const std::vector<Vector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = kind == MapKind::Derivation ? 0 : i; j < basis.size(); ++j) {
      if (!is_zero(law_residual(a, f, kind, basis[i], basis[j]))) return false;
    }
  }
  return true;
}

bool commutes_with_all(const PathAlgebra& a, const Vector& z, const std::vector<Vector>& basis) {
  for (const auto& x : basis) {
    if (!is_zero(a.commutator(z, x))) return false;
  }
  return true;
}

}  // namespace

TriangularForm extract_triangular_form(const PathAlgebra& a, const PierceBlocks& blocks, const LinMap& theta,
                                       MapKind kind) {
  if (kind != MapKind::Derivation && kind != MapKind::Jordan && kind != MapKind::Lie) {
    throw PreconditionError("block forms exist for derivations, Jordan and Lie derivations");
  }
  if (kind == MapKind::Jordan && a.field().characteristic() == 2) throw CharTwoField();
  if (!blocks.triangular()) throw BlockLeak("split is not triangular: (1-e)A e is nonzero");
  if (theta.dim() != a.dim()) throw DimensionMismatch("map dimension differs from the algebra");
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const Vector& e = blocks.e;
  const Vector& c = blocks.complement;
  const bool lie = kind == MapKind::Lie;

  TriangularForm out;
  out.kind = kind;
  out.m0 = sandwich(a, e, theta.apply(e), c);
  Matrix delta1(f, d, d), tau2(f, d, d), mu4(f, d, d), mu1(f, d, d), delta4(f, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector x = a.basis_vector(j);
    Vector xa = sandwich(a, e, x, e);
    Vector xm = sandwich(a, e, x, c);
    Vector xb = sandwich(a, c, x, c);
    Vector ta = theta.apply(xa);
    Vector tm = theta.apply(xm);
    Vector tb = theta.apply(xb);
    for (const Vector* t : {&ta, &tm, &tb}) {
      if (!is_zero(sandwich(a, c, *t, e))) throw BlockLeak("image has a (1-e)A e component");
    }
    if (sandwich(a, e, ta, c) != a.multiply(xa, out.m0)) throw BlockLeak("corner image off-diagonal part is not a m0");
    if (sandwich(a, e, tb, c) != a.zero() - a.multiply(out.m0, xb)) {
      throw BlockLeak("rest image off-diagonal part is not -m0 b");
    }
    if (!is_zero(sandwich(a, e, tm, e)) || !is_zero(sandwich(a, c, tm, c))) throw BlockLeak("image of M leaves M");
    Vector ma = sandwich(a, c, ta, c);
    Vector db = sandwich(a, e, tb, e);
    if (!lie && (!is_zero(ma) || !is_zero(db))) throw BlockLeak("diagonal blocks mix under the map");
    delta1.set_column(j, sandwich(a, e, ta, e));
    tau2.set_column(j, sandwich(a, e, tm, c));
    mu4.set_column(j, sandwich(a, c, tb, c));
    mu1.set_column(j, ma);
    delta4.set_column(j, db);
  }
  out.delta1 = LinMap(std::move(delta1));
  out.tau2 = LinMap(std::move(tau2));
  out.mu4 = LinMap(std::move(mu4));
  if (lie) {
    out.mu1 = LinMap(std::move(mu1));
    out.delta4 = LinMap(std::move(delta4));
  }

  std::vector<Vector> ab = blocks.corner.dense_basis();
  std::vector<Vector> mb = blocks.upper.dense_basis();
  std::vector<Vector> bb = blocks.rest.dense_basis();
  out.corner_laws = law_holds(a, out.delta1, kind, ab) && law_holds(a, out.mu4, kind, bb);

  out.tau_left_law = true;
  for (const auto& x : ab) {
    for (const auto& m : mb) {
      Vector r = out.tau2.apply(a.multiply(x, m)) - a.multiply(x, out.tau2.apply(m)) -
                 a.multiply(out.delta1.apply(x), m);
      if (lie) r = r + a.multiply(m, out.mu1->apply(x));
      if (!is_zero(r)) out.tau_left_law = false;
    }
  }
  out.tau_right_law = true;
  for (const auto& y : bb) {
    for (const auto& m : mb) {
      Vector r = out.tau2.apply(a.multiply(m, y)) - a.multiply(out.tau2.apply(m), y) -
                 a.multiply(m, out.mu4.apply(y));
      if (lie) r = r + a.multiply(out.delta4->apply(y), m);
      if (!is_zero(r)) out.tau_right_law = false;
    }
  }

  if (lie) {
    for (std::size_t i = 0; i < ab.size() && out.lie_side_conditions; ++i) {
      if (!commutes_with_all(a, out.mu1->apply(ab[i]), bb)) out.lie_side_conditions = false;
      for (std::size_t j = i + 1; j < ab.size(); ++j) {
        if (!is_zero(out.mu1->apply(a.commutator(ab[i], ab[j])))) out.lie_side_conditions = false;
      }
    }
    for (std::size_t i = 0; i < bb.size() && out.lie_side_conditions; ++i) {
      if (!commutes_with_all(a, out.delta4->apply(bb[i]), ab)) out.lie_side_conditions = false;
      for (std::size_t j = i + 1; j < bb.size(); ++j) {
        if (!is_zero(out.delta4->apply(a.commutator(bb[i], bb[j])))) out.lie_side_conditions = false;
      }
    }
  } else if (blocks.rest.dim() == 1 && !blocks.upper.is_zero()) {
    out.mu4_vanishing_checked = true;
    out.mu4_vanishes = out.mu4.is_zero();
  }
  return out;
}

LinMap reassemble(const PathAlgebra& a, const PierceBlocks& blocks, const TriangularForm& form) {
  LinMap sum = form.delta1 + form.tau2 + form.mu4;
  if (form.mu1) sum = sum + *form.mu1;
  if (form.delta4) sum = sum + *form.delta4;
  std::vector<Vector> images;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector x = a.basis_vector(j);
    Vector xa = sandwich(a, blocks.e, x, blocks.e);
    Vector xb = sandwich(a, blocks.complement, x, blocks.complement);
    images.push_back(sum.image(j) + a.multiply(xa, form.m0) - a.multiply(form.m0, xb));
  }
  return LinMap::from_images(a.field(), images);
}

WSaturation w_saturate(const PathAlgebra& a) {
  std::vector<SparseVector> seed = commutator_subspace(a).basis();
  for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) {
    seed.push_back(SparseVector::from_dense(a.vertex_idempotent(v)));
  }
  Subspace s = Subspace::span(a.field(), a.dim(), seed);
  WSaturation out{s, {s.dim()}, false};
  while (!out.space.is_full()) {
    std::vector<Vector> basis = out.space.dense_basis();
    std::vector<Vector> grown = basis;
    for (const auto& u : basis) {
      for (const auto& v : basis) grown.push_back(a.multiply(u, v));
    }
    Subspace next = Subspace::span(a.field(), a.dim(), grown);
    if (next.dim() == out.space.dim()) break;
    out.space = std::move(next);
    out.dims.push_back(out.space.dim());
  }
  out.full = out.space.is_full();
  return out;
}

bool StripReport::all() const {
  return terminal_dim == 1 &&
         std::all_of(levels.begin(), levels.end(), [](const StripLevel& l) { return l.all_conditions_hold; });
}

StripReport strip_recursion_verify(const PathAlgebra& a) {
  StripReport report;
  report.jordan_skipped = a.field().characteristic() == 2;
  PathAlgebra current = a;
  while (current.quiver().vertex_count() >= 2) {
    std::size_t src = current.quiver().sources().front();
    OnePointPeel peel = one_point_peel(current, src);
    StripLevel level;
    level.source = current.quiver().vertex_name(src);
    level.dim_reduced = peel.blocks.corner.dim();
    level.dim_m = peel.blocks.upper.dim();
    level.dim_b = peel.blocks.rest.dim();
    level.triangular = peel.blocks.triangular() && peel.blocks.rest.dim() == 1 &&
                       peel.blocks.products_respect_blocks && peel.embedding_is_isomorphism &&
                       current.dim() == peel.reduced.dim() + level.dim_m + 1;
    level.m_faithful_left = bimodule_faithful(current, peel.blocks, Side::Left).faithful;
    level.m_faithful_right = bimodule_faithful(current, peel.blocks, Side::Right).faithful;
    bool ok = level.triangular;
    if (!report.jordan_skipped) {
      MapSpace jder = jordan_derivation_space(current);
      level.jordan_equals_der = jder.space() == derivation_space(current).space();
      ok = ok && level.jordan_equals_der;
      for (const auto& m : jder.basis_maps()) {
        ok = extract_triangular_form(current, peel.blocks, m, MapKind::Jordan).all() && ok;
        ++level.jordan_basis_checked;
      }
    }
    for (const auto& m : lie_derivation_space(current).basis_maps()) {
      ok = extract_triangular_form(current, peel.blocks, m, MapKind::Lie).all() && ok;
      ++level.lie_basis_checked;
    }
    level.w_full = w_saturate(peel.reduced).full;
    level.all_conditions_hold = ok && level.w_full;
    report.levels.push_back(std::move(level));
    current = std::move(peel.reduced);
  }
  report.terminal_dim = current.dim();
  return report;
}

}  // namespace quivalg
