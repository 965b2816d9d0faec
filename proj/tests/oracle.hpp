#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's algebra or elimination code: paths, products and ranks are
// recomputed from scratch with plain GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Row = std::vector<mpq_class>;

inline std::size_t rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Relation-free path algebra of an acyclic quiver, rebuilt from arrow
/// endpoints. Paths are arrow sequences in traversal order.
struct FreeAlgebra {
  struct P {
    int source;
    int target;
    std::vector<int> arrows;
  };
  std::vector<P> paths;
  // table[i][j] = index of b_i * b_j, or -1
  std::vector<std::vector<int>> table;

  FreeAlgebra(int vertices, const std::vector<std::pair<int, int>>& arrows) {
    for (int v = 0; v < vertices; ++v) paths.push_back({v, v, {}});
    // breadth-first extension by one arrow at the end
    std::size_t frontier = 0;
    std::vector<P> layer;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) layer.push_back({arrows[a].first, arrows[a].second, {a}});
    while (!layer.empty()) {
      std::vector<P> next;
      for (const auto& p : layer) {
        paths.push_back(p);
        for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
          if (arrows[a].first == p.target) {
            P q = p;
            q.arrows.push_back(a);
            q.target = arrows[a].second;
            next.push_back(q);
          }
        }
      }
      layer = std::move(next);
      ++frontier;
    }
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = static_cast<int>(i);
    table.assign(paths.size(), std::vector<int>(paths.size(), -1));
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        const P& x = paths[i];
        const P& y = paths[j];
        // x * y: y first, then x
        if (y.target != x.source) continue;
        std::vector<int> seq = y.arrows;
        seq.insert(seq.end(), x.arrows.begin(), x.arrows.end());
        table[i][j] = index.at({y.source, seq});
      }
    }
  }

  std::size_t dim() const { return paths.size(); }

  // Coefficient rows of the linear identity system on the d^2 entries of a
  // map T, with T(b_m) = sum_k T[k][m] b_k and unknown index m * d + k.
  enum class Kind { Der, Lie, Jordan };

  std::size_t solution_dim(Kind kind) const {
    const std::size_t d = dim();
    std::vector<Row> rows;
    auto var = [d](std::size_t k, std::size_t m) { return m * d + k; };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (kind == Kind::Lie && j <= i) continue;
        if (kind == Kind::Jordan && j < i) continue;
        std::vector<Row> eq(d, Row(d * d, 0));
        // sign_ij: +1 for products, -1 for the swapped term in brackets
        auto add_product_term = [&](std::size_t x, std::size_t y, int sign) {
          // T(b_x b_y)
          int p = table[x][y];
          if (p >= 0) {
            for (std::size_t k = 0; k < d; ++k) eq[k][var(k, p)] += sign;
          }
          // - T(b_x) b_y = - sum_m T[m][x] b_m b_y
          for (std::size_t m = 0; m < d; ++m) {
            int q = table[m][y];
            if (q >= 0) eq[q][var(m, x)] -= sign;
          }
          // - b_x T(b_y)
          for (std::size_t m = 0; m < d; ++m) {
            int q = table[x][m];
            if (q >= 0) eq[q][var(m, y)] -= sign;
          }
        };
        add_product_term(i, j, 1);
        if (kind == Kind::Lie) add_product_term(j, i, -1);
        if (kind == Kind::Jordan) add_product_term(j, i, 1);
        for (auto& r : eq) {
          if (std::any_of(r.begin(), r.end(), [](const mpq_class& c) { return c != 0; })) rows.push_back(std::move(r));
        }
      }
    }
    return d * d - rank(rows);
  }

  std::size_t center_dim() const {
    const std::size_t d = dim();
    std::vector<Row> rows;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Row> eq(d, Row(d, 0));
      for (std::size_t m = 0; m < d; ++m) {
        if (table[m][i] >= 0) eq[table[m][i]][m] += 1;
        if (table[i][m] >= 0) eq[table[i][m]][m] -= 1;
      }
      for (auto& r : eq) rows.push_back(std::move(r));
    }
    return d - rank(rows);
  }

  std::size_t commutator_dim() const {
    const std::size_t d = dim();
    std::vector<Row> rows;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        Row r(d, 0);
        if (table[i][j] >= 0) r[table[i][j]] += 1;
        if (table[j][i] >= 0) r[table[j][i]] -= 1;
        rows.push_back(std::move(r));
      }
    }
    return rank(rows);
  }

  /// dim span{ad_x : x basis}
  std::size_t inner_derivation_dim() const {
    const std::size_t d = dim();
    std::vector<Row> rows;
    for (std::size_t x = 0; x < d; ++x) {
      Row r(d * d, 0);
      for (std::size_t m = 0; m < d; ++m) {
        if (table[x][m] >= 0) r[m * d + table[x][m]] += 1;
        if (table[m][x] >= 0) r[m * d + table[m][x]] -= 1;
      }
      rows.push_back(std::move(r));
    }
    return rank(rows);
  }
};

}  // namespace oracle
