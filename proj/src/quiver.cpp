#include "quivalg/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "quivalg/errors.hpp"
#include "quivalg/field.hpp"

namespace quivalg {

std::vector<std::size_t> validate_acyclic(const std::vector<std::string>& vertex_names,
                                          const std::vector<Arrow>& arrows) {
  const std::size_t n = vertex_names.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : arrows) {
    succ[a.source].push_back(a.target);
    ++indegree[a.target];
  }

  // Kahn's algorithm, always taking the smallest available vertex.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Find one cycle by DFS for the report.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> stack;
  std::vector<std::string> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    mark[v] = Mark::Grey;
    stack.push_back(v);
    for (std::size_t w : succ[v]) {
      if (mark[w] == Mark::Grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle.push_back(vertex_names[*it]);
        cycle.push_back(vertex_names[w]);
        return true;
      }
      if (mark[w] == Mark::White && dfs(w)) return true;
    }
    stack.pop_back();
    mark[v] = Mark::Black;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (mark[v] == Mark::White && dfs(v)) break;
  }
  throw CyclicQuiver(std::move(cycle));
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw DuplicateName("duplicate vertex name '" + vertices_[v] + "'");
    }
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (!arrow_index_.emplace(arr.name, a).second) {
      throw DuplicateName("duplicate arrow name '" + arr.name + "'");
    }
    if (arr.source >= vertices_.size() || arr.target >= vertices_.size()) {
      throw UnknownReference("arrow '" + arr.name + "' references a vertex that does not exist");
    }
    out_[arr.source].push_back(a);
    in_[arr.target].push_back(a);
  }
  topo_ = validate_acyclic(vertices_, arrows_);
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Quiver::sources() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (in_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> Quiver::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (out_[v].empty()) out.push_back(v);
  }
  return out;
}

bool Quiver::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (const auto& a : arrows_) {
    std::size_t x = root(a.source);
    std::size_t y = root(a.target);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

Quiver Quiver::without_vertex(std::size_t v) const {
  std::vector<std::string> names;
  std::vector<std::size_t> renumber(vertex_count(), 0);
  for (std::size_t w = 0; w < vertex_count(); ++w) {
    if (w == v) continue;
    renumber[w] = names.size();
    names.push_back(vertices_[w]);
  }
  std::vector<Arrow> kept;
  for (const auto& a : arrows_) {
    if (a.source == v || a.target == v) continue;
    kept.push_back(Arrow{a.name, renumber[a.source], renumber[a.target]});
  }
  return Quiver(std::move(names), std::move(kept));
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

// --- document --------------------------------------------------------------

bool operator==(const QuiverDocument& a, const QuiverDocument& b) {
  if (a.vertices != b.vertices || a.arrows.size() != b.arrows.size() || a.relations.size() != b.relations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    if (a.arrows[i].name != b.arrows[i].name || a.arrows[i].source != b.arrows[i].source ||
        a.arrows[i].target != b.arrows[i].target) {
      return false;
    }
  }
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    const auto& x = a.relations[r].terms;
    const auto& y = b.relations[r].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].coefficient != y[t].coefficient || x[t].arrows != y[t].arrows) return false;
    }
  }
  return true;
}

namespace {

bool is_ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '_' || c == '\'' || u >= 0x80;
}

class LineLexer {
 public:
  LineLexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  void advance() { ++pos_; }

  /// Reads identifier characters (and '/' when `allow_slash`).
  std::string word(bool allow_slash = false) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_ident_char(text_[pos_]) || (allow_slash && text_[pos_] == '/'))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string expect_word(const char* what) {
    std::size_t col = (skip_space(), column());
    std::string w = word();
    if (w.empty()) fail(std::string("expected ") + what, col);
    return w;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }
  [[noreturn]] void fail(const std::string& what, std::size_t col) const { throw ParseError(what, line_, col); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

RelationDecl parse_relation(LineLexer& lex, std::size_t line) {
  RelationDecl rel;
  rel.line = line;
  bool first = true;
  while (!lex.at_end()) {
    bool negative = false;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      lex.advance();
    } else if (!first) {
      lex.fail("expected '+' or '-' between relation terms");
    }
    first = false;

    TermDecl term;
    term.coefficient = 1;
    std::size_t mark = lex.position();
    std::size_t coeff_col = (lex.skip_space(), lex.column());
    std::string head = lex.word(true);
    if (lex.peek() == '*') {
      lex.advance();
      try {
        term.coefficient = parse_rational(head);
      } catch (const InputError&) {
        lex.fail("malformed coefficient '" + head + "'", coeff_col);
      }
    } else {
      lex.rewind(mark);
    }
    if (negative) term.coefficient = -term.coefficient;

    term.arrows.push_back(lex.expect_word("arrow name"));
    while (lex.peek() == '.') {
      lex.advance();
      term.arrows.push_back(lex.expect_word("arrow name after '.'"));
    }
    char next = lex.peek();
    if (next != '\0' && next != '+' && next != '-') {
      lex.fail(std::string("unexpected character '") + next + "' in relation");
    }
    rel.terms.push_back(std::move(term));
  }
  if (rel.terms.empty()) throw ParseError("relation has no terms", line, 0);
  return rel;
}

}  // namespace

QuiverDocument parse_quiver(std::string_view text) {
  QuiverDocument doc;
  std::unordered_map<std::string, std::size_t> vertex_line;
  std::unordered_map<std::string, std::size_t> arrow_line;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineLexer lex(line, line_no);
    if (lex.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t kw_col = lex.column();
    std::string keyword = lex.word();
    if (keyword == "vertex") {
      if (lex.at_end()) lex.fail("expected at least one vertex name");
      while (!lex.at_end()) {
        std::size_t col = lex.column();
        std::string name = lex.expect_word("vertex name");
        if (!vertex_line.emplace(name, line_no).second) {
          throw DuplicateName("duplicate vertex name '" + name + "'", line_no, col);
        }
        doc.vertices.push_back(std::move(name));
      }
    } else if (keyword == "arrow") {
      ArrowDecl decl;
      decl.line = line_no;
      std::size_t col = (lex.skip_space(), lex.column());
      decl.name = lex.expect_word("arrow name");
      decl.source = lex.expect_word("source vertex");
      decl.target = lex.expect_word("end vertex");
      if (!lex.at_end()) lex.fail("trailing characters after arrow declaration");
      if (!arrow_line.emplace(decl.name, line_no).second) {
        throw DuplicateName("duplicate arrow name '" + decl.name + "'", line_no, col);
      }
      doc.arrows.push_back(std::move(decl));
    } else if (keyword == "relation") {
      doc.relations.push_back(parse_relation(lex, line_no));
    } else {
      throw ParseError(keyword.empty() ? std::string("expected a keyword") : "unknown keyword '" + keyword + "'",
                       line_no, kw_col);
    }
    if (end == text.size()) break;
  }

  for (const auto& a : doc.arrows) {
    for (const auto* endpoint : {&a.source, &a.target}) {
      if (!vertex_line.count(*endpoint)) {
        throw UnknownReference("arrow '" + a.name + "' references unknown vertex '" + *endpoint + "'", a.line);
      }
    }
  }
  for (const auto& r : doc.relations) {
    for (const auto& t : r.terms) {
      for (const auto& name : t.arrows) {
        if (!arrow_line.count(name)) {
          throw UnknownReference("relation references unknown arrow '" + name + "'", r.line);
        }
      }
    }
  }
  return doc;
}

std::string serialize(const QuiverDocument& doc) {
  std::ostringstream out;
  if (!doc.vertices.empty()) {
    out << "vertex";
    for (const auto& v : doc.vertices) out << ' ' << v;
    out << '\n';
  }
  for (const auto& a : doc.arrows) out << "arrow " << a.name << ' ' << a.source << ' ' << a.target << '\n';
  for (const auto& r : doc.relations) {
    out << "relation";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
      const auto& term = r.terms[t];
      mpq_class mag = abs(term.coefficient);
      bool negative = sgn(term.coefficient) < 0;
      if (t == 0) {
        out << (negative ? " -" : " ");
      } else {
        out << (negative ? " - " : " + ");
      }
      if (mag != 1) out << mag.get_str() << '*';
      for (std::size_t k = 0; k < term.arrows.size(); ++k) out << (k ? "." : "") << term.arrows[k];
    }
    out << '\n';
  }
  return out.str();
}

Quiver make_quiver(const QuiverDocument& doc) {
  if (doc.vertices.empty()) throw InputError("quiver has no vertices");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
    if (!index.emplace(doc.vertices[v], v).second) {
      throw DuplicateName("duplicate vertex name '" + doc.vertices[v] + "'");
    }
  }
  std::vector<Arrow> arrows;
  for (const auto& a : doc.arrows) {
    auto s = index.find(a.source);
    auto t = index.find(a.target);
    if (s == index.end() || t == index.end()) {
      throw UnknownReference("arrow '" + a.name + "' references an unknown vertex", a.line);
    }
    arrows.push_back(Arrow{a.name, s->second, t->second});
  }
  return Quiver(doc.vertices, std::move(arrows));
}

}  // namespace quivalg
