#include "hq/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hq/parse.hpp"

namespace hq {

void PathPoly::add(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

bool is_path(const Quiver& q, const Path& p) {
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] >= q.arrows.size()) return false;
    if (k > 0 && q.arrows[p[k - 1]].head != q.arrows[p[k]].tail) return false;
  }
  return true;
}

size_t path_tail(const Quiver& q, const Path& p) { return q.arrows[p.front()].tail; }
size_t path_head(const Quiver& q, const Path& p) { return q.arrows[p.back()].head; }

std::vector<Path> paths_of_length(const Quiver& q, size_t len) {
  std::vector<Path> cur;
  if (len == 0) return cur;
  for (size_t a = 0; a < q.arrows.size(); ++a) cur.push_back({a});
  for (size_t k = 1; k < len; ++k) {
    std::vector<Path> next;
    for (const auto& p : cur)
      for (size_t a : q.arrows_from(q.arrows[p.back()].head)) {
        Path e = p;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::vector<Path> paths_of_length(const Quiver& q, size_t len, size_t tail, size_t head) {
  std::vector<Path> out;
  for (auto& p : paths_of_length(q, len))
    if (path_tail(q, p) == tail && path_head(q, p) == head) out.push_back(std::move(p));
  return out;
}

std::string path_poly_str(const Quiver& q, const PathPoly& p) {
  if (p.is_zero()) return "0";
  // Terms are listed by arrow names, lowercase before uppercase, so "aA" precedes "Aa".
  auto name_key = [](const std::string& s) {
    std::string k;
    for (char ch : s) {
      unsigned char u = static_cast<unsigned char>(ch);
      k += std::isupper(u) ? '1' : '0';
      k += static_cast<char>(std::tolower(u));
    }
    return k;
  };
  std::vector<std::pair<std::vector<std::string>, const std::pair<const Path, Scalar>*>> order;
  for (const auto& t : p.terms) {
    std::vector<std::string> key;
    for (size_t a : t.first) key.push_back(name_key(q.arrows[a].name));
    order.push_back({key, &t});
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& entry : order) {
    const Path& path = entry.second->first;
    const Scalar& c = entry.second->second;
    std::string word = q.path_string(path);
    if (c.is_rational()) {
      Rational r = c.to_rational();
      bool neg = r < 0;
      if (neg) r = -r;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (r != 1) os << rational_str(r) << "*";
    } else {
      os << (first ? "" : " + ") << "(" << c.pretty() << ")*";
    }
    os << word;
    first = false;
  }
  return os.str();
}

Relation make_relation(const Quiver& q, const PathPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("relation is zero");
  Relation r;
  const Path& first = p.terms.begin()->first;
  if (first.empty()) throw std::invalid_argument("relation contains a path of length 0");
  r.tail = path_tail(q, first);
  r.head = path_head(q, first);
  size_t deg = first.size();
  for (const auto& [path, c] : p.terms) {
    if (!is_path(q, path)) throw std::invalid_argument("relation term is not a path");
    if (path.size() != deg) throw std::invalid_argument("relation is not homogeneous");
    if (path_tail(q, path) != r.tail || path_head(q, path) != r.head)
      throw std::invalid_argument("relation terms do not share tail and head");
  }
  r.poly = p;
  return r;
}

QuiverAlgebra canonicalize(const QuiverAlgebra& a) {
  std::map<std::pair<size_t, size_t>, std::vector<const Relation*>> blocks;
  for (const auto& r : a.relations) blocks[{r.tail, r.head}].push_back(&r);
  QuiverAlgebra out;
  out.quiver = a.quiver;
  for (const auto& [key, rels] : blocks) {
    std::map<Path, size_t> column;
    for (const auto* r : rels)
      for (const auto& [p, c] : r->poly.terms) column.emplace(p, 0);
    std::vector<Path> paths;
    for (auto& [p, idx] : column) {
      idx = paths.size();
      paths.push_back(p);
    }
    Matrix m(rels.size(), paths.size());
    for (size_t i = 0; i < rels.size(); ++i)
      for (const auto& [p, c] : rels[i]->poly.terms) m(i, column[p]) = c;
    for (const auto& row : row_basis(m)) {
      Relation r;
      r.tail = key.first;
      r.head = key.second;
      for (size_t k = 0; k < paths.size(); ++k) r.poly.add(paths[k], row[k]);
      out.relations.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<std::string> relation_strings(const QuiverAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& r : a.relations) out.push_back(path_poly_str(a.quiver, r.poly) + " = 0");
  return out;
}

bool same_presentation(const QuiverAlgebra& a, const QuiverAlgebra& b, const std::vector<size_t>& vertex_map,
                       const std::vector<size_t>& arrow_map) {
  if (a.quiver.num_vertices != b.quiver.num_vertices || a.quiver.arrows.size() != b.quiver.arrows.size())
    return false;
  if (vertex_map.size() != b.quiver.num_vertices || arrow_map.size() != b.quiver.arrows.size()) return false;
  for (size_t k = 0; k < b.quiver.arrows.size(); ++k) {
    const Arrow& x = b.quiver.arrows[k];
    const Arrow& y = a.quiver.arrows[arrow_map[k]];
    if (vertex_map[x.tail] != y.tail || vertex_map[x.head] != y.head) return false;
  }
  QuiverAlgebra mapped;
  mapped.quiver = a.quiver;
  for (const auto& r : b.relations) {
    Relation m;
    m.tail = vertex_map[r.tail];
    m.head = vertex_map[r.head];
    for (const auto& [p, c] : r.poly.terms) {
      Path q;
      for (size_t x : p) q.push_back(arrow_map[x]);
      m.poly.add(q, c);
    }
    mapped.relations.push_back(std::move(m));
  }
  QuiverAlgebra ca = canonicalize(a), cb = canonicalize(mapped);
  if (ca.relations.size() != cb.relations.size()) return false;
  for (size_t k = 0; k < ca.relations.size(); ++k)
    if (ca.relations[k].tail != cb.relations[k].tail || ca.relations[k].head != cb.relations[k].head ||
        !(ca.relations[k].poly == cb.relations[k].poly))
      return false;
  return true;
}

PathPoly parse_path_poly(const Quiver& q, const std::string& text, const CycContext& ctx) {
  std::vector<std::string> names;
  for (const auto& a : q.arrows) names.push_back(a.name);
  PathPoly p;
  for (auto& [word, c] : parse_linear_combination(text, names, ctx)) {
    if (!is_path(q, word)) throw ParseError("'" + text + "' contains a sequence of arrows that is not a path", 0);
    p.add(word, c);
  }
  return p;
}

}  // namespace hq
