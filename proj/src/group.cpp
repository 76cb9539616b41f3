#include "hq/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>

namespace hq {

namespace {

std::string word_name(const std::vector<size_t>& word, const std::vector<std::string>& gens) {
  if (word.empty()) return "1";
  bool short_names = std::all_of(gens.begin(), gens.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty() && !short_names) out += "*";
    out += gens[word[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Breadth-first closure under right multiplication by generators.
template <typename T, typename Key, typename Mul>
FiniteGroup closure(const std::vector<std::string>& gen_names, const std::vector<T>& gens, const T& identity,
                    Key key, Mul mul, std::vector<T>* elements_out) {
  if (gen_names.size() != gens.size()) throw GroupError("generator names and generators differ in count");
  std::vector<T> elems{identity};
  std::vector<std::vector<size_t>> words{{}};
  std::map<decltype(key(identity)), size_t> index{{key(identity), 0}};
  const size_t limit = 100000;
  for (size_t x = 0; x < elems.size(); ++x) {
    for (size_t s = 0; s < gens.size(); ++s) {
      T y = mul(elems[x], gens[s]);
      auto k = key(y);
      if (index.count(k)) continue;
      if (elems.size() >= limit) throw GroupError("group generated is too large (over 100000 elements)");
      index.emplace(k, elems.size());
      elems.push_back(y);
      auto w = words[x];
      w.push_back(s);
      words.push_back(std::move(w));
    }
  }
  FiniteGroup g;
  g.generator_names = gen_names;
  size_t n = elems.size();
  g.names.resize(n);
  for (size_t i = 0; i < n; ++i) g.names[i] = word_name(words[i], gen_names);
  g.table.assign(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) g.table[a][b] = index.at(key(mul(elems[a], elems[b])));
  for (const auto& s : gens) g.generators.push_back(index.at(key(s)));
  validate_group_table(g);
  if (elements_out) *elements_out = std::move(elems);
  return g;
}

// Renumbers so that element i of the result is old element order[i].
void reorder(FiniteGroup& g, const std::vector<size_t>& order, const std::vector<std::string>& names) {
  size_t n = g.size();
  std::vector<size_t> pos(n);
  for (size_t i = 0; i < n; ++i) pos[order[i]] = i;
  FiniteGroup r;
  r.generator_names = g.generator_names;
  r.names = names;
  r.table.assign(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) r.table[a][b] = pos[g.table[order[a]][order[b]]];
  for (size_t s : g.generators) r.generators.push_back(pos[s]);
  if (!g.matrices.empty())
    for (size_t i = 0; i < n; ++i) r.matrices.push_back(g.matrices[order[i]]);
  validate_group_table(r);
  g = std::move(r);
}

void apply_element_words(FiniteGroup& g, const std::vector<std::string>& words) {
  if (words.empty()) return;
  if (words.size() != g.size())
    throw GroupError("element list has " + std::to_string(words.size()) + " entries but the group has order " +
                     std::to_string(g.size()));
  std::vector<size_t> order;
  std::vector<bool> seen(g.size(), false);
  for (const auto& w : words) {
    size_t e = g.evaluate(w);
    if (seen[e]) throw GroupError("element list names the same element twice (\"" + w + "\")");
    seen[e] = true;
    order.push_back(e);
  }
  if (order[0] != 0) throw GroupError("element list must start with the identity");
  reorder(g, order, words);
}

}  // namespace

size_t FiniteGroup::element_order(size_t a) const {
  size_t k = 1, x = a;
  while (x != 0) {
    x = table[x][a];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (size_t a = 0; a < size(); ++a)
    for (size_t b = 0; b < size(); ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::optional<size_t> FiniteGroup::find(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

size_t FiniteGroup::evaluate(const std::string& word) const {
  if (auto e = find(word)) return *e;
  size_t pos = 0;
  auto fail = [&](const std::string& why) -> GroupError {
    return GroupError("cannot read group word \"" + word + "\": " + why);
  };
  auto power = [&](size_t x, long e) {
    if (e < 0) {
      x = inverse[x];
      e = -e;
    }
    size_t r = 0;
    for (long i = 0; i < e; ++i) r = table[r][x];
    return r;
  };
  auto read_exponent = [&]() -> long {
    if (pos >= word.size() || word[pos] != '^') return 1;
    ++pos;
    bool neg = false;
    if (pos < word.size() && word[pos] == '-') {
      neg = true;
      ++pos;
    }
    size_t start = pos;
    while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
    if (start == pos) throw fail("missing exponent");
    long e = std::stol(word.substr(start, pos - start));
    return neg ? -e : e;
  };
  std::function<size_t(bool)> read_seq = [&](bool nested) -> size_t {
    size_t acc = 0;
    while (pos < word.size()) {
      char c = word[pos];
      if (c == ')') {
        if (!nested) throw fail("unbalanced ')'");
        return acc;
      }
      if (c == '*' || c == ' ') {
        ++pos;
        continue;
      }
      size_t factor;
      if (c == '(') {
        ++pos;
        factor = read_seq(true);
        if (pos >= word.size() || word[pos] != ')') throw fail("missing ')'");
        ++pos;
      } else if (c == '1') {
        ++pos;
        factor = 0;
      } else {
        size_t best = 0, best_len = 0;
        for (size_t s = 0; s < generator_names.size(); ++s) {
          const auto& gn = generator_names[s];
          if (gn.size() > best_len && word.compare(pos, gn.size(), gn) == 0) {
            best = s;
            best_len = gn.size();
          }
        }
        if (best_len == 0) throw fail("unknown generator at position " + std::to_string(pos + 1));
        pos += best_len;
        factor = generators[best];
      }
      factor = power(factor, read_exponent());
      acc = table[acc][factor];
    }
    if (nested) throw fail("missing ')'");
    return acc;
  };
  return read_seq(false);
}

void validate_group_table(FiniteGroup& g) {
  size_t n = g.size();
  if (n == 0) throw GroupError("group has no elements");
  if (g.table.size() != n) throw GroupError("multiplication table has wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != n) throw GroupError("multiplication table has a row of wrong length");
    for (size_t x : row)
      if (x >= n) throw GroupError("multiplication table entry out of range");
  }
  for (size_t a = 0; a < n; ++a)
    if (g.table[0][a] != a || g.table[a][0] != a) throw GroupError("element 0 is not the identity");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw GroupError("multiplication table is not associative at (" + g.names[a] + ", " + g.names[b] + ", " +
                           g.names[c] + ")");
  g.inverse.assign(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (g.table[a][b] == 0 && g.table[b][a] == 0) g.inverse[a] = b;
  for (size_t a = 0; a < n; ++a)
    if (g.inverse[a] == n) throw GroupError("element " + g.names[a] + " has no inverse");
}

FiniteGroup group_from_permutations(const std::vector<std::string>& gen_names,
                                    const std::vector<std::vector<int>>& gens,
                                    const std::vector<std::string>& element_words) {
  size_t degree = gens.empty() ? 0 : gens[0].size();
  for (const auto& p : gens) {
    if (p.size() != degree) throw GroupError("permutation generators act on different numbers of points");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw GroupError("generator is not a permutation of 0..n-1");
  }
  std::vector<int> id(degree);
  for (size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  auto mul = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
    return r;
  };
  auto key = [](const std::vector<int>& p) { return p; };
  FiniteGroup g = closure<std::vector<int>>(gen_names, gens, id, key, mul, nullptr);
  apply_element_words(g, element_words);
  return g;
}

FiniteGroup group_from_matrices(const std::vector<std::string>& gen_names, const std::vector<Matrix>& gens,
                                const std::vector<std::string>& element_words) {
  if (gens.empty()) throw GroupError("matrix group needs at least one generator");
  size_t d = gens[0].rows();
  for (const auto& m : gens)
    if (m.rows() != d || m.cols() != d) throw GroupError("matrix generators must be square of equal size");
  auto key = [](const Matrix& m) {
    std::vector<std::string> k;
    for (const auto& x : m.entries()) k.push_back(x.canonical());
    return k;
  };
  auto mul = [](const Matrix& a, const Matrix& b) { return a * b; };
  std::vector<Matrix> elems;
  FiniteGroup g = closure(gen_names, gens, Matrix::identity(d), key, mul, &elems);
  g.matrices = std::move(elems);
  apply_element_words(g, element_words);
  return g;
}

FiniteGroup cyclic_group(int n, const std::string& gen) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = (i + 1) % n;
  return group_from_permutations({gen}, {p});
}

FiniteGroup trivial_group() {
  FiniteGroup g;
  g.names = {"1"};
  g.table = {{0}};
  g.inverse = {0};
  return g;
}

}  // namespace hq
