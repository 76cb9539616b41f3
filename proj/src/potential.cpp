#include "hq/potential.hpp"

#include <sstream>

namespace hq {

void TensorElement::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  TensorElement r(degree);
  for (const auto& [w, x] : terms) r.add(w, x * c);
  return r;
}

size_t word_index(const Word& w, size_t r) {
  size_t idx = 0;
  for (int letter : w) idx = idx * r + static_cast<size_t>(letter);
  return idx;
}

Word index_word(size_t index, size_t r, size_t degree) {
  Word w(degree);
  for (size_t k = degree; k-- > 0;) {
    w[k] = static_cast<int>(index % r);
    index /= r;
  }
  return w;
}

Vector TensorElement::to_vector(size_t r) const {
  size_t n = 1;
  for (size_t k = 0; k < degree; ++k) n *= r;
  Vector v(n);
  for (const auto& [w, c] : terms) v[word_index(w, r)] = c;
  return v;
}

TensorElement TensorElement::from_vector(const Vector& v, size_t r, size_t degree) {
  TensorElement t(degree);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.add(index_word(i, r, degree), v[i]);
  return t;
}

std::string TensorElement::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string word;
    for (size_t k = 0; k < w.size(); ++k) word += (k ? "*" : "") + names[static_cast<size_t>(w[k])];
    if (w.empty()) word = "1";
    if (c.is_rational()) {
      Rational q = c.to_rational();
      bool neg = q < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (q != 1 || w.empty()) os << rational_str(q) << (w.empty() ? "" : "*");
    } else {
      os << (first ? "" : " + ") << "(" << c.pretty() << ")*";
    }
    if (!w.empty()) os << word;
    first = false;
  }
  return os.str();
}

TensorElement cyclic_shift(const TensorElement& x) {
  TensorElement r(x.degree);
  for (const auto& [w, c] : x.terms) {
    if (w.empty()) {
      r.add(w, c);
      continue;
    }
    Word s(w.begin() + 1, w.end());
    s.push_back(w.front());
    r.add(s, c);
  }
  return r;
}

TensorElement apply_to_last_factor(const TensorElement& x, const Matrix& sigma) {
  TensorElement r(x.degree);
  for (const auto& [w, c] : x.terms) {
    Word u = w;
    int t = w.back();
    for (size_t s = 0; s < sigma.rows(); ++s) {
      const Scalar& e = sigma(s, static_cast<size_t>(t));
      if (e.is_zero()) continue;
      u.back() = static_cast<int>(s);
      r.add(u, c * e);
    }
  }
  return r;
}

TensorElement apply_to_all_factors(const TensorElement& x, const Matrix& m) {
  TensorElement cur = x;
  for (size_t k = 0; k < x.degree; ++k) {
    // Transform the last factor, then rotate; after degree steps every factor is done.
    cur = cyclic_shift(apply_to_last_factor(cur, m));
  }
  return cur;
}

bool check_twisted(const TensorElement& w, const Matrix& sigma) {
  return apply_to_last_factor(cyclic_shift(w), sigma) == w;
}

std::optional<Matrix> find_twist(const TensorElement& w, size_t r) {
  if (w.degree == 0) return std::nullopt;
  TensorElement tw = cyclic_shift(w);
  size_t nwords = w.to_vector(r).size();
  Matrix sys(nwords, r * r);
  Vector rhs = w.to_vector(r);
  // Coefficient of the word (p, s) in (id (x) sigma) theta(w) is sum_t theta(w)[(p, t)] sigma(s, t).
  for (const auto& [word, c] : tw.terms) {
    Word u = word;
    size_t t = static_cast<size_t>(word.back());
    for (size_t s = 0; s < r; ++s) {
      u.back() = static_cast<int>(s);
      sys(word_index(u, r), s * r + t) += c;
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  auto to_matrix = [&](const Vector& v) {
    Matrix m(r, r);
    for (size_t s = 0; s < r; ++s)
      for (size_t t = 0; t < r; ++t) m(s, t) = v[s * r + t];
    return m;
  };
  Matrix cand = to_matrix(*sol);
  if (inverse(cand) && check_twisted(w, cand)) return cand;
  // Degenerate w: look for an invertible solution along the null directions.
  for (const auto& n : nullspace(sys)) {
    Vector v = *sol;
    for (size_t k = 0; k < v.size(); ++k) v[k] += n[k];
    Matrix m = to_matrix(v);
    if (inverse(m) && check_twisted(w, m)) return m;
  }
  return std::nullopt;
}

std::vector<TensorElement> derive(const TensorElement& w, size_t i, size_t r) {
  if (i > w.degree) throw std::invalid_argument("derive: order exceeds the degree of w");
  size_t rest = w.degree - i;
  size_t nprefix = 1, nrest = 1;
  for (size_t k = 0; k < i; ++k) nprefix *= r;
  for (size_t k = 0; k < rest; ++k) nrest *= r;
  Matrix rows(nprefix, nrest);
  for (const auto& [word, c] : w.terms) {
    Word q(word.begin(), word.begin() + static_cast<long>(i));
    Word p(word.begin() + static_cast<long>(i), word.end());
    rows(word_index(q, r), word_index(p, r)) += c;
  }
  std::vector<TensorElement> out;
  for (const auto& v : row_basis(rows)) out.push_back(TensorElement::from_vector(v, r, rest));
  return out;
}

TensorElement act(const HopfAlgebra& h, const Rep& v, const Element& x_h, const TensorElement& x) {
  Rep p = tensor_power(h, v, x.degree);
  Matrix m = h.image(p, x_h);
  return TensorElement::from_vector(m * x.to_vector(v.dim), v.dim, x.degree);
}

Character hdet(const Presentation& p) {
  const HopfAlgebra& h = *p.hopf;
  if (p.w.is_zero()) throw HypothesisViolation("the superpotential is zero");
  Rep pw = tensor_power(h, p.v, p.ell);
  Vector wv = p.w.to_vector(p.v.dim);
  size_t lead = 0;
  while (wv[lead].is_zero()) ++lead;
  Character chi{Vector(h.dim)};
  for (size_t i = 0; i < h.dim; ++i) {
    Vector y = pw.action[i] * wv;
    Scalar lam = y[lead] / wv[lead];
    for (size_t k = 0; k < wv.size(); ++k)
      if (y[k] != lam * wv[k])
        throw HypothesisViolation("span{w} is not H-stable: " + h.basis_names[i] +
                                  " . w is not a multiple of w (witness basis element " + std::to_string(i) + ")");
    chi.values[i] = lam;
  }
  std::string why;
  if (!is_character(h, chi, &why)) throw HypothesisViolation("homological determinant is not a character: " + why);
  return chi;
}

bool is_trivial_character(const HopfAlgebra& h, const Character& c) { return c.values == h.counit; }

size_t hdet_dual_shortcut(const FiniteGroup& g, const std::vector<size_t>& degrees, const TensorElement& w) {
  std::optional<size_t> deg;
  for (const auto& [word, c] : w.terms) {
    size_t x = 0;
    for (int letter : word) x = g.mul(x, degrees[static_cast<size_t>(letter)]);
    if (deg && *deg != x)
      throw HypothesisViolation("w is not G-homogeneous: monomials of degree " + g.names[*deg] + " and " +
                                g.names[x]);
    deg = x;
  }
  if (!deg) throw HypothesisViolation("the superpotential is zero");
  return *deg;
}

StabilityResult relation_space_stable(const Presentation& p) {
  const HopfAlgebra& h = *p.hopf;
  auto rels = p.relations();
  StabilityResult res;
  if (rels.empty()) return res;
  size_t deg = rels[0].degree;
  Rep pw = tensor_power(h, p.v, deg);
  std::vector<Vector> rows;
  for (const auto& r : rels) rows.push_back(r.to_vector(p.v.dim));
  Matrix span = Matrix::from_rows(rows);
  size_t rk = rank(span);
  for (size_t g : h.generators)
    for (size_t k = 0; k < rels.size(); ++k) {
      Vector y = pw.action[g] * rows[k];
      if (rank(vstack({span, Matrix::from_rows({y})})) != rk) {
        res.stable = false;
        res.witness = h.basis_names[g] + " moves relation " + rels[k].str(p.var_names) + " out of the relation space";
        return res;
      }
    }
  return res;
}

StabilityResult line_stable(const Presentation& p) {
  StabilityResult res;
  try {
    hdet(p);
  } catch (const HypothesisViolation& e) {
    res.stable = false;
    res.witness = e.what();
  }
  return res;
}

SmashCheck verify_twisted_weak_potential_smash(const Presentation& p, const Character& hdet_char) {
  const HopfAlgebra& h = *p.hopf;
  Rep pw = tensor_power(h, p.v, p.ell);
  Vector wv = p.w.to_vector(p.v.dim);
  Matrix xi = winding_left(h, hdet_char);
  SmashCheck res;
  for (size_t i = 0; i < h.dim; ++i) {
    // Both sides as a (words) x (basis of H) matrix.
    Matrix lhs(wv.size(), h.dim), rhs(wv.size(), h.dim);
    for (const auto& t : h.coproduct[i]) {
      Vector y = pw.action[t.left] * wv;
      for (size_t k = 0; k < wv.size(); ++k)
        if (!y[k].is_zero()) lhs(k, t.right) += t.coeff * y[k];
    }
    for (size_t k = 0; k < wv.size(); ++k)
      for (size_t j = 0; j < h.dim; ++j)
        if (!wv[k].is_zero() && !xi(j, i).is_zero()) rhs(k, j) = wv[k] * xi(j, i);
    if (lhs != rhs) {
      res.ok = false;
      res.witness = i;
      return res;
    }
  }
  return res;
}

}  // namespace hq
