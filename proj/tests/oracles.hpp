#pragma once

// Independent reference computations used to cross-check the engine:
//  - graded dimensions of kQ/I by enumerating paths and spanning the ideal
//    directly, without any echelon bookkeeping across degrees;
//  - dim Hom_H(V_i, A_d (x) V_j) for the derivation-quotient algebra
//    A = T(V)/(R), computed from V^{(x) d} and the relation space alone.

#include <map>
#include <optional>
#include <vector>

#include "hq/hopf.hpp"
#include "hq/matrix.hpp"
#include "hq/path_algebra.hpp"
#include "hq/potential.hpp"

namespace oracle {

using namespace hq;
using Dims = std::vector<std::vector<std::vector<size_t>>>;  // [d][i][j]

inline void extend_paths(const Quiver& q, std::vector<Path>& out, Path& cur, size_t at, size_t left) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].tail != at) continue;
    cur.push_back(a);
    extend_paths(q, out, cur, q.arrows[a].head, left - 1);
    cur.pop_back();
  }
}

// All paths of length len starting at vertex i (len 0 gives the empty path).
inline std::vector<Path> paths_from(const Quiver& q, size_t i, size_t len) {
  std::vector<Path> out;
  Path cur;
  extend_paths(q, out, cur, i, len);
  return out;
}

inline size_t end_vertex(const Quiver& q, size_t start, const Path& p) {
  return p.empty() ? start : q.arrows[p.back()].head;
}

inline bool avoids(const Quiver& q, size_t start, const Path& p, std::optional<size_t> v) {
  if (!v) return true;
  if (start == *v) return false;
  for (size_t x : p)
    if (q.arrows[x].head == *v) return false;
  return true;
}

// dims[d][i][j] = dim e_i (kQ/I)_d e_j for d <= dmax. With a vertex v, the
// dimensions of kQ/(I + <e_v>): paths avoiding v modulo the projection of I.
inline Dims path_algebra_dims(const QuiverAlgebra& a, size_t dmax, std::optional<size_t> v = std::nullopt) {
  const Quiver& q = a.quiver;
  size_t n = q.num_vertices;
  Dims dims(dmax + 1, std::vector<std::vector<size_t>>(n, std::vector<size_t>(n, 0)));
  for (size_t d = 0; d <= dmax; ++d)
    for (size_t i = 0; i < n; ++i) {
      auto all = paths_from(q, i, d);
      for (size_t j = 0; j < n; ++j) {
        std::map<Path, size_t> index;
        for (const auto& p : all)
          if (end_vertex(q, i, p) == j && avoids(q, i, p, v)) index.emplace(p, index.size());
        if (index.empty()) continue;
        std::vector<Vector> span;
        for (const auto& rel : a.relations) {
          size_t k = rel.poly.degree();
          if (k > d) continue;
          for (size_t pre = 0; pre + k <= d; ++pre)
            for (const auto& x : paths_from(q, i, pre)) {
              if (end_vertex(q, i, x) != rel.tail) continue;
              for (const auto& y : paths_from(q, rel.head, d - k - pre)) {
                if (end_vertex(q, rel.head, y) != j) continue;
                Vector row(index.size());
                for (const auto& [mid, c] : rel.poly.terms) {
                  Path full = x;
                  full.insert(full.end(), mid.begin(), mid.end());
                  full.insert(full.end(), y.begin(), y.end());
                  if (auto it = index.find(full); it != index.end()) row[it->second] += c;
                }
                span.push_back(row);
              }
            }
        }
        size_t rk = span.empty() ? 0 : rank(Matrix::from_rows(span));
        dims[d][i][j] = index.size() - rk;
      }
    }
  return dims;
}

// rho(b) for every basis element of the tensor product X (x) Y.
inline std::vector<Matrix> tensor_action(const HopfAlgebra& h, const std::vector<Matrix>& x,
                                         const std::vector<Matrix>& y) {
  std::vector<Matrix> out;
  for (size_t b = 0; b < h.dim; ++b) {
    Matrix m(x[0].rows() * y[0].rows(), x[0].cols() * y[0].cols());
    for (const auto& t : h.coproduct[b]) m += kron(x[t.left], y[t.right]) * t.coeff;
    out.push_back(m);
  }
  return out;
}

// dim Hom_H(X, Y) from the intertwining equations on the generators of H.
inline size_t hom_dim(const HopfAlgebra& h, const std::vector<Matrix>& x, const std::vector<Matrix>& y) {
  size_t dx = x[0].rows(), dy = y[0].rows();
  if (dx == 0 || dy == 0) return 0;
  std::vector<Vector> eqs;
  for (size_t g : h.generators)
    for (size_t p = 0; p < dy; ++p)
      for (size_t c = 0; c < dx; ++c) {
        // (M x(g) - y(g) M)(p, c) with unknown M(p', q) at p' * dx + q
        Vector e(dy * dx);
        for (size_t q = 0; q < dx; ++q) e[p * dx + q] += x[g](q, c);
        for (size_t p2 = 0; p2 < dy; ++p2) e[p2 * dx + c] -= y[g](p, p2);
        eqs.push_back(e);
      }
  return dy * dx - rank(Matrix::from_rows(eqs));
}

// dims[d][i][j] = dim Hom_H(V_i, A_d (x) V_j) where A = T(V)/(R) and R is
// spanned by the partial derivatives of w of order ell - m.
inline Dims hom_space_dims(const HopfAlgebra& h, const std::vector<Matrix>& v, const TensorElement& w, size_t ell,
                           size_t m, size_t dmax) {
  size_t r = v[0].rows();
  size_t n = h.irreps.size();
  size_t order = ell - m;
  auto power = [&](size_t e) {
    size_t x = 1;
    for (size_t k = 0; k < e; ++k) x *= r;
    return x;
  };
  // relation vectors over V^{(x) m}: r_q[p] = w[q p]
  std::map<Word, Vector> rel_by_prefix;
  for (const auto& [word, c] : w.terms) {
    Word q(word.begin(), word.begin() + static_cast<long>(order));
    size_t idx = 0;
    for (size_t k = order; k < word.size(); ++k) idx = idx * r + static_cast<size_t>(word[k]);
    auto& vec = rel_by_prefix[q];
    if (vec.empty()) vec.assign(power(m), Scalar());
    vec[idx] += c;
  }
  Dims dims(dmax + 1, std::vector<std::vector<size_t>>(n, std::vector<size_t>(n, 0)));
  std::vector<Matrix> td(h.dim, Matrix::identity(1));
  for (size_t b = 0; b < h.dim; ++b) td[b] = Matrix::identity(1) * h.counit[b];
  for (size_t d = 0; d <= dmax; ++d) {
    if (d > 0) td = tensor_action(h, td, v);
    size_t big = power(d);
    for (size_t j = 0; j < n; ++j) {
      const auto& vj = h.irreps[j].action;
      size_t dj = h.irreps[j].dim;
      auto mj = tensor_action(h, td, vj);
      size_t dim_m = big * dj;
      std::vector<Vector> span;
      if (d >= m)
        for (size_t pre = 0; pre + m <= d; ++pre) {
          size_t post = d - m - pre;
          for (size_t x = 0; x < power(pre); ++x)
            for (const auto& [q, rel] : rel_by_prefix)
              for (size_t y = 0; y < power(post); ++y)
                for (size_t t = 0; t < dj; ++t) {
                  Vector e(dim_m);
                  for (size_t k = 0; k < rel.size(); ++k)
                    if (!rel[k].is_zero()) e[((x * power(m) + k) * power(post) + y) * dj + t] = rel[k];
                  span.push_back(e);
                }
        }
      // quotient coordinates: the non-pivot columns of rref(span)
      std::vector<Vector> rows;
      std::vector<size_t> pivots;
      if (!span.empty()) {
        RrefResult rr = rref(Matrix::from_rows(span));
        pivots = rr.pivots;
        for (size_t k = 0; k < pivots.size(); ++k) rows.push_back(rr.matrix.row(k));
      }
      std::vector<size_t> free;
      for (size_t c = 0, k = 0; c < dim_m; ++c) {
        if (k < pivots.size() && pivots[k] == c) {
          ++k;
          continue;
        }
        free.push_back(c);
      }
      std::vector<Matrix> quot(h.dim, Matrix(free.size(), free.size()));
      for (size_t g : h.generators)
        for (size_t a = 0; a < free.size(); ++a) {
          Vector col = mj[g].col(free[a]);
          for (size_t k = 0; k < pivots.size(); ++k) {
            Scalar c = col[pivots[k]];
            if (c.is_zero()) continue;
            for (size_t e = 0; e < dim_m; ++e)
              if (!rows[k][e].is_zero()) col[e] -= c * rows[k][e];
          }
          for (size_t b = 0; b < free.size(); ++b) quot[g](b, a) = col[free[b]];
        }
      for (size_t i = 0; i < n; ++i) dims[d][i][j] = free.empty() ? 0 : hom_dim(h, h.irreps[i].action, quot);
    }
  }
  return dims;
}

}  // namespace oracle
