#include "hq/rep.hpp"

#include <algorithm>
#include <sstream>

namespace hq {

Rep trivial_rep(const HopfAlgebra& h) {
  Rep r;
  r.name = "trivial";
  r.dim = 1;
  for (size_t i = 0; i < h.dim; ++i) r.action.push_back(Matrix(1, 1, h.counit[i]));
  return r;
}

Rep tensor_rep(const HopfAlgebra& h, const Rep& v, const Rep& w) {
  Rep r;
  r.name = v.name + "(x)" + w.name;
  r.dim = v.dim * w.dim;
  r.action.reserve(h.dim);
  for (size_t i = 0; i < h.dim; ++i) {
    Matrix m(r.dim, r.dim);
    for (const auto& t : h.coproduct[i]) m += kron(v.action[t.left], w.action[t.right]) * t.coeff;
    r.action.push_back(std::move(m));
  }
  return r;
}

Rep tensor_power(const HopfAlgebra& h, const Rep& v, size_t n) {
  if (n == 0) return trivial_rep(h);
  Rep r = v;
  for (size_t k = 1; k < n; ++k) r = tensor_rep(h, r, v);
  r.name = v.name + "^" + std::to_string(n);
  return r;
}

Rep dual_rep(const HopfAlgebra& h, const Rep& v) {
  Rep r;
  r.name = v.name + "*";
  r.dim = v.dim;
  for (size_t i = 0; i < h.dim; ++i) r.action.push_back(h.image(v, h.antipode.col(i)).transpose());
  return r;
}

Rep twist_rep(const HopfAlgebra& h, const Character& f, const Rep& v) {
  Rep r;
  r.name = "twist(" + v.name + ")";
  r.dim = v.dim;
  for (size_t i = 0; i < h.dim; ++i) {
    Matrix m(v.dim, v.dim);
    for (const auto& t : h.coproduct[i])
      if (!f.values[t.left].is_zero()) m += v.action[t.right] * (t.coeff * f.values[t.left]);
    r.action.push_back(std::move(m));
  }
  return r;
}

Rep regular_rep(const HopfAlgebra& h) {
  Rep r;
  r.name = "regular";
  r.dim = h.dim;
  for (size_t i = 0; i < h.dim; ++i) {
    Matrix m(h.dim, h.dim);
    for (size_t j = 0; j < h.dim; ++j)
      for (const auto& [k, c] : h.product(i, j)) m(k, j) += c;
    r.action.push_back(std::move(m));
  }
  return r;
}

std::vector<Matrix> intertwiners(const HopfAlgebra& h, const Rep& v, const Rep& w) {
  const size_t dv = v.dim, dw = w.dim, nvar = dv * dw;
  if (nvar == 0) return {};
  Matrix sys(h.generators.size() * nvar, nvar);
  size_t row0 = 0;
  for (size_t g : h.generators) {
    const Matrix& rv = v.action[g];
    const Matrix& rw = w.action[g];
    // Equation (r, c2): sum_c M[r][c] rv[c][c2] - sum_r2 rw[r][r2] M[r2][c2] = 0.
    for (size_t r = 0; r < dw; ++r)
      for (size_t c2 = 0; c2 < dv; ++c2) {
        size_t row = row0 + r * dv + c2;
        for (size_t c = 0; c < dv; ++c)
          if (!rv(c, c2).is_zero()) sys(row, r * dv + c) += rv(c, c2);
        for (size_t r2 = 0; r2 < dw; ++r2)
          if (!rw(r, r2).is_zero()) sys(row, r2 * dv + c2) -= rw(r, r2);
      }
    row0 += nvar;
  }
  std::vector<Matrix> basis;
  for (const auto& vec : nullspace(sys)) {
    Matrix m(dw, dv);
    for (size_t r = 0; r < dw; ++r)
      for (size_t c = 0; c < dv; ++c) m(r, c) = vec[r * dv + c];
    basis.push_back(std::move(m));
  }
  return basis;
}

std::vector<size_t> decompose(const HopfAlgebra& h, const Rep& v) {
  std::vector<size_t> mult;
  size_t total = 0;
  for (const auto& ir : h.irreps) {
    size_t m = intertwiners(h, ir, v).size();
    mult.push_back(m);
    total += m * ir.dim;
  }
  if (total != v.dim)
    throw HopfError("decomposition of " + v.name + " accounts for dimension " + std::to_string(total) + " of " +
                    std::to_string(v.dim) + "; the irreducible representations supplied are incomplete");
  return mult;
}

size_t Quiver::multiplicity(size_t i, size_t j) const { return arrows_between(i, j).size(); }

std::vector<size_t> Quiver::arrows_between(size_t i, size_t j) const {
  std::vector<size_t> out;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].tail == i && arrows[a].head == j) out.push_back(a);
  return out;
}

std::vector<size_t> Quiver::arrows_from(size_t i) const {
  std::vector<size_t> out;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].tail == i) out.push_back(a);
  return out;
}

std::vector<size_t> Quiver::arrows_into(size_t j) const {
  std::vector<size_t> out;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].head == j) out.push_back(a);
  return out;
}

std::optional<size_t> Quiver::arrow_index(const std::string& n) const {
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].name == n) return a;
  return std::nullopt;
}

bool Quiver::strongly_connected() const {
  if (num_vertices == 0) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(num_vertices, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (const auto& a : arrows) {
        size_t from = forward ? a.tail : a.head, to = forward ? a.head : a.tail;
        if (from == x && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

bool Quiver::short_names() const {
  return std::all_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.name.size() == 1; });
}

std::string Quiver::path_string(const std::vector<size_t>& path) const {
  if (path.empty()) return "e";
  bool compact = short_names();
  std::string s;
  for (size_t k = 0; k < path.size(); ++k) {
    if (k && !compact) s += ".";
    s += arrows[path[k]].name;
  }
  return s;
}

Quiver quiver_from_multiplicities(const std::vector<std::vector<size_t>>& m,
                                  const std::vector<std::string>& vertex_names) {
  Quiver q;
  q.num_vertices = m.size();
  q.vertex_names = vertex_names;
  if (q.vertex_names.size() != q.num_vertices) {
    q.vertex_names.clear();
    for (size_t i = 0; i < q.num_vertices; ++i) q.vertex_names.push_back(std::to_string(i));
  }
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      for (size_t k = 0; k < m[i][j]; ++k) {
        Arrow a;
        a.tail = i;
        a.head = j;
        a.local = k;
        a.name = "x" + std::to_string(i) + "_" + std::to_string(j);
        if (m[i][j] > 1) a.name += "_" + std::to_string(k);
        q.arrows.push_back(a);
      }
  return q;
}

Quiver mckay_quiver(const HopfAlgebra& h, const Rep& v) {
  size_t n = h.irreps.size();
  std::vector<std::vector<size_t>> m(n, std::vector<size_t>(n, 0));
  for (size_t j = 0; j < n; ++j) {
    Rep vj = tensor_rep(h, v, h.irreps[j]);
    for (size_t i = 0; i < n; ++i) m[i][j] = intertwiners(h, h.irreps[i], vj).size();
  }
  std::vector<std::string> names;
  for (const auto& ir : h.irreps) names.push_back(ir.name);
  return quiver_from_multiplicities(m, names);
}

bool is_inner_faithful(const HopfAlgebra& h, const Rep& v) { return mckay_quiver(h, v).strongly_connected(); }

bool every_irrep_in_tensor_powers(const HopfAlgebra& h, const Rep& v, size_t bound) {
  std::vector<bool> seen(h.irreps.size(), false);
  seen[0] = true;
  Rep p = trivial_rep(h);
  for (size_t k = 1; k <= bound; ++k) {
    p = tensor_rep(h, p, v);
    if (p.dim > 64) break;
    auto mult = decompose(h, p);
    for (size_t i = 0; i < mult.size(); ++i)
      if (mult[i]) seen[i] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string quiver_dot(const Quiver& q, const std::vector<std::string>& arrow_notes) {
  std::ostringstream os;
  os << "digraph mckay {\n";
  for (size_t i = 0; i < q.num_vertices; ++i)
    os << "  v" << i << " [label=\"" << i << ": " << q.vertex_names[i] << "\"];\n";
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    os << "  v" << ar.tail << " -> v" << ar.head << " [label=\"" << ar.name;
    if (a < arrow_notes.size() && !arrow_notes[a].empty()) os << " (" << arrow_notes[a] << ")";
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hq
