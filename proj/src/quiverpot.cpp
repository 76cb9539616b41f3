#include "hq/quiverpot.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace hq {

namespace {

Matrix first_entry_normalized(Matrix m) {
  for (const auto& e : m.entries())
    if (!e.is_zero()) return m * e.inv();
  return m;
}

bool intertwines(const HopfAlgebra& h, const Rep& from, const Rep& to, const Matrix& m) {
  if (m.rows() != to.dim || m.cols() != from.dim) return false;
  for (size_t g : h.generators)
    if (m * from.action[g] != to.action[g] * m) return false;
  return true;
}

// Matrix of sum_s xi^(s) phi^(s) for xi (r*d_i x d_j) and phi (r*d_j x d_i).
Matrix pairing_matrix(const Matrix& xi, const Matrix& phi, size_t r) {
  size_t di = xi.rows() / r, dj = xi.cols();
  if (phi.rows() != r * dj || phi.cols() != di) throw ShapeError("xi and phi shapes do not pair");
  Matrix acc(di, di);
  for (size_t s = 0; s < r; ++s) acc += xi.block(s * di, 0, di, dj) * phi.block(s * dj, 0, dj, di);
  return acc;
}

Matrix pairing_table(const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                     const std::function<Scalar(const Matrix&, const Matrix&)>& pair) {
  Matrix p(left.size(), right.size());
  for (size_t b = 0; b < left.size(); ++b)
    for (size_t a = 0; a < right.size(); ++a) p(b, a) = pair(left[b], right[a]);
  return p;
}

// out_c = sum_b coeff(c, b) in_b (rows of coeff index the outputs).
std::vector<Matrix> recombine(const std::vector<Matrix>& in, const Matrix& coeff) {
  std::vector<Matrix> out;
  for (size_t c = 0; c < coeff.rows(); ++c) {
    Matrix acc(in[0].rows(), in[0].cols());
    for (size_t b = 0; b < in.size(); ++b)
      if (!coeff(c, b).is_zero()) acc += in[b] * coeff(c, b);
    out.push_back(std::move(acc));
  }
  return out;
}

size_t arrow_tail_dim(const ArrowData& a, size_t r) { return a.xi.rows() / r; }

// The exponent k with val = zeta_n^k, if val is an n-th root of unity in its field.
std::optional<size_t> root_exponent(const Scalar& val, size_t n) {
  if (val == Scalar(1)) return 0;
  if (n % 2 == 0 && val == Scalar(-1)) return n / 2;
  const CycContext& ctx = val.context();
  long big = ctx.order(), small = static_cast<long>(n);
  if (big % small != 0) return std::nullopt;
  for (long t = 0; t < small; ++t)
    if (root_of_unity(ctx, t * (big / small)) == val) return static_cast<size_t>(t);
  return std::nullopt;
}

}  // namespace

std::vector<size_t> tau_permutation(const HopfAlgebra& h, const Character& hdet) {
  size_t n = h.irreps.size();
  std::vector<size_t> tau(n);
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    Rep tw = twist_rep(h, hdet, h.irreps[i]);
    std::vector<size_t> hits;
    for (size_t k = 0; k < n; ++k)
      if (h.irreps[k].dim == tw.dim && !intertwiners(h, h.irreps[k], tw).empty()) hits.push_back(k);
    if (hits.size() != 1)
      throw HopfError("twisting " + h.irreps[i].name + " by hdet matches " + std::to_string(hits.size()) +
                      " irreps; the irrep list is not a valid Artin-Wedderburn certificate");
    tau[i] = hits[0];
    if (used[hits[0]]) throw HopfError("twisting by hdet is not a permutation of the irreps");
    used[hits[0]] = true;
  }
  return tau;
}

std::vector<Matrix> theta_maps(const HopfAlgebra& h, const Character& hdet, const std::vector<size_t>& tau) {
  std::vector<Matrix> out;
  for (size_t j = 0; j < h.irreps.size(); ++j) {
    Rep tw = twist_rep(h, hdet, h.irreps[j]);
    auto basis = intertwiners(h, h.irreps[tau[j]], tw);
    if (basis.size() != 1) throw HopfError("Hom(V_tau(j), kw (x) V_j) is not one-dimensional");
    out.push_back(first_entry_normalized(basis[0]));
  }
  return out;
}

Scalar duality_pairing(const Matrix& xi, const Matrix& phi, size_t r) {
  Scalar c;
  Matrix m = pairing_matrix(xi, phi, r);
  if (!m.is_scalar_multiple_of_identity(&c))
    throw HopfError("a composite of intertwiners between irreps is not scalar; the irreps are not simple");
  return c;
}

std::vector<ArrowData> choose_arrow_maps(const HopfAlgebra& h, const Rep& v, const Quiver& q,
                                         const ArrowOptions& opt) {
  size_t r = v.dim;
  size_t n = h.irreps.size();
  std::map<size_t, const Matrix*> user;
  for (const auto& o : opt.xi_overrides) {
    if (o.arrow >= q.arrows.size()) throw std::invalid_argument("xi override names an unknown arrow");
    user[o.arrow] = &o.xi;
  }
  Rep dv = dual_rep(h, v);
  std::vector<ArrowData> out(q.arrows.size());
  for (size_t j = 0; j < n; ++j) {
    Rep vj = tensor_rep(h, v, h.irreps[j]);
    for (size_t i = 0; i < n; ++i) {
      auto block = q.arrows_between(i, j);
      if (block.empty()) continue;
      const Rep& vi = h.irreps[i];
      auto phis = intertwiners(h, vi, vj);
      if (phis.size() != block.size())
        throw std::invalid_argument("quiver block " + std::to_string(i) + " -> " + std::to_string(j) +
                                    " does not match dim Hom(V_i, V (x) V_j)");
      if (auto it = opt.basis_change.find({i, j}); it != opt.basis_change.end()) {
        if (!inverse(it->second)) throw std::invalid_argument("basis change is not invertible");
        phis = recombine(phis, it->second.transpose());
      }
      Rep dvi = tensor_rep(h, dv, vi);
      size_t given = 0;
      for (size_t a : block) given += user.count(a);
      if (given != 0 && given != block.size())
        throw std::invalid_argument("xi overrides must cover every arrow " + std::to_string(i) + " -> " +
                                    std::to_string(j) + " or none");
      auto pair = [&](const Matrix& x, const Matrix& f) { return duality_pairing(x, f, r); };
      std::vector<Matrix> xis;
      if (given) {
        for (size_t a : block) {
          const Matrix& x = *user[a];
          if (x.rows() != r * vi.dim || x.cols() != vj.dim / r)
            throw std::invalid_argument("xi for arrow " + q.arrows[a].name + " must be " +
                                        std::to_string(r * vi.dim) + "x" + std::to_string(vj.dim / r));
          if (!intertwines(h, h.irreps[j], dvi, x))
            throw std::invalid_argument("xi for arrow " + q.arrows[a].name + " is not an H-module map V_" +
                                        std::to_string(j) + " -> V* (x) V_" + std::to_string(i));
          xis.push_back(x);
        }
        auto pinv = inverse(pairing_table(xis, phis, pair));
        if (!pinv) throw std::invalid_argument("the supplied xi maps are not dual to any phi basis");
        // phi'_c = sum_a phi_a Pinv(a, c)
        phis = recombine(phis, pinv->transpose());
      } else {
        xis = intertwiners(h, h.irreps[j], dvi);
        if (xis.size() != block.size()) throw HopfError("dim Hom(V_j, V* (x) V_i) differs from the arrow count");
        auto pinv = inverse(pairing_table(xis, phis, pair));
        if (!pinv) throw HopfError("the duality pairing is singular; inconsistent irreps");
        xis = recombine(xis, *pinv);
      }
      auto psis = intertwiners(h, vj, vi);
      if (psis.size() != block.size()) throw HopfError("dim Hom(V (x) V_j, V_i) differs from the arrow count");
      auto psi_pair = [&](const Matrix& p, const Matrix& f) {
        Scalar c;
        if (!(p * f).is_scalar_multiple_of_identity(&c)) throw HopfError("psi o phi is not scalar");
        return c;
      };
      auto qinv = inverse(pairing_table(psis, phis, psi_pair));
      if (!qinv) throw HopfError("the psi pairing is singular; inconsistent irreps");
      psis = recombine(psis, *qinv);
      for (size_t k = 0; k < block.size(); ++k) {
        ArrowData& d = out[block[k]];
        d.arrow = block[k];
        d.phi = phis[k];
        d.xi = xis[k];
        d.psi = psis[k];
        d.user = given != 0;
      }
    }
  }
  return out;
}

Matrix xi_route_matrix(const QuiverPotential& qp, const TensorElement& w, size_t r, const Path& p) {
  size_t j = path_head(qp.quiver, p);
  const Matrix& th = qp.theta[j];
  size_t dt = arrow_tail_dim(qp.arrows[p.front()], r);
  Matrix acc(dt, th.cols());
  for (const auto& [word, c] : w.terms) {
    Matrix cur = th;
    for (size_t k = p.size(); k-- > 0;) {
      const ArrowData& a = qp.arrows[p[k]];
      size_t di = arrow_tail_dim(a, r), dj = a.xi.cols();
      cur = a.xi.block(static_cast<size_t>(word[k]) * di, 0, di, dj) * cur;
      if (cur.is_zero()) break;
    }
    if (cur.rows() == dt) acc += cur * c;
  }
  return acc;
}

Matrix psi_route_matrix(const QuiverPotential& qp, const TensorElement& w, size_t r, const Path& p) {
  size_t j = path_head(qp.quiver, p);
  Matrix x = kron(Matrix::column(w.to_vector(r)), qp.theta[j]);
  for (size_t k = p.size(); k-- > 0;) {
    const Matrix& psi = qp.arrows[p[k]].psi;
    size_t in = psi.cols(), out = psi.rows();
    size_t blocks = x.rows() / in;
    Matrix y(blocks * out, x.cols());
    for (size_t b = 0; b < blocks; ++b) y.set_block(b * out, 0, psi * x.block(b * in, 0, in, x.cols()));
    x = std::move(y);
  }
  return x;
}

QuiverPotential build_phi(const Presentation& p, const ArrowOptions& opt) {
  const HopfAlgebra& h = *p.hopf;
  Character chi = hdet(p);
  QuiverPotential qp;
  qp.route = "general";
  qp.ell = p.ell;
  qp.m = p.m;
  qp.tau = tau_permutation(h, chi);
  qp.theta = theta_maps(h, chi, qp.tau);
  if (!opt.theta_scale.empty()) {
    if (opt.theta_scale.size() != qp.theta.size()) throw std::invalid_argument("theta_scale has the wrong length");
    for (size_t j = 0; j < qp.theta.size(); ++j) {
      if (opt.theta_scale[j].is_zero()) throw std::invalid_argument("theta_scale entries must be nonzero");
      qp.theta[j] *= opt.theta_scale[j];
    }
  }
  qp.quiver = mckay_quiver(h, p.v);
  qp.arrows = choose_arrow_maps(h, p.v, qp.quiver, opt);
  size_t r = p.v.dim;
  for (const auto& path : paths_of_length(qp.quiver, p.ell)) {
    size_t j = path_head(qp.quiver, path);
    Matrix xr = xi_route_matrix(qp, p.w, r, path);
    Matrix pr = psi_route_matrix(qp, p.w, r, path);
    ++qp.route_check.compared;
    if (xr == pr)
      ++qp.route_check.agreed;
    else
      qp.route_check.mismatches.push_back(qp.quiver.path_string(path));
    if (path_tail(qp.quiver, path) != qp.tau[j]) {
      if (!xr.is_zero())
        throw std::logic_error("nonzero Phi coefficient on path " + qp.quiver.path_string(path) +
                               " which does not run tau(j) -> j");
      continue;
    }
    Scalar c;
    if (!xr.is_scalar_multiple_of_identity(&c))
      throw std::logic_error("Phi coefficient of " + qp.quiver.path_string(path) + " is not scalar");
    qp.phi.add(path, c);
  }
  return qp;
}

QuiverAlgebra derive_quiver_relations(const QuiverPotential& qp) {
  QuiverAlgebra a;
  a.quiver = qp.quiver;
  size_t k = qp.ell - qp.m;
  std::map<Path, PathPoly> parts;
  for (const auto& [path, c] : qp.phi.terms) {
    if (k == 0) {
      parts[{path_tail(qp.quiver, path), path_head(qp.quiver, path)}].add(path, c);
    } else {
      Path q(path.begin(), path.begin() + static_cast<long>(k));
      Path rest(path.begin() + static_cast<long>(k), path.end());
      parts[q].add(rest, c);
    }
  }
  for (const auto& [key, poly] : parts)
    if (!poly.is_zero()) a.relations.push_back(make_relation(qp.quiver, poly));
  return canonicalize(a);
}

QuiverPotential dual_group_fast_path(const FiniteGroup& g, const std::vector<size_t>& degrees, const TensorElement& w,
                                     size_t ell, size_t m) {
  size_t n = g.size(), r = degrees.size();
  size_t dw = hdet_dual_shortcut(g, degrees, w);
  std::vector<std::vector<size_t>> mult(n, std::vector<size_t>(n, 0));
  // local[s][h]: index of the arrow labelled v_s into h among the arrows g_s h -> h.
  std::vector<std::vector<size_t>> local(r, std::vector<size_t>(n));
  for (size_t h = 0; h < n; ++h)
    for (size_t s = 0; s < r; ++s) local[s][h] = mult[g.mul(degrees[s], h)][h]++;
  std::vector<std::string> names;
  for (const auto& nm : g.names) names.push_back("chi_" + nm);
  QuiverPotential qp;
  qp.route = "dual_group";
  qp.ell = ell;
  qp.m = m;
  qp.quiver = quiver_from_multiplicities(mult, names);
  for (size_t h = 0; h < n; ++h) {
    qp.tau.push_back(g.mul(dw, h));
    qp.theta.push_back(Matrix(1, 1, Scalar(1)));
  }
  for (const auto& [word, c] : w.terms) {
    if (word.size() != ell) throw std::invalid_argument("w is not homogeneous of degree l");
    for (size_t h = 0; h < n; ++h) {
      Path p(ell);
      size_t cur = h;
      for (size_t k = ell; k-- > 0;) {
        size_t s = static_cast<size_t>(word[k]);
        size_t tail = g.mul(degrees[s], cur);
        p[k] = qp.quiver.arrows_between(tail, cur)[local[s][cur]];
        cur = tail;
      }
      qp.phi.add(p, c);
    }
  }
  return qp;
}

AbelianReduction abelian_group_reduction(const HopfAlgebra& h, const Rep& v, const TensorElement& w) {
  if (h.kind != HopfAlgebra::Kind::GroupAlgebra || !h.group) throw std::invalid_argument("H is not a group algebra");
  const FiniteGroup& g = *h.group;
  if (!g.is_abelian()) throw std::invalid_argument("the abelian route needs an abelian group");
  size_t order = 1;
  std::vector<size_t> ords;
  for (size_t s : g.generators) {
    ords.push_back(g.element_order(s));
    order *= ords.back();
  }
  if (order != g.size())
    throw std::invalid_argument("the abelian route needs independent generators (orders multiply to |G|)");
  size_t r = v.dim;
  AbelianReduction red;
  red.vertex_of.assign(g.size(), 0);
  std::vector<Vector> columns;
  for (size_t i = 0; i < h.irreps.size(); ++i) {
    const Rep& chi = h.irreps[i];
    if (chi.dim != 1) throw std::invalid_argument("irrep " + chi.name + " of an abelian group is not one-dimensional");
    std::vector<Matrix> eqs;
    size_t elem = 0;
    for (size_t s = 0; s < g.generators.size(); ++s) {
      const Scalar& val = chi.action[g.generators[s]](0, 0);
      eqs.push_back(v.action[g.generators[s]] - Matrix::identity(r) * val);
      auto k = root_exponent(val, ords[s]);
      if (!k)
        throw std::invalid_argument("cannot read " + chi.name + "(" + g.generator_names[s] + ") as a power of zeta_" +
                                    std::to_string(ords[s]) + "; use a scalar order divisible by " +
                                    std::to_string(ords[s]));
      for (size_t t = 0; t < *k; ++t) elem = g.mul(elem, g.generators[s]);
    }
    red.vertex_of[elem] = i;
    for (auto vec : nullspace(vstack(eqs))) {
      columns.push_back(std::move(vec));
      red.degrees.push_back(elem);
    }
  }
  if (columns.size() != r) throw HypothesisViolation("the group action on V is not diagonalizable over the scalar field");
  red.change = Matrix(r, r);
  for (size_t k = 0; k < r; ++k)
    for (size_t t = 0; t < r; ++t) red.change(t, k) = columns[k][t];
  auto pinv = inverse(red.change);
  if (!pinv) throw std::logic_error("eigenvectors are dependent");
  TensorElement wp = apply_to_all_factors(w, *pinv);
  if (!w.is_zero() && !wp.is_zero()) wp = wp.scaled(w.terms.begin()->second / wp.terms.begin()->second);
  red.w = wp;
  return red;
}

QuiverPotential abelian_fast_path(const HopfAlgebra& h, const Rep& v, const TensorElement& w, size_t ell, size_t m) {
  AbelianReduction red = abelian_group_reduction(h, v, w);
  const FiniteGroup& g = *h.group;
  QuiverPotential fast = dual_group_fast_path(g, red.degrees, red.w, ell, m);
  size_t n = g.size();
  std::vector<std::vector<size_t>> mult(n, std::vector<size_t>(n, 0));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) mult[red.vertex_of[x]][red.vertex_of[y]] = fast.quiver.multiplicity(x, y);
  std::vector<std::string> names;
  for (const auto& ir : h.irreps) names.push_back(ir.name);
  QuiverPotential qp;
  qp.route = "abelian";
  qp.ell = ell;
  qp.m = m;
  qp.quiver = quiver_from_multiplicities(mult, names);
  std::vector<size_t> arrow_map(fast.quiver.arrows.size());
  for (size_t a = 0; a < arrow_map.size(); ++a) {
    const Arrow& ar = fast.quiver.arrows[a];
    arrow_map[a] = qp.quiver.arrows_between(red.vertex_of[ar.tail], red.vertex_of[ar.head])[ar.local];
  }
  qp.tau.assign(n, 0);
  for (size_t x = 0; x < n; ++x) qp.tau[red.vertex_of[x]] = red.vertex_of[fast.tau[x]];
  qp.theta.assign(n, Matrix(1, 1, Scalar(1)));
  for (const auto& [path, c] : fast.phi.terms) {
    Path p;
    for (size_t a : path) p.push_back(arrow_map[a]);
    qp.phi.add(p, c);
  }
  return qp;
}

void rename_arrows(Quiver& q, const std::map<size_t, std::string>& names) {
  for (const auto& [a, nm] : names) {
    if (a >= q.arrows.size()) throw std::invalid_argument("arrow index out of range");
    if (nm.empty()) throw std::invalid_argument("arrow names must be nonempty");
    q.arrows[a].name = nm;
  }
  std::set<std::string> seen;
  for (const auto& a : q.arrows)
    if (!seen.insert(a.name).second) throw std::invalid_argument("arrow name '" + a.name + "' is used twice");
}

std::string MeshVerdict::str() const {
  switch (kind) {
    case Kind::Preprojective:
      return "preprojective(" + (type.empty() ? std::string("Q") : type) + ")";
    case Kind::MeshOnly:
      return "mesh-only";
    case Kind::NotMesh:
      return "not-mesh";
  }
  return "not-mesh";
}

std::string dynkin_type(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  if (n == 0) return "";
  std::vector<std::vector<size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  size_t count = 0;
  while (!stack.empty()) {
    size_t x = stack.back();
    stack.pop_back();
    ++count;
    for (size_t y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  if (count != n) return "";
  auto num = [](size_t k) { return std::to_string(k); };
  if (edges.size() == n) {
    for (const auto& a : adj)
      if (a.size() != 2) return "";
    return n >= 3 ? "Atilde" + num(n - 1) : "";
  }
  if (edges.size() + 1 != n) return "";
  std::vector<size_t> branch;
  for (size_t x = 0; x < n; ++x)
    if (adj[x].size() >= 3) branch.push_back(x);
  if (branch.empty()) return "A" + num(n);
  // Number of vertices on the arm leaving b through its neighbour start.
  auto arm = [&](size_t b, size_t start) {
    size_t len = 1, prev = b, cur = start;
    while (adj[cur].size() == 2) {
      size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    return adj[cur].size() == 1 ? len : 0;
  };
  if (branch.size() == 1) {
    size_t b = branch[0];
    std::vector<size_t> arms;
    for (size_t y : adj[b]) arms.push_back(arm(b, y));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4 && arms == std::vector<size_t>{1, 1, 1, 1}) return "Dtilde4";
    if (arms.size() != 3) return "";
    size_t a = arms[0], c = arms[1], e = arms[2];
    if (a == 1 && c == 1) return "D" + num(n);
    if (a == 1 && c == 2 && e == 2) return "E6";
    if (a == 1 && c == 2 && e == 3) return "E7";
    if (a == 1 && c == 2 && e == 4) return "E8";
    if (a == 2 && c == 2 && e == 2) return "Etilde6";
    if (a == 1 && c == 3 && e == 3) return "Etilde7";
    if (a == 1 && c == 2 && e == 5) return "Etilde8";
    return "";
  }
  if (branch.size() == 2) {
    for (size_t b : branch) {
      if (adj[b].size() != 3) return "";
      size_t leaves = 0;
      for (size_t y : adj[b]) leaves += adj[y].size() == 1;
      if (leaves != 2) return "";
    }
    return "Dtilde" + num(n - 1);
  }
  return "";
}

MeshVerdict recognize_preprojective(const QuiverAlgebra& a, const std::vector<size_t>& tau) {
  MeshVerdict v;
  const Quiver& q = a.quiver;
  size_t n = q.num_vertices;
  for (size_t i = 0; i < tau.size(); ++i)
    if (tau[i] != i) {
      v.reason = "tau is not the identity";
      return v;
    }
  if (a.relation_degree() != 2) {
    v.reason = "relations are not quadratic";
    return v;
  }
  std::vector<const Relation*> at(n, nullptr);
  for (const auto& r : a.relations) {
    if (r.tail != r.head) {
      v.reason = "relation from vertex " + std::to_string(r.tail) + " to " + std::to_string(r.head);
      return v;
    }
    if (at[r.tail]) {
      v.reason = "vertex " + std::to_string(r.tail) + " carries more than one relation";
      return v;
    }
    at[r.tail] = &r;
  }
  for (size_t i = 0; i < n; ++i)
    if (!at[i]) {
      v.reason = "vertex " + std::to_string(i) + " carries no relation";
      return v;
    }
  bool simple_double = true;
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 0; i < n && simple_double; ++i)
    for (size_t k = i; k < n; ++k) {
      size_t ab = q.multiplicity(i, k), ba = q.multiplicity(k, i);
      if (i == k ? ab != 0 : (ab != ba || ab > 1)) {
        simple_double = false;
        break;
      }
      if (i != k && ab == 1) edges.push_back({i, k});
    }
  // c[i][k]: coefficient of the path i -> k -> i in the relation at i.
  std::vector<std::map<size_t, Scalar>> c(n);
  for (size_t i = 0; i < n; ++i)
    for (const auto& [p, x] : at[i]->poly.terms) {
      size_t mid = q.arrows[p[0]].head;
      if (mid == i || c[i].count(mid)) {
        simple_double = false;
        continue;
      }
      c[i][mid] = x;
    }
  if (!simple_double) {
    v.kind = MeshVerdict::Kind::MeshOnly;
    v.reason = "the quiver has loops or multiple arrows";
    return v;
  }
  for (auto [i, k] : edges)
    if (!c[i].count(k) || !c[k].count(i)) {
      v.reason = "the relation at vertex " + std::to_string(c[i].count(k) ? k : i) + " misses a neighbour term";
      return v;
    }
  // Rescale relation i by z_i; the edge {i,k} forces z_i c_ik = -z_k c_ki.
  std::vector<std::optional<Scalar>> z(n);
  std::vector<std::vector<size_t>> adj(n);
  for (auto [i, k] : edges) {
    adj[i].push_back(k);
    adj[k].push_back(i);
  }
  for (size_t s = 0; s < n; ++s) {
    if (z[s]) continue;
    z[s] = Scalar(1);
    std::queue<size_t> todo;
    todo.push(s);
    while (!todo.empty()) {
      size_t i = todo.front();
      todo.pop();
      for (size_t k : adj[i]) {
        Scalar want = -(*z[i]) * c[i][k] / c[k][i];
        if (!z[k]) {
          z[k] = want;
          todo.push(k);
        } else if (*z[k] != want) {
          v.kind = MeshVerdict::Kind::MeshOnly;
          v.reason = "no arrow rescaling reaches the preprojective form (cycle through " + std::to_string(i) + ", " +
                     std::to_string(k) + " is inconsistent)";
          return v;
        }
      }
    }
  }
  v.kind = MeshVerdict::Kind::Preprojective;
  v.type = dynkin_type(n, edges);
  return v;
}

}  // namespace hq
