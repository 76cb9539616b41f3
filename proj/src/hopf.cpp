#include "hq/hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hq/rep.hpp"

namespace hq {

namespace {

constexpr size_t kMaxReportsPerCheck = 5;

// Dense coordinates of Delta(b_i) as a dim x dim matrix.
Matrix coproduct_matrix(const HopfAlgebra& h, size_t i) {
  Matrix m(h.dim, h.dim);
  for (const auto& t : h.coproduct[i]) m(t.left, t.right) += t.coeff;
  return m;
}

// Product in H (x) H of dense elements.
Matrix tensor_square_product(const HopfAlgebra& h, const Matrix& x, const Matrix& y) {
  Matrix r(h.dim, h.dim);
  for (size_t a = 0; a < h.dim; ++a)
    for (size_t b = 0; b < h.dim; ++b) {
      if (x(a, b).is_zero()) continue;
      for (size_t c = 0; c < h.dim; ++c)
        for (size_t d = 0; d < h.dim; ++d) {
          if (y(c, d).is_zero()) continue;
          Scalar f = x(a, b) * y(c, d);
          for (const auto& [p, cp] : h.product(a, c))
            for (const auto& [q, cq] : h.product(b, d)) r(p, q) += f * cp * cq;
        }
    }
  return r;
}

std::vector<std::vector<CoproductTerm>> coproduct_from_dense(const std::vector<Matrix>& dense) {
  std::vector<std::vector<CoproductTerm>> out(dense.size());
  for (size_t i = 0; i < dense.size(); ++i)
    for (size_t a = 0; a < dense[i].rows(); ++a)
      for (size_t b = 0; b < dense[i].cols(); ++b)
        if (!dense[i](a, b).is_zero()) out[i].push_back({a, b, dense[i](a, b)});
  return out;
}

SparseElement sparse(const Element& e) {
  SparseElement s;
  for (size_t k = 0; k < e.size(); ++k)
    if (!e[k].is_zero()) s.emplace_back(k, e[k]);
  return s;
}

std::string idx(std::initializer_list<size_t> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

// Images of all group elements from images of the generators, by walking the
// Cayley graph.
std::vector<Matrix> extend_over_group(const FiniteGroup& g, const std::vector<Matrix>& gen_images, size_t d) {
  std::vector<Matrix> img(g.size());
  std::vector<bool> done(g.size(), false);
  img[0] = Matrix::identity(d);
  done[0] = true;
  std::vector<size_t> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    size_t x = queue[qi];
    for (size_t s = 0; s < g.generators.size(); ++s) {
      size_t y = g.mul(x, g.generators[s]);
      if (done[y]) continue;
      img[y] = img[x] * gen_images[s];
      done[y] = true;
      queue.push_back(y);
    }
  }
  for (size_t i = 0; i < g.size(); ++i)
    if (!done[i]) throw HopfError("group generators do not generate the group");
  return img;
}

}  // namespace

Element HopfAlgebra::basis(size_t i) const {
  Element e(dim);
  e[i] = Scalar(1);
  return e;
}

Element HopfAlgebra::multiply(const Element& a, const Element& b) const {
  Element r(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar f = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) r[k] += f * c;
    }
  }
  return r;
}

Scalar HopfAlgebra::counit_of(const Element& a) const {
  Scalar s;
  for (size_t i = 0; i < dim; ++i)
    if (!a[i].is_zero()) s += a[i] * counit[i];
  return s;
}

Matrix HopfAlgebra::image(const Rep& r, const Element& h) const {
  Matrix m(r.dim, r.dim);
  for (size_t i = 0; i < dim; ++i)
    if (!h[i].is_zero()) m += r.action[i] * h[i];
  return m;
}

std::optional<size_t> HopfAlgebra::basis_index(const std::string& n) const {
  for (size_t i = 0; i < basis_names.size(); ++i)
    if (basis_names[i] == n) return i;
  return std::nullopt;
}

HopfAlgebra build_group_algebra(const FiniteGroup& g, const std::vector<GroupIrrepData>& irreps,
                                const CycContext& ctx) {
  (void)ctx;
  HopfAlgebra h;
  h.name = "group algebra";
  h.kind = HopfAlgebra::Kind::GroupAlgebra;
  size_t n = g.size();
  h.dim = n;
  h.basis_names = g.names;
  h.mult.resize(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) h.mult[a * n + b] = {{g.mul(a, b), Scalar(1)}};
  h.unit = h.basis(0);
  h.coproduct.resize(n);
  for (size_t a = 0; a < n; ++a) h.coproduct[a] = {{a, a, Scalar(1)}};
  h.counit.assign(n, Scalar(1));
  h.antipode = Matrix(n, n);
  for (size_t a = 0; a < n; ++a) h.antipode(g.inv(a), a) = Scalar(1);
  for (size_t s : g.generators)
    if (std::find(h.generators.begin(), h.generators.end(), s) == h.generators.end()) h.generators.push_back(s);
  for (const auto& ir : irreps) {
    if (ir.images.empty() && n > 1) throw HopfError("irrep " + ir.name + " has no matrices");
    Rep r;
    r.name = ir.name;
    if (ir.images.size() == n) {
      r.action = ir.images;
    } else if (ir.images.size() == g.generators.size()) {
      size_t d = ir.images.empty() ? 1 : ir.images[0].rows();
      r.action = extend_over_group(g, ir.images, d);
    } else {
      throw HopfError("irrep " + ir.name + " gives " + std::to_string(ir.images.size()) +
                      " matrices; expected one per generator (" + std::to_string(g.generators.size()) +
                      ") or one per element (" + std::to_string(n) + ")");
    }
    r.dim = r.action.empty() ? 0 : r.action[0].rows();
    for (const auto& m : r.action)
      if (m.rows() != r.dim || m.cols() != r.dim)
        throw HopfError("irrep " + ir.name + " has matrices of inconsistent size");
    h.irreps.push_back(std::move(r));
  }
  size_t sumsq = 0;
  for (const auto& r : h.irreps) sumsq += r.dim * r.dim;
  if (sumsq != n)
    throw HopfError("the irreps supplied have squared dimensions summing to " + std::to_string(sumsq) +
                    ", but the group has order " + std::to_string(n));
  h.group = g;
  return h;
}

HopfAlgebra build_dual_group_algebra(const FiniteGroup& g, const CycContext& ctx) {
  (void)ctx;
  HopfAlgebra h;
  h.name = "dual group algebra";
  h.kind = HopfAlgebra::Kind::DualGroup;
  size_t n = g.size();
  h.dim = n;
  for (const auto& nm : g.names) h.basis_names.push_back("f_" + nm);
  h.mult.resize(n * n);
  for (size_t a = 0; a < n; ++a) h.mult[a * n + a] = {{a, Scalar(1)}};
  h.unit.assign(n, Scalar(1));
  h.coproduct.resize(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) h.coproduct[g.mul(x, y)].push_back({x, y, Scalar(1)});
  h.counit.assign(n, Scalar(0));
  h.counit[0] = Scalar(1);
  h.antipode = Matrix(n, n);
  for (size_t a = 0; a < n; ++a) h.antipode(g.inv(a), a) = Scalar(1);
  for (size_t a = 0; a < n; ++a) h.generators.push_back(a);
  for (size_t c = 0; c < n; ++c) {
    Rep r;
    r.name = "chi_" + g.names[c];
    r.dim = 1;
    for (size_t a = 0; a < n; ++a) r.action.push_back(Matrix(1, 1, Scalar(a == c ? 1 : 0)));
    h.irreps.push_back(std::move(r));
  }
  h.group = g;
  return h;
}

HopfAlgebra build_kac_palyutkin(const CycContext& ctx) {
  if (ctx.order() % 4 != 0)
    throw HopfError("the Kac-Palyutkin algebra needs zeta_4; use a scalar order divisible by 4 (e.g. order " +
                    std::to_string(std::lcm(ctx.order(), 4)) + ")");
  Scalar om = root_of_unity(ctx, ctx.order() / 4);
  auto one = [](long v) { return Matrix(1, 1, Scalar(v)); };
  // Generator images (x, y, z) in V0..V4.
  std::vector<std::vector<Matrix>> gens = {
      {one(1), one(1), one(1)},
      {one(1), one(1), one(-1)},
      {one(-1), one(-1), Matrix(1, 1, om)},
      {one(-1), one(-1), Matrix(1, 1, -om)},
      {Matrix::from_rows({{-1, 0}, {0, 1}}), Matrix::from_rows({{1, 0}, {0, -1}}),
       Matrix::from_rows({{0, 1}, {1, 0}})},
  };
  const std::vector<std::string> names = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  const size_t n = 8;
  // Image of the basis word x^a y^b z^c in each irrep.
  std::vector<std::vector<Matrix>> img(5, std::vector<Matrix>(n));
  for (size_t k = 0; k < 5; ++k) {
    size_t d = gens[k][0].rows();
    for (size_t i = 0; i < n; ++i) {
      size_t a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
      Matrix m = Matrix::identity(d);
      if (a) m = m * gens[k][0];
      if (b) m = m * gens[k][1];
      if (c) m = m * gens[k][2];
      img[k][i] = m;
    }
  }
  // The direct sum of the irreps is faithful, so it determines the product.
  auto flatten = [&](const std::vector<Matrix>& per_irrep) {
    Vector v;
    for (const auto& m : per_irrep)
      for (const auto& x : m.entries()) v.push_back(x);
    return v;
  };
  std::vector<Vector> cols;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Matrix> per;
    for (size_t k = 0; k < 5; ++k) per.push_back(img[k][i]);
    cols.push_back(flatten(per));
  }
  Matrix basis_mat = Matrix::from_rows(cols).transpose();
  auto binv = inverse(basis_mat);
  if (!binv) throw HopfError("internal: Kac-Palyutkin irreps are not jointly faithful");
  HopfAlgebra h;
  h.name = "Kac-Palyutkin";
  h.kind = HopfAlgebra::Kind::KacPalyutkin;
  h.dim = n;
  h.basis_names = names;
  h.mult.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<Matrix> per;
      for (size_t k = 0; k < 5; ++k) per.push_back(img[k][i] * img[k][j]);
      h.mult[i * n + j] = sparse(*binv * flatten(per));
    }
  h.unit = h.basis(0);
  // Delta(x) = x(x)x, Delta(y) = y(x)y, Delta(z) = 1/2 (1(x)1 + x(x)1 + 1(x)y - x(x)y)(z(x)z).
  Matrix dx(n, n), dy(n, n), dz(n, n), d1(n, n);
  d1(0, 0) = 1;
  dx(1, 1) = 1;
  dy(2, 2) = 1;
  Scalar half = Scalar::rational(1, 2);
  dz(4, 4) = half;   // z (x) z
  dz(5, 4) = half;   // xz (x) z
  dz(4, 6) = half;   // z (x) yz
  dz(5, 6) = -half;  // xz (x) yz
  std::vector<Matrix> dense(n);
  for (size_t i = 0; i < n; ++i) {
    Matrix m = d1;
    if (i & 1) m = tensor_square_product(h, m, dx);
    if (i & 2) m = tensor_square_product(h, m, dy);
    if (i & 4) m = tensor_square_product(h, m, dz);
    dense[i] = m;
  }
  h.coproduct = coproduct_from_dense(dense);
  h.counit.assign(n, Scalar(1));
  // S fixes x, y and z and reverses products, so S(x^a y^b z^c) = z^c y^b x^a.
  h.antipode = Matrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    Element e = h.unit;
    if (i & 4) e = h.multiply(e, h.basis(4));
    if (i & 2) e = h.multiply(e, h.basis(2));
    if (i & 1) e = h.multiply(e, h.basis(1));
    for (size_t k = 0; k < n; ++k) h.antipode(k, i) = e[k];
  }
  h.generators = {1, 2, 4};
  const std::vector<std::string> irrep_names = {"V0", "V1", "V2", "V3", "V4"};
  for (size_t k = 0; k < 5; ++k) {
    Rep r;
    r.name = irrep_names[k];
    r.dim = gens[k][0].rows();
    r.action = img[k];
    h.irreps.push_back(std::move(r));
  }
  return h;
}

HopfAlgebra build_trivial_hopf(const CycContext& ctx) {
  HopfAlgebra h = build_group_algebra(trivial_group(), {{"V0", {Matrix(1, 1, Scalar(1))}}}, ctx);
  h.name = "trivial";
  return h;
}

std::vector<std::vector<long>> abelian_character_exponents(const FiniteGroup& g) {
  if (!g.is_abelian()) throw HopfError("group is not abelian");
  std::vector<long> orders;
  size_t prod = 1;
  for (size_t s : g.generators) {
    orders.push_back(static_cast<long>(g.element_order(s)));
    prod *= g.element_order(s);
  }
  if (prod != g.size())
    throw HopfError("abelian group generators are not independent (product of their orders " + std::to_string(prod) +
                    " differs from the group order " + std::to_string(g.size()) + ")");
  std::vector<std::vector<long>> out{{}};
  for (long o : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& prefix : out)
      for (long k = 0; k < o; ++k) {
        auto v = prefix;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<GroupIrrepData> abelian_characters(const FiniteGroup& g, const CycContext& ctx) {
  auto exps = abelian_character_exponents(g);
  std::vector<GroupIrrepData> out;
  for (const auto& k : exps) {
    GroupIrrepData d;
    std::string label;
    for (size_t s = 0; s < k.size(); ++s) {
      long o = static_cast<long>(g.element_order(g.generators[s]));
      if (o <= 2) {
        d.images.push_back(Matrix(1, 1, Scalar(k[s] % 2 ? -1 : 1)));
        label += (s ? "," : "") + std::to_string(k[s]);
        continue;
      }
      if (ctx.order() % o != 0)
        throw HopfError("characters of a generator of order " + std::to_string(o) +
                        " need zeta_" + std::to_string(o) + "; use a scalar order divisible by " + std::to_string(o));
      d.images.push_back(Matrix(1, 1, root_of_unity(ctx, k[s] * (ctx.order() / o))));
      label += (s ? "," : "") + std::to_string(k[s]);
    }
    d.name = "chi_" + (label.empty() ? std::string("0") : label);
    if (g.size() == 1) d.images = {Matrix(1, 1, Scalar(1))};
    out.push_back(std::move(d));
  }
  return out;
}

Rep rep_from_generator_images(const HopfAlgebra& h, const std::string& name,
                              const std::vector<Matrix>& generator_images) {
  if (generator_images.size() != h.generators.size())
    throw HopfError("representation " + name + " gives " + std::to_string(generator_images.size()) +
                    " generator matrices; expected " + std::to_string(h.generators.size()));
  size_t d = 0;
  if (!generator_images.empty()) {
    d = generator_images[0].rows();
  } else if (!h.irreps.empty()) {
    throw HopfError("representation " + name + " needs its dimension (H has no generators)");
  }
  for (const auto& m : generator_images)
    if (m.rows() != d || m.cols() != d)
      throw HopfError("representation " + name + " has generator matrices of inconsistent size");
  // Spread words in the generators until they span H.
  std::vector<Element> elems{h.unit};
  std::vector<Matrix> mats{Matrix::identity(d)};
  Matrix span = Matrix::from_rows({h.unit});
  size_t r = rank(span);
  for (size_t qi = 0; qi < elems.size() && r < h.dim; ++qi) {
    for (size_t s = 0; s < h.generators.size() && r < h.dim; ++s) {
      Element e = h.multiply(elems[qi], h.basis(h.generators[s]));
      Matrix cand = vstack({span, Matrix::from_rows({e})});
      size_t r2 = rank(cand);
      if (r2 == r) continue;
      span = cand;
      r = r2;
      elems.push_back(e);
      mats.push_back(mats[qi] * generator_images[s]);
    }
  }
  if (r < h.dim) throw HopfError("the generators of H do not generate it as an algebra");
  Matrix coords = span.transpose();  // columns are the spanning elements
  Rep rep;
  rep.name = name;
  rep.dim = d;
  for (size_t i = 0; i < h.dim; ++i) {
    auto x = solve(coords, h.basis(i));
    Matrix m(d, d);
    for (size_t k = 0; k < x->size(); ++k)
      if (!(*x)[k].is_zero()) m += mats[k] * (*x)[k];
    rep.action.push_back(std::move(m));
  }
  return rep;
}

bool is_representation(const HopfAlgebra& h, const Rep& r, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (r.action.size() != h.dim) return fail("wrong number of action matrices");
  for (size_t i = 0; i < h.dim; ++i)
    if (r.action[i].rows() != r.dim || r.action[i].cols() != r.dim)
      return fail("action matrix for basis element " + std::to_string(i) + " has the wrong shape");
  if (!h.image(r, h.unit).is_identity()) return fail("1_H does not act as the identity");
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j) {
      Matrix lhs = r.action[i] * r.action[j];
      Matrix rhs(r.dim, r.dim);
      for (const auto& [k, c] : h.product(i, j)) rhs += r.action[k] * c;
      if (lhs != rhs) return fail("rho(b_i) rho(b_j) != rho(b_i b_j) at " + idx({i, j}));
    }
  return true;
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  ValidationReport rep;
  const size_t n = h.dim;
  auto capped = [&](size_t& count, const std::string& msg) {
    if (count++ < kMaxReportsPerCheck) rep.fail(msg);
  };
  if (h.mult.size() != n * n || h.unit.size() != n || h.coproduct.size() != n || h.counit.size() != n ||
      h.antipode.rows() != n || h.antipode.cols() != n) {
    rep.fail("structure tables have inconsistent sizes");
    return rep;
  }
  size_t c_unit = 0, c_assoc = 0, c_coassoc = 0, c_counit = 0, c_antipode = 0, c_bialg = 0, c_s2 = 0;
  for (size_t i = 0; i < n; ++i) {
    Element b = h.basis(i);
    if (h.multiply(h.unit, b) != b || h.multiply(b, h.unit) != b) capped(c_unit, "unit law fails at " + idx({i}));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Element bij(n);
      for (const auto& [k, c] : h.product(i, j)) bij[k] += c;
      for (size_t k = 0; k < n; ++k) {
        Element left = h.multiply(bij, h.basis(k));
        Element jk(n);
        for (const auto& [m, c] : h.product(j, k)) jk[m] += c;
        Element right = h.multiply(h.basis(i), jk);
        if (left != right) capped(c_assoc, "associativity fails at " + idx({i, j, k}));
      }
    }
  using Key3 = std::tuple<size_t, size_t, size_t>;
  for (size_t i = 0; i < n; ++i) {
    std::map<Key3, Scalar> left, right;
    for (const auto& t : h.coproduct[i]) {
      for (const auto& u : h.coproduct[t.left]) left[{u.left, u.right, t.right}] += t.coeff * u.coeff;
      for (const auto& u : h.coproduct[t.right]) right[{t.left, u.left, u.right}] += t.coeff * u.coeff;
    }
    auto clean = [](std::map<Key3, Scalar>& m) {
      for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    };
    clean(left);
    clean(right);
    if (left != right) capped(c_coassoc, "coassociativity fails at " + idx({i}));
    Element l1(n), r1(n);
    for (const auto& t : h.coproduct[i]) {
      l1[t.right] += t.coeff * h.counit[t.left];
      r1[t.left] += t.coeff * h.counit[t.right];
    }
    if (l1 != h.basis(i) || r1 != h.basis(i)) capped(c_counit, "counit law fails at " + idx({i}));
    Element sa(n), sb(n);
    for (const auto& t : h.coproduct[i]) {
      Element lt = h.apply_antipode(h.basis(t.left));
      Element rt = h.apply_antipode(h.basis(t.right));
      Element p1 = h.multiply(lt, h.basis(t.right));
      Element p2 = h.multiply(h.basis(t.left), rt);
      for (size_t k = 0; k < n; ++k) {
        sa[k] += t.coeff * p1[k];
        sb[k] += t.coeff * p2[k];
      }
    }
    Element target = h.unit;
    for (auto& x : target) x *= h.counit[i];
    if (sa != target || sb != target) capped(c_antipode, "antipode axiom fails at " + idx({i}));
  }
  // Bialgebra compatibility.
  std::vector<Matrix> dense(n);
  for (size_t i = 0; i < n; ++i) dense[i] = coproduct_matrix(h, i);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix lhs(n, n);
      for (const auto& [k, c] : h.product(i, j)) lhs += dense[k] * c;
      Matrix rhs(n, n);
      for (const auto& t : h.coproduct[i])
        for (const auto& u : h.coproduct[j]) {
          Scalar f = t.coeff * u.coeff;
          for (const auto& [p, cp] : h.product(t.left, u.left))
            for (const auto& [q, cq] : h.product(t.right, u.right)) rhs(p, q) += f * cp * cq;
        }
      Scalar e;
      for (const auto& [k, c] : h.product(i, j)) e += c * h.counit[k];
      if (lhs != rhs || e != h.counit[i] * h.counit[j]) capped(c_bialg, "bialgebra compatibility fails at " + idx({i, j}));
    }
  {
    Matrix d1(n, n);
    for (size_t k = 0; k < n; ++k)
      if (!h.unit[k].is_zero()) d1 += dense[k] * h.unit[k];
    Matrix want(n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) want(a, b) = h.unit[a] * h.unit[b];
    if (d1 != want) rep.fail("Delta(1) != 1 (x) 1");
    if (!h.counit_of(h.unit).is_one()) rep.fail("eps(1) != 1");
  }
  Matrix s2 = h.antipode * h.antipode;
  for (size_t i = 0; i < n; ++i)
    if (s2.col(i) != h.basis(i)) capped(c_s2, "S^2 != id at " + idx({i}));
  // Artin-Wedderburn certificate.
  if (h.irreps.empty()) {
    rep.fail("no irreducible representations supplied");
    return rep;
  }
  size_t sumsq = 0;
  for (size_t k = 0; k < h.irreps.size(); ++k) {
    const Rep& r = h.irreps[k];
    std::string why;
    if (!is_representation(h, r, &why)) rep.fail("irrep " + std::to_string(k) + " (" + r.name + "): " + why);
    sumsq += r.dim * r.dim;
  }
  if (!rep.ok()) return rep;
  if (sumsq != n)
    rep.fail("sum of squared irrep dimensions is " + std::to_string(sumsq) + ", expected dim H = " + std::to_string(n));
  auto is_trivial = [&](const Rep& r) {
    if (r.dim != 1) return false;
    for (size_t i = 0; i < n; ++i)
      if (r.action[i](0, 0) != h.counit[i]) return false;
    return true;
  };
  if (!is_trivial(h.irreps[0])) rep.fail("irrep 0 is not the trivial representation");
  for (size_t k = 1; k < h.irreps.size(); ++k)
    if (is_trivial(h.irreps[k])) rep.fail("irrep " + std::to_string(k) + " is a second copy of the trivial one");
  for (size_t a = 0; a < h.irreps.size(); ++a)
    for (size_t b = a; b < h.irreps.size(); ++b) {
      size_t d = intertwiners(h, h.irreps[a], h.irreps[b]).size();
      if (a == b && d != 1)
        rep.fail("irrep " + std::to_string(a) + " is not absolutely irreducible (End has dimension " +
                 std::to_string(d) + ")");
      if (a != b && d != 0) rep.fail("irreps " + idx({a, b}) + " are isomorphic");
    }
  return rep;
}

Character counit_character(const HopfAlgebra& h) { return {h.counit}; }

bool is_character(const HopfAlgebra& h, const Character& f, std::string* why) {
  if (f.values.size() != h.dim) {
    if (why) *why = "wrong number of values";
    return false;
  }
  Scalar f1;
  for (size_t k = 0; k < h.dim; ++k) f1 += h.unit[k] * f.values[k];
  if (!f1.is_one()) {
    if (why) *why = "value on 1_H is not 1";
    return false;
  }
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j) {
      Scalar v;
      for (const auto& [k, c] : h.product(i, j)) v += c * f.values[k];
      if (v != f.values[i] * f.values[j]) {
        if (why) *why = "not multiplicative at " + idx({i, j});
        return false;
      }
    }
  return true;
}

Character convolve(const HopfAlgebra& h, const Character& f, const Character& g) {
  Character r{Vector(h.dim)};
  for (size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.coproduct[i]) r.values[i] += t.coeff * f.values[t.left] * g.values[t.right];
  return r;
}

Character compose_antipode(const HopfAlgebra& h, const Character& f) {
  Character r{Vector(h.dim)};
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t k = 0; k < h.dim; ++k)
      if (!h.antipode(k, i).is_zero()) r.values[i] += h.antipode(k, i) * f.values[k];
  return r;
}

Character character_of_one_dim_rep(const Rep& r) {
  if (r.dim != 1) throw HopfError("representation " + r.name + " is not one-dimensional");
  Character c;
  for (const auto& m : r.action) c.values.push_back(m(0, 0));
  return c;
}

bool operator==(const Character& a, const Character& b) { return a.values == b.values; }

Matrix winding_left(const HopfAlgebra& h, const Character& f) {
  Matrix m(h.dim, h.dim);
  for (size_t i = 0; i < h.dim; ++i)
    for (const auto& t : h.coproduct[i])
      if (!f.values[t.left].is_zero()) m(t.right, i) += t.coeff * f.values[t.left];
  return m;
}

bool is_algebra_automorphism(const HopfAlgebra& h, const Matrix& m) {
  if (!inverse(m)) return false;
  if (m * h.unit != h.unit) return false;
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j) {
      Element bij(h.dim);
      for (const auto& [k, c] : h.product(i, j)) bij[k] += c;
      if (m * bij != h.multiply(m.col(i), m.col(j))) return false;
    }
  return true;
}

Element integral(const HopfAlgebra& h) {
  const size_t n = h.dim;
  std::vector<Matrix> blocks;
  std::vector<size_t> gens = h.generators;
  for (size_t g : gens) {
    Matrix left(n, n), right(n, n);
    for (size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : h.product(g, j)) left(k, j) += c;
      for (const auto& [k, c] : h.product(j, g)) right(k, j) += c;
    }
    for (size_t j = 0; j < n; ++j) {
      left(j, j) -= h.counit[g];
      right(j, j) -= h.counit[g];
    }
    blocks.push_back(left);
    blocks.push_back(right);
  }
  std::vector<Vector> ns = blocks.empty() ? std::vector<Vector>{h.unit} : nullspace(vstack(blocks));
  if (ns.size() != 1)
    throw HopfError("space of integrals has dimension " + std::to_string(ns.size()) + "; H is not semisimple");
  Scalar e = h.counit_of(ns[0]);
  if (e.is_zero()) throw HopfError("integral has counit 0; H is not semisimple");
  Element t = ns[0];
  Scalar inv = e.inv();
  for (auto& x : t) x *= inv;
  return t;
}

Vector trace_functional(const HopfAlgebra& h) {
  const size_t n = h.dim;
  // Rows indexed by (i, k): coefficient of b_k in h1 T(h2) - T(h) 1 for h = b_i,
  // then the same for T(h1) h2 - T(h) 1.
  Matrix sys(2 * n * n, n);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& t : h.coproduct[i]) {
      sys(i * n + t.left, t.right) += t.coeff;
      sys(n * n + i * n + t.right, t.left) += t.coeff;
    }
    for (size_t k = 0; k < n; ++k) {
      sys(i * n + k, i) -= h.unit[k];
      sys(n * n + i * n + k, i) -= h.unit[k];
    }
  }
  auto ns = nullspace(sys);
  if (ns.size() != 1)
    throw HopfError("space of integrals of H* has dimension " + std::to_string(ns.size()) + "; H is not semisimple");
  Scalar at1;
  for (size_t k = 0; k < n; ++k) at1 += h.unit[k] * ns[0][k];
  if (at1.is_zero()) throw HopfError("trace integral vanishes on 1_H; H is not semisimple");
  Vector tr = ns[0];
  Scalar inv = at1.inv();
  for (auto& x : tr) x *= inv;
  return tr;
}

Matrix trace_gram_matrix(const HopfAlgebra& h, const Vector& tr) {
  Matrix g(h.dim, h.dim);
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j)
      for (const auto& [k, c] : h.product(i, j)) g(i, j) += c * tr[k];
  return g;
}

}  // namespace hq
