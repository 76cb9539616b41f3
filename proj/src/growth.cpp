#include "hq/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace hq {

namespace {

using SparseVec = std::vector<std::pair<size_t, Scalar>>;  // sorted by index, nonzero entries

// One graded piece e_i Lambda_d e_j, presented as W / K where
// W = sum over arrows a : k -> j of e_i Lambda_{d-1} e_k (x) a.
// K is kept in echelon form: each row has leading entry 1 at its pivot.
struct Piece {
  size_t wdim = 0;
  std::vector<size_t> offset;         // per arrow index: start of its block in W (valid for arrows into j)
  std::map<size_t, SparseVec> rows;   // pivot -> row
  std::vector<long> basis_pos;        // W column -> basis index, or -1 for pivot columns
  size_t dim = 0;

  // Reduces w modulo K so that no pivot column is left.
  void reduce(std::map<size_t, Scalar>& w) const {
    // Rows only have entries at or after their pivot, so one ascending pass suffices.
    for (auto it = w.begin(); it != w.end();) {
      if (it->second.is_zero()) {
        it = w.erase(it);
        continue;
      }
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      Scalar f = it->second;
      for (const auto& [c, v] : r->second)
        if (c != it->first) w.try_emplace(c, Scalar(0)).first->second -= f * v;
      it = w.erase(it);
    }
  }

  void insert(std::map<size_t, Scalar> w) {
    reduce(w);
    if (w.empty()) return;
    Scalar inv = w.begin()->second.inv();
    SparseVec row;
    for (auto& [c, v] : w) row.emplace_back(c, v * inv);
    rows.emplace(w.begin()->first, std::move(row));
  }
};

class Grower {
 public:
  Grower(const QuiverAlgebra& a, size_t start) : a_(a), q_(a.quiver) {
    for (size_t k = 0; k < q_.arrows.size(); ++k) into_[q_.arrows[k].head].push_back(k);
    by_head_.resize(q_.num_vertices);
    for (const auto& r : a.relations) by_head_[r.head].push_back(&r);
    std::vector<Piece> zero(q_.num_vertices);
    zero[start].dim = 1;
    levels_.push_back(std::move(zero));
  }

  size_t degree() const { return levels_.size() - 1; }
  const Piece& piece(size_t d, size_t j) const { return levels_[d][j]; }

  // Dimension of W in the next degree, summed over heads.
  size_t next_width() const {
    size_t total = 0;
    for (const auto& ar : q_.arrows) total += levels_.back()[ar.tail].dim;
    return total;
  }

  void step() {
    size_t d = levels_.size();  // degree being built
    size_t m = a_.relation_degree();
    levels_.push_back({});
    for (size_t j = 0; j < q_.num_vertices; ++j) {
      Piece pc;
      pc.offset.assign(q_.arrows.size(), 0);
      for (size_t ar : into_[j]) {
        pc.offset[ar] = pc.wdim;
        pc.wdim += levels_[d - 1][q_.arrows[ar].tail].dim;
      }
      if (pc.wdim > 0 && m >= 1 && d >= m) {
        for (const Relation* r : by_head_[j]) {
          size_t src = d - m;
          size_t nb = levels_[src][r->tail].dim;
          for (size_t x = 0; x < nb; ++x) {
            std::map<size_t, Scalar> acc;
            for (const auto& [path, c] : r->poly.terms) {
              SparseVec cur{{x, Scalar(1)}};
              size_t deg = src;
              for (size_t k = 0; k + 1 < path.size() && !cur.empty(); ++k) cur = multiply(deg++, cur, path[k]);
              size_t last = path.back();
              for (const auto& [t, v] : cur) {
                auto [pos, fresh] = acc.try_emplace(pc.offset[last] + t, Scalar(0));
                pos->second += c * v;
              }
            }
            pc.insert(std::move(acc));
          }
        }
      }
      pc.basis_pos.assign(pc.wdim, -1);
      for (size_t c = 0; c < pc.wdim; ++c)
        if (!pc.rows.count(c)) pc.basis_pos[c] = static_cast<long>(pc.dim++);
      levels_[d].push_back(std::move(pc));
    }
  }

 private:
  // x in e_i Lambda_deg e_tail(a) times the arrow a, as coordinates in degree deg + 1.
  SparseVec multiply(size_t deg, const SparseVec& x, size_t a) const {
    const Piece& pc = levels_[deg + 1][q_.arrows[a].head];
    std::map<size_t, Scalar> w;
    for (const auto& [t, v] : x) w.emplace(pc.offset[a] + t, v);
    pc.reduce(w);
    SparseVec out;
    for (const auto& [c, v] : w) out.emplace_back(static_cast<size_t>(pc.basis_pos[c]), v);
    return out;
  }

  const QuiverAlgebra& a_;
  const Quiver& q_;
  std::map<size_t, std::vector<size_t>> into_;
  std::vector<std::vector<const Relation*>> by_head_;
  std::vector<std::vector<Piece>> levels_;
};

}  // namespace

size_t HilbertProfile::total_dimension() const { return std::accumulate(total.begin(), total.end(), size_t{0}); }

HilbertProfile graded_dims(const QuiverAlgebra& a, size_t dmax, const GrowthOptions& opt) {
  size_t n = a.quiver.num_vertices;
  for (const auto& r : a.relations)
    if (r.poly.degree() != a.relation_degree()) throw std::invalid_argument("relations are not of one degree");
  HilbertProfile p;
  p.num_vertices = n;
  p.starts = opt.start_vertices;
  if (p.starts.empty())
    for (size_t i = 0; i < n; ++i) p.starts.push_back(i);
  for (size_t i : p.starts)
    if (i >= n) throw std::invalid_argument("start vertex out of range");
  auto blank = std::vector<std::vector<size_t>>(n, std::vector<size_t>(n, 0));
  p.dims.assign(1, blank);
  for (size_t i : p.starts) p.dims[0][i][i] = 1;
  p.total.push_back(p.starts.size());
  if (p.starts.empty()) {
    p.zero_degree = 0;
    return p;
  }
  std::vector<Grower> growers;
  for (size_t i : p.starts) growers.emplace_back(a, i);
  std::vector<bool> alive(growers.size(), true);
  for (size_t d = 1; d <= dmax; ++d) {
    size_t width = 0;
    for (size_t g = 0; g < growers.size(); ++g)
      if (alive[g]) width += growers[g].next_width();
    if (width > opt.dim_cap) {
      p.truncated = true;
      break;
    }
    p.dims.push_back(blank);
    size_t total = 0;
    for (size_t g = 0; g < growers.size(); ++g) {
      if (!alive[g]) continue;
      growers[g].step();
      size_t sum = 0;
      for (size_t j = 0; j < n; ++j) {
        size_t dim = growers[g].piece(d, j).dim;
        p.dims[d][p.starts[g]][j] = dim;
        sum += dim;
      }
      if (sum == 0) alive[g] = false;
      total += sum;
    }
    p.total.push_back(total);
    p.dmax = d;
    if (total == 0) {
      p.zero_degree = d;
      break;
    }
  }
  return p;
}

QuiverAlgebra quotient_by_vertex(const QuiverAlgebra& a, size_t v) {
  const Quiver& q = a.quiver;
  if (v >= q.num_vertices) throw std::invalid_argument("vertex out of range");
  auto vmap = [&](size_t x) { return x < v ? x : x - 1; };
  std::vector<std::vector<size_t>> mult(q.num_vertices - 1, std::vector<size_t>(q.num_vertices - 1, 0));
  std::vector<std::string> names;
  for (size_t i = 0; i < q.num_vertices; ++i)
    if (i != v) names.push_back(q.vertex_names.size() > i ? q.vertex_names[i] : std::to_string(i));
  for (const auto& ar : q.arrows)
    if (ar.tail != v && ar.head != v) ++mult[vmap(ar.tail)][vmap(ar.head)];
  QuiverAlgebra out;
  out.quiver = quiver_from_multiplicities(mult, names);
  std::vector<long> amap(q.arrows.size(), -1);
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& ar = q.arrows[k];
    if (ar.tail == v || ar.head == v) continue;
    size_t idx = out.quiver.arrows_between(vmap(ar.tail), vmap(ar.head))[ar.local];
    amap[k] = static_cast<long>(idx);
    out.quiver.arrows[idx].name = ar.name;
  }
  for (const auto& r : a.relations) {
    if (r.tail == v || r.head == v) continue;
    Relation nr;
    nr.tail = vmap(r.tail);
    nr.head = vmap(r.head);
    for (const auto& [path, c] : r.poly.terms) {
      Path np;
      bool keep = true;
      for (size_t x : path) {
        if (amap[x] < 0) {
          keep = false;
          break;
        }
        np.push_back(static_cast<size_t>(amap[x]));
      }
      if (keep) nr.poly.add(np, c);
    }
    if (!nr.poly.is_zero()) out.relations.push_back(std::move(nr));
  }
  return canonicalize(out);
}

std::string GrowthVerdict::str() const {
  std::string tag = heuristic ? "heuristic" : "certified";
  switch (kind) {
    case Kind::FiniteDimensional:
      return "finite_dimensional (" + tag + ")";
    case Kind::PolynomialGrowth:
      return "polynomial_growth(GK " + std::to_string(gk) + ", " + tag + ")";
    case Kind::GrowthAtLeast:
      return std::string("growth_at_least(") + (exponential ? "exponential" : std::to_string(gk)) + ", " + tag + ")";
    case Kind::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GrowthVerdict growth_verdict(const HilbertProfile& p) {
  GrowthVerdict v;
  if (p.zero_degree) {
    v.kind = GrowthVerdict::Kind::FiniteDimensional;
    v.heuristic = false;
    v.window_start = 0;
    v.window_end = *p.zero_degree;
    return v;
  }
  const size_t window = 16;
  size_t end = p.total.size() - 1;
  size_t start = end + 1 > window ? end + 1 - window : 0;
  if (start == 0 && end >= 1) start = 1;
  v.window_start = start;
  v.window_end = end;
  std::vector<long double> h;
  for (size_t d = start; d <= end; ++d) h.push_back(static_cast<long double>(p.total[d]));
  // Quasi-polynomial of degree k and period P: the (k+1)-th P-step differences vanish.
  for (int k = 0; k <= 5; ++k)
    for (size_t period = 1; period <= 6; ++period) {
      std::vector<long double> diff = h;
      for (int t = 0; t <= k; ++t) {
        std::vector<long double> nd;
        for (size_t s = 0; s + period < diff.size(); ++s) nd.push_back(diff[s + period] - diff[s]);
        diff = std::move(nd);
      }
      if (diff.size() < 3) continue;
      if (std::all_of(diff.begin(), diff.end(), [](long double x) { return x == 0; })) {
        v.kind = GrowthVerdict::Kind::PolynomialGrowth;
        v.gk = k + 1;
        v.period = period;
        return v;
      }
    }
  if (h.size() >= 3) {
    bool exp_growth = true, monotone = true;
    for (size_t s = 0; s + 1 < h.size(); ++s) {
      if (h[s] <= 0 || h[s + 1] < 1.5L * h[s]) exp_growth = false;
      if (h[s + 1] < h[s]) monotone = false;
    }
    if (exp_growth) {
      v.kind = GrowthVerdict::Kind::GrowthAtLeast;
      v.exponential = true;
      return v;
    }
    if (monotone && h.back() > h.front() && h.front() > 0 && start > 0) {
      long double slope = std::log(h.back() / h.front()) / std::log(static_cast<long double>(end) / start);
      v.kind = GrowthVerdict::Kind::GrowthAtLeast;
      v.gk = static_cast<int>(std::floor(slope)) + 1;
      return v;
    }
  }
  return v;
}

std::string AuslanderVerdict::str() const {
  switch (kind) {
    case Kind::Isomorphism:
      return std::string("isomorphism (") + (certified ? "certified" : "heuristic") + ")";
    case Kind::NotIsomorphism:
      return "not_isomorphism (heuristic)";
    case Kind::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

AuslanderVerdict auslander_check(const QuiverAlgebra& a, int gkdim, size_t dmax) {
  AuslanderVerdict v;
  v.gkdim = gkdim;
  QuiverAlgebra quot = quotient_by_vertex(a, 0);
  v.profile = graded_dims(quot, dmax);
  v.growth = growth_verdict(v.profile);
  if (v.growth.kind == GrowthVerdict::Kind::FiniteDimensional && gkdim >= 2) {
    v.kind = AuslanderVerdict::Kind::Isomorphism;
    v.certified = true;
  } else if (gkdim == 2 && v.growth.kind != GrowthVerdict::Kind::FiniteDimensional && !v.profile.truncated &&
             v.profile.dmax == dmax) {
    v.kind = AuslanderVerdict::Kind::NotIsomorphism;
  }
  return v;
}

std::vector<std::vector<size_t>> mcm_dimension_vectors(const QuiverAlgebra& a, size_t dmax) {
  GrowthOptions opt;
  opt.start_vertices = {0};
  HilbertProfile p = graded_dims(a, dmax, opt);
  size_t n = a.quiver.num_vertices;
  std::vector<std::vector<size_t>> table;
  for (size_t d = 0; d <= dmax; ++d) {
    if (d < p.dims.size())
      table.push_back(p.dims[d][0]);
    else if (p.zero_degree)
      table.push_back(std::vector<size_t>(n, 0));
    else
      break;
  }
  return table;
}

}  // namespace hq
