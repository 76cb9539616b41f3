#include <gtest/gtest.h>

#include "hq/group.hpp"
#include "hq/hopf.hpp"
#include "hq/rep.hpp"
#include "support.hpp"

using namespace hq;

namespace {

const CycContext& c4 = make_context(4);

FiniteGroup dihedral(int n) {
  std::vector<int> g(n), h(n);
  for (int x = 0; x < n; ++x) {
    g[x] = (n - x) % n;
    h[x] = (n + 1 - x) % n;
  }
  return group_from_permutations({"g", "h"}, {g, h});
}

// Direct sum of the given representations.
Rep direct_sum(const HopfAlgebra& h, const std::vector<const Rep*>& parts) {
  Rep out;
  out.name = "sum";
  for (const Rep* p : parts) out.dim += p->dim;
  for (size_t b = 0; b < h.dim; ++b) {
    Matrix m(out.dim, out.dim);
    size_t at = 0;
    for (const Rep* p : parts) {
      m.set_block(at, at, p->action[b]);
      at += p->dim;
    }
    out.action.push_back(m);
  }
  return out;
}

Rep conjugate(const Rep& r, const Matrix& p) {
  Rep out = r;
  Matrix pinv = *inverse(p);
  for (auto& m : out.action) m = p * m * pinv;
  return out;
}

// The G-graded module with basis vectors of the given degrees, as a (kG)*-module.
Rep graded_module(const HopfAlgebra& h, const std::vector<size_t>& degrees) {
  Rep out;
  out.name = "V";
  out.dim = degrees.size();
  for (size_t b = 0; b < h.dim; ++b) {
    Matrix m(out.dim, out.dim);
    for (size_t s = 0; s < degrees.size(); ++s)
      if (degrees[s] == b) m(s, s) = Scalar(1);
    out.action.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Rep, TensorExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  const Rep& v = kp.irreps[4];
  Rep vt = tensor_rep(kp, v, trivial_rep(kp));
  for (size_t b = 0; b < kp.dim; ++b) EXPECT_EQ(vt.action[b], v.action[b]);
  EXPECT_EQ(decompose(kp, tensor_rep(kp, v, kp.irreps[4])), (std::vector<size_t>{1, 1, 1, 1, 0}));

  FiniteGroup g = cyclic_group(5);
  HopfAlgebra d = build_dual_group_algebra(g, make_context(1));
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b) {
      auto m = decompose(d, tensor_rep(d, d.irreps[a], d.irreps[b]));
      std::vector<size_t> want(g.size(), 0);
      want[g.mul(a, b)] = 1;
      EXPECT_EQ(m, want);
    }
}

TEST(Rep, DualExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  Rep t = dual_rep(kp, trivial_rep(kp));
  for (size_t b = 0; b < kp.dim; ++b) EXPECT_EQ(t.action[b], trivial_rep(kp).action[b]);
  EXPECT_EQ(intertwiners(kp, dual_rep(kp, kp.irreps[4]), kp.irreps[4]).size(), 1u);
  EXPECT_TRUE(is_representation(kp, dual_rep(kp, kp.irreps[4])));

  FiniteGroup g = dihedral(3);
  HopfAlgebra d = build_dual_group_algebra(g, make_context(1));
  for (size_t x = 0; x < g.size(); ++x) {
    Rep dx = dual_rep(d, d.irreps[x]);
    for (size_t b = 0; b < d.dim; ++b) EXPECT_EQ(dx.action[b], d.irreps[g.inv(x)].action[b]);
  }
}

TEST(Rep, IntertwinerExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  auto id = intertwiners(kp, kp.irreps[0], kp.irreps[0]);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].is_identity());
  EXPECT_TRUE(intertwiners(kp, kp.irreps[1], kp.irreps[2]).empty());
  EXPECT_EQ(intertwiners(kp, kp.irreps[0], tensor_rep(kp, kp.irreps[4], kp.irreps[4])).size(), 1u);
}

TEST(Rep, DecomposeExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  EXPECT_EQ(decompose(kp, trivial_rep(kp)), (std::vector<size_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(decompose(kp, kp.irreps[4]), (std::vector<size_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(decompose(kp, regular_rep(kp)), (std::vector<size_t>{1, 1, 1, 1, 2}));
  FiniteGroup c3 = cyclic_group(3);
  HopfAlgebra h = build_group_algebra(c3, abelian_characters(c3, make_context(3)), make_context(3));
  EXPECT_EQ(decompose(h, regular_rep(h)), (std::vector<size_t>{1, 1, 1}));
}

TEST(Rep, McKayExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  Quiver q = mckay_quiver(kp, kp.irreps[4]);
  EXPECT_EQ(q.num_vertices, 5u);
  EXPECT_EQ(q.arrows.size(), 8u);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(q.multiplicity(i, 4), 1u);
    EXPECT_EQ(q.multiplicity(4, i), 1u);
  }
  EXPECT_EQ(q.multiplicity(4, 4), 0u);

  FiniteGroup g = dihedral(3);
  HopfAlgebra d = build_dual_group_algebra(g, make_context(1));
  Quiver dq = mckay_quiver(d, graded_module(d, {*g.find("g"), *g.find("h")}));
  EXPECT_EQ(dq.arrows.size(), 12u);
  for (size_t i = 0; i < 6; ++i) {
    size_t out = dq.arrows_from(i).size(), in = dq.arrows_into(i).size();
    EXPECT_EQ(out, 2u);
    EXPECT_EQ(in, 2u);
    EXPECT_EQ(dq.multiplicity(i, i), 0u);
  }
  EXPECT_TRUE(dq.strongly_connected());

  HopfAlgebra t = build_trivial_hopf(make_context(1));
  Rep v3 = direct_sum(t, {&t.irreps[0], &t.irreps[0], &t.irreps[0]});
  Quiver tq = mckay_quiver(t, v3);
  EXPECT_EQ(tq.num_vertices, 1u);
  EXPECT_EQ(tq.multiplicity(0, 0), 3u);
}

TEST(Rep, InnerFaithfulExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  EXPECT_TRUE(is_inner_faithful(kp, kp.irreps[4]));
  FiniteGroup c2 = cyclic_group(2);
  HopfAlgebra h = build_group_algebra(c2, abelian_characters(c2, make_context(2)), make_context(2));
  EXPECT_FALSE(is_inner_faithful(h, trivial_rep(h)));
  FiniteGroup c4g = cyclic_group(4);
  HopfAlgebra d = build_dual_group_algebra(c4g, make_context(1));
  Rep v = graded_module(d, {0, 0});
  EXPECT_FALSE(is_inner_faithful(d, v));
  Quiver q = mckay_quiver(d, v);
  for (size_t i = 0; i < 4; ++i) EXPECT_EQ(q.multiplicity(i, i), 2u);
}

TEST(RepProperty, InnerFaithfulAgreesWithTensorPowers) {
  struct Case {
    HopfAlgebra h;
    Rep v;
  };
  std::vector<Case> cases;
  HopfAlgebra kp = build_kac_palyutkin(c4);
  cases.push_back({kp, kp.irreps[4]});
  cases.push_back({kp, direct_sum(kp, {&kp.irreps[1], &kp.irreps[2]})});
  cases.push_back({kp, direct_sum(kp, {&kp.irreps[1], &kp.irreps[4]})});
  FiniteGroup c4g = cyclic_group(4);
  HopfAlgebra g4 = build_group_algebra(c4g, abelian_characters(c4g, c4), c4);
  cases.push_back({g4, direct_sum(g4, {&g4.irreps[2], &g4.irreps[2]})});
  cases.push_back({g4, direct_sum(g4, {&g4.irreps[1], &g4.irreps[3]})});
  FiniteGroup d3 = dihedral(3);
  HopfAlgebra dd = build_dual_group_algebra(d3, make_context(1));
  cases.push_back({dd, graded_module(dd, {*d3.find("g"), *d3.find("h")})});
  cases.push_back({dd, graded_module(dd, {*d3.find("hg"), *d3.find("hg")})});
  cases.push_back({dd, graded_module(dd, {0, *d3.find("g")})});
  for (const auto& c : cases)
    EXPECT_EQ(is_inner_faithful(c.h, c.v), every_irrep_in_tensor_powers(c.h, c.v, c.h.dim)) << c.h.name;
}

TEST(RepProperty, SchurOrthogonality) {
  std::vector<HopfAlgebra> hs;
  hs.push_back(build_kac_palyutkin(c4));
  hs.push_back(build_dual_group_algebra(dihedral(4), make_context(1)));
  FiniteGroup c6 = cyclic_group(6);
  hs.push_back(build_group_algebra(c6, abelian_characters(c6, make_context(6)), make_context(6)));
  for (const auto& h : hs)
    for (size_t i = 0; i < h.irreps.size(); ++i)
      for (size_t j = 0; j < h.irreps.size(); ++j)
        EXPECT_EQ(intertwiners(h, h.irreps[i], h.irreps[j]).size(), i == j ? 1u : 0u) << h.name;
}

TEST(RepProperty, McKayColumnDimensionCount) {
  hqtest::Gen gen(4242);
  HopfAlgebra kp = build_kac_palyutkin(c4);
  for (int t = 0; t < 6; ++t) {
    std::vector<const Rep*> parts;
    size_t k = static_cast<size_t>(gen.integer(1, 3));
    for (size_t s = 0; s < k; ++s) parts.push_back(&kp.irreps[static_cast<size_t>(gen.integer(0, 4))]);
    Rep v = direct_sum(kp, parts);
    Quiver q = mckay_quiver(kp, v);
    for (size_t j = 0; j < kp.irreps.size(); ++j) {
      size_t total = 0;
      for (size_t i = 0; i < kp.irreps.size(); ++i) total += q.multiplicity(i, j) * kp.irreps[i].dim;
      EXPECT_EQ(total, v.dim * kp.irreps[j].dim);
    }
  }
}

TEST(RepProperty, DecomposeRecoversRandomSums) {
  hqtest::Gen gen(99);
  HopfAlgebra kp = build_kac_palyutkin(c4);
  for (int t = 0; t < 8; ++t) {
    std::vector<size_t> want(kp.irreps.size(), 0);
    std::vector<const Rep*> parts;
    size_t k = static_cast<size_t>(gen.integer(1, 3));
    for (size_t s = 0; s < k; ++s) {
      size_t i = static_cast<size_t>(gen.integer(0, 4));
      ++want[i];
      parts.push_back(&kp.irreps[i]);
    }
    Rep v = direct_sum(kp, parts);
    Rep w = conjugate(v, gen.invertible(v.dim, c4));
    EXPECT_TRUE(is_representation(kp, w));
    EXPECT_EQ(decompose(kp, w), want);
  }
}

TEST(Rep, QuiverDotIsDeterministic) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  Quiver q = mckay_quiver(kp, kp.irreps[4]);
  std::string a = quiver_dot(q), b = quiver_dot(mckay_quiver(kp, kp.irreps[4]));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("digraph"), std::string::npos);
}
