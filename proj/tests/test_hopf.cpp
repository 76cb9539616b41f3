#include <gtest/gtest.h>

#include <set>

#include "hq/group.hpp"
#include "hq/hopf.hpp"
#include "hq/parse.hpp"
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

std::vector<HopfAlgebra> builtins() {
  std::vector<HopfAlgebra> out;
  out.push_back(build_trivial_hopf(make_context(1)));
  out.push_back(build_kac_palyutkin(c4));
  FiniteGroup c3 = cyclic_group(3);
  out.push_back(build_group_algebra(c3, abelian_characters(c3, make_context(3)), make_context(3)));
  out.push_back(build_dual_group_algebra(dihedral(3), make_context(1)));
  out.push_back(build_dual_group_algebra(dihedral(4), make_context(1)));
  return out;
}

std::vector<Character> one_dim_characters(const HopfAlgebra& h) {
  std::vector<Character> out;
  for (const auto& r : h.irreps)
    if (r.dim == 1) out.push_back(character_of_one_dim_rep(r));
  return out;
}

}  // namespace

TEST(Hopf, GroupAlgebraExamples) {
  HopfAlgebra t = build_group_algebra(trivial_group(), {{"triv", {}}}, make_context(1));
  EXPECT_EQ(t.dim, 1u);
  EXPECT_EQ(t.irreps.size(), 1u);
  EXPECT_TRUE(validate_hopf(t).ok());

  FiniteGroup c2 = cyclic_group(2);
  const auto& q = make_context(1);
  HopfAlgebra h = build_group_algebra(c2, {{"chi0", {Matrix::identity(1)}}, {"chi1", {Matrix::identity(1) * Scalar(-1)}}}, q);
  EXPECT_EQ(h.dim, 2u);
  EXPECT_TRUE(validate_hopf(h).ok());

  for (int n : {3, 5, 6}) {
    FiniteGroup cn = cyclic_group(n);
    HopfAlgebra hn = build_group_algebra(cn, abelian_characters(cn, make_context(n)), make_context(n));
    EXPECT_EQ(hn.irreps.size(), static_cast<size_t>(n));
    EXPECT_TRUE(validate_hopf(hn).ok());
  }
}

TEST(Hopf, GroupAlgebraRejectsIncompleteCertificate) {
  FiniteGroup c2 = cyclic_group(2);
  EXPECT_THROW(build_group_algebra(c2, {{"chi0", {Matrix::identity(1)}}}, make_context(1)), HopfError);
}

TEST(Hopf, DualGroupExamples) {
  HopfAlgebra h = build_dual_group_algebra(cyclic_group(2), make_context(1));
  EXPECT_EQ(h.dim, 2u);
  // orthogonal idempotents
  EXPECT_EQ(h.multiply(h.basis(0), h.basis(0)), h.basis(0));
  EXPECT_TRUE(is_zero_vector(h.multiply(h.basis(0), h.basis(1))));
  // Delta(f_1) = f_1 (x) f_1 + f_g (x) f_g
  std::set<std::pair<size_t, size_t>> terms;
  for (const auto& t : h.coproduct[0]) {
    EXPECT_TRUE(t.coeff.is_one());
    terms.insert({t.left, t.right});
  }
  EXPECT_EQ(terms, (std::set<std::pair<size_t, size_t>>{{0, 0}, {1, 1}}));

  HopfAlgebra d3 = build_dual_group_algebra(dihedral(3), make_context(1));
  EXPECT_EQ(d3.irreps.size(), 6u);
  for (const auto& r : d3.irreps) EXPECT_EQ(r.dim, 1u);
  EXPECT_TRUE(validate_hopf(d3).ok());
}

TEST(Hopf, KacPalyutkinExamples) {
  HopfAlgebra h = build_kac_palyutkin(c4);
  EXPECT_EQ(h.basis_names, (std::vector<std::string>{"1", "x", "y", "xy", "z", "xz", "yz", "xyz"}));
  auto rep = validate_hopf(h);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
  std::vector<size_t> dims;
  for (const auto& r : h.irreps) dims.push_back(r.dim);
  EXPECT_EQ(dims, (std::vector<size_t>{1, 1, 1, 1, 2}));
  size_t x = *h.basis_index("x"), y = *h.basis_index("y"), z = *h.basis_index("z");
  Scalar w = root_of_unity(c4, 1);
  bool found = false;
  for (const auto& r : h.irreps) {
    if (r.dim != 1 || r.action[x](0, 0) != Scalar(-1) || r.action[y](0, 0) != Scalar(-1) || r.action[z](0, 0) != w)
      continue;
    found = true;
    EXPECT_EQ(r.action[z](0, 0) * r.action[z](0, 0), Scalar(-1));
    Element z2 = h.multiply(h.basis(z), h.basis(z));
    EXPECT_EQ(h.image(r, z2)(0, 0), Scalar(-1));
  }
  EXPECT_TRUE(found);
}

TEST(Hopf, KacPalyutkinNeedsZeta4) { EXPECT_THROW(build_kac_palyutkin(make_context(2)), HopfError); }

TEST(Hopf, ValidateReportsCorruptedAntipode) {
  FiniteGroup c3 = cyclic_group(3);
  HopfAlgebra h = build_group_algebra(c3, abelian_characters(c3, make_context(3)), make_context(3));
  h.antipode = Matrix::identity(3);
  auto rep = validate_hopf(h);
  ASSERT_FALSE(rep.ok());
  bool antipode = false;
  for (const auto& f : rep.failures) antipode |= f.find("antipode") != std::string::npos;
  EXPECT_TRUE(antipode);
}

TEST(Hopf, ValidateReportsCorruptedCoproduct) {
  HopfAlgebra h = build_kac_palyutkin(c4);
  h.coproduct[4][0].coeff = h.coproduct[4][0].coeff * Scalar(2);
  EXPECT_FALSE(validate_hopf(h).ok());
}

TEST(Hopf, BuiltinsSatisfyTheAxioms) {
  for (const auto& h : builtins()) {
    auto rep = validate_hopf(h);
    EXPECT_TRUE(rep.ok()) << h.name << ": " << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_TRUE((h.antipode * h.antipode).is_identity()) << h.name;
    size_t sumsq = 0;
    for (const auto& r : h.irreps) sumsq += r.dim * r.dim;
    EXPECT_EQ(sumsq, h.dim);
    EXPECT_EQ(character_of_one_dim_rep(h.irreps[0]), counit_character(h));
  }
}

TEST(Hopf, WindingExamples) {
  HopfAlgebra kp = build_kac_palyutkin(c4);
  EXPECT_TRUE(winding_left(kp, counit_character(kp)).is_identity());
  Matrix xi = winding_left(kp, character_of_one_dim_rep(kp.irreps[1]));
  EXPECT_FALSE(xi.is_identity());
  EXPECT_TRUE((xi * xi).is_identity());
  EXPECT_TRUE(is_algebra_automorphism(kp, xi));

  // (kG)*: winding by evaluation at w sends f_g to f_{w^-1 g}
  FiniteGroup g = dihedral(3);
  HopfAlgebra h = build_dual_group_algebra(g, make_context(1));
  for (size_t w = 0; w < g.size(); ++w) {
    Matrix m = winding_left(h, character_of_one_dim_rep(h.irreps[w]));
    for (size_t x = 0; x < g.size(); ++x) {
      Element want = h.basis(g.mul(g.inv(w), x));
      EXPECT_EQ(m * h.basis(x), want);
    }
  }
}

TEST(HopfProperty, WindingByFThenFOfSIsIdentity) {
  for (const auto& h : builtins())
    for (const auto& f : one_dim_characters(h)) {
      Matrix a = winding_left(h, f), b = winding_left(h, compose_antipode(h, f));
      EXPECT_TRUE((a * b).is_identity()) << h.name;
      EXPECT_TRUE((b * a).is_identity()) << h.name;
      EXPECT_TRUE(is_algebra_automorphism(h, a));
    }
}

TEST(HopfProperty, CharactersFormAGroupUnderConvolution) {
  for (const auto& h : builtins()) {
    auto chars = one_dim_characters(h);
    for (const auto& a : chars) {
      EXPECT_TRUE(is_character(h, a));
      for (const auto& b : chars) {
        Character ab = convolve(h, a, b);
        EXPECT_TRUE(is_character(h, ab));
        bool present = false;
        for (const auto& c : chars) present |= c == ab;
        EXPECT_TRUE(present) << h.name;
      }
      EXPECT_EQ(convolve(h, a, compose_antipode(h, a)), counit_character(h));
    }
  }
  // for (kG)* the character group is G itself: chi_a * chi_b = chi_ab
  FiniteGroup g = dihedral(3);
  HopfAlgebra h = build_dual_group_algebra(g, make_context(1));
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b)
      EXPECT_EQ(convolve(h, character_of_one_dim_rep(h.irreps[a]), character_of_one_dim_rep(h.irreps[b])),
                character_of_one_dim_rep(h.irreps[g.mul(a, b)]));
}

TEST(Hopf, IntegralOfGroupAlgebraIsTheAverage) {
  FiniteGroup c5 = cyclic_group(5);
  HopfAlgebra h = build_group_algebra(c5, abelian_characters(c5, make_context(5)), make_context(5));
  Element t = integral(h);
  for (const auto& x : t) EXPECT_EQ(x, Scalar::rational(1, 5));
  for (size_t b = 0; b < h.dim; ++b) {
    EXPECT_EQ(h.multiply(h.basis(b), t), t);
    EXPECT_EQ(h.multiply(t, h.basis(b)), t);
  }
}

TEST(HopfProperty, IntegralIsTwoSided) {
  for (const auto& h : builtins()) {
    Element t = integral(h);
    EXPECT_TRUE(h.counit_of(t).is_one());
    for (size_t b = 0; b < h.dim; ++b) {
      Element bt = h.multiply(h.basis(b), t), tb = h.multiply(t, h.basis(b));
      Element want = t;
      for (auto& x : want) x *= h.counit[b];
      EXPECT_EQ(bt, want) << h.name;
      EXPECT_EQ(tb, want) << h.name;
    }
  }
}

TEST(HopfProperty, TraceIsTheNormalizedRegularTrace) {
  // Tr(b) = sum_k (dim V_k / dim H) trace rho_k(b): on matrix units e_ij^(k) this is
  // (dim V_k / dim H) delta_ij.
  for (const auto& h : builtins()) {
    Vector tr = trace_functional(h);
    for (size_t b = 0; b < h.dim; ++b) {
      Scalar want;
      for (const auto& r : h.irreps) {
        Scalar t;
        for (size_t i = 0; i < r.dim; ++i) t += r.action[b](i, i);
        want += t * Scalar(static_cast<long>(r.dim));
      }
      want = want / Scalar(static_cast<long>(h.dim));
      EXPECT_EQ(tr[b], want) << h.name << " basis " << b;
    }
    EXPECT_EQ(rank(trace_gram_matrix(h, tr)), h.dim) << h.name;
  }
}

TEST(HopfProperty, TraceIsWindingInvariant) {
  for (const auto& h : builtins()) {
    Vector tr = trace_functional(h);
    Matrix row(1, h.dim);
    for (size_t b = 0; b < h.dim; ++b) row(0, b) = tr[b];
    for (const auto& f : one_dim_characters(h)) EXPECT_EQ(row * winding_left(h, f), row) << h.name;
  }
}

TEST(Hopf, RepFromGeneratorImages) {
  HopfAlgebra h = build_kac_palyutkin(c4);
  std::vector<Matrix> imgs;
  for (size_t g : h.generators) imgs.push_back(h.irreps[4].action[g]);
  Rep r = rep_from_generator_images(h, "V", imgs);
  for (size_t b = 0; b < h.dim; ++b) EXPECT_EQ(r.action[b], h.irreps[4].action[b]);
  EXPECT_TRUE(is_representation(h, r));
  Rep bad = r;
  bad.action[1] = bad.action[1] * Scalar(2);
  EXPECT_FALSE(is_representation(h, bad));
}
