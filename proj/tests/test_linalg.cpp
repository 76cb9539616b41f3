#include <gtest/gtest.h>

#include "hq/hopf.hpp"
#include "hq/matrix.hpp"
#include "hq/parse.hpp"
#include "support.hpp"

using namespace hq;

TEST(Matrix, KronExamples) {
  EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));
  Matrix a(2, 2), b(3, 3);
  Matrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 6u);
  EXPECT_EQ(k.cols(), 6u);
  const auto& c = make_context(1);
  Matrix x = parse_matrix("[[1, 2], [3, 4]]", c);
  Matrix y = parse_matrix("[[0, 1], [1, 0]]", c);
  Matrix xy = kron(x, y);
  EXPECT_EQ(xy(0, 1), Scalar(1));
  EXPECT_EQ(xy(3, 2), Scalar(4));
  EXPECT_EQ(xy(2, 1), Scalar(3));
}

TEST(Matrix, KacPalyutkinZSquaredIsIdentityOnV4) {
  HopfAlgebra h = build_kac_palyutkin(make_context(4));
  const Rep& v = h.irreps[4];
  size_t z = *h.basis_index("z");
  Matrix rz = v.action[z];
  EXPECT_EQ(rz * rz, Matrix::identity(2));
  // z^2 = (1 + x + y - xy)/2 evaluated under the same representation
  size_t x = *h.basis_index("x"), y = *h.basis_index("y"), xy = *h.basis_index("xy");
  Matrix rhs = (Matrix::identity(2) + v.action[x] + v.action[y] - v.action[xy]) * Scalar::rational(1, 2);
  EXPECT_EQ(rz * rz, rhs);
}

TEST(Matrix, ShapeMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), ShapeError);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), ShapeError);
}

TEST(Linalg, Examples) {
  EXPECT_TRUE(nullspace(Matrix::identity(4)).empty());
  EXPECT_EQ(rank(Matrix(3, 5)), 0u);
  auto ns = nullspace(parse_matrix("[[1, 1], [1, 1]]", make_context(1)));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (Vector{1, -1}));
}

TEST(Linalg, SolveAndInverse) {
  const auto& c = make_context(1);
  Matrix a = parse_matrix("[[1, 2], [2, 4]]", c);
  EXPECT_FALSE(solve(a, Vector{1, 0}).has_value());
  auto s = solve(a, Vector{3, 6});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(a * *s, (Vector{3, 6}));
  EXPECT_FALSE(inverse(a).has_value());
  Matrix b = parse_matrix("[[2, 1], [1, 1]]", c);
  EXPECT_EQ(*inverse(b) * b, Matrix::identity(2));
}

TEST(Linalg, RrefUsesLeftmostPivot) {
  const auto& c = make_context(1);
  RrefResult r = rref(parse_matrix("[[0, 2, 4], [0, 1, 2], [3, 0, 3]]", c));
  EXPECT_EQ(r.pivots, (std::vector<size_t>{0, 1}));
  EXPECT_EQ(r.matrix, parse_matrix("[[1, 0, 1], [0, 1, 2], [0, 0, 0]]", c));
}

TEST(LinalgProperty, RankNullityAndKernel) {
  hqtest::Gen g(314);
  for (int n : {1, 3, 4, 12}) {
    const auto& c = make_context(n);
    for (int t = 0; t < 25; ++t) {
      size_t rows = static_cast<size_t>(g.integer(1, 6)), cols = static_cast<size_t>(g.integer(1, 6));
      Matrix a = g.matrix(rows, cols, c, 45);
      // force some dependent rows
      if (rows > 2 && g.coin()) {
        Vector r0 = a.row(0), r1 = a.row(1);
        Scalar k = g.rational();
        for (size_t j = 0; j < cols; ++j) a(rows - 1, j) = r0[j] + k * r1[j];
      }
      auto ns = nullspace(a);
      EXPECT_EQ(rank(a) + ns.size(), cols);
      for (const auto& v : ns) {
        EXPECT_TRUE(is_zero_vector(a * v));
        Vector w = v;
        normalize_leading(w);
        EXPECT_EQ(w, v);
      }
      RrefResult r = rref(a);
      EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
      EXPECT_TRUE(same_row_space(a, r.matrix));
      EXPECT_EQ(r.pivots.size(), rank(a));
    }
  }
}

TEST(LinalgProperty, TransposeAndKronCompatibility) {
  hqtest::Gen g(9);
  const auto& c = make_context(3);
  for (int t = 0; t < 15; ++t) {
    Matrix a = g.matrix(2, 3, c), b = g.matrix(3, 2, c), x = g.matrix(2, 2, c), y = g.matrix(2, 2, c);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    // mixed product rule
    EXPECT_EQ(kron(a, x) * kron(b, y), kron(a * b, x * y));
  }
}

TEST(LinalgProperty, SolveFindsSolutionsOfConsistentSystems) {
  hqtest::Gen g(27);
  const auto& c = make_context(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = g.matrix(3, 4, c, 60);
    Vector x(4);
    for (auto& e : x) e = g.cyclotomic(c);
    Vector b = a * x;
    auto s = solve(a, b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(a * *s, b);
  }
}
