#pragma once

// Seeded generators for property tests and small helpers shared by the tests.

#include <ostream>
#include <random>
#include <string>

#include "hq/examples.hpp"
#include "hq/job.hpp"
#include "hq/matrix.hpp"
#include "hq/path_algebra.hpp"
#include "hq/pipeline.hpp"
#include "hq/scalar.hpp"

namespace hq {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.canonical(); }
inline void PrintTo(const Matrix& m, std::ostream* os) { *os << m.str(); }

}  // namespace hq

namespace hqtest {

using namespace hq;

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational() {
    long den = integer(1, 6);
    return Scalar::rational(integer(-9, 9), den);
  }

  Scalar nonzero_rational() {
    Scalar s;
    do s = rational();
    while (s.is_zero());
    return s;
  }

  // A random element of Q(zeta_N) with small coefficients.
  Scalar cyclotomic(const CycContext& ctx) {
    Poly c(static_cast<size_t>(ctx.degree()));
    for (auto& x : c) x = Rational(integer(-5, 5), integer(1, 4));
    return Scalar(ctx, c);
  }

  Scalar nonzero_cyclotomic(const CycContext& ctx) {
    Scalar s;
    do s = cyclotomic(ctx);
    while (s.is_zero());
    return s;
  }

  Matrix matrix(size_t r, size_t c, const CycContext& ctx, int density_percent = 100) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (integer(0, 99) < density_percent) m(i, j) = ctx.order() == 1 ? rational() : cyclotomic(ctx);
    return m;
  }

  Matrix invertible(size_t n, const CycContext& ctx) {
    for (;;) {
      Matrix m = matrix(n, n, ctx);
      if (inverse(m)) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// The algebra on quiver q with the given relations ("bBf - fDd", ...).
inline QuiverAlgebra algebra_from(const Quiver& q, const std::vector<std::string>& relations, const CycContext& ctx) {
  QuiverAlgebra a;
  a.quiver = q;
  for (const auto& r : relations) a.relations.push_back(make_relation(q, parse_path_poly(q, r, ctx)));
  return a;
}

// Same relation row spaces on the same quiver.
inline bool same_relations(const QuiverAlgebra& a, const QuiverAlgebra& b) {
  std::vector<size_t> vertices(a.quiver.num_vertices), arrows(a.quiver.arrows.size());
  for (size_t i = 0; i < vertices.size(); ++i) vertices[i] = i;
  for (size_t i = 0; i < arrows.size(); ++i) arrows[i] = i;
  return same_presentation(a, b, vertices, arrows);
}

inline Session example_session(const std::string& name) { return build_session(parse_job(example_job(name))); }

}  // namespace hqtest
