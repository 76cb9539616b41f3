#pragma once

// Graded dimensions of quiver algebras kQ/I with homogeneous relations,
// growth estimates, and the Auslander-map verdict from the growth of
// Lambda/<e_0>.

#include <optional>
#include <string>
#include <vector>

#include "hq/path_algebra.hpp"

namespace hq {

struct GrowthOptions {
  std::vector<size_t> start_vertices;  // empty means all vertices
  size_t dim_cap = 20000;              // stop once a degree exceeds this total dimension
};

struct HilbertProfile {
  size_t num_vertices = 0;
  size_t dmax = 0;                                    // last degree computed
  std::vector<size_t> starts;                         // start vertices covered
  std::vector<std::vector<std::vector<size_t>>> dims;  // dims[d][i][j] = dim e_i Lambda_d e_j
  std::vector<size_t> total;                          // h_d = sum over covered i, all j
  std::optional<size_t> zero_degree;                  // first d with h_d = 0
  bool truncated = false;                             // stopped early by the dimension cap

  size_t total_dimension() const;  // sum of h_d over the computed degrees
};

// Exact graded dimensions of e_i Lambda_d e_j for d <= dmax. Stops at the first
// zero degree (all later degrees vanish since Lambda is generated in degree 1).
HilbertProfile graded_dims(const QuiverAlgebra& a, size_t dmax, const GrowthOptions& opt = {});

// Lambda / <e_v>: vertex v and its arrows deleted, terms through v dropped.
QuiverAlgebra quotient_by_vertex(const QuiverAlgebra& a, size_t v);

struct GrowthVerdict {
  enum class Kind { FiniteDimensional, PolynomialGrowth, GrowthAtLeast, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int gk = 0;                // GK estimate (polynomial) or lower bound (at least)
  bool exponential = false;  // GrowthAtLeast with ratios bounded below by 3/2
  size_t period = 1;         // period of the stable differences
  size_t window_start = 0, window_end = 0;
  bool heuristic = true;
  std::string str() const;
};

GrowthVerdict growth_verdict(const HilbertProfile& p);

struct AuslanderVerdict {
  enum class Kind { Isomorphism, NotIsomorphism, Inconclusive };
  Kind kind = Kind::Inconclusive;
  bool certified = false;
  int gkdim = 0;
  GrowthVerdict growth;
  HilbertProfile profile;  // of Lambda/<e_0>
  std::string str() const;  // "isomorphism (certified)", ...
};

AuslanderVerdict auslander_check(const QuiverAlgebra& a, int gkdim, size_t dmax);

// table[d][i] = dim e_0 Lambda_d e_i.
std::vector<std::vector<size_t>> mcm_dimension_vectors(const QuiverAlgebra& a, size_t dmax);

}  // namespace hq
