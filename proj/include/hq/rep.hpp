#pragma once

// H-module calculus: tensor and dual representations, intertwiner spaces,
// decompositions and McKay quivers.

#include <string>
#include <vector>

#include "hq/hopf.hpp"

namespace hq {

Rep trivial_rep(const HopfAlgebra& h);
// (rho_V (x) rho_W)(b_i) = sum over Delta(b_i) of c * kron(rho_V(b_j), rho_W(b_k)).
Rep tensor_rep(const HopfAlgebra& h, const Rep& v, const Rep& w);
Rep tensor_power(const HopfAlgebra& h, const Rep& v, size_t n);
// rho*(b) = rho(S(b))^T.
Rep dual_rep(const HopfAlgebra& h, const Rep& v);
// The twist h -> f(h_(1)) rho(h_(2)) of a representation by a character.
Rep twist_rep(const HopfAlgebra& h, const Character& f, const Rep& v);
// Regular representation (left multiplication).
Rep regular_rep(const HopfAlgebra& h);

// Canonical basis of Hom_H(V, W): each M is dim W x dim V with
// M rho_V(b) = rho_W(b) M for the generators b of H.
std::vector<Matrix> intertwiners(const HopfAlgebra& h, const Rep& v, const Rep& w);
// Multiplicity of each irrep in V; throws if the dimension count fails.
std::vector<size_t> decompose(const HopfAlgebra& h, const Rep& v);

struct Arrow {
  size_t tail = 0, head = 0;
  size_t local = 0;   // index among the arrows tail -> head
  std::string name;
};

struct Quiver {
  size_t num_vertices = 0;
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;  // sorted by (tail, head, local)

  size_t multiplicity(size_t i, size_t j) const;
  std::vector<size_t> arrows_between(size_t i, size_t j) const;
  std::vector<size_t> arrows_from(size_t i) const;
  std::vector<size_t> arrows_into(size_t j) const;
  std::optional<size_t> arrow_index(const std::string& name) const;
  bool strongly_connected() const;
  // Names of all arrows are single characters (paths print without separators).
  bool short_names() const;
  std::string path_string(const std::vector<size_t>& path) const;
};

// Arrows i -> j, m_ij = dim Hom(V_i, V (x) V_j); default names x<i>_<j>[_k].
Quiver mckay_quiver(const HopfAlgebra& h, const Rep& v);
Quiver quiver_from_multiplicities(const std::vector<std::vector<size_t>>& m,
                                  const std::vector<std::string>& vertex_names);
bool is_inner_faithful(const HopfAlgebra& h, const Rep& v);
// Every irrep occurs in some V^{(x) k} with k <= bound (a brute-force check).
bool every_irrep_in_tensor_powers(const HopfAlgebra& h, const Rep& v, size_t bound);

// DOT export; arrow labels are the arrow names, with an optional suffix per arrow.
std::string quiver_dot(const Quiver& q, const std::vector<std::string>& arrow_notes = {});

}  // namespace hq
