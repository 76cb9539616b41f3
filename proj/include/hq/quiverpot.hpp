#pragma once

// The quiver superpotential Phi of a Hopf action on a twisted superpotential
// algebra, and the quiver algebra Lambda = D(Phi, l - m) it presents.
//
// Storage conventions (r = dim V, d_i = dim V_i):
//   phi_a : V_i -> V (x) V_j   is (r*d_j) x d_i; rows s*d_j + t, block s is phi^(s)
//   xi_a  : V_j -> V* (x) V_i  is (r*d_i) x d_j; rows s*d_i + t, block s is xi^(s)
//   psi_a : V (x) V_j -> V_i   is d_i x (r*d_j)
// with sum_s xi_b^(s) phi_a^(s) = delta_ab I and psi_b phi_a = delta_ab I.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/path_algebra.hpp"
#include "hq/potential.hpp"

namespace hq {

struct ArrowData {
  size_t arrow = 0;  // index into the quiver's arrows
  Matrix phi, xi, psi;
  bool user = false;  // xi supplied by the user
};

struct RouteCheck {
  size_t compared = 0;
  size_t agreed = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return compared == agreed; }
};

struct QuiverPotential {
  std::string route;  // "general", "dual_group" or "abelian"
  Quiver quiver;
  std::vector<ArrowData> arrows;  // general route only
  std::vector<size_t> tau;
  std::vector<Matrix> theta;  // theta[j] : V_tau(j) -> V_j twisted by hdet, d_j x d_tau(j)
  PathPoly phi;
  size_t ell = 0, m = 0;
  RouteCheck route_check;
};

// tau(i) is the irrep isomorphic to V_i twisted by hdet.
std::vector<size_t> tau_permutation(const HopfAlgebra& h, const Character& hdet);
// The isomorphisms V_tau(j) -> kw (x) V_j, scaled so the first nonzero entry is 1.
std::vector<Matrix> theta_maps(const HopfAlgebra& h, const Character& hdet, const std::vector<size_t>& tau);

struct XiOverride {
  size_t arrow = 0;
  Matrix xi;
};

struct ArrowOptions {
  std::vector<XiOverride> xi_overrides;
  // Change of the canonical phi basis of the block tail -> head: the new
  // phi_a is sum_b C(b, a) phi_b. C must be invertible.
  std::map<std::pair<size_t, size_t>, Matrix> basis_change;
  // Theta rescaling per vertex (nonzero); empty means 1 everywhere.
  Vector theta_scale;
};

// The scalar c with sum_s xi^(s) phi^(s) = c I; throws when it is not scalar.
Scalar duality_pairing(const Matrix& xi, const Matrix& phi, size_t r);

std::vector<ArrowData> choose_arrow_maps(const HopfAlgebra& h, const Rep& v, const Quiver& q,
                                         const ArrowOptions& opt = {});

// The xi-route coefficient matrix of a path: sum over words of
// w[word] xi_{p_1}^(w_1) ... xi_{p_l}^(w_l) theta_j.
Matrix xi_route_matrix(const QuiverPotential& qp, const TensorElement& w, size_t r, const Path& p);
// The same coefficient through the psi maps applied to w (x) theta_j.
Matrix psi_route_matrix(const QuiverPotential& qp, const TensorElement& w, size_t r, const Path& p);

// General route. The quiver is the McKay quiver of (H, V) with default names.
QuiverPotential build_phi(const Presentation& p, const ArrowOptions& opt = {});

QuiverAlgebra derive_quiver_relations(const QuiverPotential& qp);

// Dual group route for (kG)* acting through a G-grading of V (degrees[s] is
// the group element of v_s). Vertices are group elements in the order of g.
QuiverPotential dual_group_fast_path(const FiniteGroup& g, const std::vector<size_t>& degrees, const TensorElement& w,
                                     size_t ell, size_t m);

struct AbelianReduction {
  Matrix change;                   // P: columns are common eigenvectors
  TensorElement w;                 // w in the eigenbasis
  std::vector<size_t> degrees;     // group element grading each eigenvector
  std::vector<size_t> vertex_of;   // group element -> irrep index of kG
};

// Simultaneous diagonalization of an abelian group acting on V. The group must
// have independent generators and its irreps must be the abelian characters.
AbelianReduction abelian_group_reduction(const HopfAlgebra& h, const Rep& v, const TensorElement& w);

// Abelian route: the dual group fast path on the reduced data, with vertices
// renumbered to the irreps of kG.
QuiverPotential abelian_fast_path(const HopfAlgebra& h, const Rep& v, const TensorElement& w, size_t ell, size_t m);

// Renames arrows; names must stay unique.
void rename_arrows(Quiver& q, const std::map<size_t, std::string>& names);

struct MeshVerdict {
  enum class Kind { Preprojective, MeshOnly, NotMesh };
  Kind kind = Kind::NotMesh;
  std::string type;    // "Dtilde4", "Atilde5", ... for Preprojective
  std::string reason;  // explanation for the other verdicts
  std::string str() const;
};

MeshVerdict recognize_preprojective(const QuiverAlgebra& a, const std::vector<size_t>& tau);

// Dynkin-type name of a simple connected graph, or "" when it is none of
// A, D, E, Atilde, Dtilde, Etilde.
std::string dynkin_type(size_t n, const std::vector<std::pair<size_t, size_t>>& edges);

}  // namespace hq
