#pragma once

// Finite-dimensional semisimple Hopf algebras given by structure constants,
// together with an Artin-Wedderburn certificate (the list of irreducible
// representations, trivial one first).

#include <optional>
#include <string>
#include <vector>

#include "hq/group.hpp"
#include "hq/matrix.hpp"

namespace hq {

class HopfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Element = Vector;  // coordinates in the basis of H
using SparseElement = std::vector<std::pair<size_t, Scalar>>;

struct CoproductTerm {
  size_t left, right;
  Scalar coeff;
};

// A representation: rho(b_i) for every basis element b_i of H.
struct Rep {
  std::string name;
  size_t dim = 0;
  std::vector<Matrix> action;
};

// A linear functional H -> k given by its values on the basis.
struct Character {
  Vector values;
};

struct HopfAlgebra {
  enum class Kind { Tables, GroupAlgebra, DualGroup, KacPalyutkin };

  std::string name;
  Kind kind = Kind::Tables;
  size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<SparseElement> mult;  // entry i*dim+j holds b_i b_j
  Element unit;
  std::vector<std::vector<CoproductTerm>> coproduct;
  Vector counit;
  Matrix antipode;  // column i holds S(b_i)
  std::vector<Rep> irreps;
  std::vector<size_t> generators;     // algebra generators used by intertwiner solvers
  std::optional<FiniteGroup> group;   // for group and dual group algebras

  Element basis(size_t i) const;
  Element multiply(const Element& a, const Element& b) const;
  const SparseElement& product(size_t i, size_t j) const { return mult[i * dim + j]; }
  Element apply_antipode(const Element& a) const { return antipode * a; }
  Scalar counit_of(const Element& a) const;
  // rho(h) for an arbitrary element h.
  Matrix image(const Rep& r, const Element& h) const;
  std::optional<size_t> basis_index(const std::string& name) const;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& s) { failures.push_back(s); }
};

// Irrep images are given either on the group generators (one matrix per
// generator) or on every group element.
struct GroupIrrepData {
  std::string name;
  std::vector<Matrix> images;
};

HopfAlgebra build_group_algebra(const FiniteGroup& g, const std::vector<GroupIrrepData>& irreps,
                                const CycContext& ctx);
HopfAlgebra build_dual_group_algebra(const FiniteGroup& g, const CycContext& ctx);
// Requires 4 | N (the representation tables use zeta_4).
HopfAlgebra build_kac_palyutkin(const CycContext& ctx);
HopfAlgebra build_trivial_hopf(const CycContext& ctx);

// The characters of an abelian group with independent generators of orders
// n_1..n_t: chi_k(g_s) = zeta_{n_s}^{k_s}, listed in lexicographic order of k.
std::vector<GroupIrrepData> abelian_characters(const FiniteGroup& g, const CycContext& ctx);
// Exponent vectors (k_1..k_t) of the characters returned above.
std::vector<std::vector<long>> abelian_character_exponents(const FiniteGroup& g);

// Fills a rep's action on every basis element from matrices on the generators
// (words multiplied out along the multiplication structure of H).
Rep rep_from_generator_images(const HopfAlgebra& h, const std::string& name,
                              const std::vector<Matrix>& generator_images);

bool is_representation(const HopfAlgebra& h, const Rep& r, std::string* why = nullptr);
ValidationReport validate_hopf(const HopfAlgebra& h);

Character counit_character(const HopfAlgebra& h);
bool is_character(const HopfAlgebra& h, const Character& f, std::string* why = nullptr);
Character convolve(const HopfAlgebra& h, const Character& f, const Character& g);
Character compose_antipode(const HopfAlgebra& h, const Character& f);  // f o S
Character character_of_one_dim_rep(const Rep& r);
bool operator==(const Character& a, const Character& b);

// Matrix of the left winding automorphism h -> f(h_(1)) h_(2).
Matrix winding_left(const HopfAlgebra& h, const Character& f);
bool is_algebra_automorphism(const HopfAlgebra& h, const Matrix& m);
// Two-sided integral t with h t = t h = eps(h) t, normalized by eps(t) = 1.
Element integral(const HopfAlgebra& h);
// The integral Tr of H* with Tr(1) = 1, as its values on the basis.
Vector trace_functional(const HopfAlgebra& h);
// Gram matrix (Tr(b_i b_j)).
Matrix trace_gram_matrix(const HopfAlgebra& h, const Vector& tr);

}  // namespace hq
