#pragma once

// Superpotential calculus on the tensor algebra T(V): cyclic shifts, twisted
// superpotentials, derivation-quotient relations, H-actions on tensors and the
// homological determinant.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hq/rep.hpp"

namespace hq {

// Raised when an input violates a hypothesis of the construction (exit code 2
// in the command-line tool), as opposed to malformed input.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Word = std::vector<int>;

struct TensorElement {
  size_t degree = 0;
  std::map<Word, Scalar> terms;  // zero coefficients are never stored

  TensorElement() = default;
  explicit TensorElement(size_t d) : degree(d) {}

  void add(const Word& w, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  TensorElement scaled(const Scalar& c) const;
  // Coordinates over all r^degree words, first letter most significant.
  Vector to_vector(size_t r) const;
  static TensorElement from_vector(const Vector& v, size_t r, size_t degree);
  // "u*u - 2*v*u"; cyclotomic coefficients are parenthesized.
  std::string str(const std::vector<std::string>& names) const;
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.degree == b.degree && a.terms == b.terms;
  }
};

size_t word_index(const Word& w, size_t r);
Word index_word(size_t index, size_t r, size_t degree);

// theta: w_1 w_2 ... w_l -> w_2 ... w_l w_1.
TensorElement cyclic_shift(const TensorElement& x);
// (id^{l-1} (x) sigma) applied to x; sigma(v_t) = sum_s sigma(s, t) v_s.
TensorElement apply_to_last_factor(const TensorElement& x, const Matrix& sigma);
// Each tensor factor transformed by m (the diagonal action of GL(V)).
TensorElement apply_to_all_factors(const TensorElement& x, const Matrix& m);
bool check_twisted(const TensorElement& w, const Matrix& sigma);
std::optional<Matrix> find_twist(const TensorElement& w, size_t r);
// Basis of the derivation space: r_q = sum_p w[q.p] p over words q of length i,
// rref-canonicalized over the monomial basis.
std::vector<TensorElement> derive(const TensorElement& w, size_t i, size_t r);

// Iterated-coproduct action of h on V^{(x) degree}.
TensorElement act(const HopfAlgebra& h, const Rep& v, const Element& x_h, const TensorElement& x);

struct Presentation {
  std::shared_ptr<const HopfAlgebra> hopf;
  Rep v;
  std::vector<std::string> var_names;
  TensorElement w;
  Matrix sigma;
  size_t ell = 0, m = 0;
  int gkdim = 0;

  size_t rank() const { return v.dim; }
  std::vector<TensorElement> relations() const { return derive(w, ell - m, v.dim); }
};

// The character lambda with h.w = lambda(h) w; throws HypothesisViolation with
// the offending basis element when span{w} is not H-stable.
Character hdet(const Presentation& p);
bool is_trivial_character(const HopfAlgebra& h, const Character& c);
// deg_G(w) for a G-graded V (degrees[s] is the group element of v_s).
size_t hdet_dual_shortcut(const FiniteGroup& g, const std::vector<size_t>& degrees, const TensorElement& w);

struct StabilityResult {
  bool stable = true;
  std::string witness;  // basis element (and relation) breaking stability
};
StabilityResult relation_space_stable(const Presentation& p);
StabilityResult line_stable(const Presentation& p);

// Checks (h_(1).w) (x) h_(2) = w (x) Xi(h) in V^{(x)l} (x) H for every basis h,
// where Xi is the left winding automorphism of the homological determinant.
struct SmashCheck {
  bool ok = true;
  std::optional<size_t> witness;
};
SmashCheck verify_twisted_weak_potential_smash(const Presentation& p, const Character& hdet_char);

}  // namespace hq
