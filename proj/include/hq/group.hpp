#pragma once

// Finite groups as multiplication tables, built by closure from permutation
// or matrix generators.

#include <optional>
#include <string>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FiniteGroup {
  std::vector<std::string> names;           // element names; identity is element 0
  std::vector<std::vector<size_t>> table;   // table[a][b] = a*b
  std::vector<size_t> inverse;
  std::vector<std::string> generator_names;
  std::vector<size_t> generators;           // element index of each generator
  std::vector<Matrix> matrices;             // filled for matrix groups only

  size_t size() const { return names.size(); }
  size_t mul(size_t a, size_t b) const { return table[a][b]; }
  size_t inv(size_t a) const { return inverse[a]; }
  size_t element_order(size_t a) const;
  bool is_abelian() const;
  std::optional<size_t> find(const std::string& name) const;
  // Evaluates a word such as "ghg", "g^3h", "(hg)^2" or "1" in the generators.
  size_t evaluate(const std::string& word) const;
};

// Checks closure, associativity, identity at index 0 and inverses; fills inverse.
void validate_group_table(FiniteGroup& g);

// Product of permutations is composition: (p*q)(x) = p(q(x)).
// When element_words is nonempty it fixes the element order and names; it must
// list every element exactly once, starting with "1".
FiniteGroup group_from_permutations(const std::vector<std::string>& gen_names,
                                    const std::vector<std::vector<int>>& gens,
                                    const std::vector<std::string>& element_words = {});
FiniteGroup group_from_matrices(const std::vector<std::string>& gen_names, const std::vector<Matrix>& gens,
                                const std::vector<std::string>& element_words = {});
FiniteGroup cyclic_group(int n, const std::string& gen = "g");
FiniteGroup trivial_group();

}  // namespace hq
