#pragma once

// Path polynomials and finitely presented quiver algebras kQ/I with
// homogeneous relations.

#include <map>
#include <string>
#include <vector>

#include "hq/rep.hpp"

namespace hq {

// A path is a sequence of arrow indices in travel order. Paths of length 0
// are vertex idempotents and are stored as PathPoly::vertex terms.
using Path = std::vector<size_t>;

struct PathPoly {
  std::map<Path, Scalar> terms;  // nonzero coefficients only

  void add(const Path& p, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  size_t degree() const { return terms.empty() ? 0 : terms.begin()->first.size(); }
  friend bool operator==(const PathPoly& a, const PathPoly& b) { return a.terms == b.terms; }
};

bool is_path(const Quiver& q, const Path& p);
size_t path_tail(const Quiver& q, const Path& p);
size_t path_head(const Quiver& q, const Path& p);

// All paths of the given positive length, in lexicographic order of arrow indices.
std::vector<Path> paths_of_length(const Quiver& q, size_t len);
std::vector<Path> paths_of_length(const Quiver& q, size_t len, size_t tail, size_t head);

// "2*aA + Bb - (z)*cC"; "0" for the zero polynomial.
std::string path_poly_str(const Quiver& q, const PathPoly& p);

struct Relation {
  size_t tail = 0, head = 0;
  PathPoly poly;
};

struct QuiverAlgebra {
  Quiver quiver;
  std::vector<Relation> relations;  // homogeneous of a common degree

  size_t relation_degree() const { return relations.empty() ? 0 : relations.front().poly.degree(); }
};

// Builds a relation from a polynomial whose paths share tail and head; throws otherwise.
Relation make_relation(const Quiver& q, const PathPoly& p);

// Replaces the relations of each (tail, head) block by the nonzero rows of the
// rref of their coefficient matrix (paths ordered lexicographically), with
// blocks ordered by (tail, head).
QuiverAlgebra canonicalize(const QuiverAlgebra& a);

// "aA - Ff = 0" lines.
std::vector<std::string> relation_strings(const QuiverAlgebra& a);

// Row-space equality of relations per (tail, head) block after renaming the
// arrows of b by arrow_map (arrow index of b -> arrow index of a) and its
// vertices by vertex_map. Both algebras must have relations of one degree.
bool same_presentation(const QuiverAlgebra& a, const QuiverAlgebra& b, const std::vector<size_t>& vertex_map,
                       const std::vector<size_t>& arrow_map);

// Reads "2*aA + Bb" or "a.A - b.B" against the arrow names of q.
PathPoly parse_path_poly(const Quiver& q, const std::string& text, const CycContext& ctx);

}  // namespace hq
