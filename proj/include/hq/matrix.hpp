#pragma once

// Dense exact matrices over Scalar, with deterministic Gaussian elimination.

#include <optional>
#include <string>
#include <vector>

#include "hq/scalar.hpp"

namespace hq {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols);
  Matrix(size_t rows, size_t cols, const Scalar& fill);

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix column(const Vector& v);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return a_; }

  Vector row(size_t i) const;
  Vector col(size_t j) const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  // True when the matrix is c*I for some scalar c; stores c.
  bool is_scalar_multiple_of_identity(Scalar* c = nullptr) const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Row lists of pretty-printed scalars, e.g. "[[1, 0], [0, -1]]".
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

struct RrefResult {
  Matrix matrix;               // reduced row echelon form (zero rows kept at the bottom)
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

// Leftmost nonzero column is the pivot; the first row holding it is used.
RrefResult rref(Matrix a);
size_t rank(const Matrix& a);
// Canonical basis: one vector per free column f with v[f] = 1 and pivots read
// off the rref; each vector is then scaled so its first nonzero entry is 1.
std::vector<Vector> nullspace(const Matrix& a);
// A particular solution with free variables set to 0, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& a);
// Nonzero rows of rref(a).
std::vector<Vector> row_basis(const Matrix& a);
// True when every row of b lies in the row space of a.
bool row_space_contains(const Matrix& a, const Matrix& b);
bool same_row_space(const Matrix& a, const Matrix& b);

bool is_zero_vector(const Vector& v);
// Scales v so that its first nonzero entry is 1 (no-op on zero vectors).
void normalize_leading(Vector& v);
std::string vector_str(const Vector& v);

}  // namespace hq
