#include "hq/matrix.hpp"

#include <sstream>

namespace hq {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

std::string shape(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

}  // namespace

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
Matrix::Matrix(size_t rows, size_t cols, const Scalar& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    check(rows[i].size() == m.cols_, "ragged rows in matrix literal");
    for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::row(size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vector Matrix::col(size_t j) const {
  Vector v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  check(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  check(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_scalar_multiple_of_identity(Scalar* c) const {
  if (rows_ != cols_) return false;
  if (rows_ == 0) {
    if (c) *c = Scalar(0);
    return true;
  }
  const Scalar& d = (*this)(0, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? x != d : !x.is_zero()) return false;
    }
  if (c) *c = d;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  check(rows_ == b.rows_ && cols_ == b.cols_, "matrix sum shape mismatch " + shape(*this) + " vs " + shape(b));
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  check(rows_ == b.rows_ && cols_ == b.cols_, "matrix difference shape mismatch " + shape(*this) + " vs " + shape(b));
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check(a.cols_ == b.rows_, "matmul shape mismatch " + shape(a) + " * " + shape(b));
  Matrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  check(a.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (!x.is_zero() && !v[k].is_zero()) r[i] += x * v[k];
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t k = 0; k < a.a_.size(); ++k)
    if (a.a_[k] != b.a_[k]) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).pretty();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    check(b.rows() == rows, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix r(rows, cols);
  size_t c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols();
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    check(b.cols() == cols, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix r(rows, cols);
  size_t o = 0;
  for (const auto& b : blocks) {
    r.set_block(o, 0, b);
    o += b.rows();
  }
  return r;
}

RrefResult rref(Matrix a) {
  RrefResult res;
  size_t rows = a.rows(), cols = a.cols();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inv();
    for (size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.matrix = std::move(a);
  return res;
}

size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

void normalize_leading(Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      if (x.is_one()) return;
      Scalar inv = x.inv();
      for (auto& y : v) y *= inv;
      return;
    }
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Vector> nullspace(const Matrix& a) {
  RrefResult rr = rref(a);
  size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = Scalar(1);
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.matrix(r, f);
    normalize_leading(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  check(a.rows() == b.size(), "solve: right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  RrefResult rr = rref(aug);
  Vector x(a.cols());
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;
    x[rr.pivots[r]] = rr.matrix(r, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  check(a.rows() == a.cols(), "inverse of non-square matrix");
  size_t n = a.rows();
  Matrix aug = hstack({a, Matrix::identity(n)});
  RrefResult rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  return rr.matrix.block(0, n, n, n);
}

std::vector<Vector> row_basis(const Matrix& a) {
  RrefResult rr = rref(a);
  std::vector<Vector> rows;
  for (size_t r = 0; r < rr.pivots.size(); ++r) rows.push_back(rr.matrix.row(r));
  return rows;
}

bool row_space_contains(const Matrix& a, const Matrix& b) {
  if (b.rows() == 0) return true;
  if (a.rows() == 0) return b.is_zero();
  return rank(vstack({a, b})) == rank(a);
}

bool same_row_space(const Matrix& a, const Matrix& b) { return row_space_contains(a, b) && row_space_contains(b, a); }

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].pretty();
  os << ")";
  return os.str();
}

}  // namespace hq
