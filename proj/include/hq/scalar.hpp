#pragma once

// Exact arithmetic in Q and in cyclotomic fields Q(zeta_N).
//
// A Scalar is a polynomial in zeta_N of degree < phi(N) with rational
// coefficients, fully reduced modulo the N-th cyclotomic polynomial, so
// equality is coefficient-wise. N = 1 is the rational field.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

using Rational = mpq_class;
using Poly = std::vector<Rational>;  // coefficients, lowest degree first

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns the N-th cyclotomic polynomial (monic, lowest degree first).
Poly cyclotomic_polynomial(int n);

class CycContext {
 public:
  // Contexts are interned: make_context(n) always returns the same object.
  static const CycContext& make(int n);

  int order() const { return order_; }
  int degree() const { return phi_; }
  const Poly& modulus() const { return modulus_; }
  // zeta_N^k reduced, for any integer k.
  const Poly& power(long k) const;

 private:
  explicit CycContext(int n);
  int order_;
  int phi_;
  Poly modulus_;
  std::vector<Poly> powers_;
};

inline const CycContext& make_context(int n) { return CycContext::make(n); }

class Scalar {
 public:
  Scalar();
  Scalar(int v);  // NOLINT(google-explicit-constructor)
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const CycContext& ctx, Poly coeffs);

  static Scalar rational(long num, long den);
  static Scalar zero(const CycContext& ctx);
  static Scalar one(const CycContext& ctx);

  const CycContext& context() const { return *ctx_; }
  const Poly& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()

  Scalar embed(const CycContext& target) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "a/b" for rationals, "(a_0)*z^0 + (a_1)*z^1 + ... @ N" otherwise.
  std::string canonical() const;
  // Short form relative to the scalar's own context: "-1/2", "z^3", "1 - 2*z".
  std::string pretty() const;

 private:
  void align(Scalar& b);
  const CycContext* ctx_;
  Poly c_;
};

Scalar root_of_unity(const CycContext& ctx, long k);
Scalar pow(const Scalar& a, long e);
std::string rational_str(const Rational& q);

}  // namespace hq
