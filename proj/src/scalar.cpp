#include "hq/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hq {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Long division a = q*b + r with deg r < deg b. b must be nonzero and trimmed.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Poly cyclotomic_polynomial(int n) {
  if (n < 1) throw ScalarError("cyclotomic order must be positive");
  static std::map<int, Poly> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  Poly den{Rational(1)};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  Poly q, r;
  poly_divmod(num, den, q, r);
  if (!r.empty()) throw ScalarError("internal: cyclotomic division left a remainder");
  std::lock_guard<std::mutex> lock(m);
  cache[n] = q;
  return q;
}

CycContext::CycContext(int n) : order_(n) {
  modulus_ = cyclotomic_polynomial(n);
  phi_ = static_cast<int>(modulus_.size()) - 1;
  powers_.resize(n);
  for (int k = 0; k < n; ++k) {
    Poly xk(k + 1, Rational(0));
    xk[k] = 1;
    Poly q, r;
    poly_divmod(xk, modulus_, q, r);
    r.resize(phi_, Rational(0));
    powers_[k] = std::move(r);
  }
}

const CycContext& CycContext::make(int n) {
  if (n < 1) throw ScalarError("cyclotomic order must be positive, got " + std::to_string(n));
  static std::map<int, std::unique_ptr<CycContext>> registry;
  std::lock_guard<std::mutex> lock(context_mutex());
  auto it = registry.find(n);
  if (it == registry.end()) it = registry.emplace(n, std::unique_ptr<CycContext>(new CycContext(n))).first;
  return *it->second;
}

const Poly& CycContext::power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return powers_[static_cast<size_t>(r)];
}

Scalar::Scalar() : ctx_(&CycContext::make(1)), c_(1, Rational(0)) {}
Scalar::Scalar(int v) : Scalar(static_cast<long>(v)) {}
Scalar::Scalar(long v) : ctx_(&CycContext::make(1)), c_(1, Rational(v)) {}
Scalar::Scalar(const Rational& q) : ctx_(&CycContext::make(1)), c_(1, q) { c_[0].canonicalize(); }

Scalar::Scalar(const CycContext& ctx, Poly coeffs) : ctx_(&ctx) {
  // Reduce an arbitrary-length polynomial in zeta_N.
  c_.assign(ctx.degree(), Rational(0));
  for (size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();  // GMP arithmetic expects canonical operands
    if (coeffs[k] == 0) continue;
    const Poly& p = ctx.power(static_cast<long>(k));
    for (int t = 0; t < ctx.degree(); ++t)
      if (p[t] != 0) c_[t] += coeffs[k] * p[t];
  }
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ScalarError("division by zero in rational literal");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::zero(const CycContext& ctx) { return Scalar(ctx, Poly{}); }
Scalar Scalar::one(const CycContext& ctx) { return Scalar(ctx, Poly{Rational(1)}); }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw ScalarError("scalar " + canonical() + " is not rational");
  return c_[0];
}

Scalar Scalar::embed(const CycContext& target) const {
  if (&target == ctx_) return *this;
  int m = ctx_->order();
  int n = target.order();
  if (n % m != 0)
    throw ScalarError("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" + std::to_string(n) +
                      "): order " + std::to_string(m) + " does not divide " + std::to_string(n));
  long step = n / m;
  Scalar r = Scalar::zero(target);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const Poly& p = target.power(static_cast<long>(k) * step);
    for (int t = 0; t < target.degree(); ++t)
      if (p[t] != 0) r.c_[t] += c_[k] * p[t];
  }
  return r;
}

void Scalar::align(Scalar& b) {
  if (ctx_ == b.ctx_) return;
  int m = ctx_->order();
  int n = b.ctx_->order();
  if (n % m == 0) {
    *this = embed(*b.ctx_);
  } else if (m % n == 0) {
    b = b.embed(*ctx_);
  } else {
    int l = std::lcm(m, n);
    throw ScalarError("incompatible scalar contexts zeta_" + std::to_string(m) + " and zeta_" + std::to_string(n) +
                      "; use a common order such as " + std::to_string(l));
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b0) {
  if (ctx_ == b0.ctx_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b0.c_[i];
    return *this;
  }
  Scalar b = b0;
  align(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b0) {
  if (ctx_ == b0.ctx_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b0.c_[i];
    return *this;
  }
  Scalar b = b0;
  align(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b0) {
  const Scalar* bp = &b0;
  Scalar tmp;
  if (ctx_ != b0.ctx_) {
    tmp = b0;
    align(tmp);
    bp = &tmp;
  }
  const Scalar& b = *bp;
  size_t d = c_.size();
  if (d == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  if (b.is_rational()) {
    for (auto& c : c_) c *= b.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational a0 = c_[0];
    c_ = b.c_;
    for (auto& c : c_) c *= a0;
    return *this;
  }
  Poly prod(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
  }
  Poly out(prod.begin(), prod.begin() + static_cast<long>(d));
  for (size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const Poly& p = ctx_->power(static_cast<long>(k));
    for (size_t t = 0; t < d; ++t)
      if (p[t] != 0) out[t] += prod[k] * p[t];
  }
  c_ = std::move(out);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (is_rational()) {
    Scalar r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid: find s with s*a = 1 mod Phi_N.
  Poly r0 = ctx_->modulus(), r1 = c_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw ScalarError("internal: element shares a factor with the cyclotomic modulus");
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return Scalar(*ctx_, s1);
}

Scalar& Scalar::operator/=(const Scalar& b) { return *this *= b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
  Scalar x = a, y = b;
  x.align(y);
  return x.c_ == y.c_;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Scalar::canonical() const {
  if (is_rational()) return rational_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << rational_str(c_[i]) << ")*z^" << i;
    first = false;
  }
  os << " @ " << ctx_->order();
  return os.str();
}

std::string Scalar::pretty() const {
  if (is_rational()) return rational_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    Rational c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << rational_str(c);
      continue;
    }
    if (c != 1) os << rational_str(c) << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Scalar root_of_unity(const CycContext& ctx, long k) { return Scalar(ctx, ctx.power(k)); }

Scalar pow(const Scalar& a, long e) {
  if (e < 0) return pow(a.inv(), -e);
  Scalar result = Scalar::one(a.context());
  Scalar base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace hq
