#pragma once

#include "biuv/rational.hpp"

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biuv {

using Cx = std::complex<double>;

template <class K>
K scalar_from_int(long n) {
  return K(n);
}
template <>
inline Cx scalar_from_int<Cx>(long n) {
  return Cx(static_cast<double>(n), 0.0);
}

/// Truncated formal power series with coefficients in K (exact Rational or
/// complex double). A series of order N stores exactly the coefficients
/// c_0..c_N; arithmetic between two series truncates at the smaller order,
/// so a result never claims coefficients that were not determined by its
/// inputs. Values are immutable after construction.
template <class K>
class Series {
 public:
  explicit Series(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
  }

  static Series zero(int order) { return Series(std::vector<K>(order + 1, K(0))); }

  static Series constant(const K& c0, int order) {
    std::vector<K> c(order + 1, K(0));
    c[0] = c0;
    return Series(std::move(c));
  }

  /// The identity map z (order must be >= 1).
  static Series identity(int order) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    std::vector<K> c(order + 1, K(0));
    c[1] = K(1);
    return Series(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const K& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }

  const std::vector<K>& coeffs() const { return c_; }

  /// c_0 = 0, c_1 = 1: the shape of a normalized function z + a_2 z^2 + ...
  bool is_normalized() const { return order() >= 1 && c_[0] == K(0) && c_[1] == K(1); }

  /// c_0 = 1: the shape of f(z)/z or of a subordinating target.
  bool is_unit() const { return c_[0] == K(1); }

  Series truncated(int n) const {
    if (n < 0 || n > order()) throw std::invalid_argument("bad truncation order");
    return Series(std::vector<K>(c_.begin(), c_.begin() + n + 1));
  }

  /// Pads with zero coefficients. Use only when the series is exactly known
  /// beyond its stored order (e.g. the input is a polynomial).
  Series extended(int n) const {
    if (n < order()) return truncated(n);
    std::vector<K> c = c_;
    c.resize(static_cast<size_t>(n) + 1, K(0));
    return Series(std::move(c));
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  std::vector<K> c_;
};

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<K> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return Series<K>(std::move(c));
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<K> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return Series<K>(std::move(c));
}

template <class K>
Series<K> operator-(const Series<K>& a) {
  std::vector<K> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Series<K>(std::move(c));
}

/// Cauchy product truncated at the smaller operand order.
template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<K> c(n + 1, K(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == K(0)) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series<K>(std::move(c));
}

template <class K>
Series<K> operator*(const K& s, const Series<K>& a) {
  std::vector<K> c(a.coeffs());
  for (auto& x : c) x = s * x;
  return Series<K>(std::move(c));
}

/// Termwise derivative; drops the order by one.
template <class K>
Series<K> derive(const Series<K>& f) {
  if (f.order() < 1) throw std::invalid_argument("derive needs order >= 1");
  std::vector<K> c(f.order());
  for (int k = 1; k <= f.order(); ++k) c[k - 1] = scalar_from_int<K>(k) * f[k];
  return Series<K>(std::move(c));
}

/// Multiplication by z. Exact shift, so the order grows by one.
template <class K>
Series<K> multiply_by_z(const Series<K>& f) {
  std::vector<K> c(f.order() + 2, K(0));
  for (int k = 0; k <= f.order(); ++k) c[k + 1] = f[k];
  return Series<K>(std::move(c));
}

/// Division by z for a series with zero constant term; drops the order by one.
template <class K>
Series<K> divide_by_z(const Series<K>& f) {
  if (f.order() < 1 || !(f[0] == K(0)))
    throw std::invalid_argument("divide_by_z needs a zero constant term");
  std::vector<K> c(f.order());
  for (int k = 1; k <= f.order(); ++k) c[k - 1] = f[k];
  return Series<K>(std::move(c));
}

/// Generalized binomial coefficient C(e, k) = e(e-1)...(e-k+1)/k!, a degree-k
/// polynomial in e, hence exact for rational e.
template <class K>
K generalized_binomial(const K& e, unsigned k) {
  K acc(1);
  for (unsigned j = 0; j < k; ++j) {
    acc = acc * (e - scalar_from_int<K>(static_cast<long>(j)));
    acc = acc / scalar_from_int<K>(static_cast<long>(j) + 1);
  }
  return acc;
}

/// Falling factorial x(x-1)...(x-k+1); the reading used for every factorial
/// ratio with a possibly non-integer or negative argument.
template <class K>
K falling_factorial(const K& e, unsigned k) {
  K acc(1);
  for (unsigned j = 0; j < k; ++j) acc = acc * (e - scalar_from_int<K>(static_cast<long>(j)));
  return acc;
}

/// (1 + v)^e = sum_k C(e,k) v^k for a unit series. Requires c_0 = 1.
template <class K>
Series<K> pow(const Series<K>& u, const K& e) {
  if (!u.is_unit())
    throw std::invalid_argument("pow with a general exponent needs a unit series (c_0 = 1)");
  const int n = u.order();
  const Series<K> v = u - Series<K>::constant(K(1), n);
  Series<K> acc = Series<K>::constant(K(1), n);
  Series<K> vp = Series<K>::constant(K(1), n);
  K binom(1);
  for (int k = 1; k <= n; ++k) {
    vp = vp * v;
    binom = binom * (e - scalar_from_int<K>(k - 1)) / scalar_from_int<K>(k);
    acc = acc + binom * vp;
  }
  return acc;
}

/// Integer powers. Nonnegative exponents work on any series; negative ones
/// require a unit base and go through the binomial expansion.
template <class K>
Series<K> pow(const Series<K>& u, long e) {
  if (e < 0) {
    if (!u.is_unit())
      throw std::invalid_argument("pow with a negative exponent needs a unit series (c_0 = 1)");
    return pow(u, scalar_from_int<K>(e));
  }
  Series<K> acc = Series<K>::constant(K(1), u.order());
  for (long i = 0; i < e; ++i) acc = acc * u;
  return acc;
}

/// Reciprocal of a series with nonzero constant term (order preserved).
template <class K>
Series<K> reciprocal(const Series<K>& u) {
  if (u[0] == K(0)) throw std::invalid_argument("reciprocal needs a nonzero constant term");
  std::vector<K> r(u.order() + 1, K(0));
  r[0] = K(1) / u[0];
  for (int k = 1; k <= u.order(); ++k) {
    K s(0);
    for (int j = 1; j <= k; ++j) s += u[j] * r[k - j];
    r[k] = -s / u[0];
  }
  return Series<K>(std::move(r));
}

/// f(g(z)) by Horner evaluation, truncated at the smaller order. The inner
/// series must have zero constant term for the truncated composition to be
/// well defined.
template <class K>
Series<K> compose(const Series<K>& f, const Series<K>& g) {
  if (!(g[0] == K(0)))
    throw std::invalid_argument("compose needs an inner series with zero constant term");
  const int n = std::min(f.order(), g.order());
  const Series<K> gi = g.truncated(n);
  Series<K> acc = Series<K>::constant(f[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * gi + Series<K>::constant(f[k], n);
  }
  return acc;
}

/// Compositional inverse of a normalized series, solved order by order: once
/// b_2..b_{n-1} are fixed, the w^n coefficient of f(g(w)) is b_n plus known
/// lower-order data, so each step reads off b_n directly.
template <class K>
Series<K> revert(const Series<K>& f) {
  if (!f.is_normalized())
    throw std::invalid_argument("revert needs a normalized series (c_0 = 0, c_1 = 1)");
  const int n = f.order();
  std::vector<K> b(n + 1, K(0));
  b[1] = K(1);
  for (int m = 2; m <= n; ++m) {
    const Series<K> g(std::vector<K>(b.begin(), b.begin() + m + 1));
    const Series<K> err = compose(f.truncated(m), g);
    b[m] = -err[m];
  }
  return Series<K>(std::move(b));
}

/// Horner evaluation of the truncation at a point.
template <class K>
K evaluate(const Series<K>& f, const K& z) {
  K acc = f[f.order()];
  for (int k = f.order() - 1; k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

inline Cx to_cx(const Rational& r) { return Cx(to_double(r), 0.0); }

inline Series<Cx> to_float(const Series<Rational>& f) {
  std::vector<Cx> c(f.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = to_cx(f.coeffs()[k]);
  return Series<Cx>(std::move(c));
}

}  // namespace biuv
