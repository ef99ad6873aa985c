#include "biuv/faber.hpp"

namespace biuv {

namespace {

// 1/k! with the convention that a negative integer argument kills the term.
Rational reciprocal_factorial_or_zero(int k) {
  if (k < 0) return Rational(0);
  return Rational(1) / factorial(static_cast<unsigned>(k));
}

Rational power_or_zero(const Rational& base, int e) {
  // callers guarantee e >= 0 whenever the companion factorial is nonnegative
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

InverseTermsCheck check_inverse_explicit_terms(const Series<Rational>& f, int n) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("explicit inverse terms are available for 2 <= n <= 6 only");
  if (f.order() < n)
    throw std::invalid_argument("series order too small for the requested index");

  const Rational a2 = f[2];
  const Rational a3 = n >= 3 ? f[3] : Rational(0);
  const Rational a4 = n >= 4 ? f[4] : Rational(0);
  const Rational a5 = n >= 5 ? f[5] : Rational(0);
  const Rational a6 = n >= 6 ? f[6] : Rational(0);
  const Rational neg_n(-n);

  // The five explicit terms of the K_{n-1}^{-n} expansion. Each factorial
  // ratio (-n)!/(y)! is read as the falling factorial of length -n - y.
  Rational total(0);
  {
    const Rational c = falling_factorial(neg_n, static_cast<unsigned>(n - 1)) *
                       reciprocal_factorial_or_zero(n - 1);
    total += c * power_or_zero(a2, n - 1);
  }
  if (n - 3 >= 0) {
    const Rational c = falling_factorial(neg_n, static_cast<unsigned>(n - 2)) *
                       reciprocal_factorial_or_zero(n - 3);
    total += c * power_or_zero(a2, n - 3) * a3;
  }
  if (n - 4 >= 0) {
    const Rational c = falling_factorial(neg_n, static_cast<unsigned>(n - 3)) *
                       reciprocal_factorial_or_zero(n - 4);
    total += c * power_or_zero(a2, n - 4) * a4;
  }
  if (n - 5 >= 0) {
    const Rational c = falling_factorial(neg_n, static_cast<unsigned>(n - 4)) *
                       reciprocal_factorial_or_zero(n - 5);
    total += c * power_or_zero(a2, n - 5) * (a5 + Rational(-n + 2) * a3 * a3);
  }
  if (n - 6 >= 0) {
    const Rational c = falling_factorial(neg_n, static_cast<unsigned>(n - 5)) *
                       reciprocal_factorial_or_zero(n - 6);
    total += c * power_or_zero(a2, n - 6) * (a6 + Rational(-2 * n + 5) * a3 * a4);
  }

  InverseTermsCheck rec;
  rec.n = n;
  rec.explicit_terms = total;
  rec.generating_value = faber_K(n - 1, static_cast<long>(-n), f);
  rec.match = (rec.explicit_terms == rec.generating_value);
  return rec;
}

}  // namespace biuv
