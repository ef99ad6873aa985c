#pragma once

#include "biuv/rational.hpp"

namespace biuv {

/// Parameter tuple (mu, lambda, delta, alpha) of the function class, with the
/// derived weight xi = (2*lambda + mu)/(2*lambda + 1). Ranges: lambda >= 1,
/// mu >= 0, delta >= 0, 0 <= alpha < 1. xi is always recomputed from mu and
/// lambda, never stored.
class ClassParams {
 public:
  static ClassParams make(Rational mu, Rational lambda, Rational delta,
                          Rational alpha = Rational(0));

  const Rational& mu() const { return mu_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& delta() const { return delta_; }
  const Rational& alpha() const { return alpha_; }

  Rational xi() const;

 private:
  ClassParams(Rational mu, Rational lambda, Rational delta, Rational alpha);
  Rational mu_, lambda_, delta_, alpha_;
};

Rational xi_of(const ClassParams& p);

}  // namespace biuv
