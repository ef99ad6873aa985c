#include "biuv/class_params.hpp"

#include <stdexcept>

namespace biuv {

ClassParams::ClassParams(Rational mu, Rational lambda, Rational delta, Rational alpha)
    : mu_(std::move(mu)), lambda_(std::move(lambda)), delta_(std::move(delta)),
      alpha_(std::move(alpha)) {}

ClassParams ClassParams::make(Rational mu, Rational lambda, Rational delta, Rational alpha) {
  if (mu < 0) throw std::invalid_argument("parameter range violated: mu >= 0");
  if (lambda < 1) throw std::invalid_argument("parameter range violated: lambda >= 1");
  if (delta < 0) throw std::invalid_argument("parameter range violated: delta >= 0");
  if (alpha < 0 || alpha >= 1)
    throw std::invalid_argument("parameter range violated: 0 <= alpha < 1");
  return ClassParams(std::move(mu), std::move(lambda), std::move(delta), std::move(alpha));
}

Rational ClassParams::xi() const {
  return (2 * lambda_ + mu_) / (2 * lambda_ + 1);
}

Rational xi_of(const ClassParams& p) { return p.xi(); }

}  // namespace biuv
