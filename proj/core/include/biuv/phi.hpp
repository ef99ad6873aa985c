#pragma once

#include "biuv/rational.hpp"
#include "biuv/series.hpp"

#include <string>
#include <vector>

namespace biuv {

/// The subordinating target function Phi with Phi(0) = 1. Presets:
///   halfplane(alpha): (1 + (1-2 alpha) z)/(1 - z), image { Re w > alpha }
///   disk(rho):        1 + rho z, image the disk |w - 1| < rho
/// or an explicit truncated coefficient list 1 + sum Phi_n z^n (evaluation of
/// that kind carries the usual truncation caveat).
class PhiSpec {
 public:
  enum class Kind { halfplane, disk, coeffs };

  static PhiSpec halfplane(Rational alpha);
  static PhiSpec disk(Rational rho);
  static PhiSpec from_coeffs(std::vector<Rational> coeffs);

  /// Accepts "halfplane:<alpha>", "disk:<rho>", "coeffs:c1,c2,...".
  static PhiSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& rho() const { return rho_; }

  /// Phi_1..Phi_order, exact.
  std::vector<Rational> coefficients(int order) const;

  /// Unit series 1 + Phi_1 z + ... at the given order, float backend.
  Series<Cx> unit_series(int order) const;

  /// Closed-form evaluation for presets; truncated polynomial for coeffs.
  Cx eval(const Cx& z) const;

  /// Presets admit a closed-form inverse (used for Schwarz witness
  /// extraction); a raw coefficient list does not.
  bool has_closed_inverse() const { return kind_ != Kind::coeffs; }

  Rational max_abs_coefficient(int order) const;

  std::string describe() const;

 private:
  PhiSpec() = default;
  Kind kind_ = Kind::halfplane;
  Rational alpha_;                   // halfplane
  Rational rho_;                     // disk
  std::vector<Rational> coeff_list_; // coeffs kind: Phi_1..Phi_k
};

}  // namespace biuv
