#include "biuv/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace biuv {

double BoundValue::approx() const {
  const double x = to_double(exact);
  return is_sqrt ? std::sqrt(x) : x;
}

std::string BoundValue::exact_string() const {
  if (is_sqrt) return "sqrt(" + fraction_string(exact) + ")";
  return fraction_string(exact);
}

std::string BoundValue::decimal_string() const {
  if (!is_sqrt) return biuv::decimal_string(exact, 12);
  // 12 significant digits of sqrt(exact); the double sqrt is accurate to
  // ~1e-16 relative, well inside 12 digits for desk-scale radicands
  std::ostringstream os;
  os.precision(12);
  os << approx();
  return os.str();
}

int BoundValue::compare(const BoundValue& o) const {
  const Rational a = squared();
  const Rational b = o.squared();
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

A2Bound bound_a2(const ClassParams& p) {
  const Rational xi = p.xi();
  const Rational d1 = p.mu() + p.lambda() + 2 * xi * p.delta();
  const Rational linear = Rational(2) / d1;
  const Rational d2 = (p.mu() + 2 * p.lambda() + 6 * xi * p.delta()) * (p.mu() + 1);
  const Rational radicand = Rational(8) / d2;
  if (linear * linear <= radicand) {
    return {BoundValue::rational(linear), A2Branch::linear};
  }
  return {BoundValue::sqrt_of(radicand), A2Branch::sqrt_};
}

A3Bound bound_a3(const ClassParams& p) {
  const Rational xi = p.xi();
  const Rational a = p.mu() + p.lambda() + 2 * xi * p.delta();
  const Rational b = p.mu() + 2 * p.lambda() + 6 * xi * p.delta();
  const Rational scale = Rational(1) / (1 + 6 * p.delta() / (2 * p.lambda() + 1));
  const Rational expr1 = scale * (Rational(4) / (a * a) + Rational(2) / b);
  const Rational expr2 = scale * (Rational(8) / (b * (p.mu() + 1)) + Rational(2) / b);
  if (expr1 <= expr2) return {expr1, A3Branch::expr1};
  return {expr2, A3Branch::expr2};
}

Rational bound_an_gap(int n, const ClassParams& p) {
  if (n < 4) {
    throw std::domain_error(
        "gap coefficient bound is stated for n >= 4 only; indices 2 and 3 are "
        "covered by bound_a2/bound_a3");
  }
  const Rational d = p.mu() + (n - 1) * p.lambda() + n * (n - 1) * p.xi() * p.delta();
  return Rational(2) / d;
}

BoundReport make_bound_report(const ClassParams& p, const std::vector<int>& gap_indices) {
  BoundReport rep;
  rep.a2 = bound_a2(p);
  rep.a3 = bound_a3(p);
  for (int n : gap_indices) rep.an.emplace_back(n, bound_an_gap(n, p));
  if (p.delta() > 0) {
    rep.warnings.push_back(
        "closed-form coefficient functionals differ from the direct operator "
        "expansion when delta > 0; see the compare_f audit");
  }
  return rep;
}

const char* branch_name(A2Branch b) { return b == A2Branch::linear ? "linear" : "sqrt"; }
const char* branch_name(A3Branch b) { return b == A3Branch::expr1 ? "expr1" : "expr2"; }

}  // namespace biuv
