#pragma once

#include "biuv/class_params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace biuv {

/// A bound value kept exact: either a rational, or the square root of a
/// rational radicand (left symbolic; reports carry the radicand plus a
/// 12-digit decimal approximation).
struct BoundValue {
  bool is_sqrt = false;
  Rational exact;  // the value itself, or the radicand when is_sqrt

  static BoundValue rational(Rational v) { return {false, std::move(v)}; }
  static BoundValue sqrt_of(Rational radicand) { return {true, std::move(radicand)}; }

  /// value^2, exact; the comparison key for positive bound values.
  Rational squared() const { return is_sqrt ? exact : exact * exact; }

  double approx() const;
  std::string exact_string() const;    // "p/q" or "sqrt(p/q)"
  std::string decimal_string() const;  // 12 significant digits

  /// three-way comparison of positive values via exact squares
  int compare(const BoundValue& o) const;
};

enum class A2Branch { linear, sqrt_ };
enum class A3Branch { expr1, expr2 };

struct A2Bound {
  BoundValue value;
  A2Branch branch = A2Branch::linear;
};

struct A3Bound {
  Rational value;
  A3Branch branch = A3Branch::expr1;
};

/// min{ 2/(mu+lambda+2 xi delta), sqrt(8/((mu+2lambda+6 xi delta)(mu+1))) };
/// ties report the linear branch.
A2Bound bound_a2(const ClassParams& p);

/// min of the two third-coefficient expressions, each scaled by
/// 1/(1 + 6 delta/(2 lambda + 1)); ties report expr1. Both branches are
/// rational, no square root appears.
A3Bound bound_a3(const ClassParams& p);

/// Gap-series bound 2/(mu + (n-1) lambda + n(n-1) xi delta), stated for
/// n >= 4 only (the hypothesis is a_m = 0 for 2 <= m <= n-1, which the
/// caller asserts about its function). Lower indices are rejected.
Rational bound_an_gap(int n, const ClassParams& p);

struct BoundReport {
  A2Bound a2;
  A3Bound a3;
  std::vector<std::pair<int, Rational>> an;  // (n, gap bound) for requested n
  std::vector<std::string> warnings;
};

BoundReport make_bound_report(const ClassParams& p, const std::vector<int>& gap_indices);

const char* branch_name(A2Branch b);
const char* branch_name(A3Branch b);

}  // namespace biuv
