#pragma once

#include "biuv/class_params.hpp"
#include "biuv/faber.hpp"
#include "biuv/series.hpp"

#include <vector>

namespace biuv {

/// Parameter scalars lifted into the coefficient field K.
template <class K>
struct OperatorParams {
  K mu, lambda, delta, xi;
};

inline OperatorParams<Rational> exact_op_params(const ClassParams& p) {
  return {p.mu(), p.lambda(), p.delta(), p.xi()};
}

inline OperatorParams<Cx> float_op_params(const ClassParams& p) {
  return {to_cx(p.mu()), to_cx(p.lambda()), to_cx(p.delta()), to_cx(p.xi())};
}

/// Series expansion of the class operator
///   L[f](z) = (1-lambda) (f/z)^mu + lambda f' (f/z)^(mu-1) + xi delta z f''
/// for a normalized f, truncated at order(f) - 1. The z^0 coefficient is 1;
/// the z^k coefficient is the operator coefficient functional F_k computed by
/// direct expansion, the route this toolkit treats as ground truth.
template <class K>
Series<K> expand_operator(const Series<K>& f, const OperatorParams<K>& p) {
  if (!f.is_normalized())
    throw std::invalid_argument("expand_operator needs a normalized series");
  const Series<K> u = divide_by_z(f);  // unit series f/z, order N-1
  const K one(1);
  Series<K> total = (one - p.lambda) * pow(u, p.mu);
  total = total + p.lambda * (derive(f) * pow(u, p.mu - one));
  if (f.order() >= 2) {
    total = total + (p.xi * p.delta) * multiply_by_z(derive(derive(f)));
  }
  return total;
}

/// The closed-form coefficient functional F_{n-1} for index = n-1:
/// the stated low-order forms at indices 1 and 2, and for higher indices the
/// general multi-index form
///   [mu + (n-1)lambda + n(n-1) xi delta] * sum over i with sum_j j*i_j = n-1
///   of ff(mu-1, m-1) / (i_1! ... i_{n-1}!) * a_2^{i_1} ... a_n^{i_{n-1}},
/// where m = sum_j i_j and ff is the falling factorial (the only reading of
/// the factorial ratios that stays finite for non-integer mu). The direct
/// expansion and this route disagree at delta > 0; compare_functionals
/// reports the difference rather than resolving it.
Rational closed_form_F(int index, const Series<Rational>& f, const ClassParams& p);

struct CoefficientComparison {
  int index = 0;
  Rational direct;
  Rational closed_form;
  Rational difference;  // direct - closed_form
};

/// Side-by-side audit of the two functional routes for indices 1..upto.
std::vector<CoefficientComparison> compare_functionals(const Series<Rational>& f,
                                                       const ClassParams& p, int upto);

}  // namespace biuv
