#include "biuv/class_operator.hpp"

#include <stdexcept>

namespace biuv {

Rational closed_form_F(int index, const Series<Rational>& f, const ClassParams& p) {
  if (index < 1) throw std::invalid_argument("closed_form_F needs index >= 1");
  const int n = index + 1;
  if (f.order() < n) throw std::invalid_argument("series order too small for the requested index");
  const Rational mu = p.mu(), lambda = p.lambda(), delta = p.delta(), xi = p.xi();

  if (index == 1) {
    return (mu + lambda + 2 * xi * delta) * f[2];
  }
  if (index == 2) {
    const Rational head = mu + 2 * lambda + 6 * xi * delta;
    const Rational tilt = 1 + 6 * delta / (2 * lambda + 1);
    return head * ((mu - 1) / 2 * (f[2] * f[2]) + tilt * f[3]);
  }

  const Rational head = mu + (n - 1) * lambda + n * (n - 1) * xi * delta;
  Rational sum(0);
  detail::visit_multiindices(n - 1, n - 1, -1, [&](const std::vector<int>& counts) {
    int m = 0;
    for (int c : counts) m += c;
    Rational term = falling_factorial(mu - 1, static_cast<unsigned>(m - 1));
    for (size_t j = 0; j < counts.size(); ++j) {
      for (int rep = 0; rep < counts[j]; ++rep) term *= f[static_cast<int>(j) + 2];
      term /= factorial(static_cast<unsigned>(counts[j]));
    }
    sum += term;
  });
  return head * sum;
}

std::vector<CoefficientComparison> compare_functionals(const Series<Rational>& f,
                                                       const ClassParams& p, int upto) {
  if (upto < 1) throw std::invalid_argument("compare_functionals needs upto >= 1");
  if (f.order() < upto + 1)
    throw std::invalid_argument("series order too small for the requested index range");
  const Series<Rational> direct = expand_operator(f, exact_op_params(p));
  std::vector<CoefficientComparison> rows;
  rows.reserve(static_cast<size_t>(upto));
  for (int k = 1; k <= upto; ++k) {
    CoefficientComparison row;
    row.index = k;
    row.direct = direct[k];
    row.closed_form = closed_form_F(k, f, p);
    row.difference = row.direct - row.closed_form;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace biuv
