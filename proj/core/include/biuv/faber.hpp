#pragma once

#include "biuv/series.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace biuv {

namespace detail {

/// Visits every vector of multiplicities (i_1, ..., i_maxpart) of nonnegative
/// integers with sum_k k*i_k == weight and, when part_count >= 0, with
/// sum_k i_k == part_count. Exhaustive recursive descent with pruning on the
/// remaining weight; no memoization is needed at the orders this library uses.
template <class Fn>
void visit_multiindices(int weight, int max_part, int part_count, Fn&& visit) {
  std::vector<int> counts(static_cast<size_t>(max_part), 0);
  const std::function<void(int, int, int)> rec = [&](int part, int rem_weight, int rem_count) {
    if (part == 1) {
      // i_1 is forced by the remaining weight
      if (part_count >= 0 && rem_weight != rem_count) return;
      counts[0] = rem_weight;
      visit(counts);
      counts[0] = 0;
      return;
    }
    const int cap = rem_weight / part;
    for (int i = 0; i <= cap; ++i) {
      if (part_count >= 0) {
        const int rc = rem_count - i;
        // the rest must fit in parts of size 1..part-1
        if (rc < 0 || rem_weight - i * part > rc * (part - 1) || rem_weight - i * part < rc) continue;
        counts[static_cast<size_t>(part) - 1] = i;
        rec(part - 1, rem_weight - i * part, rc);
      } else {
        counts[static_cast<size_t>(part) - 1] = i;
        rec(part - 1, rem_weight - i * part, 0);
      }
      counts[static_cast<size_t>(part) - 1] = 0;
    }
  };
  if (weight <= 0 || max_part <= 0) return;
  rec(max_part, weight, part_count);
}

template <class K>
K factorial_as(unsigned n) {
  K acc(1);
  for (unsigned k = 2; k <= n; ++k) acc = acc * scalar_from_int<K>(k);
  return acc;
}

/// sum over the multi-indices above of m!/(prod i_k!) * prod values[k-1]^{i_k},
/// where values[k-1] is the variable attached to weight k.
template <class K>
K weighted_partition_sum(int weight, int part_count, const std::vector<K>& values) {
  K total(0);
  visit_multiindices(weight, weight, part_count, [&](const std::vector<int>& counts) {
    K term = factorial_as<K>(static_cast<unsigned>(part_count));
    for (size_t k = 0; k < counts.size(); ++k) {
      for (int rep = 0; rep < counts[k]; ++rep) term = term * values[k];
      term = term / factorial_as<K>(static_cast<unsigned>(counts[k]));
    }
    total += term;
  });
  return total;
}

}  // namespace detail

/// D_n^m(a_1, ..., a_n): the partition sum
///   sum m!/(i_1! ... i_n!) a_1^{i_1} ... a_n^{i_n}
/// over nonnegative i with sum i_k = m and sum k*i_k = n. The sequence must
/// satisfy a_1 = 1.
template <class K>
K bell_D(int n, int m, const std::vector<K>& a) {
  if (n < 1) throw std::invalid_argument("bell_D needs n >= 1");
  if (m < 1 || m > n) throw std::invalid_argument("bell_D needs 1 <= m <= n");
  if (static_cast<int>(a.size()) < n) throw std::invalid_argument("bell_D needs a_1..a_n");
  if (!(a[0] == K(1))) throw std::invalid_argument("bell_D needs a_1 = 1");
  const std::vector<K> values(a.begin(), a.begin() + n);
  return detail::weighted_partition_sum(n, m, values);
}

/// K_n^p for a normalized series f = z + a_2 z^2 + ...: defined as the z^n
/// coefficient of (f(z)/z)^p and computed here through the binomial/partition
/// expansion
///   K_n^p = sum_{m=1..n} C(p, m) * [z^n] (a_2 z + a_3 z^2 + ...)^m,
/// which must agree exactly with the series pow oracle on the exact backend.
/// p may be any nonzero integer, rational, or float scalar.
template <class K>
K faber_K(int n, const K& p, const Series<K>& f) {
  if (!f.is_normalized()) throw std::invalid_argument("faber_K needs a normalized series");
  if (p == K(0)) throw std::invalid_argument("faber_K needs p != 0");
  if (n < 0 || n > f.order() - 1)
    throw std::invalid_argument("faber_K needs 0 <= n <= order - 1");
  if (n == 0) return K(1);
  // values[k-1] = a_{k+1}, the weight-k variable of (f/z - 1)
  std::vector<K> values(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) values[static_cast<size_t>(k) - 1] = f[k + 1];
  K total(0);
  for (int m = 1; m <= n; ++m) {
    total += generalized_binomial(p, static_cast<unsigned>(m)) *
             detail::weighted_partition_sum(n, m, values);
  }
  return total;
}

template <class K>
K faber_K(int n, long p, const Series<K>& f) {
  return faber_K(n, scalar_from_int<K>(p), f);
}

/// Inverse-map coefficients from the Faber formula b_n = K_{n-1}^{-n} / n.
/// Produces the same series as revert(); the two paths are independent and
/// cross-checked in the test suite.
template <class K>
Series<K> inverse_coeffs(const Series<K>& f) {
  if (!f.is_normalized())
    throw std::invalid_argument("inverse_coeffs needs a normalized series");
  const int n = f.order();
  std::vector<K> b(static_cast<size_t>(n) + 1, K(0));
  b[1] = K(1);
  for (int m = 2; m <= n; ++m) {
    b[static_cast<size_t>(m)] =
        faber_K(m - 1, scalar_from_int<K>(-m), f) / scalar_from_int<K>(m);
  }
  return Series<K>(std::move(b));
}

/// Consistency record for the explicit low-order terms of the K_{n-1}^{-n}
/// expansion, evaluated under the falling-factorial reading of the factorial
/// ratios (a ratio x!/y! with integer gap means x(x-1)...(y+1), and a bare
/// k! with k < 0 makes the whole term vanish). Valid for 2 <= n <= 6, where
/// the expansion has no unspecified tail.
struct InverseTermsCheck {
  int n = 0;
  Rational explicit_terms;
  Rational generating_value;
  bool match = false;
};

InverseTermsCheck check_inverse_explicit_terms(const Series<Rational>& f, int n);

}  // namespace biuv
