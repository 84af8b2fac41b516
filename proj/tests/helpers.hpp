#pragma once

#include <random>

#include "uval/uval.hpp"

namespace uval::testing {

inline Scalar q(long p, long r = 1) { return Scalar(make_rational(p, r)); }

// small Laurent polynomial in pi with up to three terms
inline Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), ex(-2, 2), terms(0, 3);
  Scalar s;
  for (int i = terms(rng); i > 0; --i) s += Scalar::monomial(make_rational(num(rng), den(rng)), ex(rng));
  return s;
}

inline Valuation random_valuation(int n, std::mt19937_64& rng, bool even_only = false) {
  std::uniform_int_distribution<int> c(-5, 5);
  Valuation v(n);
  for (int k = 0; k <= 2 * n; ++k) {
    if (even_only && k % 2) continue;
    for (int qq = q_min(n, k); qq <= q_max(k); ++qq) v.add(k, qq, q(c(rng), 1 + (qq % 3)));
  }
  return v;
}

inline Valuation random_homogeneous(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  Valuation v(n);
  for (int qq = q_min(n, k); qq <= q_max(k); ++qq) v.add(k, qq, q(c(rng)));
  return v;
}

}  // namespace uval::testing
