#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "valuation.hpp"

namespace uval {

enum class Sl2Op { L, Lambda, H };

// L mu_{k,q} = 2(q+1) mu_{k+1,q+1} + (k-2q+1) mu_{k+1,q}
inline Valuation apply_L(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [k, c] : v.components()) {
    if (k == 2 * n) continue;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const int q = q_min(n, k) + int(idx);
      r.add_truncated(k + 1, q + 1, Scalar(2 * (q + 1)) * c[idx]);
      r.add_truncated(k + 1, q, Scalar(k - 2 * q + 1) * c[idx]);
    }
  }
  return r;
}

// Lambda mu_{k,q} = 2(n-k+q+1) mu_{k-1,q} + (k-2q+1) mu_{k-1,q-1}
inline Valuation apply_Lambda(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [k, c] : v.components()) {
    if (k == 0) continue;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const int q = q_min(n, k) + int(idx);
      r.add_truncated(k - 1, q, Scalar(2 * (n - k + q + 1)) * c[idx]);
      r.add_truncated(k - 1, q - 1, Scalar(k - 2 * q + 1) * c[idx]);
    }
  }
  return r;
}

inline Valuation apply_H(const Valuation& v) {
  Valuation r(v.n());
  for (const auto& [k, _] : v.components()) r += Scalar(2 * k - 2 * v.n()) * v.component(k);
  return r;
}

inline Valuation apply(Sl2Op op, const Valuation& v) {
  switch (op) {
    case Sl2Op::L: return apply_L(v);
    case Sl2Op::Lambda: return apply_Lambda(v);
    case Sl2Op::H: return apply_H(v);
  }
  return v;
}

// number of primitive classes r = 0..p in degree k
inline int lefschetz_p(int n, int k) { return std::min(k / 2, (2 * n - k) / 2); }

namespace detail {

// tau-coefficient of pi_{k,r} at tau_{k,i}, up to the common prefactor
inline Rational primitive_tau_coeff(int n, int k, int r, int i) {
  Rational c = make_rational(double_factorial(2 * r - 2 * i - 1) * factorial(k - 2 * i),
                             double_factorial(2 * n - 2 * r - 2 * i + 1) * factorial(2 * r - 2 * i));
  return i % 2 ? Rational(-c) : c;
}

inline void check_primitive_range(int n, int k, int r) {
  if (r < 0 || 2 * r > k || k > 2 * n - 2 * r)
    throw IndexError("pi[" + std::to_string(k) + "," + std::to_string(r) + "] needs 2r <= k <= 2n-2r at n=" +
                     std::to_string(n));
}

}  // namespace detail

// pi_{k,r} = (-1)^r (2n-4r+1)!! sum_i (-1)^i (2r-2i-1)!!/(2n-2r-2i+1)!! (k-2i)!/(2r-2i)! tau_{k,i}
inline Valuation primitive_general(int n, int k, int r) {
  detail::check_primitive_range(n, k, r);
  Rational pre(double_factorial(2 * n - 4 * r + 1));
  if (r % 2) pre = -pre;
  Valuation v(n);
  for (int i = 0; i <= r; ++i) {
    Rational c = pre * detail::primitive_tau_coeff(n, k, r, i);
    v += Scalar(c) * tau(n, k, i);
  }
  return v;
}

inline Valuation primitive(int n, int r) {
  if (r < 0 || 2 * r > n) throw IndexError("pi[2r,r] needs 0 <= 2r <= n, got r=" + std::to_string(r));
  return primitive_general(n, 2 * r, r);
}

// pi_{k,r} = L^{k-2r} pi_{2r,r}, by iterating the operator
inline Valuation primitive_iterated(int n, int k, int r) {
  detail::check_primitive_range(n, k, r);
  Valuation v = primitive(n, r);
  for (int j = 2 * r; j < k; ++j) v = apply_L(v);
  return v;
}

// columns: mu-coordinates of pi_{k,0..p}
inline Matrix<Scalar> primitive_basis_matrix(int n, int k) {
  const int p = lefschetz_p(n, k), d = dim_val(n, k);
  Matrix<Scalar> m(d, p + 1);
  for (int r = 0; r <= p; ++r) {
    std::vector<Scalar> col = primitive_general(n, k, r).coeffs(k);
    for (int i = 0; i < d; ++i) m(i, r) = col[i];
  }
  return m;
}

struct LefschetzTerm {
  int k;
  int r;
  Scalar coeff;

  friend bool operator==(const LefschetzTerm& a, const LefschetzTerm& b) {
    return a.k == b.k && a.r == b.r && a.coeff == b.coeff;
  }
};

// v = sum coeff * pi_{k,r}
inline std::vector<LefschetzTerm> lefschetz_decompose(const Valuation& v) {
  std::vector<LefschetzTerm> out;
  for (const auto& [k, c] : v.components()) {
    std::vector<Scalar> x = solve(primitive_basis_matrix(v.n(), k), c);
    for (std::size_t r = 0; r < x.size(); ++r)
      if (!x[r].is_zero()) out.push_back({k, int(r), x[r]});
  }
  return out;
}

inline Valuation lefschetz_reconstruct(int n, const std::vector<LefschetzTerm>& terms) {
  Valuation v(n);
  for (const auto& t : terms) v += t.coeff * primitive_general(n, t.k, t.r);
  return v;
}

// matrix of L^{m}: degree k -> degree k+m in mu coordinates
inline Matrix<Scalar> lefschetz_power_matrix(int n, int k, int m) {
  const int d0 = dim_val(n, k), d1 = dim_val(n, k + m);
  Matrix<Scalar> out(d1, d0);
  for (int j = 0; j < d0; ++j) {
    Valuation v = mu(n, k, q_min(n, k) + j);
    for (int s = 0; s < m; ++s) v = apply_L(v);
    std::vector<Scalar> col = v.coeffs(k + m);
    for (int i = 0; i < d1; ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace uval
