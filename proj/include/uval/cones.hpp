#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cache.hpp"
#include "kinematic.hpp"
#include "matrix.hpp"
#include "valuation.hpp"

namespace uval {

struct ConeWitness {
  std::string inequality;
  int k = 0;
  int q = 0;
};

struct ConeVerdict {
  bool member = true;
  std::optional<ConeWitness> witness;  // set iff member is false

  static ConeVerdict yes() { return {}; }
  static ConeVerdict no(std::string what, int k, int q) { return {false, ConeWitness{std::move(what), k, q}}; }
  explicit operator bool() const { return member; }
};

// G_{pq} = (mu_{k,p}, F mu_{k,q}) over Q(n,k)
inline const Matrix<Scalar>& mu_gram(int n, int k) {
  static MemoCache<std::pair<int, int>, Matrix<Scalar>> cache;
  return cache.get({n, k}, [&] {
    const int d = dim_val(n, k), lo = q_min(n, k);
    Matrix<Scalar> g(d, d);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) g(p, q) = pairing_pd(mu(n, k, lo + p), fourier(mu(n, k, lo + q)));
    return g;
  });
}

// b_q = <v, mu_{k,q}>, the coordinates in the basis dual to mu_{k,.}
inline std::vector<Scalar> nu_coeffs(const Valuation& v, int k) {
  for (int d : v.degrees())
    if (d != k) throw DomainError("nu_coeffs needs a valuation homogeneous of degree " + std::to_string(k));
  const Matrix<Scalar>& g = mu_gram(v.n(), k);
  return g.transpose().apply(v.coeffs(k));
}

// nu_{k,p}: the valuation with nu-coordinates e_p
inline Valuation nu(int n, int k, int p) {
  const int d = dim_val(n, k), lo = q_min(n, k);
  if (p < lo || p >= lo + d) throw IndexError("nu index out of range");
  std::vector<Scalar> e(d);
  e[p - lo] = Scalar(1);
  std::vector<Scalar> a = solve(mu_gram(n, k).transpose(), e);
  Valuation v(n);
  for (int i = 0; i < d; ++i) v.add(k, lo + i, a[i]);
  return v;
}

inline ConeVerdict is_positive(const Valuation& v) {
  for (const auto& [k, c] : v.components())
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sign(c[i]) < 0) return ConeVerdict::no("a_q >= 0", k, q_min(v.n(), k) + int(i));
  return ConeVerdict::yes();
}

inline ConeVerdict is_crofton_positive(const Valuation& v) {
  for (int k : v.degrees()) {
    std::vector<Scalar> b = nu_coeffs(v.component(k), k);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (sign(b[i]) < 0) return ConeVerdict::no("b_q >= 0", k, q_min(v.n(), k) + int(i));
  }
  return ConeVerdict::yes();
}

inline ConeVerdict is_monotone(const Valuation& v) {
  const int n = v.n();
  for (int k : v.degrees()) {
    auto a = [&](int q) { return v.coeff(k, q); };
    if (k == 0) {
      if (sign(a(0)) < 0) return ConeVerdict::no("a_0 >= 0", 0, 0);
      continue;
    }
    for (int q = std::max(0, k - n); q <= (k - 1) / 2; ++q) {
      Scalar lhs = Scalar(k - 2 * q) * a(q) - Scalar(k - 2 * q - 1) * a(q + 1);
      if (sign(lhs) < 0) return ConeVerdict::no("(k-2q) a_q >= (k-2q-1) a_{q+1}", k, q);
    }
    for (int q = std::max(0, k - n - 1); 2 * q <= k - 2; ++q) {  // q <= floor((k-2)/2), empty at k = 1
      // (n+q-k+3/2) a_{q+1} - (n+q-k+1) a_q >= 0, doubled to stay integral
      Scalar lhs = Scalar(2 * (n + q - k) + 3) * a(q + 1) - Scalar(2 * (n + q - k + 1)) * a(q);
      if (sign(lhs) < 0) return ConeVerdict::no("(n+q-k+1) a_q <= (n+q-k+3/2) a_{q+1}", k, q);
    }
  }
  return ConeVerdict::yes();
}

// Formal linear combination of the curvature measures B_{k,q} and Gamma_{k,q}.
enum class CurvKind { B, Gamma };

struct CurvExpr {
  std::map<std::tuple<CurvKind, int, int>, Scalar> terms;

  void add(CurvKind kind, int k, int q, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::tuple{kind, k, q};
    auto [it, fresh] = terms.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Scalar coeff(CurvKind kind, int k, int q) const {
    auto it = terms.find({kind, k, q});
    return it == terms.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const CurvExpr& a, const CurvExpr& b) { return a.terms == b.terms; }
};

namespace detail {

// c_{n,k,q} = 1/(q! (n-k+q)! (k-2q)! omega_{2n-k})
inline Scalar c_nkq(int n, int k, int q) {
  return Scalar(1) / (Scalar(factorial(q) * factorial(n - k + q) * factorial(k - 2 * q)) * omega(2 * n - k));
}

}  // namespace detail

// First variation, extended linearly from the formula for delta mu_{k,q}.
// Terms with a vanishing integer factor are skipped, so no factorial of a
// negative number is ever formed.
inline CurvExpr first_variation(const Valuation& v) {
  const int n = v.n();
  CurvExpr out;
  for (const auto& [k, c] : v.components()) {
    if (k == 0) continue;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      if (c[idx].is_zero()) continue;
      const int q = q_min(n, k) + int(idx);
      const Scalar two_c = Scalar(2) * detail::c_nkq(n, k, q) * c[idx];
      if (k - 2 * q > 0) {
        Scalar r = two_c / detail::c_nkq(n, k - 1, q);
        out.add(CurvKind::Gamma, k - 1, q, Scalar((k - 2 * q) * (k - 2 * q)) * r);
        if (k - 2 * q - 1 > 0) out.add(CurvKind::B, k - 1, q, Scalar(-(k - 2 * q) * (k - 2 * q - 1)) * r);
      }
      if (q > 0) {
        Scalar r = two_c / detail::c_nkq(n, k - 1, q - 1);
        if (n + q - k > 0) out.add(CurvKind::Gamma, k - 1, q - 1, Scalar(-(n + q - k) * q) * r);
        out.add(CurvKind::B, k - 1, q - 1, Scalar(make_rational(2 * (n + q - k) + 1, 2) * q) * r);
      }
    }
  }
  return out;
}

// max_q |a_q| on a homogeneous valuation
inline Scalar norm_inf(const Valuation& v) {
  if (v.is_zero()) return Scalar();
  const int k = v.homogeneous_degree();
  Scalar best;
  for (const Scalar& a : v.coeffs(k)) {
    Scalar x = abs(a);
    if (compare(x, best) > 0) best = x;
  }
  return best;
}

// sum_q |b_q| on a homogeneous valuation
inline Scalar norm_one(const Valuation& v) {
  if (v.is_zero()) return Scalar();
  const int k = v.homogeneous_degree();
  Scalar s;
  for (const Scalar& b : nu_coeffs(v, k)) s += abs(b);
  return s;
}

}  // namespace uval
