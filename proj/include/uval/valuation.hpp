#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace uval {

// Admissible q for mu_{k,q} at dimension n: max(0, k-n) <= q <= floor(k/2).
inline int q_min(int n, int k) { return std::max(0, k - n); }
inline int q_max(int k) { return k / 2; }

inline void check_degree(int n, int k) {
  if (n < 0) throw IndexError("negative dimension");
  if (k < 0 || k > 2 * n)
    throw IndexError("degree " + std::to_string(k) + " outside [0, " + std::to_string(2 * n) + "]");
}

inline int dim_val(int n, int k) {
  check_degree(n, k);
  return std::min(k / 2, (2 * n - k) / 2) + 1;
}

inline bool in_range(int n, int k, int q) {
  return n >= 0 && k >= 0 && k <= 2 * n && q >= q_min(n, k) && q <= q_max(k);
}

// Element of Val^{U(n)} stored in the mu_{k,q} basis.  Component k is a
// vector indexed by q - q_min(n,k); all-zero components are dropped.
class Valuation {
 public:
  explicit Valuation(int n = 0) : n_(n) {
    if (n < 0) throw IndexError("negative dimension");
  }

  int n() const { return n_; }
  const std::map<int, std::vector<Scalar>>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& [k, _] : comps_) d.push_back(k);
    return d;
  }

  // the single degree of a nonzero homogeneous valuation
  int homogeneous_degree() const {
    if (comps_.size() != 1) throw DomainError("valuation is not homogeneous of a single degree");
    return comps_.begin()->first;
  }

  Scalar coeff(int k, int q) const {
    if (!in_range(n_, k, q)) return Scalar();
    auto it = comps_.find(k);
    if (it == comps_.end()) return Scalar();
    return it->second[q - q_min(n_, k)];
  }

  // dense mu-coordinates of degree k, indexed by q - q_min
  std::vector<Scalar> coeffs(int k) const {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    return std::vector<Scalar>(dim_val(n_, k));
  }

  void add(int k, int q, const Scalar& c) {
    if (!in_range(n_, k, q))
      throw IndexError("mu[" + std::to_string(k) + "," + std::to_string(q) + "] out of range at n=" +
                       std::to_string(n_));
    add_unchecked(k, q, c);
  }

  // out-of-range indices are read as the zero valuation
  void add_truncated(int k, int q, const Scalar& c) {
    if (in_range(n_, k, q)) add_unchecked(k, q, c);
  }

  Valuation component(int k) const {
    Valuation r(n_);
    auto it = comps_.find(k);
    if (it != comps_.end()) r.comps_.emplace(k, it->second);
    return r;
  }

  Valuation& operator+=(const Valuation& o) {
    check_n(o);
    for (const auto& [k, v] : o.comps_)
      for (std::size_t i = 0; i < v.size(); ++i) add_unchecked(k, q_min(n_, k) + int(i), v[i]);
    return *this;
  }
  Valuation& operator-=(const Valuation& o) { return *this += Scalar(-1) * o; }

  friend Valuation operator+(Valuation a, const Valuation& b) { return a += b; }
  friend Valuation operator-(Valuation a, const Valuation& b) { return a -= b; }
  friend Valuation operator-(const Valuation& a) { return Scalar(-1) * a; }
  friend Valuation operator*(const Scalar& s, const Valuation& v) {
    Valuation r(v.n_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : v.comps_) {
      std::vector<Scalar> w(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) w[i] = s * c[i];
      r.comps_.emplace(k, std::move(w));
    }
    return r;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

  void check_n(const Valuation& o) const {
    if (n_ != o.n_)
      throw DimensionMismatch("valuations live in dimensions " + std::to_string(n_) + " and " +
                              std::to_string(o.n_));
  }

 private:
  void add_unchecked(int k, int q, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(k);
    if (it == comps_.end()) it = comps_.emplace(k, std::vector<Scalar>(dim_val(n_, k))).first;
    auto& slot = it->second[q - q_min(n_, k)];
    slot += c;
    if (std::all_of(it->second.begin(), it->second.end(), [](const Scalar& x) { return x.is_zero(); }))
      comps_.erase(it);
  }

  int n_;
  std::map<int, std::vector<Scalar>> comps_;
};

inline Valuation mu(int n, int k, int q) {
  check_degree(n, k);
  Valuation v(n);
  v.add(k, q, Scalar(1));
  return v;
}

inline Valuation chi(int n) { return mu(n, 0, 0); }
inline Valuation vol(int n) { return mu(n, 2 * n, n); }

// tau_{k,q} = sum_{i >= q} C(i,q) mu_{k,i}, dropping i < k-n
inline Valuation tau(int n, int k, int q) {
  check_degree(n, k);
  if (q < 0 || q > q_max(k))
    throw IndexError("tau[" + std::to_string(k) + "," + std::to_string(q) + "] out of range");
  Valuation v(n);
  for (int i = q; i <= q_max(k); ++i) v.add_truncated(k, i, Scalar(binomial(i, q)));
  return v;
}

// tau_{k,q} = alpha(k,q) t^{k-2q} u^q with alpha = pi^k / (omega_k (k-2q)! (2q)!)
inline Scalar tasaki_alpha(int k, int q) {
  return Scalar::pi(k) / (omega(k) * Scalar(factorial(k - 2 * q) * factorial(2 * q)));
}

// The quotient map from polynomials to Val^{U(n)}.  This is the only place
// where the local truncation tau -> mu happens.
inline Valuation from_monomial(int n, const GradedPoly& p) {
  const GradedPoly tu = change_vars(p, Chart::TU);
  Valuation v(n);
  for (const auto& [m, c] : tu.terms()) {
    const int k = m.degree();
    if (k > 2 * n) continue;
    v += (c / tasaki_alpha(k, m.b)) * tau(n, k, m.b);
  }
  return v;
}

// Global representative: mu_{k,q} = sum_i (-1)^{i+q} C(i,q) tau_{k,i} with
// every tau_{k,i} written as a monomial.
inline GradedPoly to_monomial(const Valuation& v) {
  GradedPoly p(Chart::TU);
  const int n = v.n();
  for (const auto& [k, c] : v.components()) {
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      if (c[idx].is_zero()) continue;
      const int q = q_min(n, k) + int(idx);
      for (int i = q; i <= q_max(k); ++i) {
        Scalar w = Scalar(binomial(i, q)) * tasaki_alpha(k, i) * c[idx];
        if ((i + q) % 2) w = -w;
        p.add(Monomial{k - 2 * i, i}, w);
      }
    }
  }
  return p;
}

inline Valuation multiply(const Valuation& a, const Valuation& b) {
  a.check_n(b);
  const int n = a.n();
  // drop products that land above degree 2n before expanding
  GradedPoly pa = to_monomial(a), pb = to_monomial(b);
  GradedPoly prod(Chart::TU);
  for (const auto& [ma, ca] : pa.terms())
    for (const auto& [mb, cb] : pb.terms())
      if (ma.degree() + mb.degree() <= 2 * n) prod.add(Monomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
  return from_monomial(n, prod);
}

inline Valuation fourier(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [k, c] : v.components())
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const int q = q_min(n, k) + int(idx);
      r.add(2 * n - k, n - k + q, c[idx]);
    }
  return r;
}

// tau-coordinates of degree k: c_i for i in Q(n,k), where the tau are the
// locally truncated Tasaki valuations (unitriangular over mu).
inline std::vector<Scalar> tau_coords(const Valuation& v, int k) {
  const int n = v.n();
  const int lo = q_min(n, k), hi = q_max(k);
  std::vector<Scalar> a = v.coeffs(k), c(a.size());
  for (int i = lo; i <= hi; ++i)
    for (int q = lo; q <= i; ++q) {
      if (a[q - lo].is_zero()) continue;
      Scalar w = Scalar(binomial(i, q)) * a[q - lo];
      c[i - lo] += (i + q) % 2 ? -w : w;
    }
  return c;
}

inline Valuation from_tau_coords(int n, int k, const std::vector<Scalar>& c) {
  const int lo = q_min(n, k);
  Valuation v(n);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) v += c[i] * tau(n, k, lo + int(i));
  return v;
}

// Swap tau_{2l,q} <-> tau_{2l,l-q} on the global representative.  In monomial
// terms this exchanges t^{2l-2q} u^q and t^{2q} u^{l-q}; the alpha factors of
// the two sides coincide.
inline Valuation iota(const Valuation& v) {
  for (const auto& [k, _] : v.components())
    if (k % 2) throw DomainError("iota is defined on even degrees only; degree " + std::to_string(k) + " present");
  GradedPoly p = to_monomial(v), flipped(Chart::TU);
  for (const auto& [m, c] : p.terms()) {
    const int l = m.degree() / 2;
    flipped.add(Monomial{2 * m.b, l - m.b}, c);
  }
  return from_monomial(v.n(), flipped);
}

// Klain function of the degree-k part as sum_q c_q sigma_q(cos^2 Theta).
struct KlainPolynomial {
  int degree = 0;
  std::vector<Scalar> sigma_coeffs;

  friend bool operator==(const KlainPolynomial& a, const KlainPolynomial& b) {
    return a.degree == b.degree && a.sigma_coeffs == b.sigma_coeffs;
  }

  // value at the given cos^2 of the Kahler angles
  double evaluate(const std::vector<double>& cos2) const {
    // elementary symmetric polynomials by the usual DP
    std::vector<double> e(cos2.size() + 1, 0.0);
    e[0] = 1.0;
    for (double x : cos2)
      for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += x * e[j - 1];
    double r = 0;
    for (std::size_t q = 0; q < sigma_coeffs.size() && q < e.size(); ++q) r += sigma_coeffs[q].to_double() * e[q];
    return r;
  }
};

inline KlainPolynomial klain(const Valuation& v, int k) {
  const int n = v.n();
  check_degree(n, k);
  if (k > n)
    throw DomainError("klain needs k <= n; for k > n use klain(fourier(v), 2n-k) on the orthogonal complement");
  return KlainPolynomial{k, tau_coords(v, k)};
}

}  // namespace uval
