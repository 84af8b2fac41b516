#pragma once

#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "scalar.hpp"

namespace uval {

// TU: monomials t^a u^b.  ST: monomials t^a s^b.  In both charts the second
// variable has degree 2, so deg = a + 2b either way.
enum class Chart { TU, ST };

struct Monomial {
  int a = 0;  // exponent of t
  int b = 0;  // exponent of u (TU) or s (ST)

  int degree() const { return a + 2 * b; }

  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.b < y.b;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.a == y.a && x.b == y.b; }
};

class GradedPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit GradedPoly(Chart chart = Chart::TU) : chart_(chart) {}
  GradedPoly(Chart chart, const Scalar& c) : chart_(chart) { add(Monomial{0, 0}, c); }

  static GradedPoly monomial(Chart chart, int a, int b, const Scalar& c = Scalar(1)) {
    if (a < 0 || b < 0) throw DomainError("negative exponent in monomial");
    GradedPoly p(chart);
    p.add(Monomial{a, b}, c);
    return p;
  }

  Chart chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(int a, int b) const {
    auto it = terms_.find(Monomial{a, b});
    return it == terms_.end() ? Scalar() : it->second;
  }

  // highest degree carrying a nonzero term, -1 for zero
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  GradedPoly component(int k) const {
    GradedPoly r(chart_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
  }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    check_chart(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  GradedPoly& operator-=(const GradedPoly& o) {
    check_chart(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator-(const GradedPoly& a) { return Scalar(-1) * a; }

  friend GradedPoly operator*(const GradedPoly& p, const GradedPoly& q) {
    p.check_chart(q);
    GradedPoly r(p.chart_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add(Monomial{mp.a + mq.a, mp.b + mq.b}, cp * cq);
    return r;
  }
  friend GradedPoly operator*(const Scalar& s, const GradedPoly& p) {
    GradedPoly r(p.chart_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  GradedPoly pow(int e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    GradedPoly r(chart_, Scalar(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const GradedPoly& p, const GradedPoly& q) {
    return p.chart_ == q.chart_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const GradedPoly& p, const GradedPoly& q) { return !(p == q); }

 private:
  void check_chart(const GradedPoly& o) const {
    if (chart_ != o.chart_) throw DomainError("polynomials live in different charts");
  }

  Chart chart_;
  Terms terms_;
};

inline GradedPoly variable_t(Chart chart = Chart::TU) { return GradedPoly::monomial(chart, 1, 0); }

inline GradedPoly variable_u(Chart chart = Chart::TU) {
  if (chart == Chart::TU) return GradedPoly::monomial(chart, 0, 1);
  // u = 4s - t^2
  return GradedPoly::monomial(chart, 0, 1, Scalar(4)) - GradedPoly::monomial(chart, 2, 0);
}

inline GradedPoly variable_s(Chart chart = Chart::TU) {
  if (chart == Chart::ST) return GradedPoly::monomial(chart, 0, 1);
  // s = (u + t^2)/4
  Scalar q(make_rational(1, 4));
  return GradedPoly::monomial(chart, 0, 1, q) + GradedPoly::monomial(chart, 2, 0, q);
}

// Substitute u = 4s - t^2 or s = (u + t^2)/4.
inline GradedPoly change_vars(const GradedPoly& p, Chart target) {
  if (p.chart() == target) return p;
  const GradedPoly second = p.chart() == Chart::TU ? variable_u(target) : variable_s(target);
  GradedPoly r(target);
  std::map<int, GradedPoly> powers;
  for (const auto& [m, c] : p.terms()) {
    auto it = powers.find(m.b);
    if (it == powers.end()) it = powers.emplace(m.b, second.pow(m.b)).first;
    r += c * (GradedPoly::monomial(target, m.a, 0) * it->second);
  }
  return r;
}

// f_k through the three-term recursion in the (s,t) chart,
// (k+2) f_{k+2} = -k s f_k - (k+1) t f_{k+1},  f_1 = t,  f_2 = s - t^2/2.
inline GradedPoly f_recursive_st(int k) {
  if (k < 1) throw DomainError("f_k needs k >= 1");
  const GradedPoly s = variable_s(Chart::ST), t = variable_t(Chart::ST);
  GradedPoly prev = t;
  GradedPoly cur = s - Scalar(make_rational(1, 2)) * t.pow(2);
  if (k == 1) return prev;
  for (int j = 1; j + 2 <= k; ++j) {
    GradedPoly next = Scalar(make_rational(-j, j + 2)) * (s * prev) +
                      Scalar(make_rational(-(j + 1), j + 2)) * (t * cur);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline GradedPoly f_recursive(int k) { return change_vars(f_recursive_st(k), Chart::TU); }

// f_k = 1/(k (-2)^{k-1}) sum_q (-1)^q C(k,2q) t^{k-2q} u^q
inline GradedPoly f_closed(int k) {
  if (k < 1) throw DomainError("f_k needs k >= 1");
  Integer den = k;
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
  den *= two_pow;
  if ((k - 1) % 2) den = -den;
  GradedPoly r(Chart::TU);
  for (int q = 0; 2 * q <= k; ++q) {
    Integer num = binomial(k, 2 * q);
    if (q % 2) num = -num;
    r.add(Monomial{k - 2 * q, q}, Scalar(make_rational(num, den)));
  }
  return r;
}

}  // namespace uval
