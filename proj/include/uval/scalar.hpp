#pragma once

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace uval {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(long m) {
  if (m < 0) throw DomainError("factorial of negative integer " + std::to_string(m));
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

// C(n, k), zero outside 0 <= k <= n
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// m!! for m >= -1, with (-1)!! = 0!! = 1
inline Integer double_factorial(long m) {
  if (m < -1) throw DomainError("double factorial needs m >= -1, got " + std::to_string(m));
  if (m <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

// Laurent polynomial in pi with rational coefficients.  pi is a formal
// transcendental; no floating point is involved in the arithmetic.
class Scalar {
 public:
  using Terms = std::map<int, Rational>;

  Scalar() = default;
  Scalar(long v) { set(0, Rational(v)); }  // NOLINT: implicit on purpose
  Scalar(const Rational& r) { set(0, r); }  // NOLINT
  Scalar(const Integer& z) { set(0, Rational(z)); }  // NOLINT
  // gmp expression templates, e.g. factorial(a) * factorial(b)
  template <class T, class U>
  Scalar(const __gmp_expr<T, U>& e) { set(0, Rational(e)); }  // NOLINT

  static Scalar monomial(const Rational& c, int pi_exp) {
    Scalar s;
    s.set(pi_exp, c);
    return s;
  }
  static Scalar pi(int e = 1) { return monomial(Rational(1), e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // only meaningful when is_monomial()
  int lead_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  const Rational& lead_coeff() const {
    static const Rational zero(0);
    return terms_.empty() ? zero : terms_.begin()->second;
  }

  Rational to_rational() const {
    if (!is_rational()) throw DomainError("scalar involves pi: " + debug_string());
    return coeff(0);
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    *this = *this / o;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a) {
    Scalar r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Rational p = ca * cb;
        r.add_term(ea + eb, p);
      }
    return r;
  }
  // exact division; the divisor must be a single nonzero term
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.terms_.size() != 1) {
      throw DomainError(b.is_zero() ? "division by zero scalar"
                                    : "division by multi-term scalar " + b.debug_string());
    }
    const int e = b.terms_.begin()->first;
    const Rational& c = b.terms_.begin()->second;
    Scalar r;
    for (const auto& [ea, ca] : a.terms_) {
      Rational q = ca / c;
      r.terms_.emplace(ea - e, q);
    }
    return r;
  }

  Scalar inverse() const { return Scalar(1) / *this; }

  Scalar pow(int m) const {
    if (m < 0) return inverse().pow(-m);
    Scalar r(1), b = *this;
    while (m) {
      if (m & 1) r *= b;
      b *= b;
      m >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  double to_double() const {
    double r = 0;
    for (const auto& [e, c] : terms_) r += c.get_d() * std::pow(M_PI, e);
    return r;
  }
  double to_float() const { return to_double(); }

  // unambiguous form used in error messages, e.g. "3/8*pi^-1 + 1"
  std::string debug_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      if (e != 0) s += "*pi^" + std::to_string(e);
    }
    return s;
  }

 private:
  void set(int e, const Rational& c) {
    if (c != 0) terms_[e] = c;
  }
  void add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

// Volume of the unit k-ball: pi^l/l! for k = 2l and 2^{l+1} pi^l/(2l+1)!! for k = 2l+1.
inline Scalar omega(long k) {
  if (k < 0) throw DomainError("omega needs k >= 0");
  const int l = static_cast<int>(k / 2);
  if (k % 2 == 0) return Scalar::monomial(make_rational(1, factorial(l)), l);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(l + 1));
  return Scalar::monomial(make_rational(two_pow, double_factorial(k)), l);
}

// Rational bracket lo < pi < hi.  Level 0 is 333/106 < pi < 355/113; higher
// levels use partial sums of Machin's series, which alternate around the limit.
struct PiEnclosure {
  Rational lo, hi;

  static PiEnclosure at_level(int level) {
    if (level <= 0) return {make_rational(333, 106), make_rational(355, 113)};
    const int terms = 4 << (level - 1);
    auto atan_bracket = [terms](long inv) {
      // partial sums S_N and S_{N+1} of atan(1/inv) bracket the value
      Rational s = 0, prev = 0;
      Integer p = inv;
      for (int j = 0; j <= terms; ++j) {
        prev = s;
        Rational t = make_rational(Integer(1), p * (2 * j + 1));
        if (j % 2) s -= t; else s += t;
        p *= inv * inv;
      }
      return s < prev ? std::pair{s, prev} : std::pair{prev, s};
    };
    auto [a_lo, a_hi] = atan_bracket(5);
    auto [b_lo, b_hi] = atan_bracket(239);
    Rational lo = 16 * a_lo - 4 * b_hi;
    Rational hi = 16 * a_hi - 4 * b_lo;
    return {lo, hi};
  }

  Rational width() const { return hi - lo; }
};

namespace detail {

// interval of a scalar over pi in [lo, hi] (lo > 0)
inline std::pair<Rational, Rational> eval_interval(const Scalar& s, const PiEnclosure& pe) {
  Rational lo = 0, hi = 0;
  for (const auto& [e, c] : s.terms()) {
    Rational a = 1, b = 1;
    mpq_class base_lo = e >= 0 ? pe.lo : Rational(1 / pe.hi);
    mpq_class base_hi = e >= 0 ? pe.hi : Rational(1 / pe.lo);
    for (int i = 0; i < std::abs(e); ++i) {
      a *= base_lo;
      b *= base_hi;
    }
    if (c > 0) {
      lo += c * a;
      hi += c * b;
    } else {
      lo += c * b;
      hi += c * a;
    }
  }
  return {lo, hi};
}

}  // namespace detail

// Sign of the real number obtained by substituting pi.  Monomials are decided
// by their coefficient; otherwise the enclosure is refined until the interval
// excludes zero or its width drops to 1e-30.
inline int sign(const Scalar& s) {
  if (s.is_zero()) return 0;
  if (s.is_monomial()) return sgn(s.lead_coeff());
  const Rational limit = make_rational(Integer(1), Integer("1000000000000000000000000000000"));
  for (int level = 0;; ++level) {
    PiEnclosure pe = PiEnclosure::at_level(level);
    auto [lo, hi] = detail::eval_interval(s, pe);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (pe.width() <= limit || level > 12)
      throw UndecidableSign("cannot separate " + s.debug_string() + " from zero");
  }
}

inline int compare(const Scalar& a, const Scalar& b) { return sign(a - b); }
inline Scalar abs(const Scalar& s) { return sign(s) < 0 ? -s : s; }
inline double to_double(const Scalar& s) { return s.to_double(); }

}  // namespace uval
