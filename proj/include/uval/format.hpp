#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bases.hpp"
#include "kinematic.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "valuation.hpp"

namespace uval {

namespace detail {

inline std::string pi_power(int e) { return e == 1 ? "π" : "π^" + std::to_string(e); }

// |c| pi^e with c != 0, no sign
inline std::string unsigned_term(const Rational& c, int e) {
  const Integer p = abs(c.get_num()), q = c.get_den();
  const std::string ps = p.get_str(), qs = q.get_str();
  if (e == 0) return q == 1 ? ps : ps + "/" + qs;
  if (e > 0) {
    std::string num = (p == 1 ? "" : ps) + pi_power(e);
    return q == 1 ? num : num + "/" + qs;
  }
  if (q == 1) return ps + "/" + pi_power(-e);
  return ps + "/(" + qs + pi_power(-e) + ")";
}

}  // namespace detail

// 3/8, 3π/8, 3/(8π), π^2/2, 1 + π
inline std::string format_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    const bool neg = c < 0;
    if (out.empty()) out = neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += detail::unsigned_term(c, e);
  }
  return out;
}

// coefficient in front of a basis label; returns "" for 1 and "-" for -1
inline std::string format_coefficient(const Scalar& c, bool first) {
  std::string sign_part, body;
  if (c.is_monomial()) {
    const bool neg = c.lead_coeff() < 0;
    sign_part = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    Scalar a = neg ? -c : c;
    if (a != Scalar(1)) body = format_scalar(a) + "*";
  } else {
    sign_part = first ? "" : " + ";
    body = "(" + format_scalar(c) + ")*";
  }
  return sign_part + body;
}

inline std::string format_valuation(const Valuation& v, Basis b = Basis::Mu) {
  std::string out;
  for (int k : v.degrees()) {
    std::vector<Scalar> c = coords(v, k, b);
    const int off = basis_offset(v.n(), k, b);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      out += format_coefficient(c[i], out.empty()) + basis_label(k, off + int(i), b);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string format_poly(const GradedPoly& p) {
  std::string out;
  const char* second = p.chart() == Chart::TU ? "u" : "s";
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    auto power = [](const std::string& var, int e) { return e == 1 ? var : var + "^" + std::to_string(e); };
    if (m.a > 0) mono = power("t", m.a);
    if (m.b > 0) mono += (mono.empty() ? "" : "*") + power(second, m.b);
    if (mono.empty()) {
      out += out.empty() ? format_scalar(c) : " + " + format_scalar(c);
      continue;
    }
    out += format_coefficient(c, out.empty()) + mono;
  }
  return out.empty() ? "0" : out;
}

// Matrix with a common monomial factor pulled out, "1/8 * [[3,-1],[-1,3]]".
inline std::string format_matrix(const Matrix<Scalar>& m) {
  bool common = true, any = false;
  int e = 0;
  Integer g = 0, l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (x.is_zero()) continue;
      if (!x.is_monomial() || (any && x.lead_exponent() != e)) {
        common = false;
        continue;
      }
      e = x.lead_exponent();
      any = true;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.lead_coeff().get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.lead_coeff().get_den_mpz_t());
    }
  Scalar factor(1);
  if (common && any) factor = Scalar::monomial(make_rational(g, l), e);
  std::ostringstream os;
  if (factor != Scalar(1)) os << format_scalar(factor) << " * ";
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      Scalar x = m(i, j) / factor;
      os << (x.is_monomial() || x.is_zero() ? format_scalar(x) : "(" + format_scalar(x) + ")");
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

inline std::string format_tensor(const KinematicTensor& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, mat] : t.blocks) {
    if (!first) os << "\n";
    first = false;
    const auto [a, b] = key;
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
      return s;
    };
    os << "(" << a << "," << b << ") rows: " << join(canonical_basis_labels(t.n, a))
       << "; cols: " << join(canonical_basis_labels(t.n, b)) << "\n  " << format_matrix(mat);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace uval
