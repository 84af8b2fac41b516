#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "lefschetz.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "valuation.hpp"

namespace uval {

// Mu is the storage basis.  Tau uses the locally truncated tau_{k,i}, i in
// Q(n,k).  Mono is s^p t^{k-2p}, p = 0..dim-1.  Prim is pi_{k,r}, r = 0..dim-1.
enum class Basis { Mu, Tau, Mono, Prim };

inline Basis parse_basis(const std::string& s) {
  if (s == "mu") return Basis::Mu;
  if (s == "tau") return Basis::Tau;
  if (s == "mono") return Basis::Mono;
  if (s == "prim") return Basis::Prim;
  throw DomainError("unknown basis '" + s + "' (expected mu|tau|mono|prim)");
}

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Mu: return "mu";
    case Basis::Tau: return "tau";
    case Basis::Mono: return "mono";
    case Basis::Prim: return "prim";
  }
  return "?";
}

// first index of the basis in degree k
inline int basis_offset(int n, int k, Basis b) {
  return (b == Basis::Mu || b == Basis::Tau) ? q_min(n, k) : 0;
}

inline GradedPoly mono_poly(int k, int p) {
  return variable_s(Chart::ST).pow(p) * variable_t(Chart::ST).pow(k - 2 * p);
}

inline Valuation basis_element(int n, int k, int idx, Basis b) {
  switch (b) {
    case Basis::Mu: return mu(n, k, idx);
    case Basis::Tau: return tau(n, k, idx);
    case Basis::Mono:
      if (idx < 0 || idx >= dim_val(n, k)) throw IndexError("monomial index out of range");
      return from_monomial(n, mono_poly(k, idx));
    case Basis::Prim: return primitive_general(n, k, idx);
  }
  return Valuation(n);
}

inline std::string basis_label(int k, int idx, Basis b) {
  const std::string ks = std::to_string(k), is = std::to_string(idx);
  switch (b) {
    case Basis::Mu: return "mu[" + ks + "," + is + "]";
    case Basis::Tau: return "tau[" + ks + "," + is + "]";
    case Basis::Prim: return "pi[" + ks + "," + is + "]";
    case Basis::Mono: {
      if (k == 0) return "chi";
      std::string out;
      auto power = [](const char* var, int e) {
        return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
      };
      if (idx > 0) out += power("s", idx);
      if (k - 2 * idx > 0) out += (out.empty() ? "" : "*") + power("t", k - 2 * idx);
      return out;
    }
  }
  return "?";
}

// columns: mu-coordinates of the basis of degree k
inline const Matrix<Scalar>& basis_matrix(int n, int k, Basis b) {
  static MemoCache<std::tuple<int, int, int>, Matrix<Scalar>> cache;
  return cache.get({n, k, int(b)}, [&] {
    const int d = dim_val(n, k), off = basis_offset(n, k, b);
    Matrix<Scalar> m(d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<Scalar> col = basis_element(n, k, off + j, b).coeffs(k);
      for (int i = 0; i < d; ++i) m(i, j) = col[i];
    }
    return m;
  });
}

inline std::vector<Scalar> coords(const Valuation& v, int k, Basis b) {
  switch (b) {
    case Basis::Mu: return v.coeffs(k);
    case Basis::Tau: return tau_coords(v, k);
    default: return solve(basis_matrix(v.n(), k, b), v.coeffs(k));
  }
}

inline Valuation from_coords(int n, int k, const std::vector<Scalar>& c, Basis b) {
  const int off = basis_offset(n, k, b);
  Valuation v(n);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) v += c[i] * basis_element(n, k, off + int(i), b);
  return v;
}

}  // namespace uval
