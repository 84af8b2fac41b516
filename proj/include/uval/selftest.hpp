#pragma once

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cones.hpp"
#include "grassmann.hpp"
#include "kinematic.hpp"
#include "lefschetz.hpp"
#include "poly.hpp"
#include "valuation.hpp"

namespace uval {

enum class SelftestLevel { Quick, Full };

struct SelftestReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::pair<std::string, bool>> results;
  bool ok() const { return failed == 0; }
};

namespace detail {

inline bool check_relations(int n) {
  for (int idx : {n + 1, n + 2}) {
    const GradedPoly f = f_closed(idx);
    for (int deg = 0; deg + idx <= 2 * n; ++deg)
      for (int b = 0; 2 * b <= deg; ++b)
        if (!from_monomial(n, GradedPoly::monomial(Chart::TU, deg - 2 * b, b) * f).is_zero()) return false;
  }
  return true;
}

inline bool check_sl2(int n) {
  for (int k = 0; k <= 2 * n; ++k)
    for (int q = q_min(n, k); q <= q_max(k); ++q) {
      const Valuation v = mu(n, k, q);
      if (apply_L(apply_Lambda(v)) - apply_Lambda(apply_L(v)) != apply_H(v)) return false;
      if (apply_H(apply_L(v)) - apply_L(apply_H(v)) != Scalar(2) * apply_L(v)) return false;
      if (apply_H(apply_Lambda(v)) - apply_Lambda(apply_H(v)) != Scalar(-2) * apply_Lambda(v)) return false;
    }
  return true;
}

inline bool check_hard_lefschetz(int n) {
  for (int k = 0; k <= n; ++k) {
    Matrix<Scalar> m = lefschetz_power_matrix(n, k, 2 * n - 2 * k);
    if (!m.square() || rank(m) != m.rows()) return false;
  }
  return true;
}

inline bool check_magic(int n) {
  for (int k = 0; k <= 2 * n; ++k)
    for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r) {
      const Scalar c = Scalar(factorial(k - 2 * r)) / Scalar(factorial(2 * n - 2 * r - k));
      if (fourier(primitive_general(n, k, r)) != c * primitive_general(n, 2 * n - k, r)) return false;
    }
  return true;
}

inline bool check_tasaki_routes(int n) {
  for (int k = 0; k <= n; ++k)
    if (tasaki_matrix_closed(n, k).entries != tasaki_matrix_oracle(n, k).entries) return false;
  return true;
}

inline bool check_tasaki_shape(int n) {
  for (int k = 0; k <= n; ++k) {
    const Matrix<Scalar> t = tasaki_matrix_closed(n, k).entries;
    if (!t.is_symmetric()) return false;
    if (k % 2 == 0) {
      const std::size_t l = k / 2;
      for (std::size_t i = 0; i <= l; ++i)
        for (std::size_t j = 0; j <= l; ++j)
          if (t(i, j) != t(l - i, l - j)) return false;
    }
    for (const Scalar& m : leading_minors(t))
      if (sign(m) <= 0) return false;
  }
  return true;
}

inline bool check_primitive_pairing(int n) {
  for (int k = 0; k <= 2 * n; ++k)
    for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r) {
      const Valuation p = primitive_general(n, k, r);
      if (primitive_pairing_closed(n, k, r) != pairing_pd(p, fourier(p))) return false;
      for (int s = 0; 2 * s <= std::min(k, 2 * n - k); ++s)
        if (s != r && !pairing_pd(p, primitive_general(n, 2 * n - k, s)).is_zero()) return false;
    }
  return true;
}

inline bool check_cones(int n) {
  const Valuation kaz = mu(n, n, 0);
  if (!is_positive(kaz) || is_monotone(kaz) || is_crofton_positive(kaz)) return false;
  for (int k = 0; k <= 2 * n; ++k)
    if (!is_monotone(tau(n, k, 0))) return false;
  return true;
}

inline bool check_klain(int n) {
  for (int k = 0; k <= n; ++k)
    for (int q = 0; q <= k / 2; ++q) {
      const KlainPolynomial kl = klain(mu(n, k, q), k);
      for (int q2 = 0; q2 <= k / 2; ++q2) {
        const double v = kl.evaluate(squares(kahler_cosines(model_frame_kq(n, k, q2))));
        if (std::abs(v - (q == q2 ? 1.0 : 0.0)) > 1e-9) return false;
      }
    }
  return true;
}

}  // namespace detail

inline SelftestReport run_selftest(SelftestLevel level, std::ostream* log = nullptr) {
  const bool full = level == SelftestLevel::Full;
  const int nmax = full ? 6 : 3;
  SelftestReport rep;
  auto run = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      if (log) *log << "  " << name << ": exception: " << e.what() << "\n";
    }
    rep.results.emplace_back(name, ok);
    (ok ? rep.passed : rep.failed)++;
    if (log) *log << (ok ? "ok   " : "FAIL ") << name << "\n";
  };

  run("omega recursion", [] {
    for (int k = 2; k <= 30; ++k)
      if (omega(k) != Scalar::pi(1) * Scalar(make_rational(2, k)) * omega(k - 2)) return false;
    return true;
  });
  run("f_k two routes", [&] {
    for (int k = 1; k <= (full ? 16 : 8); ++k)
      if (f_recursive(k) != f_closed(k)) return false;
    return true;
  });
  for (int n = 1; n <= nmax; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    run("relations f_{n+1}, f_{n+2}" + tag, [n] { return detail::check_relations(n); });
    run("monomial roundtrip" + tag, [n] {
      for (int k = 0; k <= 2 * n; ++k)
        for (int q = q_min(n, k); q <= q_max(k); ++q)
          if (from_monomial(n, to_monomial(mu(n, k, q))) != mu(n, k, q)) return false;
      return true;
    });
    run("sl2 commutators" + tag, [n] { return detail::check_sl2(n); });
    run("hard Lefschetz" + tag, [n] { return detail::check_hard_lefschetz(n); });
    run("magic formula" + tag, [n] { return detail::check_magic(n); });
    run("Tasaki closed == Gram inverse" + tag, [n] { return detail::check_tasaki_routes(n); });
    run("Tasaki symmetric, palindromic, positive" + tag, [n] { return detail::check_tasaki_shape(n); });
    if (n <= 5) run("primitive pairing" + tag, [n] { return detail::check_primitive_pairing(n); });
    if (n <= 4)
      run("pkf routes" + tag,
          [n] { return principal_kinematic(n, PkfRoute::Primitive) == principal_kinematic(n, PkfRoute::Gram); });
    if (n >= 2) run("Kazarnovskii and intrinsic volumes" + tag, [n] { return detail::check_cones(n); });
    if (n <= 4) run("Klain delta at model frames" + tag, [n] { return detail::check_klain(n); });
  }
  run("planar pkf", [] {
    const KinematicTensor t = principal_kinematic(1);
    return t.block(0, 2) == Matrix<Scalar>{{Scalar(1)}} && t.block(2, 0) == Matrix<Scalar>{{Scalar(1)}} &&
           t.block(1, 1) == Matrix<Scalar>{{Scalar::monomial(2, -1)}};
  });
  run("Bezout", [&] {
    for (auto [n, a, b] : {std::tuple{2, 1, 1}, {3, 1, 2}, {4, 1, 3}, {4, 2, 2}})
      if (bezout_check(n, a, b) != Scalar(1)) return false;
    return true;
  });
  return rep;
}

}  // namespace uval
