// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit code = number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uval/uval.hpp"

using namespace uval;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Scalar q(long p, long r = 1) { return Scalar(make_rational(p, r)); }
Scalar z(const Integer& x) { return Scalar(Rational(x)); }

// The printed closed forms for k = 2, 3, 4, entered by hand.
Matrix<Scalar> printed_t2(int n) {
  const Scalar c = q(1, 4 * n * (n - 1));
  return {{c * q(2 * n - 1), c * q(-1)}, {c * q(-1), c * q(2 * n - 1)}};
}

Matrix<Scalar> printed_t3(int n) {
  const Scalar c = z(Integer(1) << (n - 2)) * z(factorial(n - 3)) / (q(n) * Scalar::pi(1) * z(double_factorial(2 * n - 3)));
  return {{c * q(2 * n - 3), c * q(-1)}, {c * q(-1), c * q(2 * n - 1, 3)}};
}

Matrix<Scalar> printed_t4(int n) {
  const Scalar c = z(factorial(n - 4)) / (q(16) * z(factorial(n)));
  const Scalar a = q(3 * (2 * n - 5) * (2 * n - 3)), b = q(-3 * (2 * n - 3)), m = q(2 * n * n - 4 * n + 3);
  return {{c * a, c * b, c * q(9)}, {c * b, c * m, c * b}, {c * q(9), c * b, c * a}};
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

// ---------------------------------------------------------------------------

void c1(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 2; n <= 8; ++n) o.require(tasaki_matrix_closed(n, 2).entries == printed_t2(n), "T^n_2, n=" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) o.require(tasaki_matrix_closed(n, 3).entries == printed_t3(n), "T^n_3, n=" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) o.require(tasaki_matrix_closed(n, 4).entries == printed_t4(n), "T^n_4, n=" + std::to_string(n));
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "runtime");
  o.note << (o.ok ? "" : "; ") << "21 matrices in " << dt << " s";
}

void c2(Outcome& o) {
  auto t0 = Clock::now();
  int count = 0;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k, ++count)
      o.require(tasaki_matrix_closed(n, k).entries == tasaki_matrix_oracle(n, k).entries,
                "n=" + std::to_string(n) + " k=" + std::to_string(k));
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "runtime");
  o.note << (o.ok ? "" : "; ") << count << " pairs in " << dt << " s";
}

void c3(Outcome& o) {
  for (int k = 1; k <= 16; ++k) o.require(f_recursive(k) == f_closed(k), "f_" + std::to_string(k));
  int checked = 0;
  for (int n = 0; n <= 6; ++n)
    for (int idx : {n + 1, n + 2}) {
      const GradedPoly f = f_recursive(idx);
      for (int deg = 0; deg + idx <= 2 * n; ++deg)
        for (int b = 0; 2 * b <= deg; ++b, ++checked)
          o.require(from_monomial(n, GradedPoly::monomial(Chart::TU, deg - 2 * b, b) * f).is_zero(),
                    "m*f_" + std::to_string(idx) + " at n=" + std::to_string(n));
    }
  o.note << checked << " ideal products vanish";
}

void c4(Outcome& o) {
  int basis = 0;
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 2 * n; ++k)
      for (int qq = q_min(n, k); qq <= q_max(k); ++qq, ++basis) {
        const Valuation v = mu(n, k, qq);
        const Valuation Lv = apply_L(v), Mv = apply_Lambda(v), Hv = apply_H(v);
        o.require(apply_L(Mv) - apply_Lambda(Lv) == Hv, "[L,Lambda]=H");
        o.require(apply_H(Lv) - apply_L(Hv) == q(2) * Lv, "[H,L]=2L");
        o.require(apply_H(Mv) - apply_Lambda(Hv) == q(-2) * Mv, "[H,Lambda]=-2Lambda");
      }
    for (int k = 0; k <= n; ++k) {
      const Matrix<Scalar> m = lefschetz_power_matrix(n, k, 2 * n - 2 * k);
      o.require(m.square() && rank(m) == m.rows(), "hard Lefschetz n=" + std::to_string(n));
    }
    for (int k = 0; k <= 2 * n; ++k)
      for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r) {
        const Scalar c = z(factorial(k - 2 * r)) / z(factorial(2 * n - 2 * r - k));
        o.require(fourier(primitive_general(n, k, r)) == c * primitive_general(n, 2 * n - k, r), "magic formula");
      }
  }
  o.note << basis << " basis elements";
}

void c5(Outcome& o) {
  int pairs = 0;
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r) {
        const Valuation p = primitive_general(n, k, r);
        o.require(primitive_pairing_closed(n, k, r) == pairing_pd(p, fourier(p)), "closed pairing");
        ++pairs;
        for (int s = 0; 2 * s <= std::min(k, 2 * n - k); ++s)
          if (s != r) o.require(pairing_pd(p, primitive_general(n, 2 * n - k, s)).is_zero(), "orthogonality");
      }
  o.note << pairs << " primitive pairings";
}

void c6(Outcome& o) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; k += 2) {
      const Matrix<Scalar> t = tasaki_matrix_closed(n, k).entries;
      const std::size_t l = k / 2;
      for (std::size_t i = 0; i <= l; ++i)
        for (std::size_t j = 0; j <= l; ++j) o.require(t(i, j) == t(l - i, l - j), "palindrome");
    }
  int minors = 0;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Scalar& m : leading_minors(tasaki_matrix_closed(n, k).entries)) {
        o.require(sign(m) > 0, "minor n=" + std::to_string(n) + " k=" + std::to_string(k));
        ++minors;
      }
  o.note << minors << " leading minors positive";
}

void c7(Outcome& o) {
  for (PkfRoute route : {PkfRoute::Primitive, PkfRoute::Gram}) {
    const KinematicTensor t = principal_kinematic(1, route);
    o.require(t.blocks.size() == 3, "three bidegrees");
    o.require(t.block(0, 2) == Matrix<Scalar>{{q(1)}}, "chi (x) vol");
    o.require(t.block(2, 0) == Matrix<Scalar>{{q(1)}}, "vol (x) chi");
    o.require(t.block(1, 1) == Matrix<Scalar>{{Scalar::monomial(2, -1)}}, "(2/pi) mu_1 (x) mu_1");
  }
  // canonical degree-1 basis at n=1 is mu_{1,0} itself
  o.require(canonical_basis(1, 1)[0] == mu(1, 1, 0), "degree-1 basis");
}

void c8(Outcome& o) {
  const Scalar c = Scalar::monomial(make_rational(1, 5), -4);
  const Matrix<Scalar> printed = {{c * q(30), c * q(-6)}, {c * q(-3), c * q(7)}, {Scalar(), Scalar()}};
  const KinematicTensor k = kinematic(4, tau(4, 1, 0));
  o.require(cpn_normalize(k).block(4, 5) == printed, "CP^4 length block");
  o.require(k.block(4, 5) == printed.map([](const Scalar& x) { return x * Scalar::pi(4) / q(24); }),
            "raw block = (pi^4/4!) * printed");
  const KinematicTensor a = additive_kinematic(4, mu(4, 7, 3));
  const Matrix<Scalar> expect = {{q(30, 120), q(-3, 120), Scalar()}, {q(-6, 120), q(7, 120), Scalar()}};
  o.require(a.block(3, 4) == expect, "additive vol_7 block");
}

void c9(Outcome& o) {
  for (auto [n, a, b] : {std::tuple{2, 1, 1}, {3, 1, 2}, {4, 1, 3}, {4, 2, 2}})
    o.require(bezout_check(n, a, b) == q(1),
              "(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")");
}

void c10(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    const Valuation kaz = mu(n, n, 0);
    o.require(is_positive(kaz).member && !is_monotone(kaz).member, "Kazarnovskii n=" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 2 * n; ++k) o.require(is_monotone(tau(n, k, 0)).member, "intrinsic volume monotone");

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> small(-2, 6), coin(0, 1);
  long samples = 0, in_cp = 0, in_m = 0, in_p = 0, m_not_cp = 0, p_not_m = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2 * n; ++k) {
      const int d = dim_val(n, k), lo = q_min(n, k);
      // G^T maps mu-coordinates to nu-coordinates; its inverse brings nu samples back
      const Matrix<Scalar> to_mu = inverse(mu_gram(n, k).transpose());
      for (int s = 0; s < 10000; ++s, ++samples) {
        std::vector<Scalar> c(d);
        for (auto& x : c) x = q(small(rng));
        if (coin(rng)) c = to_mu.apply(c);
        Valuation v(n);
        for (int i = 0; i < d; ++i) v.add(k, lo + i, c[i]);
        const bool cp = is_crofton_positive(v).member, m = is_monotone(v).member, p = is_positive(v).member;
        in_cp += cp, in_m += m, in_p += p;
        m_not_cp += m && !cp;
        p_not_m += p && !m;
        o.require(!cp || m, "CP sample not monotone");
        o.require(!m || p, "monotone sample not positive");

        bool fv = true;
        if (k == 0) {
          fv = sign(c[0]) >= 0;
        } else {
          for (const auto& [key, coeff] : first_variation(v).terms) fv = fv && sign(coeff) >= 0;
        }
        o.require(fv == m, "first variation sign vs inequalities at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  o.require(m_not_cp > 0 && p_not_m > 0, "strictness witnesses");
  o.note << (o.ok ? "" : "; ") << samples << " samples: " << in_cp << " CP, " << in_m << " M, " << in_p << " P; "
         << m_not_cp << " in M\\CP, " << p_not_m << " in P\\M";
}

void c11(Outcome& o) {
  McOptions opt;
  opt.samples = 1000000;
  opt.seed = 7;
  opt.threads = 4;
  const double h = M_PI / 2;
  struct Case {
    const char* name;
    AngleVector theta, psi;
    Scalar exact;
  };
  const std::vector<Case> cases = {{"complex", {0.0}, {0.0}, q(1, 2)},
                                   {"Lagrangian", {h}, {h}, q(3, 8)},
                                   {"mixed", {0.0}, {h}, q(1, 4)}};
  auto t0 = Clock::now();
  for (const auto& c : cases) {
    const McResult r = mc_crofton_model(2, 2, c.theta, c.psi, opt);
    o.require(r.prediction_exact && *r.prediction_exact == c.exact, std::string(c.name) + " exact prediction");
    o.require(r.sigma < 4.0, std::string(c.name) + " within 4 sigma");
    o.note << c.name << " " << r.estimate << "+/-" << r.std_error << " (" << r.sigma << " sigma); ";
    // complex lines: |det| = |g_21|^2, whose Haar mean is 1/2
    if (std::string(c.name) == "complex") o.require(std::abs(r.estimate - 0.5) < 4 * r.std_error, "Haar moment 1/2");
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime");
  o.note << dt << " s";
}

void c12(Outcome& o) {
  double worst = 0;
  std::mt19937_64 rng(99);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (int qq = 0; qq <= k / 2; ++qq) {
        const KlainPolynomial kl = klain(mu(n, k, qq), k);
        for (int q2 = 0; q2 <= k / 2; ++q2) {
          Frame f = model_frame_kq(n, k, q2);
          // a random unitary must not change the answer
          Frame g{n, realify(haar_unitary(n, rng)) * f.vectors};
          for (const Frame& e : {f, g}) {
            const double err = std::abs(kl.evaluate(squares(kahler_cosines(e))) - (qq == q2 ? 1.0 : 0.0));
            worst = std::max(worst, err);
          }
        }
      }
  o.require(worst < 1e-9, "delta relation");
  o.note << "max error " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"C1  printed Tasaki matrices T^n_2, T^n_3, T^n_4", c1},
      {"C2  closed sum == Gram inverse, k <= n <= 6", c2},
      {"C3  f_k routes and ideal relations", c3},
      {"C4  sl(2) relations, hard Lefschetz, magic formula", c4},
      {"C5  primitive pairing and orthogonality", c5},
      {"C6  palindrome and positive definiteness", c6},
      {"C7  planar principal kinematic formula", c7},
      {"C8  CP^4 length and additive vol_7 blocks", c8},
      {"C9  Bezout", c9},
      {"C10 cones P, M, CP", c10},
      {"C11 Monte-Carlo Crofton", c11},
      {"C12 Klain delta relations", c12},
  };
  int failures = 0;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " exception: " << e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << "  (" << o.note.str() << ")" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures;
}
