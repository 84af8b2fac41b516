#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace uval;
using uval::testing::q;
using uval::testing::random_valuation;

namespace {
GradedPoly tu(int a, int b, const Scalar& c = Scalar(1)) { return GradedPoly::monomial(Chart::TU, a, b, c); }
}  // namespace

TEST(Valuation, BasisConstructors) {
  EXPECT_EQ(mu(2, 0, 0), chi(2));
  EXPECT_EQ(mu(2, 4, 2), vol(2));
  EXPECT_THROW(mu(1, 2, 0), IndexError);
  EXPECT_THROW(mu(2, 5, 0), IndexError);
  EXPECT_EQ(tau(2, 2, 0), mu(2, 2, 0) + mu(2, 2, 1));
  EXPECT_EQ(tau(1, 2, 0), mu(1, 2, 1));
  EXPECT_EQ(tau(2, 4, 1), q(2) * mu(2, 4, 2));
  EXPECT_THROW(tau(2, 2, 2), IndexError);
}

TEST(Valuation, Dimensions) {
  EXPECT_EQ(dim_val(2, 2), 2);
  EXPECT_EQ(dim_val(4, 0), 1);
  EXPECT_EQ(dim_val(3, 3), 2);
  EXPECT_THROW(dim_val(2, 5), IndexError);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 2 * n; ++k) EXPECT_EQ(dim_val(n, k), q_max(k) - q_min(n, k) + 1);
}

TEST(Valuation, MonomialMap) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(from_monomial(n, variable_t()), Scalar::monomial(2, -1) * mu(n, 1, 0));
    EXPECT_EQ(from_monomial(n, variable_u()), Scalar::monomial(2, -1) * mu(n, 2, 1));
  }
  EXPECT_TRUE(from_monomial(1, f_recursive(2)).is_zero());
  EXPECT_TRUE(from_monomial(2, tu(5, 0)).is_zero());  // beyond degree 2n

  EXPECT_EQ(to_monomial(mu(2, 2, 1)), tu(0, 1, Scalar::monomial(make_rational(1, 2), 1)));
  EXPECT_EQ(to_monomial(mu(2, 1, 0)), tu(1, 0, Scalar::monomial(make_rational(1, 2), 1)));
  const GradedPoly m20 = change_vars(to_monomial(mu(2, 2, 0)), Chart::ST);
  EXPECT_EQ(m20, GradedPoly::monomial(Chart::ST, 0, 1, Scalar::monomial(-2, 1)) +
                     GradedPoly::monomial(Chart::ST, 2, 0, Scalar::pi(1)));
}

TEST(Valuation, QuotientIsWellDefined) {
  for (int n = 0; n <= 6; ++n)
    for (int idx : {n + 1, n + 2})
      for (int d = 0; d + idx <= 2 * n; ++d)
        for (int b = 0; 2 * b <= d; ++b)
          EXPECT_TRUE(from_monomial(n, tu(d - 2 * b, b) * f_closed(idx)).is_zero()) << n << " " << idx;
}

TEST(Valuation, Roundtrip) {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 6; ++n)
    for (int i = 0; i < 5; ++i) {
      const Valuation v = random_valuation(n, rng);
      EXPECT_EQ(from_monomial(n, to_monomial(v)), v);
      for (int k : v.degrees()) EXPECT_EQ(from_tau_coords(n, k, tau_coords(v, k)), v.component(k));
    }
}

TEST(Valuation, ProductExamples) {
  for (int n = 1; n <= 4; ++n) {
    std::mt19937_64 rng(n);
    const Valuation v = random_valuation(n, rng);
    EXPECT_EQ(multiply(chi(n), v), v);
    EXPECT_EQ(multiply(tau(n, 1, 0), tau(n, 1, 0)), Scalar::monomial(make_rational(1, 2), 1) * tau(n, 2, 0));
  }
  EXPECT_EQ(multiply(tau(2, 2, 0), tau(2, 2, 0)), q(3) * mu(2, 4, 2));
  EXPECT_THROW(multiply(chi(2), chi(3)), DimensionMismatch);
}

TEST(Valuation, ProductIsCommutativeAndAssociative) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 4; ++i) {
      const Valuation a = random_valuation(n, rng), b = random_valuation(n, rng), c = random_valuation(n, rng);
      EXPECT_EQ(multiply(a, b), multiply(b, a));
      EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(Valuation, TasakiProductFormula) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      for (int l = 0; k + l <= 2 * n; ++l)
        for (int p = 0; 2 * p <= k; ++p)
          for (int r = 0; 2 * r <= l; ++r) {
            const Scalar c = omega(k + l) / (omega(k) * omega(l)) *
                             Scalar(binomial(k + l - 2 * p - 2 * r, k - 2 * p) * binomial(2 * p + 2 * r, 2 * p));
            EXPECT_EQ(multiply(tau(n, k, p), tau(n, l, r)), c * tau(n, k + l, p + r))
                << n << ": " << k << "," << p << " x " << l << "," << r;
          }
}

TEST(Valuation, Fourier) {
  EXPECT_EQ(fourier(mu(2, 0, 0)), mu(2, 4, 2));
  EXPECT_EQ(fourier(mu(2, 2, 1)), mu(2, 2, 1));
  std::mt19937_64 rng(13);
  for (int n = 0; n <= 5; ++n) {
    const Valuation v = random_valuation(n, rng);
    EXPECT_EQ(fourier(fourier(v)), v);
  }
}

TEST(Valuation, Iota) {
  EXPECT_EQ(iota(tau(2, 2, 0)), tau(2, 2, 1));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(iota(vol(n)), vol(n));
  for (int n = 4; n <= 6; ++n) {
    const Valuation f4 = from_monomial(n, f_closed(4));
    EXPECT_FALSE(f4.is_zero());
    EXPECT_EQ(iota(f4), f4);
  }
  EXPECT_THROW(iota(mu(2, 1, 0)), DomainError);

  std::mt19937_64 rng(14);
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < 3; ++i) {
      const Valuation v = random_valuation(n, rng, true);
      EXPECT_EQ(iota(fourier(v)), fourier(iota(v)));
      EXPECT_EQ(iota(iota(v)), v);
    }
}

// tau-expansion of F(tau_{2(n-p),i}) is sigma_i(x_1..x_p, 1, ..., 1) with n-2p ones
TEST(Valuation, FourierMatchesRestriction) {
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; 2 * p <= n; ++p)
      for (int i = 0; i <= n - p; ++i) {
        const std::vector<Scalar> c = tau_coords(fourier(tau(n, 2 * (n - p), i)), 2 * p);
        ASSERT_EQ(int(c.size()), p + 1);
        for (int j = 0; j <= p; ++j) EXPECT_EQ(c[j], Scalar(binomial(n - 2 * p, i - j))) << n << " " << p << " " << i;
      }
}

TEST(Valuation, AnisotropicIdeal) {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 5; ++n) {
    const Valuation u = from_monomial(n, variable_u());
    EXPECT_EQ(u, Scalar::monomial(2, -1) * mu(n, 2, 1));
    for (int i = 0; i < 5; ++i) {
      const Valuation w = multiply(u, random_valuation(n, rng));
      for (int k = 0; k <= n; ++k) EXPECT_TRUE(w.coeff(k, 0).is_zero());
    }
  }
}

TEST(Valuation, KazarnovskiiNormalization) {
  for (int k = 1; k <= 10; ++k) {
    const Scalar c = Scalar(k % 2 ? 1 : -1) * Scalar::monomial(Rational(Integer(1) << k), k) /
                     (q(2) * omega(k) * Scalar(factorial(k - 1)));
    EXPECT_EQ(to_monomial(mu(k, k, 0)), f_closed(k) * GradedPoly(Chart::TU, c)) << k;
  }
}

// u * mu_{k,p} = 4(p+1)/(pi(k+2)) ((2p+1) mu_{k+2,p+1} - 2(p+2) mu_{k+2,p+2}), exactly
TEST(Valuation, MultiplicationByU) {
  for (int n = 1; n <= 5; ++n) {
    const Valuation u = from_monomial(n, variable_u());
    for (int k = 0; k + 2 <= 2 * n; ++k)
      for (int p = q_min(n, k); p <= q_max(k); ++p) {
        Valuation expect(n);
        const Scalar c = q(4 * (p + 1), k + 2) * Scalar::pi(-1);
        expect.add_truncated(k + 2, p + 1, c * q(2 * p + 1));
        expect.add_truncated(k + 2, p + 2, c * q(-2 * (p + 2)));
        const Valuation got = multiply(u, mu(n, k, p));
        for (int i = q_min(n, k + 2); i <= std::min(p + 2, q_max(k + 2)); ++i)
          EXPECT_EQ(got.coeff(k + 2, i), expect.coeff(k + 2, i)) << n << " " << k << " " << p;
        EXPECT_EQ(got, expect) << "exact equality, n=" << n << " k=" << k << " p=" << p;
      }
  }
}

TEST(Valuation, Klain) {
  for (int n = 2; n <= 4; ++n) {
    const KlainPolynomial kl = klain(mu(n, 2, 1), 2);
    EXPECT_EQ(kl.sigma_coeffs, (std::vector<Scalar>{q(0), q(1)}));
    EXPECT_DOUBLE_EQ(kl.evaluate({1.0}), 1.0);  // complex line
    EXPECT_DOUBLE_EQ(kl.evaluate({0.0}), 0.0);  // isotropic plane
  }
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int qq = 0; qq <= k / 2; ++qq) {
        std::vector<Scalar> e(k / 2 + 1);
        e[qq] = q(1);
        EXPECT_EQ(klain(tau(n, k, qq), k).sigma_coeffs, e);
      }
  EXPECT_EQ(klain(mu(4, 4, 1), 4).sigma_coeffs, (std::vector<Scalar>{q(0), q(1), q(-2)}));
  EXPECT_THROW(klain(mu(2, 3, 1), 3), DomainError);
}

TEST(Valuation, JsonRoundtrip) {
  std::mt19937_64 rng(16);
  for (int n = 0; n <= 4; ++n) {
    const Valuation v = random_valuation(n, rng);
    EXPECT_EQ(valuation_from_json(Json::parse(to_json(v).dump())), v);
  }
  EXPECT_EQ(to_json(mu(2, 2, 1)).dump(), R"({"n":2,"components":{"2":[{"q":1,"coeff":[{"pi":0,"num":"1","den":"1"}]}]}})");
}
