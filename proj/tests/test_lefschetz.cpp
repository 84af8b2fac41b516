#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace uval;
using uval::testing::q;

TEST(Lefschetz, RaisingOperator) {
  for (int n = 3; n <= 5; ++n) EXPECT_EQ(apply_L(tau(n, 2, 0)), q(3) * tau(n, 3, 0));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(apply_L(vol(n)).is_zero());
    for (int k = 0; k < 2 * n; ++k)
      for (int qq = q_min(n, k); qq <= q_max(k); ++qq) {
        Valuation expect(n);
        expect.add_truncated(k + 1, qq + 1, q(2 * (qq + 1)));
        expect.add_truncated(k + 1, qq, q(k - 2 * qq + 1));
        EXPECT_EQ(apply_L(mu(n, k, qq)), expect);
      }
  }
}

TEST(Lefschetz, LIsMultiplicationByMu1) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < 2 * n; ++k)
      for (int qq = q_min(n, k); qq <= q_max(k); ++qq) {
        const Valuation v = mu(n, k, qq);
        EXPECT_EQ(apply_L(v), q(2) * omega(k) / omega(k + 1) * multiply(mu(n, 1, 0), v)) << n << " " << k;
      }
}

TEST(Lefschetz, LoweringOperator) {
  EXPECT_EQ(apply_Lambda(mu(2, 2, 1)), mu(2, 1, 0));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(apply_Lambda(tau(n, 2, 1)), tau(n, 1, 0));
    EXPECT_EQ(apply_Lambda(tau(n, 1, 0)), q(2 * n) * tau(n, 0, 0));
    EXPECT_TRUE(apply_Lambda(chi(n)).is_zero());
  }
}

TEST(Lefschetz, Weight) {
  EXPECT_EQ(apply_H(chi(3)), q(-6) * chi(3));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(apply_H(mu(n, n, n / 2)).is_zero());
    EXPECT_EQ(apply_H(vol(n)), q(2 * n) * vol(n));
  }
}

TEST(Lefschetz, Commutators) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      for (int qq = q_min(n, k); qq <= q_max(k); ++qq) {
        const Valuation v = mu(n, k, qq);
        EXPECT_EQ(apply_L(apply_Lambda(v)) - apply_Lambda(apply_L(v)), apply_H(v));
        EXPECT_EQ(apply_H(apply_L(v)) - apply_L(apply_H(v)), q(2) * apply_L(v));
        EXPECT_EQ(apply_H(apply_Lambda(v)) - apply_Lambda(apply_H(v)), q(-2) * apply_Lambda(v));
      }
}

TEST(Lefschetz, IteratedCommutator) {
  auto Lpow = [](Valuation v, int i) {
    for (int s = 0; s < i; ++s) v = apply_L(v);
    return v;
  };
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= 4; ++i)
      for (int k = 0; k <= 2 * n; ++k)
        for (int qq = q_min(n, k); qq <= q_max(k); ++qq) {
          const Valuation v = mu(n, k, qq);
          const Valuation lhs = Lpow(apply_Lambda(v), i) - apply_Lambda(Lpow(v, i));
          const Valuation rhs = q(i) * Lpow(apply_H(v), i - 1) + q(i * (i - 1)) * Lpow(v, i - 1);
          EXPECT_EQ(lhs, rhs);
        }
}

TEST(Lefschetz, HardLefschetz) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const Matrix<Scalar> m = lefschetz_power_matrix(n, k, 2 * n - 2 * k);
      ASSERT_TRUE(m.square());
      EXPECT_EQ(rank(m), m.rows()) << n << " " << k;
    }
}

TEST(Lefschetz, Primitives) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(primitive(n, 0), chi(n));
    for (int r = 0; 2 * r <= n; ++r) {
      EXPECT_TRUE(apply_Lambda(primitive(n, r)).is_zero()) << n << " " << r;
      EXPECT_EQ(tau_coords(primitive(n, r), 2 * r).back(), q(1));
    }
  }
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(primitive(n, 1), tau(n, 2, 1) - q(1, 2 * n - 1) * tau(n, 2, 0));
  EXPECT_EQ(primitive_general(2, 2, 1), tau(2, 2, 1) - q(1, 3) * tau(2, 2, 0));
  EXPECT_THROW(primitive(2, 2), IndexError);
  EXPECT_THROW(primitive_general(3, 5, 1), IndexError);
}

TEST(Lefschetz, PrimitiveRoutesAgree) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 2 * n; ++k) {
      EXPECT_EQ(primitive_general(n, k, 0), Scalar(factorial(k)) * tau(n, k, 0));
      for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r)
        EXPECT_EQ(primitive_general(n, k, r), primitive_iterated(n, k, r)) << n << " " << k << " " << r;
    }
}

TEST(Lefschetz, MagicFormula) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      for (int r = 0; 2 * r <= std::min(k, 2 * n - k); ++r)
        EXPECT_EQ(fourier(primitive_general(n, k, r)),
                  Scalar(factorial(k - 2 * r)) / Scalar(factorial(2 * n - 2 * r - k)) * primitive_general(n, 2 * n - k, r));
}

TEST(Lefschetz, Decomposition) {
  const auto d = lefschetz_decompose(tau(2, 2, 1));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(lefschetz_reconstruct(2, d), tau(2, 2, 1));
  EXPECT_EQ(d[1].r, 1);
  EXPECT_EQ(d[1].coeff, q(1));
  EXPECT_EQ(d[0].coeff, q(1, 6));  // pi_{2,0} = 2 tau_{2,0}

  EXPECT_TRUE(lefschetz_decompose(Valuation(3)).empty());
  const auto single = lefschetz_decompose(primitive_general(4, 4, 1));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (LefschetzTerm{4, 1, q(1)}));

  std::mt19937_64 rng(21);
  for (int n = 0; n <= 5; ++n) {
    const Valuation v = uval::testing::random_valuation(n, rng);
    EXPECT_EQ(lefschetz_reconstruct(n, lefschetz_decompose(v)), v);
  }
}
