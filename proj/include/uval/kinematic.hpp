#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "lefschetz.hpp"
#include "matrix.hpp"
#include "valuation.hpp"

namespace uval {

// (a, b): coefficient of vol in the product a*b
inline Scalar pairing_pd(const Valuation& a, const Valuation& b) {
  a.check_n(b);
  const int n = a.n();
  // only the degree-2n part of the product matters
  GradedPoly pa = to_monomial(a), pb = to_monomial(b), top(Chart::TU);
  for (const auto& [ma, ca] : pa.terms())
    for (const auto& [mb, cb] : pb.terms())
      if (ma.degree() + mb.degree() == 2 * n) top.add(Monomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
  return from_monomial(n, top).coeff(2 * n, n);
}

inline Scalar pairing_fourier(const Valuation& a, const Valuation& b) { return pairing_pd(a, fourier(b)); }

struct TasakiMatrix {
  int n = 0, k = 0;
  Matrix<Scalar> entries;

  friend bool operator==(const TasakiMatrix& a, const TasakiMatrix& b) {
    return a.n == b.n && a.k == b.k && a.entries == b.entries;
  }
};

namespace detail {

inline void check_tasaki_range(int n, int k) {
  if (n < 0 || k < 0) throw IndexError("tasaki matrix needs 0 <= k <= n");
  if (k > n)
    throw DomainError("tasaki matrix is tabulated for k <= n; degree " + std::to_string(k) +
                      " is the Fourier dual of degree " + std::to_string(2 * n - k));
}

}  // namespace detail

// Closed double-factorial sum for (T^n_k)_{ij}.
inline TasakiMatrix tasaki_matrix_closed(int n, int k) {
  detail::check_tasaki_range(n, k);
  const int p = k / 2;
  const Scalar pre = omega(k) * omega(2 * n - k) / Scalar::pi(n);
  Matrix<Scalar> t(p + 1, p + 1);
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p; ++j) {
      Rational sum = 0;
      for (int r = std::max(i, j); r <= p; ++r) {
        Integer num = factorial(2 * n - 2 * r - k) * factorial(n - r) * factorial(k - 2 * i) * factorial(k - 2 * j);
        num *= double_factorial(2 * n - 2 * r + 1) * double_factorial(2 * n - 4 * r + 1);
        num *= double_factorial(2 * r - 2 * i - 1) * double_factorial(2 * r - 2 * j - 1);
        Integer den = binomial(n, 2 * r);
        den <<= 3 * r;  // 8^r
        den *= factorial(k - 2 * r) * factorial(2 * n - 4 * r) * factorial(2 * r - 2 * i) * factorial(2 * r - 2 * j);
        den *= double_factorial(2 * n - 2 * r - 2 * i + 1) * double_factorial(2 * n - 2 * r - 2 * j + 1);
        sum += make_rational(num, den);
      }
      if ((i + j) % 2) sum = -sum;
      t(i, j) = pre * Scalar(sum);
    }
  return {n, k, t};
}

// M_{ij} = (tau_{k,i}, F tau_{k,j}) for k <= n
inline Matrix<Scalar> tasaki_gram(int n, int k) {
  detail::check_tasaki_range(n, k);
  const int p = k / 2;
  Matrix<Scalar> m(p + 1, p + 1);
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p; ++j) m(i, j) = pairing_pd(tau(n, k, i), fourier(tau(n, k, j)));
  return m;
}

inline TasakiMatrix tasaki_matrix_oracle(int n, int k) {
  static MemoCache<std::pair<int, int>, TasakiMatrix> cache;
  return cache.get({n, k}, [&] {
    Matrix<Scalar> m = tasaki_gram(n, k);
    try {
      return TasakiMatrix{n, k, inverse(m)};
    } catch (const SingularMatrix&) {
      throw SingularMatrix("Gram matrix of degree " + std::to_string(k) + " at n=" + std::to_string(n) +
                           " is singular; the pairing is broken");
    }
  });
}

// Canonical basis of degree a: tau_{a,i} for a <= n, F tau_{2n-a,i} above.
inline std::vector<Valuation> canonical_basis(int n, int a) {
  check_degree(n, a);
  std::vector<Valuation> b;
  if (a <= n) {
    for (int i = 0; i <= a / 2; ++i) b.push_back(tau(n, a, i));
  } else {
    for (int i = 0; i <= (2 * n - a) / 2; ++i) b.push_back(fourier(tau(n, 2 * n - a, i)));
  }
  return b;
}

inline std::vector<std::string> canonical_basis_labels(int n, int a) {
  check_degree(n, a);
  std::vector<std::string> out;
  if (a <= n) {
    for (int i = 0; i <= a / 2; ++i) out.push_back("tau[" + std::to_string(a) + "," + std::to_string(i) + "]");
  } else {
    for (int i = 0; i <= (2 * n - a) / 2; ++i)
      out.push_back("F(tau[" + std::to_string(2 * n - a) + "," + std::to_string(i) + "])");
  }
  return out;
}

inline std::vector<Scalar> canonical_coords(const Valuation& v, int a) {
  const int n = v.n();
  check_degree(n, a);
  if (a <= n) return tau_coords(v, a);
  return tau_coords(fourier(v.component(a)), 2 * n - a);
}

struct KinematicTensor {
  int n = 0;
  Valuation mu;
  bool cpn = false;  // set once the CP^n probability normalization is applied
  std::map<std::pair<int, int>, Matrix<Scalar>> blocks;

  // zero matrix of the right shape when the block is absent
  Matrix<Scalar> block(int a, int b) const {
    auto it = blocks.find({a, b});
    if (it != blocks.end()) return it->second;
    return Matrix<Scalar>(dim_val(n, a), dim_val(n, b));
  }

  friend bool operator==(const KinematicTensor& x, const KinematicTensor& y) {
    return x.n == y.n && x.cpn == y.cpn && x.blocks == y.blocks;
  }
};

// Accumulates coefficients of (canonical_a[i] (x) canonical_b[j]).
class TensorBuilder {
 public:
  explicit TensorBuilder(int n) : n_(n) {}

  void add(int a, int b, std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = blocks_.find({a, b});
    if (it == blocks_.end()) it = blocks_.emplace(std::pair{a, b}, Matrix<Scalar>(dim_val(n_, a), dim_val(n_, b))).first;
    it->second(i, j) += c;
  }

  // coefficient c on x (x) y for arbitrary valuations
  void add_product(const Valuation& x, const Valuation& y, const Scalar& c) {
    if (c.is_zero()) return;
    for (int a : x.degrees()) {
      std::vector<Scalar> xa = canonical_coords(x, a);
      for (int b : y.degrees()) {
        std::vector<Scalar> yb = canonical_coords(y, b);
        for (std::size_t i = 0; i < xa.size(); ++i) {
          if (xa[i].is_zero()) continue;
          for (std::size_t j = 0; j < yb.size(); ++j) add(a, b, i, j, c * xa[i] * yb[j]);
        }
      }
    }
  }

  KinematicTensor finish(const Valuation& m) {
    KinematicTensor t{n_, m, false, {}};
    for (auto& [key, mat] : blocks_) {
      bool zero = true;
      for (std::size_t i = 0; i < mat.rows() && zero; ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
          if (!mat(i, j).is_zero()) {
            zero = false;
            break;
          }
      if (!zero) t.blocks.emplace(key, std::move(mat));
    }
    return t;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, Matrix<Scalar>> blocks_;
};

// Inverse Gram matrix of the pairing between canonical bases of degrees a and 2n-a.
inline Matrix<Scalar> kinematic_block_matrix(int n, int a) {
  return tasaki_matrix_oracle(n, std::min(a, 2 * n - a)).entries;
}

// k(m) = sum_a sum_ij K_ij (m * phi_i) (x) psi_j
inline KinematicTensor kinematic(int n, const Valuation& m) {
  if (m.n() != n) throw DimensionMismatch("kinematic: multiplier lives at n=" + std::to_string(m.n()));
  TensorBuilder tb(n);
  for (int a = 0; a <= 2 * n; ++a) {
    const Matrix<Scalar> K = kinematic_block_matrix(n, a);
    const std::vector<Valuation> phi = canonical_basis(n, a);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      Valuation left = multiply(m, phi[i]);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < K.cols(); ++j) {
        if (K(i, j).is_zero()) continue;
        for (int d : left.degrees()) {
          std::vector<Scalar> x = canonical_coords(left, d);
          for (std::size_t r = 0; r < x.size(); ++r) tb.add(d, 2 * n - a, r, j, K(i, j) * x[r]);
        }
      }
    }
  }
  return tb.finish(m);
}

// pkf coefficient of pi_{k,r} (x) F pi_{k,r}
inline Scalar pkf_coefficient(int n, int k, int r) {
  Integer num = factorial(2 * n - 2 * r - k) * factorial(n - r) * double_factorial(2 * n - 2 * r + 1);
  Integer den = binomial(n, 2 * r) * factorial(k - 2 * r) * factorial(2 * n - 4 * r) * double_factorial(2 * n - 4 * r + 1);
  den <<= 3 * r;
  return omega(k) * omega(2 * n - k) / Scalar::pi(n) * Scalar(make_rational(num, den));
}

// (pi_{k,r}, F pi_{k,r}) in closed form
inline Scalar primitive_pairing_closed(int n, int k, int r) {
  if (r < 0 || 2 * r > std::min(k, 2 * n - k))
    throw IndexError("primitive pairing needs 2r <= min(k, 2n-k)");
  Integer num = binomial(n, 2 * r) * factorial(k - 2 * r) * factorial(2 * n - 4 * r) * double_factorial(2 * n - 4 * r + 1);
  num <<= 3 * r;
  Integer den = factorial(n - r) * factorial(2 * n - 2 * r - k) * double_factorial(2 * n - 2 * r + 1);
  return Scalar::pi(n) / (omega(k) * omega(2 * n - k)) * Scalar(make_rational(num, den));
}

enum class PkfRoute { Primitive, Gram };

inline KinematicTensor principal_kinematic(int n, PkfRoute route = PkfRoute::Gram) {
  if (route == PkfRoute::Gram) return kinematic(n, chi(n));
  TensorBuilder tb(n);
  for (int k = 0; k <= 2 * n; ++k)
    for (int r = 0; r <= lefschetz_p(n, k); ++r) {
      const Valuation pk = primitive_general(n, k, r);
      tb.add_product(pk, fourier(pk), pkf_coefficient(n, k, r));
    }
  return tb.finish(chi(n));
}

// a(m) = (F (x) F) k(F m).  The canonical basis of degree 2n-a is F of the one
// in degree a, so in coordinates this only relabels blocks.
inline KinematicTensor additive_kinematic(int n, const Valuation& m) {
  KinematicTensor k = kinematic(n, fourier(m));
  KinematicTensor out{n, m, false, {}};
  for (auto& [key, mat] : k.blocks) out.blocks.emplace(std::pair{2 * n - key.first, 2 * n - key.second}, mat);
  return out;
}

// Divide by vol(CP^n) = pi^n/n!.  Refuses to normalize twice.
inline KinematicTensor cpn_normalize(const KinematicTensor& t) {
  if (t.cpn) throw DomainError("tensor is already CP^n-normalized");
  KinematicTensor r = t;
  const Scalar f = Scalar(factorial(t.n)) / Scalar::pi(t.n);
  for (auto& [_, mat] : r.blocks) mat = f * mat;
  r.cpn = true;
  return r;
}

// Values of the canonical basis of degree 2d on a complex d-plane of degree 1:
// only mu_{2d,d} is nonzero there, with value pi^d/d!.
inline std::vector<Scalar> bezout_values(int n, int d) {
  std::vector<Scalar> out;
  const Scalar vol_d = Scalar::pi(d) / Scalar(factorial(d));
  for (const Valuation& v : canonical_basis(n, 2 * d)) out.push_back(v.coeff(2 * d, d) * vol_d);
  return out;
}

// Expected number of intersection points of a linear a-space and b-space in CP^n.
inline Scalar bezout_check(int n, int a, int b) {
  if (a < 1 || b < 1 || a + b != n) throw IndexError("bezout_check needs a, b >= 1 and a + b = n");
  const KinematicTensor t = cpn_normalize(principal_kinematic(n));
  const Matrix<Scalar> B = t.block(2 * a, 2 * b);
  const std::vector<Scalar> x = bezout_values(n, a), y = bezout_values(n, b);
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += B(i, j) * x[i] * y[j];
  return s;
}

}  // namespace uval
