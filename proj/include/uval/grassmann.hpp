#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "error.hpp"
#include "kinematic.hpp"
#include "scalar.hpp"

namespace uval {

// C^n is stored as R^{2n} with interleaved coordinates (x_1, y_1, ..., x_n, y_n).
struct Frame {
  int n = 0;
  Eigen::MatrixXd vectors;  // 2n x k, orthonormal columns

  int dim() const { return int(vectors.cols()); }
};

using AngleVector = std::vector<double>;

struct GrassmannConfig {
  double orthonormal_tol = 1e-10;
  double angle_tol = 1e-9;
};

// multiplication by sqrt(-1)
inline Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    J(2 * j + 1, 2 * j) = 1.0;
    J(2 * j, 2 * j + 1) = -1.0;
  }
  return J;
}

inline void check_frame(const Frame& f, double tol = GrassmannConfig{}.orthonormal_tol) {
  if (f.vectors.rows() != 2 * f.n) throw DimensionMismatch("frame vectors must have 2n real coordinates");
  if (f.vectors.cols() == 0) return;
  const Eigen::MatrixXd g = f.vectors.transpose() * f.vectors;
  const double err = (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (err > tol) throw DomainError("frame is not orthonormal (deviation " + std::to_string(err) + ")");
}

// Paired singular values of the skew matrix <J u_a, u_b> are the cosines of
// the Kahler angles, here nonincreasing.  For dim > n this yields the padded
// vector (0, ..., 0, Theta(E^perp)).
inline std::vector<double> kahler_cosines(const Frame& f) {
  check_frame(f);
  const int k = f.dim();
  std::vector<double> out;
  if (k < 2) return out;
  const Eigen::MatrixXd A = (complex_structure(f.n) * f.vectors).transpose() * f.vectors;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  Eigen::VectorXd s = svd.singularValues();  // descending
  for (int i = 0; i + 1 < k; i += 2) out.push_back(std::clamp(0.5 * (s(i) + s(i + 1)), 0.0, 1.0));
  return out;
}

// nondecreasing angles; prefer the cosines near 0 where acos loses accuracy
inline AngleVector kahler_angles(const Frame& f) {
  AngleVector out;
  for (double c : kahler_cosines(f)) out.push_back(std::acos(c));
  return out;
}

inline std::vector<double> squares(std::vector<double> c) {
  for (double& x : c) x *= x;
  return c;
}

inline std::vector<double> cos2(const AngleVector& th) {
  std::vector<double> c;
  for (double t : th) c.push_back(std::cos(t) * std::cos(t));
  return c;
}

// Orthonormal basis of the orthogonal complement.
inline Frame complement_frame(const Frame& f) {
  const int m = 2 * f.n, k = f.dim();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(f.vectors);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  return Frame{f.n, Q.rightCols(m - k)};
}

// Tasaki's adapted basis: e_1, cos(t_1) i e_1 + sin(t_1) e_2, e_3, ... and a
// trailing e_{2p+1} when k is odd.  Needs k <= n.
inline Frame model_frame(int n, int k, const AngleVector& thetas) {
  if (k < 0 || k > n) throw DomainError("model frames need 0 <= k <= n");
  if (int(thetas.size()) != k / 2) throw DimensionMismatch("need floor(k/2) angles");
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(2 * n, k);
  for (int i = 0; i < k / 2; ++i) {
    const int c = 2 * i;  // complex coordinate index of e_{2i+1}
    U(2 * c, 2 * i) = 1.0;
    U(2 * c + 1, 2 * i + 1) = std::cos(thetas[i]);
    U(2 * (c + 1), 2 * i + 1) = std::sin(thetas[i]);
  }
  if (k % 2) U(2 * (k - 1), k - 1) = 1.0;
  return Frame{n, U};
}

// E^{k,q}: q complex directions and k-2q isotropic ones
inline Frame model_frame_kq(int n, int k, int q) {
  AngleVector th(k / 2, M_PI / 2);
  for (int i = 0; i < q && i < k / 2; ++i) th[i] = 0.0;
  return model_frame(n, k, th);
}

inline bool complement_angles_check(const Frame& f, double tol = GrassmannConfig{}.angle_tol) {
  if (f.dim() > f.n) throw DomainError("complement check needs dim <= n");
  AngleVector mine = kahler_angles(f), theirs = kahler_angles(complement_frame(f));
  AngleVector expect(f.n - f.dim(), 0.0);
  expect.insert(expect.end(), mine.begin(), mine.end());
  std::sort(expect.begin(), expect.end());
  if (expect.size() != theirs.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (std::abs(std::cos(expect[i]) - std::cos(theirs[i])) > tol) return false;
  return true;
}

// Haar unitary from QR of a complex Ginibre matrix, with the phases of
// diag(R) pushed into Q.
template <class Rng>
Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, M_SQRT1_2);
  Eigen::MatrixXcd Z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) Z(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd& R = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = R(j, j);
    const double a = std::abs(d);
    if (a > 0) Q.col(j) *= d / a;
  }
  return Q;
}

inline Eigen::MatrixXcd haar_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(n, rng);
}

// real 2n x 2n form of a complex n x n matrix in interleaved coordinates
inline Eigen::MatrixXd realify(const Eigen::MatrixXcd& g) {
  const int n = int(g.rows());
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = g(i, j).real(), b = g(i, j).imag();
      r(2 * i, 2 * j) = a;
      r(2 * i, 2 * j + 1) = -b;
      r(2 * i + 1, 2 * j) = b;
      r(2 * i + 1, 2 * j + 1) = a;
    }
  return r;
}

// cos^2 of the angles whose value is rational
inline std::optional<Rational> exact_cos2(double theta) {
  static const std::pair<double, std::pair<long, long>> table[] = {
      {0.0, {1, 1}}, {M_PI / 6, {3, 4}}, {M_PI / 4, {1, 2}}, {M_PI / 3, {1, 4}}, {M_PI / 2, {0, 1}}};
  for (const auto& [t, v] : table)
    if (std::abs(theta - t) < 1e-12) return make_rational(v.first, v.second);
  return std::nullopt;
}

struct McResult {
  double estimate = 0;
  double std_error = 0;
  double prediction_float = 0;
  std::optional<Scalar> prediction_exact;
  double sigma = 0;  // |estimate - prediction| / stderr
  long samples = 0;
};

namespace detail {

inline std::vector<double> elementary_symmetric(const std::vector<double>& x) {
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (double v : x)
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += v * e[j - 1];
  return e;
}

inline std::vector<Rational> elementary_symmetric(const std::vector<Rational>& x) {
  std::vector<Rational> e(x.size() + 1, Rational(0));
  e[0] = 1;
  for (const Rational& v : x)
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += v * e[j - 1];
  return e;
}

}  // namespace detail

// Crofton prediction sum_ij T_ij sigma_i(cos^2 Theta(E)) sigma_j(cos^2 Theta(F^perp)).
inline double crofton_prediction_cos2(int n, int k, const std::vector<double>& e_cos2,
                                      const std::vector<double>& f_perp_cos2) {
  const Matrix<Scalar> T = tasaki_matrix_closed(n, k).entries;
  std::vector<double> se = detail::elementary_symmetric(e_cos2);
  std::vector<double> sf = detail::elementary_symmetric(f_perp_cos2);
  double p = 0;
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j) p += T(i, j).to_double() * se[i] * sf[j];
  return p;
}

inline double crofton_prediction(int n, int k, const AngleVector& e_angles, const AngleVector& f_perp_angles) {
  return crofton_prediction_cos2(n, k, cos2(e_angles), cos2(f_perp_angles));
}

inline std::optional<Scalar> crofton_prediction_exact(int n, int k, const AngleVector& e_angles,
                                                      const AngleVector& f_perp_angles) {
  std::vector<Rational> ce, cf;
  for (double t : e_angles) {
    auto c = exact_cos2(t);
    if (!c) return std::nullopt;
    ce.push_back(*c);
  }
  for (double t : f_perp_angles) {
    auto c = exact_cos2(t);
    if (!c) return std::nullopt;
    cf.push_back(*c);
  }
  const Matrix<Scalar> T = tasaki_matrix_closed(n, k).entries;
  std::vector<Rational> se = detail::elementary_symmetric(ce), sf = detail::elementary_symmetric(cf);
  Scalar p;
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j) p += T(i, j) * Scalar(Rational(se[i] * sf[j]));
  return p;
}

struct McOptions {
  long samples = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
  int blocks = 64;  // fixed, so the estimate does not depend on the thread count
};

// E |det[E | gF]| over Haar g, compared with the Crofton prediction.  E has
// dimension k <= n, F dimension 2n-k.
inline McResult mc_crofton(int n, int k, const Frame& E, const Frame& F, const McOptions& opt) {
  if (E.n != n || F.n != n) throw DimensionMismatch("frames live in a different C^n");
  if (E.dim() != k || F.dim() != 2 * n - k) throw DimensionMismatch("need dim E = k and dim F = 2n - k");
  if (k > n) throw DomainError("mc_crofton needs k <= n");
  if (opt.samples < 2) throw DomainError("need at least two samples");
  check_frame(E);
  check_frame(F);

  const int nb = std::max(1, opt.blocks);
  std::vector<double> sum(nb, 0.0), sumsq(nb, 0.0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int b = next++; b < nb; b = next++) {
      std::seed_seq ss{std::uint64_t(opt.seed), std::uint64_t(opt.seed >> 32), std::uint64_t(b)};
      std::mt19937_64 rng(ss);
      const long count = opt.samples / nb + (b < opt.samples % nb ? 1 : 0);
      Eigen::MatrixXd M(2 * n, 2 * n);
      M.leftCols(k) = E.vectors;
      double s = 0, s2 = 0;
      for (long i = 0; i < count; ++i) {
        M.rightCols(2 * n - k) = realify(haar_unitary(n, rng)) * F.vectors;
        const double d = std::abs(M.determinant());
        s += d;
        s2 += d * d;
      }
      sum[b] = s;
      sumsq[b] = s2;
    }
  };
  const int nt = std::clamp(opt.threads, 1, nb);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  double s = 0, s2 = 0;
  for (int b = 0; b < nb; ++b) {
    s += sum[b];
    s2 += sumsq[b];
  }
  const double N = double(opt.samples);
  McResult r;
  r.samples = opt.samples;
  r.estimate = s / N;
  const double var = std::max(0.0, (s2 - N * r.estimate * r.estimate) / (N - 1));
  r.std_error = std::sqrt(var / N);
  r.prediction_float =
      crofton_prediction_cos2(n, k, squares(kahler_cosines(E)), squares(kahler_cosines(complement_frame(F))));
  r.sigma = r.std_error > 0 ? std::abs(r.estimate - r.prediction_float) / r.std_error : 0.0;
  return r;
}

// Same with E the model frame of angles theta and F the complement of the
// model frame of angles psi, so F^perp has angles psi.
inline McResult mc_crofton_model(int n, int k, const AngleVector& theta, const AngleVector& psi,
                                 const McOptions& opt) {
  McResult r = mc_crofton(n, k, model_frame(n, k, theta), complement_frame(model_frame(n, k, psi)), opt);
  r.prediction_exact = crofton_prediction_exact(n, k, theta, psi);
  return r;
}

}  // namespace uval
