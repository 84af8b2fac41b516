// Kinematic formula for the length of a curve in a generic intersection
// in CP^4, plus the additive version for vol_7 of a Minkowski sum.
#include <iostream>

#include "uval/uval.hpp"

using namespace uval;

int main() {
  const int n = 4;
  KinematicTensor k = kinematic(n, tau(n, 1, 0));
  std::cout << "k(tau[1,0]), bidegree (4,5):\n  " << format_matrix(k.block(4, 5)) << "\n";
  std::cout << "in CP^4 probabilities:\n  " << format_matrix(cpn_normalize(k).block(4, 5)) << "\n";

  KinematicTensor a = additive_kinematic(n, mu(n, 7, 3));
  std::cout << "a(mu[7,3]), bidegree (3,4):\n  " << format_matrix(a.block(3, 4)) << "\n";
  std::cout << "rows: ";
  for (const auto& s : canonical_basis_labels(n, 3)) std::cout << s << " ";
  std::cout << "\ncols: ";
  for (const auto& s : canonical_basis_labels(n, 4)) std::cout << s << " ";
  std::cout << "\n";

  // Bezout: two complementary linear subspaces meet in one point
  for (auto [a1, b1] : {std::pair{1, 3}, {2, 2}, {3, 1}})
    std::cout << "bezout(" << n << "," << a1 << "," << b1 << ") = " << format_scalar(bezout_check(n, a1, b1)) << "\n";
}
