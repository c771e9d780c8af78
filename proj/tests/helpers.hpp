#ifndef CDE_TEST_HELPERS_HPP
#define CDE_TEST_HELPERS_HPP

#include <cmath>
#include <random>

#include "cde/cde_op.hpp"
#include "cde/projectors.hpp"
#include "cde/tensor.hpp"

namespace cdetest {

using cde::Cx;

inline cde::CMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  cde::CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Cx(dist(rng), dist(rng));
  return m;
}

inline cde::Direction3 random_real_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  double x, y, z, n;
  do {
    x = dist(rng), y = dist(rng), z = dist(rng);
    n = std::sqrt(x * x + y * y + z * z);
  } while (n < 1e-3);
  return {x / n, y / n, z / n};
}

// Complex direction with bilinear norm 1, kept away from the q.q ~ 0 cone.
inline cde::Direction3 random_complex_axis(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (;;) {
    cde::Direction3 d{Cx(dist(rng), 0.4 * dist(rng)), Cx(dist(rng), 0.4 * dist(rng)),
                      Cx(dist(rng), 0.4 * dist(rng))};
    if (std::abs(d.bilinear_norm2()) > 0.3) return d.normalized();
  }
}

inline cde::FourMomentum random_on_shell(std::mt19937_64& rng, double mass) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double p1, p2, p3;
  do {
    p1 = dist(rng), p2 = dist(rng), p3 = dist(rng);
  } while (p1 * p1 + p2 * p2 + p3 * p3 < 1e-2);
  const double e = std::sqrt(p1 * p1 + p2 * p2 + p3 * p3 + mass * mass);
  return {e, p1, p2, p3};
}

// Random unitary from the QR factorization of a Gaussian matrix.
inline cde::CMatrix random_unitary(std::mt19937_64& rng, int n) {
  const cde::CMatrix a = random_matrix(rng, n, n);
  Eigen::HouseholderQR<cde::CMatrix> qr(a);
  cde::CMatrix q = qr.householderQ();
  const cde::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline double max_abs(const cde::CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace cdetest

#endif
