#include "cde/tensor.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace cde {

bool all_finite(const CMatrix& a) {
  return a.allFinite();
}

bool all_finite(const CVector& v) {
  return v.allFinite();
}

void require_finite(const CMatrix& a, const char* what) {
  if (!a.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

void require_finite(const CVector& v, const char* what) {
  if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

static void require_square_same(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument(std::string(op) + ": square matrices of equal dimension required");
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_square_same(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_square_same(a, b, "commutator");
  return a * b - b * a;
}

Cx det(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square matrix required");
  return a.determinant();
}

std::vector<CVector> nullspace(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("nullspace: square matrix required");
  if (!(tol > 0)) throw std::invalid_argument("nullspace: tol must be positive");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  std::vector<CVector> basis;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol * smax) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

}  // namespace cde
