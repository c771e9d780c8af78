#ifndef CDE_TENSOR_HPP
#define CDE_TENSOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

// Dense complex linear algebra at the small fixed sizes used throughout
// (2, 4 and 2^N). Everything is a value; no operation mutates its inputs.

namespace cde {

using Cx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-10;

bool all_finite(const CMatrix& a);
bool all_finite(const CVector& v);

// Throws std::invalid_argument on non-finite entries.
void require_finite(const CMatrix& a, const char* what);
void require_finite(const CVector& v, const char* what);

// Kronecker product: result((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// ab + ba and ab - ba; both require square matrices of equal dimension.
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

// Determinant of a square matrix (partial-pivot LU).
Cx det(const CMatrix& a);

// Orthonormal basis of { v : ||a v|| <= tol * ||a|| * ||v|| } via SVD.
// Empty when the kernel is trivial. Requires a square, tol > 0.
std::vector<CVector> nullspace(const CMatrix& a, double tol = kDefaultRankTol);

inline int nullity(const CMatrix& a, double tol = kDefaultRankTol) {
  return static_cast<int>(nullspace(a, tol).size());
}

}  // namespace cde

#endif
