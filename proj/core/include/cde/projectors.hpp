#ifndef CDE_PROJECTORS_HPP
#define CDE_PROJECTORS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cde/tensor.hpp"

namespace cde {

// A complex 3-vector with bilinear normalization: q.q = q1^2 + q2^2 + q3^2
// (no conjugation). Real unit vectors are the familiar special case.
struct Direction3 {
  Cx q1{0}, q2{0}, q3{0};

  Direction3() = default;
  Direction3(Cx a, Cx b, Cx c) : q1(a), q2(b), q3(c) {}

  Cx bilinear_norm2() const { return q1 * q1 + q2 * q2 + q3 * q3; }
  bool is_unit(double tol = 1e-12) const;
  bool is_real(double tol = 1e-14) const;

  // Divides by the principal square root of q.q; throws when q.q ~ 0.
  Direction3 normalized() const;

  static Direction3 unit_x() { return {1, 0, 0}; }
  static Direction3 unit_y() { return {0, 1, 0}; }
  static Direction3 unit_z() { return {0, 0, 1}; }
};

// sigma . axis as a 2x2 matrix (bilinear contraction, no conjugation).
CMatrix sigma_dot(const Direction3& axis);

// P_s(axis) = (I2 + s * sigma.axis) / 2 for s = +/-1. Requires a bilinear
// unit axis. Idempotent always; Hermitian only for real axes.
CMatrix projector2(const Direction3& axis, int s);

struct ProjectorPair {
  CMatrix plus;
  CMatrix minus;
  Direction3 axis;
};

ProjectorPair projector_pair(const Direction3& axis);

struct ConstraintReport {
  bool satisfied = false;
  bool degenerate = false;  // resolves the identity but with a trivial member
  std::vector<std::string> violations;
  double idempotency_residual = 0.0;  // max over ||P^2 - P|| of the two assembled matrices
};

// Checks the scalar/vector expansion constraints for a two-projector
// resolution of the identity on C^2: a0 = b0 = 1/2, a.a = b.b = 1/4,
// a = -b; also reports the raw idempotency residual of the assembled
// matrices. {I, 0} satisfies the raw conditions only degenerately and is
// flagged as such.
ConstraintReport solve_idempotent_constraints(Cx a0, const std::array<Cx, 3>& avec,
                                              Cx b0, const std::array<Cx, 3>& bvec);

// Eigenvector of sigma.axis with eigenvalue s, unit Hermitian norm, phase
// fixed by making the first component of magnitude > 1e-8 real positive.
// Throws when sigma.axis - s*I is not rank one (non-diagonalizable axis).
CVector eigvec2(const Direction3& axis, int s);

using SpinSpec = std::pair<int, Direction3>;  // (sign, axis)

// Kronecker product of 2x2 projectors over the given slots (2^N x 2^N).
CMatrix projector_tensor(const std::vector<SpinSpec>& specs);

// Kronecker product of eigvec2 results (dimension 2^N).
CVector chi_tensor(const std::vector<SpinSpec>& specs);

// Spin-1/2 rotation by theta about a real unit axis:
//   cos(theta/2) I + i sin(theta/2) sigma.axis
// which equals exp(i theta/2) P_+ + exp(-i theta/2) P_-.
CMatrix rotation2(double theta, const Direction3& axis);

}  // namespace cde

#endif
