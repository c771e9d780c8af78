#include "cde/projectors.hpp"

#include <cmath>
#include <stdexcept>

#include "cde/clifford.hpp"

namespace cde {

bool Direction3::is_unit(double tol) const {
  return std::abs(bilinear_norm2() - Cx(1, 0)) <= tol;
}

bool Direction3::is_real(double tol) const {
  return std::abs(q1.imag()) <= tol && std::abs(q2.imag()) <= tol && std::abs(q3.imag()) <= tol;
}

Direction3 Direction3::normalized() const {
  const Cx n2 = bilinear_norm2();
  if (std::abs(n2) < 1e-14)
    throw std::invalid_argument("Direction3::normalized: bilinear norm is (numerically) zero");
  const Cx n = std::sqrt(n2);  // principal branch
  return {q1 / n, q2 / n, q3 / n};
}

CMatrix sigma_dot(const Direction3& axis) {
  return axis.q1 * pauli(1) + axis.q2 * pauli(2) + axis.q3 * pauli(3);
}

static void require_unit(const Direction3& axis, const char* what) {
  if (!axis.is_unit(1e-10))
    throw std::invalid_argument(std::string(what) + ": axis must satisfy q.q = 1");
}

static void require_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

CMatrix projector2(const Direction3& axis, int s) {
  require_unit(axis, "projector2");
  require_sign(s, "projector2");
  return 0.5 * (CMatrix::Identity(2, 2) + double(s) * sigma_dot(axis));
}

ProjectorPair projector_pair(const Direction3& axis) {
  return {projector2(axis, +1), projector2(axis, -1), axis};
}

ConstraintReport solve_idempotent_constraints(Cx a0, const std::array<Cx, 3>& avec,
                                              Cx b0, const std::array<Cx, 3>& bvec) {
  constexpr double tol = 1e-12;
  ConstraintReport rep;

  const Cx half(0.5, 0);
  const Cx quarter(0.25, 0);
  auto dot = [](const std::array<Cx, 3>& u, const std::array<Cx, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };

  if (std::abs(a0 - half) > tol) rep.violations.push_back("a0 != 1/2");
  if (std::abs(b0 - half) > tol) rep.violations.push_back("b0 != 1/2");
  if (std::abs(dot(avec, avec) - quarter) > tol) rep.violations.push_back("a.a != 1/4");
  if (std::abs(dot(bvec, bvec) - quarter) > tol) rep.violations.push_back("b.b != 1/4");
  for (int k = 0; k < 3; ++k) {
    if (std::abs(avec[k] + bvec[k]) > tol) {
      rep.violations.push_back("a != -b");
      break;
    }
  }
  rep.satisfied = rep.violations.empty();

  const CMatrix p1 = a0 * pauli(0) + avec[0] * pauli(1) + avec[1] * pauli(2) + avec[2] * pauli(3);
  const CMatrix p2 = b0 * pauli(0) + bvec[0] * pauli(1) + bvec[1] * pauli(2) + bvec[2] * pauli(3);
  const double r1 = (p1 * p1 - p1).cwiseAbs().maxCoeff();
  const double r2 = (p2 * p2 - p2).cwiseAbs().maxCoeff();
  const double r12 = (p1 * p2).cwiseAbs().maxCoeff();
  const double rsum = (p1 + p2 - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  rep.idempotency_residual = std::max({r1, r2, r12, rsum});

  // Raw resolutions of the identity with a trivial member pass the matrix
  // conditions but not the expansion constraints.
  if (!rep.satisfied && rep.idempotency_residual <= tol) rep.degenerate = true;
  return rep;
}

CVector eigvec2(const Direction3& axis, int s) {
  require_unit(axis, "eigvec2");
  require_sign(s, "eigvec2");
  const CMatrix m = sigma_dot(axis) - double(s) * CMatrix::Identity(2, 2);
  auto basis = nullspace(m, 1e-10);
  if (basis.size() != 1)
    throw std::invalid_argument("eigvec2: sigma.axis - s*I is not rank one (degenerate axis)");
  CVector v = basis.front();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      v *= std::abs(v(i)) / v(i);
      break;
    }
  }
  return v;
}

CMatrix projector_tensor(const std::vector<SpinSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("projector_tensor: at least one slot required");
  CMatrix out = projector2(specs[0].second, specs[0].first);
  for (std::size_t i = 1; i < specs.size(); ++i)
    out = kron(out, projector2(specs[i].second, specs[i].first));
  return out;
}

CVector chi_tensor(const std::vector<SpinSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("chi_tensor: at least one slot required");
  CVector out = eigvec2(specs[0].second, specs[0].first);
  for (std::size_t i = 1; i < specs.size(); ++i) {
    const CVector next = eigvec2(specs[i].second, specs[i].first);
    CVector merged(out.size() * next.size());
    for (Eigen::Index a = 0; a < out.size(); ++a)
      for (Eigen::Index b = 0; b < next.size(); ++b) merged(a * next.size() + b) = out(a) * next(b);
    out = std::move(merged);
  }
  return out;
}

CMatrix rotation2(double theta, const Direction3& axis) {
  if (!axis.is_real(1e-14)) throw std::invalid_argument("rotation2: axis must be real");
  require_unit(axis, "rotation2");
  const Cx i(0, 1);
  return std::cos(theta / 2) * CMatrix::Identity(2, 2) + i * std::sin(theta / 2) * sigma_dot(axis);
}

}  // namespace cde
