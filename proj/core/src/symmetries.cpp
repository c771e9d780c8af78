#include "cde/symmetries.hpp"

#include <cmath>
#include <stdexcept>

namespace cde {

namespace {

// Lambda recovered from S by expanding S^-1 gamma^mu S in the gamma basis:
// tr(gamma^nu gamma^nu) = 4 eta^{nu nu}.
Eigen::Matrix4d lambda_from_spinor(const CMatrix& s) {
  const GammaSet& gs = gamma_chiral();
  const CMatrix si = s.inverse();
  Eigen::Matrix4d lambda;
  for (int mu = 0; mu < 4; ++mu) {
    const CMatrix m = si * gs.gamma[mu] * s;
    for (int nu = 0; nu < 4; ++nu) {
      const Cx c = (m * gs.gamma[nu]).trace() / (4.0 * double(gs.metric[nu]));
      lambda(mu, nu) = c.real();
    }
  }
  return lambda;
}

}  // namespace

LorentzSpinorMap lorentz_spinor_map(LorentzKind kind, double parameter, const Direction3& axis) {
  if (!axis.is_real(1e-12) || !axis.is_unit(1e-10))
    throw std::invalid_argument("lorentz_spinor_map: axis must be a real unit vector");
  if (std::abs(parameter) > 10.0)
    throw std::invalid_argument("lorentz_spinor_map: |parameter| <= 10 required");

  const GammaSet& gs = gamma_chiral();
  const CMatrix i4 = CMatrix::Identity(4, 4);
  CMatrix s;
  if (kind == LorentzKind::Rotation) {
    // Block-diagonal: each chiral block is the spin-1/2 rotation.
    const Cx i(0, 1);
    s = std::cos(parameter / 2) * i4 + i * std::sin(parameter / 2) * kron(pauli(0), sigma_dot(axis));
  } else {
    const CMatrix k = gs.gamma[0] * (axis.q1 * gs.gamma[1] + axis.q2 * gs.gamma[2] + axis.q3 * gs.gamma[3]);
    s = std::cosh(parameter / 2) * i4 + std::sinh(parameter / 2) * k;  // k^2 = I
  }

  LorentzSpinorMap map;
  map.spinor = std::move(s);
  map.vector = lambda_from_spinor(map.spinor);
  map.kind = kind;
  map.parameter = parameter;
  map.axis = axis;
  return map;
}

FourMomentum apply_vector(const Eigen::Matrix4d& lambda, const FourMomentum& p) {
  Eigen::Vector4d v(p.E, p.p1, p.p2, p.p3);
  v = lambda * v;
  return {v(0), v(1), v(2), v(3)};
}

ResidualReport covariance_check(const LorentzSpinorMap& map, const FourMomentum& p,
                                const ChiralParams& params) {
  const FourMomentum pp = apply_vector(map.vector, p);
  const CMatrix d = cde_momentum_operator(CdeBranch::MixedSigns, pp, params);
  double r = 0.0;
  for (const Bispinor& u : plane_wave_solutions(CdeBranch::MixedSigns, p, params))
    r = std::max(r, (d * (map.spinor * u.full())).norm());
  return {r, 1e-9, r <= 1e-9};
}

DiscreteSymmetry discrete_symmetry(DiscreteKind kind) {
  const GammaSet& gs = gamma_chiral();
  const Cx i(0, 1);
  DiscreteSymmetry sym;
  sym.kind = kind;
  switch (kind) {
    case DiscreteKind::C:
      sym.spinor_matrix = i * gs.gamma[2];
      sym.conjugates = true;
      break;
    case DiscreteKind::P:
      sym.spinor_matrix = gs.gamma[0];
      sym.flips_x = true;
      break;
    case DiscreteKind::T:
      sym.spinor_matrix = i * gs.gamma[1] * gs.gamma[3];
      sym.conjugates = true;
      sym.flips_t = true;
      break;
  }
  return sym;
}

Cx alpha_transform(DiscreteKind kind, Cx alpha) {
  switch (kind) {
    case DiscreteKind::C: return std::conj(alpha);
    case DiscreteKind::P: return -alpha;
    case DiscreteKind::T: return -std::conj(alpha);
  }
  return alpha;
}

Cx alpha_transform(const std::vector<DiscreteKind>& kinds, Cx alpha) {
  for (auto it = kinds.rbegin(); it != kinds.rend(); ++it) alpha = alpha_transform(*it, alpha);
  return alpha;
}

ResidualReport verify_discrete_transform(DiscreteKind kind, const FourMomentum& p,
                                         const ChiralParams& params) {
  const DiscreteSymmetry sym = discrete_symmetry(kind);
  const auto op = [&](Cx alpha, const FourMomentum& mom) {
    return cde_momentum_operator(CdeBranch::MixedSigns, mom, ChiralParams{params.mass, alpha});
  };

  CMatrix lhs;
  FourMomentum reflected{};
  switch (kind) {
    case DiscreteKind::C:
      lhs = op(params.alpha, p).conjugate();
      reflected = {-p.E, -p.p1, -p.p2, -p.p3};
      break;
    case DiscreteKind::P:
      lhs = op(params.alpha, {p.E, -p.p1, -p.p2, -p.p3});
      reflected = p;
      break;
    case DiscreteKind::T:
      lhs = op(params.alpha, {-p.E, p.p1, p.p2, p.p3}).conjugate();
      reflected = {-p.E, -p.p1, -p.p2, -p.p3};
      break;
  }
  lhs = sym.spinor_matrix * lhs * sym.spinor_matrix.adjoint();
  const CMatrix rhs = op(alpha_transform(kind, params.alpha), reflected);
  const double r = (lhs - rhs).cwiseAbs().maxCoeff();
  return {r, 1e-12, r <= 1e-12};
}

bool AlphaConstraint::test(Cx alpha, double tol) const {
  switch (kind) {
    case InvarianceClass::C: return std::abs(alpha.imag()) <= tol;
    case InvarianceClass::CP: return std::abs(alpha.real()) <= tol;
    case InvarianceClass::CPT: return true;
  }
  return false;
}

AlphaConstraint classify_alpha(InvarianceClass kind) {
  AlphaConstraint c;
  c.kind = kind;
  switch (kind) {
    case InvarianceClass::C: c.description = "Im(alpha) = 0"; break;
    case InvarianceClass::CP: c.description = "Re(alpha) = 0"; break;
    case InvarianceClass::CPT: c.description = "alpha unconstrained"; break;
  }
  return c;
}

}  // namespace cde
