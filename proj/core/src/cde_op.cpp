#include "cde/cde_op.hpp"

#include <cmath>
#include <stdexcept>

namespace cde {

double FourMomentum::p_norm() const { return std::sqrt(p_norm2()); }

bool FourMomentum::on_shell(double mass, double tol) const {
  const double scale = std::max(1.0, E * E);
  return std::abs(shell_residual(mass)) <= tol * scale;
}

CVector Bispinor::full() const {
  CVector v(upper.size() + lower.size());
  v << upper, lower;
  return v;
}

Bispinor Bispinor::from_full(const CVector& v) {
  if (v.size() != 4) throw std::invalid_argument("Bispinor::from_full: dimension 4 required");
  return {v.head(2), v.tail(2)};
}

QIdentification q_from_physical(const ChiralParams& params, double E) {
  const Cx i(0, 1);
  const double m = params.mass;
  QIdentification out;
  out.q = {i * m * std::sin(params.alpha), -i * m * std::cos(params.alpha), Cx(E, 0)};
  out.norm2 = out.q[0] * out.q[0] + out.q[1] * out.q[1] + out.q[2] * out.q[2];
  return out;
}

Direction3 q_direction(const ChiralParams& params, double E) {
  if (!(params.mass > 0)) throw std::invalid_argument("q_direction: m > 0 required");
  if (!(E * E > params.mass * params.mass))
    throw std::invalid_argument("q_direction: E^2 > m^2 required for normalization");
  const Cx i(0, 1);
  const double m = params.mass;
  // First component sign flipped relative to q_from_physical; see header.
  Direction3 q{-i * m * std::sin(params.alpha), -i * m * std::cos(params.alpha), Cx(E, 0)};
  return q.normalized();
}

CMatrix cde_momentum_operator(CdeBranch branch, const FourMomentum& p, const ChiralParams& params,
                              const GammaSet& gs) {
  const double sign = branch == CdeBranch::MixedSigns ? -1.0 : +1.0;
  CMatrix d = sign * (p.E * gs.gamma[0] - params.mass * chiral_exp(gs, params.alpha, +1));
  d += p.p1 * gs.gamma[1] + p.p2 * gs.gamma[2] + p.p3 * gs.gamma[3];
  return d;
}

ResidualReport verify_gamma_rewrite(const Direction3& qdir, const Direction3& pdir) {
  if (!qdir.is_unit(1e-10)) throw std::invalid_argument("verify_gamma_rewrite: qdir must be a bilinear unit");
  if (!pdir.is_real(1e-12) || !pdir.is_unit(1e-10))
    throw std::invalid_argument("verify_gamma_rewrite: pdir must be a real unit");

  const GammaSet& gs = gamma_chiral();
  const CMatrix i4 = CMatrix::Identity(4, 4);
  const Cx i(0, 1);
  const CMatrix g0g5 = gs.gamma[0] * gs.gamma5;
  const CMatrix gdotp = pdir.q1 * gs.gamma[1] + pdir.q2 * gs.gamma[2] + pdir.q3 * gs.gamma[3];

  const CMatrix lhs_q = kron(sigma_dot(qdir), pauli(0));
  const CMatrix rhs_q = g0g5 * (gs.gamma5 * qdir.q1 - i * i4 * qdir.q2 + gs.gamma[0] * qdir.q3);

  const CMatrix lhs_p = kron(pauli(0), sigma_dot(pdir));
  const CMatrix rhs_p = -g0g5 * gdotp;

  const CMatrix rhs_sum =
      g0g5 * (gs.gamma[0] * qdir.q3 - gdotp + gs.gamma5 * qdir.q1 - i * i4 * qdir.q2);
  const CMatrix rhs_diff =
      g0g5 * (gs.gamma[0] * qdir.q3 + gdotp + gs.gamma5 * qdir.q1 - i * i4 * qdir.q2);

  double r = (lhs_q - rhs_q).cwiseAbs().maxCoeff();
  r = std::max(r, (lhs_p - rhs_p).cwiseAbs().maxCoeff());
  r = std::max(r, (lhs_q + lhs_p - rhs_sum).cwiseAbs().maxCoeff());
  r = std::max(r, (lhs_q - lhs_p - rhs_diff).cwiseAbs().maxCoeff());

  ResidualReport rep{r, 1e-12, r <= 1e-12};
  return rep;
}

std::vector<Bispinor> plane_wave_solutions(CdeBranch branch, const FourMomentum& p,
                                           const ChiralParams& params) {
  const CMatrix d = cde_momentum_operator(branch, p, params);
  std::vector<Bispinor> out;
  for (const CVector& v : nullspace(d, 1e-8)) out.push_back(Bispinor::from_full(v));
  return out;
}

ChiCheckReport chi_solution_check(const FourMomentum& p, const ChiralParams& params, int s1, int s2) {
  if (p.p_norm() <= 0) throw std::invalid_argument("chi_solution_check: |p| > 0 required");
  if (std::abs(s1) != 1 || std::abs(s2) != 1)
    throw std::invalid_argument("chi_solution_check: signs must be +1 or -1");

  const Direction3 qhat = q_direction(params, p.E);  // rejects E^2 <= m^2
  const double pn = p.p_norm();
  const Direction3 phat{Cx(p.p1 / pn, 0), Cx(p.p2 / pn, 0), Cx(p.p3 / pn, 0)};

  const CVector chi = chi_tensor({{s1, qhat}, {s2, phat}});
  const CdeBranch matched = (s1 == -s2) ? CdeBranch::MixedSigns : CdeBranch::EqualSigns;
  const CdeBranch other = (matched == CdeBranch::MixedSigns) ? CdeBranch::EqualSigns : CdeBranch::MixedSigns;

  ChiCheckReport rep;
  rep.matched_branch = matched;
  rep.matched_residual = (cde_momentum_operator(matched, p, params) * chi).norm();
  rep.other_residual = (cde_momentum_operator(other, p, params) * chi).norm();
  rep.pass = rep.matched_residual <= 1e-10;
  return rep;
}

DispersionReport dispersion_check(const FourMomentum& p, const ChiralParams& params) {
  DispersionReport rep;
  rep.on_shell = p.on_shell(params.mass, 1e-9);

  const CMatrix d = cde_momentum_operator(CdeBranch::MixedSigns, p, params);
  const double expected = p.shell_residual(params.mass) * p.shell_residual(params.mass);
  const Cx dd = det(d);
  const double scale = std::max(1.0, std::abs(expected));
  rep.det_residual = std::abs(dd - Cx(expected, 0)) / scale;
  rep.kernel_nontrivial = !nullspace(d, 1e-8).empty();
  if (rep.kernel_nontrivial)
    rep.scalar_residual = std::abs(p.E * p.E - (p.p_norm2() + params.mass * params.mass));
  rep.pass = rep.kernel_nontrivial == rep.on_shell;
  return rep;
}

ResidualReport chiral_rotation_equivalence(const FourMomentum& p, const ChiralParams& params) {
  if (std::abs(params.alpha.imag()) > 0)
    throw std::invalid_argument("chiral_rotation_equivalence: real alpha required");
  const CMatrix u = chiral_exp(params.alpha / 2.0, -1);  // exp(-i alpha gamma5 / 2)
  const ChiralParams zero{params.mass, Cx(0, 0)};

  double r = 0.0;
  for (CdeBranch b : {CdeBranch::MixedSigns, CdeBranch::EqualSigns}) {
    const CMatrix lhs = u * cde_momentum_operator(b, p, params) * u;
    const CMatrix rhs = cde_momentum_operator(b, p, zero);
    r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return {r, 1e-12, r <= 1e-12};
}

FirstOrderForm first_order_form(const ChiralParams& params) {
  const GammaSet& gs = gamma_chiral();
  const Cx i(0, 1);
  FirstOrderForm form;
  for (int mu = 0; mu < 4; ++mu) form.x[mu] = i * gs.gamma[mu];
  form.y = -params.mass * chiral_exp(params.alpha, +1);
  return form;
}

CMatrix first_order_symbol(const FirstOrderForm& form, const FourMomentum& p) {
  // d_mu acting on exp(-i(E t - p.x)) pulls down (-iE, +ip_k).
  const Cx i(0, 1);
  return form.x[0] * (-i * p.E) + form.x[1] * (i * p.p1) + form.x[2] * (i * p.p2) +
         form.x[3] * (i * p.p3) + form.y;
}

}  // namespace cde
