#ifndef CDE_CDE_OP_HPP
#define CDE_CDE_OP_HPP

#include <array>
#include <vector>

#include "cde/clifford.hpp"
#include "cde/projectors.hpp"
#include "cde/tensor.hpp"

namespace cde {

struct FourMomentum {
  double E = 0, p1 = 0, p2 = 0, p3 = 0;

  double p_norm() const;
  double p_norm2() const { return p1 * p1 + p2 * p2 + p3 * p3; }
  // E^2 - |p|^2 - m^2, the quantity whose vanishing puts the point on shell.
  double shell_residual(double mass) const { return E * E - p_norm2() - mass * mass; }
  bool on_shell(double mass, double tol = 1e-9) const;
};

struct Bispinor {
  CVector upper;  // chi_L
  CVector lower;  // chi_R

  CVector full() const;
  static Bispinor from_full(const CVector& v);
};

// Selects which of the two momentum-space operators is meant: the one
// annihilating the mixed-sign states chi_{+-}, chi_{-+} or the one
// annihilating the equal-sign states chi_{++}, chi_{--}.
enum class CdeBranch { MixedSigns, EqualSigns };

// The physical identification of the complex direction vector:
//   q = (i m sin(alpha), -i m cos(alpha), E),  q.q = E^2 - m^2.
struct QIdentification {
  std::array<Cx, 3> q;
  Cx norm2;
};
QIdentification q_from_physical(const ChiralParams& params, double E);

// The direction actually carried by the first tensor slot of the kernel
// eigenstates. The first component enters with the opposite sign from
// q_from_physical: that sign is fixed empirically by requiring the
// projector-built eigenstates to be annihilated by the momentum-space
// operators below (the two conventions differ by alpha -> -alpha).
// Requires m > 0 and E^2 > m^2; normalized with the principal square root.
Direction3 q_direction(const ChiralParams& params, double E);

// MixedSigns:  -gamma^0 E + gamma^k p_k + m exp(i alpha gamma5)
// EqualSigns:  +gamma^0 E + gamma^k p_k - m exp(i alpha gamma5)
// Off-shell momenta are allowed; the kernel is then trivial.
CMatrix cde_momentum_operator(CdeBranch branch, const FourMomentum& p, const ChiralParams& params,
                              const GammaSet& gs = gamma_chiral());

struct ResidualReport {
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks the four identities rewriting sigma.q (x) I2, I2 (x) sigma.p and
// their sum/difference in terms of gamma matrices. qdir must be a bilinear
// unit direction, pdir a real Euclidean unit direction.
ResidualReport verify_gamma_rewrite(const Direction3& qdir, const Direction3& pdir);

// Orthonormal kernel basis of the selected operator, packaged as bispinors.
// On shell with E > 0 and real alpha the kernel is two-dimensional; off
// shell it is empty.
std::vector<Bispinor> plane_wave_solutions(CdeBranch branch, const FourMomentum& p,
                                           const ChiralParams& params);

struct ChiCheckReport {
  CdeBranch matched_branch = CdeBranch::MixedSigns;
  double matched_residual = 0.0;  // ||D chi|| on the branch the signs select
  double other_residual = 0.0;    // same state against the other branch
  bool pass = false;
};

// Builds chi_{s1,s2}(q_hat, p_hat) from the 2x2 projector eigenvectors and
// verifies it is annihilated by the branch its signs select (tolerance
// 1e-10). Requires m > 0, |p| > 0 and E^2 > m^2.
ChiCheckReport chi_solution_check(const FourMomentum& p, const ChiralParams& params, int s1, int s2);

struct DispersionReport {
  bool on_shell = false;          // E^2 = |p|^2 + m^2 within tolerance
  bool kernel_nontrivial = false;
  double det_residual = 0.0;      // |det(D) - shell_residual^2| (relative)
  double scalar_residual = 0.0;   // |E^2 - (|p|^2 + m^2)| when solutions exist
  bool pass = false;              // kernel nontrivial iff on shell
};

DispersionReport dispersion_check(const FourMomentum& p, const ChiralParams& params);

// U D(alpha) U = D(0) with U = exp(-i alpha gamma5 / 2) on both sides (the
// same factor twice, not a similarity transform: gamma5 anticommutes with
// every gamma^mu). Real alpha only. Checks both branches.
ResidualReport chiral_rotation_equivalence(const FourMomentum& p, const ChiralParams& params);

// The generic first-order form X^mu d_mu psi = -Y psi specialized to this
// operator: X^mu = i gamma^mu, Y = -m exp(i alpha gamma5).
struct FirstOrderForm {
  std::array<CMatrix, 4> x;
  CMatrix y;
};
FirstOrderForm first_order_form(const ChiralParams& params);

// Symbol of X^mu d_mu + Y on the plane wave exp(-i(E t - p.x)).
CMatrix first_order_symbol(const FirstOrderForm& form, const FourMomentum& p);

}  // namespace cde

#endif
