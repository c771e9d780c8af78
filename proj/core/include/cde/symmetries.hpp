#ifndef CDE_SYMMETRIES_HPP
#define CDE_SYMMETRIES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cde/cde_op.hpp"
#include "cde/clifford.hpp"
#include "cde/projectors.hpp"

namespace cde {

enum class LorentzKind { Rotation, Boost };

// Paired spinor-space transform S and vector-space transform Lambda for one
// rotation or boost, satisfying S^-1 gamma^mu S = Lambda^mu_nu gamma^nu.
struct LorentzSpinorMap {
  CMatrix spinor;          // S, 4x4
  Eigen::Matrix4d vector;  // Lambda, acting on (E, p1, p2, p3)
  LorentzKind kind = LorentzKind::Rotation;
  double parameter = 0.0;  // angle or rapidity
  Direction3 axis;
};

// Rotation (parameter = angle) or boost (parameter = rapidity) about/along a
// real unit axis. |parameter| <= 10. The rotation restricted to the two
// chiral blocks equals rotation2(parameter, axis).
LorentzSpinorMap lorentz_spinor_map(LorentzKind kind, double parameter, const Direction3& axis);

FourMomentum apply_vector(const Eigen::Matrix4d& lambda, const FourMomentum& p);

// For each plane-wave solution u at p, verifies D(Lambda p; m, alpha)(S u) = 0
// with the chiral angle unchanged. Tolerance 1e-9. Requires on-shell p.
ResidualReport covariance_check(const LorentzSpinorMap& map, const FourMomentum& p,
                                const ChiralParams& params);

enum class DiscreteKind { C, P, T };

struct DiscreteSymmetry {
  DiscreteKind kind = DiscreteKind::C;
  CMatrix spinor_matrix;  // unitary
  bool conjugates = false;
  bool flips_x = false;
  bool flips_t = false;
};

// The fixed matrix realization used by verify_discrete_transform.
DiscreteSymmetry discrete_symmetry(DiscreteKind kind);

// Chiral-angle map of one discrete operation:
//   C: alpha -> conj(alpha);  P: alpha -> -alpha;  T: alpha -> -conj(alpha).
Cx alpha_transform(DiscreteKind kind, Cx alpha);

// Composition applied right-to-left ("CPT" = apply T, then P, then C).
Cx alpha_transform(const std::vector<DiscreteKind>& kinds, Cx alpha);

// Realizes the operation on the momentum-space operator (C conjugates
// entries; P negates the spatial momentum arguments; T conjugates entries
// and negates E), sandwiches with the realization matrix, and compares
// against the operator at the transformed chiral angle and reflected
// momentum. Tolerance 1e-12.
ResidualReport verify_discrete_transform(DiscreteKind kind, const FourMomentum& p,
                                         const ChiralParams& params);

enum class InvarianceClass { C, CP, CPT };

struct AlphaConstraint {
  InvarianceClass kind = InvarianceClass::C;
  std::string description;
  bool test(Cx alpha, double tol = 1e-12) const;
};

// Fixed-point condition alpha = alpha' for the given invariance class:
// C forces real alpha, CP imaginary alpha, CPT leaves alpha unconstrained.
AlphaConstraint classify_alpha(InvarianceClass kind);

}  // namespace cde

#endif
