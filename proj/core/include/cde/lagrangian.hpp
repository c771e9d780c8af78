#ifndef CDE_LAGRANGIAN_HPP
#define CDE_LAGRANGIAN_HPP

#include <array>
#include <vector>

#include "cde/cde_op.hpp"
#include "cde/clifford.hpp"
#include "cde/tensor.hpp"

namespace cde {

enum class LagrangianVariant { Dirac, ChiralDirac };

// Field value and its four partial derivatives at one spacetime point.
struct FieldSample {
  CVector psi;                   // dimension 4
  std::array<CVector, 4> dpsi;   // d_mu psi, time first
};

// Fully symmetric density
//   1/2 bar(psi) (i gamma^mu d_mu - M) psi
//   - 1/2 [ (i d_mu bar(psi)) gamma^mu + bar(psi) M ] psi
// with M = m (Dirac) or M = m exp(mass_phase_sign * i alpha gamma5).
// The default phase sign (+1) is the one whose variation reproduces the
// momentum-space operators in cde_op.hpp; -1 selects the opposite
// convention. Real alpha makes the density real.
Cx lagrangian_density(const FieldSample& sample, const ChiralParams& params,
                      LagrangianVariant variant, int mass_phase_sign = +1);

// The assembled mass matrix M used by lagrangian_density.
CMatrix mass_matrix(const ChiralParams& params, LagrangianVariant variant, int mass_phase_sign = +1);

// Uniform 4D grid of field values, row-major over (t, x, y, z).
struct FieldGrid {
  std::array<int, 4> extent{0, 0, 0, 0};
  double spacing = 0.0;
  std::vector<CVector> values;

  FieldGrid() = default;
  FieldGrid(std::array<int, 4> ext, double h);

  std::size_t index(int t, int x, int y, int z) const;
  const CVector& at(int t, int x, int y, int z) const { return values[index(t, x, y, z)]; }
  CVector& at(int t, int x, int y, int z) { return values[index(t, x, y, z)]; }
  bool interior(int t, int x, int y, int z) const;
};

// psi(x) = amplitude * exp(-i(E t - p.x)) sampled at the grid nodes.
FieldGrid plane_wave_grid(std::array<int, 4> extent, double spacing, const CVector& amplitude,
                          const FourMomentum& p);

// Riemann-sum action h^4 * sum of densities over interior points with
// central-difference derivatives. Requires every extent >= 3.
Cx action(const FieldGrid& grid, const ChiralParams& params, LagrangianVariant variant);

struct ElResidualField {
  std::vector<CVector> residual;  // one 4-vector per interior point, iteration order fixed
  double max_norm = 0.0;
};

// Discrete functional derivative of the action with respect to the adjoint
// field, obtained by perturbing adjoint components pointwise (step eps) and
// differencing the action; normalized by h^4.
ElResidualField euler_lagrange_residual(const FieldGrid& grid, const ChiralParams& params,
                                        double eps = 1e-6);

// (i gamma^mu d_mu^discrete - M) psi at the interior points, same iteration
// order as euler_lagrange_residual; the direct-application side of the
// variational cross-check.
ElResidualField discrete_operator_field(const FieldGrid& grid, const ChiralParams& params);

}  // namespace cde

#endif
