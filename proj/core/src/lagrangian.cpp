#include "cde/lagrangian.hpp"

#include <cmath>
#include <stdexcept>

namespace cde {

namespace {

using Row = Eigen::RowVectorXcd;

const GammaSet& gs() { return gamma_chiral(); }

Cx density_terms(const Row& bar, const std::array<Row, 4>& dbar, const CVector& psi,
                 const std::array<CVector, 4>& dpsi, const CMatrix& m) {
  const Cx i(0, 1);
  CVector kin = CVector::Zero(4);
  Row kin_bar = Row::Zero(4);
  for (int mu = 0; mu < 4; ++mu) {
    kin += gs().gamma[mu] * dpsi[mu];
    kin_bar += dbar[mu] * gs().gamma[mu];
  }
  const Cx term1 = (bar * (i * kin - m * psi))(0);
  const Cx term2 = ((i * kin_bar + bar * m) * psi)(0);
  return 0.5 * term1 - 0.5 * term2;
}

}  // namespace

CMatrix mass_matrix(const ChiralParams& params, LagrangianVariant variant, int mass_phase_sign) {
  if (variant == LagrangianVariant::Dirac)
    return params.mass * CMatrix::Identity(4, 4);
  return params.mass * chiral_exp(params.alpha, mass_phase_sign >= 0 ? +1 : -1);
}

Cx lagrangian_density(const FieldSample& sample, const ChiralParams& params,
                      LagrangianVariant variant, int mass_phase_sign) {
  if (sample.psi.size() != 4) throw std::invalid_argument("lagrangian_density: psi must have dimension 4");
  const CMatrix m = mass_matrix(params, variant, mass_phase_sign);
  const Row bar = sample.psi.adjoint() * gs().gamma[0];
  std::array<Row, 4> dbar;
  for (int mu = 0; mu < 4; ++mu) {
    if (sample.dpsi[mu].size() != 4)
      throw std::invalid_argument("lagrangian_density: dpsi must have dimension 4");
    dbar[mu] = sample.dpsi[mu].adjoint() * gs().gamma[0];
  }
  return density_terms(bar, dbar, sample.psi, sample.dpsi, m);
}

FieldGrid::FieldGrid(std::array<int, 4> ext, double h) : extent(ext), spacing(h) {
  for (int n : ext)
    if (n < 1) throw std::invalid_argument("FieldGrid: extents must be positive");
  if (!(h > 0)) throw std::invalid_argument("FieldGrid: spacing must be positive");
  values.assign(std::size_t(ext[0]) * ext[1] * ext[2] * ext[3], CVector::Zero(4));
}

std::size_t FieldGrid::index(int t, int x, int y, int z) const {
  return ((std::size_t(t) * extent[1] + x) * extent[2] + y) * extent[3] + z;
}

bool FieldGrid::interior(int t, int x, int y, int z) const {
  return t > 0 && t < extent[0] - 1 && x > 0 && x < extent[1] - 1 && y > 0 && y < extent[2] - 1 &&
         z > 0 && z < extent[3] - 1;
}

FieldGrid plane_wave_grid(std::array<int, 4> extent, double spacing, const CVector& amplitude,
                          const FourMomentum& p) {
  FieldGrid g(extent, spacing);
  const Cx i(0, 1);
  for (int t = 0; t < extent[0]; ++t)
    for (int x = 0; x < extent[1]; ++x)
      for (int y = 0; y < extent[2]; ++y)
        for (int z = 0; z < extent[3]; ++z) {
          const double phase = p.E * t * spacing - (p.p1 * x + p.p2 * y + p.p3 * z) * spacing;
          g.at(t, x, y, z) = amplitude * std::exp(-i * phase);
        }
  return g;
}

namespace {

struct AdjointGrid {
  std::vector<Row> bar;  // bar(psi) = psi^dagger gamma^0 per node
};

AdjointGrid make_adjoint(const FieldGrid& grid) {
  AdjointGrid a;
  a.bar.reserve(grid.values.size());
  for (const CVector& v : grid.values) a.bar.push_back(v.adjoint() * gs().gamma[0]);
  return a;
}

void require_grid(const FieldGrid& grid) {
  for (int n : grid.extent)
    if (n < 3) throw std::invalid_argument("grid too small: every extent must be >= 3");
}

// The residual fields live on points whose whole difference stencil lies in
// the interior; nearer the boundary the action sum is truncated and the
// functional derivative no longer matches the operator.
void require_grid_deep(const FieldGrid& grid) {
  for (int n : grid.extent)
    if (n < 5) throw std::invalid_argument("grid too small: every extent must be >= 5");
}

// Central differences at an interior node.
std::array<CVector, 4> dpsi_at(const FieldGrid& g, int t, int x, int y, int z) {
  const double inv2h = 1.0 / (2.0 * g.spacing);
  return {(g.at(t + 1, x, y, z) - g.at(t - 1, x, y, z)) * inv2h,
          (g.at(t, x + 1, y, z) - g.at(t, x - 1, y, z)) * inv2h,
          (g.at(t, x, y + 1, z) - g.at(t, x, y - 1, z)) * inv2h,
          (g.at(t, x, y, z + 1) - g.at(t, x, y, z - 1)) * inv2h};
}

std::array<Row, 4> dbar_at(const FieldGrid& g, const AdjointGrid& a, int t, int x, int y, int z) {
  const double inv2h = 1.0 / (2.0 * g.spacing);
  auto b = [&](int tt, int xx, int yy, int zz) -> const Row& { return a.bar[g.index(tt, xx, yy, zz)]; };
  return {(b(t + 1, x, y, z) - b(t - 1, x, y, z)) * inv2h,
          (b(t, x + 1, y, z) - b(t, x - 1, y, z)) * inv2h,
          (b(t, x, y + 1, z) - b(t, x, y - 1, z)) * inv2h,
          (b(t, x, y, z + 1) - b(t, x, y, z - 1)) * inv2h};
}

Cx density_at(const FieldGrid& g, const AdjointGrid& a, const CMatrix& m, int t, int x, int y, int z) {
  return density_terms(a.bar[g.index(t, x, y, z)], dbar_at(g, a, t, x, y, z), g.at(t, x, y, z),
                       dpsi_at(g, t, x, y, z), m);
}

}  // namespace

Cx action(const FieldGrid& grid, const ChiralParams& params, LagrangianVariant variant) {
  require_grid(grid);
  const CMatrix m = mass_matrix(params, variant);
  const AdjointGrid adj = make_adjoint(grid);
  const double h4 = std::pow(grid.spacing, 4);
  Cx sum(0, 0);
  for (int t = 1; t < grid.extent[0] - 1; ++t)
    for (int x = 1; x < grid.extent[1] - 1; ++x)
      for (int y = 1; y < grid.extent[2] - 1; ++y)
        for (int z = 1; z < grid.extent[3] - 1; ++z) sum += density_at(grid, adj, m, t, x, y, z);
  return h4 * sum;
}

ElResidualField euler_lagrange_residual(const FieldGrid& grid, const ChiralParams& params, double eps) {
  require_grid_deep(grid);
  if (!(eps > 0)) throw std::invalid_argument("euler_lagrange_residual: eps must be positive");
  const CMatrix m = mass_matrix(params, LagrangianVariant::ChiralDirac);
  AdjointGrid adj = make_adjoint(grid);

  // Perturbing bar(psi) at one node changes the density there and, through
  // the central differences, at the four pairs of axis neighbours.
  auto stencil_sum = [&](int t, int x, int y, int z) {
    Cx s(0, 0);
    const int pts[9][4] = {{t, x, y, z}, {t - 1, x, y, z}, {t + 1, x, y, z}, {t, x - 1, y, z},
                           {t, x + 1, y, z}, {t, x, y - 1, z}, {t, x, y + 1, z}, {t, x, y, z - 1},
                           {t, x, y, z + 1}};
    for (const auto& pt : pts)
      if (grid.interior(pt[0], pt[1], pt[2], pt[3])) s += density_at(grid, adj, m, pt[0], pt[1], pt[2], pt[3]);
    return s;
  };

  ElResidualField out;
  for (int t = 2; t < grid.extent[0] - 2; ++t)
    for (int x = 2; x < grid.extent[1] - 2; ++x)
      for (int y = 2; y < grid.extent[2] - 2; ++y)
        for (int z = 2; z < grid.extent[3] - 2; ++z) {
          const std::size_t node = grid.index(t, x, y, z);
          CVector r(4);
          const Cx base = stencil_sum(t, x, y, z);
          for (int j = 0; j < 4; ++j) {
            adj.bar[node](j) += eps;
            const Cx pert = stencil_sum(t, x, y, z);
            adj.bar[node](j) -= eps;
            r(j) = (pert - base) / eps;
          }
          out.residual.push_back(std::move(r));
          out.max_norm = std::max(out.max_norm, out.residual.back().norm());
        }
  return out;
}

ElResidualField discrete_operator_field(const FieldGrid& grid, const ChiralParams& params) {
  require_grid_deep(grid);
  const CMatrix m = mass_matrix(params, LagrangianVariant::ChiralDirac);
  const Cx i(0, 1);
  ElResidualField out;
  for (int t = 2; t < grid.extent[0] - 2; ++t)
    for (int x = 2; x < grid.extent[1] - 2; ++x)
      for (int y = 2; y < grid.extent[2] - 2; ++y)
        for (int z = 2; z < grid.extent[3] - 2; ++z) {
          const auto d = dpsi_at(grid, t, x, y, z);
          CVector r = -m * grid.at(t, x, y, z);
          for (int mu = 0; mu < 4; ++mu) r += i * gs().gamma[mu] * d[mu];
          out.residual.push_back(std::move(r));
          out.max_norm = std::max(out.max_norm, out.residual.back().norm());
        }
  return out;
}

}  // namespace cde
