#include <doctest.h>

#include <random>

#include "cde/lagrangian.hpp"
#include "helpers.hpp"

using namespace cde;

namespace {

// Exact plane-wave sample: psi = u exp(-i(E t - p.x)) at the phase origin.
FieldSample plane_wave_sample(const CVector& u, const FourMomentum& p) {
  FieldSample s;
  s.psi = u;
  s.dpsi[0] = Cx(0, -p.E) * u;
  s.dpsi[1] = Cx(0, p.p1) * u;
  s.dpsi[2] = Cx(0, p.p2) * u;
  s.dpsi[3] = Cx(0, p.p3) * u;
  return s;
}

FieldSample random_sample(std::mt19937_64& rng) {
  FieldSample s;
  s.psi = cdetest::random_matrix(rng, 4, 1);
  for (auto& d : s.dpsi) d = cdetest::random_matrix(rng, 4, 1);
  return s;
}

// Term-by-term re-derivation of the symmetric density, written against the
// definition rather than the library's grouping of terms.
Cx density_oracle(const FieldSample& s, const ChiralParams& params, LagrangianVariant variant) {
  const GammaSet& gs = gamma_chiral();
  const CMatrix m = mass_matrix(params, variant);
  const Eigen::RowVectorXcd bar = s.psi.adjoint() * gs.gamma[0];
  const Cx i(0, 1);

  Cx right = 0, left = 0;
  for (int mu = 0; mu < 4; ++mu) {
    right += (bar * (i * gs.gamma[mu]) * s.dpsi[mu]).value();
    const Eigen::RowVectorXcd dbar = s.dpsi[mu].adjoint() * gs.gamma[0];
    left += (dbar * (i * gs.gamma[mu]) * s.psi).value();
  }
  const Cx mass_term = (bar * m * s.psi).value();
  return 0.5 * (right - mass_term) - 0.5 * (left + mass_term);
}

}  // namespace

TEST_CASE("density basics") {
  const ChiralParams params{1.0, 0.4};
  FieldSample zero;
  zero.psi = CVector::Zero(4);
  for (auto& d : zero.dpsi) d = CVector::Zero(4);
  CHECK(std::abs(lagrangian_density(zero, params, LagrangianVariant::ChiralDirac)) == 0.0);

  CHECK(cdetest::max_abs(mass_matrix(ChiralParams{1.3, 0.0}, LagrangianVariant::ChiralDirac) -
                         mass_matrix(ChiralParams{1.3, 0.0}, LagrangianVariant::Dirac)) == 0.0);

  // printed-sign convention differs by alpha -> -alpha
  CHECK(cdetest::max_abs(mass_matrix(params, LagrangianVariant::ChiralDirac, -1) -
                         mass_matrix(ChiralParams{1.0, -0.4}, LagrangianVariant::ChiralDirac)) <
        1e-15);
}

TEST_CASE("density vanishes pointwise on plane-wave solutions") {
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> adist(-M_PI, M_PI);
  for (int t = 0; t < 25; ++t) {
    const FourMomentum p = cdetest::random_on_shell(rng, 1.0);
    const ChiralParams params{1.0, adist(rng)};
    for (const auto& u : plane_wave_solutions(CdeBranch::MixedSigns, p, params)) {
      const FieldSample s = plane_wave_sample(u.full(), p);
      CHECK(std::abs(lagrangian_density(s, params, LagrangianVariant::ChiralDirac)) < 1e-12);
    }
  }
}

TEST_CASE("density matches an independent expansion and is real for real alpha") {
  std::mt19937_64 rng(502);
  std::uniform_real_distribution<double> adist(-M_PI, M_PI);
  for (int t = 0; t < 50; ++t) {
    const FieldSample s = random_sample(rng);
    const ChiralParams params{0.9, adist(rng)};
    for (LagrangianVariant v : {LagrangianVariant::Dirac, LagrangianVariant::ChiralDirac}) {
      const Cx val = lagrangian_density(s, params, v);
      CHECK(std::abs(val - density_oracle(s, params, v)) < 1e-12);
      CHECK(std::abs(val.imag()) <= 1e-12 * std::max(1.0, std::norm(s.psi.norm())));
    }
  }
}

TEST_CASE("action on grids") {
  const ChiralParams params{1.0, 0.3};
  FieldGrid zero({5, 5, 5, 5}, 0.1);
  for (auto& v : zero.values) v = CVector::Zero(4);
  CHECK(std::abs(action(zero, params, LagrangianVariant::ChiralDirac)) == 0.0);

  // plane-wave solution: the discrete action is pure discretization error,
  // O(h^2) per interior point once the h^4 volume element is divided out
  const FourMomentum p{std::sqrt(2.0), 1, 0, 0};
  const CVector amp = plane_wave_solutions(CdeBranch::MixedSigns, p, params).front().full();
  const double h1 = 0.2, h2 = 0.1;
  const double a1 =
      std::abs(action(plane_wave_grid({6, 6, 6, 6}, h1, amp, p), params, LagrangianVariant::ChiralDirac));
  const double a2 =
      std::abs(action(plane_wave_grid({6, 6, 6, 6}, h2, amp, p), params, LagrangianVariant::ChiralDirac));
  CHECK(a2 < a1);
  const double per_point1 = a1 / std::pow(h1, 4), per_point2 = a2 / std::pow(h2, 4);
  CHECK(per_point1 / per_point2 == doctest::Approx(4.0).epsilon(0.35));

  FieldGrid tiny({2, 5, 5, 5}, 0.1);
  CHECK_THROWS_AS(action(tiny, params, LagrangianVariant::ChiralDirac), std::invalid_argument);
}

TEST_CASE("variational residual converges at second order on solutions") {
  const ChiralParams params{1.0, 0.5};
  const FourMomentum p{std::sqrt(2.0), 0, 0, 1};
  const CVector amp = plane_wave_solutions(CdeBranch::MixedSigns, p, params).front().full();

  const double r1 = euler_lagrange_residual(plane_wave_grid({6, 6, 6, 6}, 0.2, amp, p), params).max_norm;
  const double r2 = euler_lagrange_residual(plane_wave_grid({6, 6, 6, 6}, 0.1, amp, p), params).max_norm;
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("variational residual equals the discrete operator") {
  // smooth non-solution field with a Gaussian envelope
  const std::array<int, 4> extent{6, 6, 6, 6};
  const double h = 0.01;
  FieldGrid grid(extent, h);
  for (int t = 0; t < 6; ++t)
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        for (int z = 0; z < 6; ++z) {
          const double r2 = t * t + x * x + y * y + z * z;
          CVector v(4);
          for (int c = 0; c < 4; ++c)
            v(c) = std::exp(-0.02 * r2) * Cx(std::cos(0.3 * (t + c)), std::sin(0.2 * (x - z)));
          grid.at(t, x, y, z) = v;
        }

  const ChiralParams params{1.0, 0.7};
  const auto el = euler_lagrange_residual(grid, params);
  const auto op = discrete_operator_field(grid, params);
  REQUIRE(el.residual.size() == op.residual.size());
  double diff = 0;
  for (std::size_t i = 0; i < el.residual.size(); ++i)
    diff = std::max(diff, (el.residual[i] - op.residual[i]).norm());
  CHECK(diff <= 1e-6);
}

TEST_CASE("massless residual is independent of alpha") {
  const FourMomentum p{1, 0, 0, 1};
  const CVector amp = plane_wave_solutions(CdeBranch::MixedSigns, p, ChiralParams{0.0, 0.0}).front().full();
  const FieldGrid grid = plane_wave_grid({5, 5, 5, 5}, 0.15, amp, p);
  const auto r0 = euler_lagrange_residual(grid, ChiralParams{0.0, 0.0});
  const auto r1 = euler_lagrange_residual(grid, ChiralParams{0.0, 1.1});
  REQUIRE(r0.residual.size() == r1.residual.size());
  for (std::size_t i = 0; i < r0.residual.size(); ++i)
    CHECK((r0.residual[i] - r1.residual[i]).norm() < 1e-9);
}
