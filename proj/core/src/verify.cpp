#include "cde/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cde/cde_op.hpp"
#include "cde/lagrangian.hpp"
#include "cde/projectors.hpp"
#include "cde/symmetries.hpp"

namespace cde {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Direction3 random_real_axis(Rng& rng) {
  while (true) {
    const double a = gauss(rng), b = gauss(rng), c = gauss(rng);
    const double n = std::sqrt(a * a + b * b + c * c);
    if (n > 1e-3) return {Cx(a / n, 0), Cx(b / n, 0), Cx(c / n, 0)};
  }
}

Direction3 random_complex_axis(Rng& rng) {
  while (true) {
    const Direction3 d{Cx(gauss(rng), gauss(rng)), Cx(gauss(rng), gauss(rng)),
                       Cx(gauss(rng), gauss(rng))};
    if (std::abs(d.bilinear_norm2()) > 0.1) return d.normalized();
  }
}

struct ShellPoint {
  FourMomentum p;
  ChiralParams params;
};

ShellPoint random_on_shell(Rng& rng) {
  const double m = uniform(rng, 0.2, 2.0);
  const double alpha = uniform(rng, -std::numbers::pi, std::numbers::pi);
  while (true) {
    const double p1 = uniform(rng, -2, 2), p2 = uniform(rng, -2, 2), p3 = uniform(rng, -2, 2);
    const double pn2 = p1 * p1 + p2 * p2 + p3 * p3;
    if (pn2 < 0.01) continue;
    return {{std::sqrt(pn2 + m * m), p1, p2, p3}, ChiralParams{m, Cx(alpha, 0)}};
  }
}

ShellPoint random_off_shell(Rng& rng) {
  ShellPoint pt = random_on_shell(rng);
  // Push the energy well off the mass shell, either direction.
  const double factor = (uniform(rng, 0, 1) < 0.5) ? uniform(rng, 1.2, 2.0) : uniform(rng, 0.3, 0.8);
  pt.p.E *= factor;
  return pt;
}

class SuiteRunner {
 public:
  SuiteRunner(RunReport& report, double tol_scale) : report_(report), tol_scale_(tol_scale) {}

  void add(const std::string& name, double residual, double tolerance) {
    const double tol = tolerance * tol_scale_;
    report_.checks.push_back({name, residual, tol, residual <= tol});
  }

 private:
  RunReport& report_;
  double tol_scale_;
};

int scaled(int base, int trials) {
  return trials <= 100 ? base : int(std::lround(double(base) * trials / 100.0));
}

// --- suites -------------------------------------------------------------

double clifford_residual(const GammaSet& gs) {
  const CMatrix i4 = CMatrix::Identity(4, 4);
  const Cx i(0, 1);
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = (mu == nu) ? (mu == 0 ? 1.0 : -1.0) : 0.0;
      r = std::max(r, (anticommutator(gs.gamma[mu], gs.gamma[nu]) - 2.0 * eta * i4).cwiseAbs().maxCoeff());
    }
  r = std::max(r, (gs.gamma5 - i * gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3]).cwiseAbs().maxCoeff());
  r = std::max(r, (gs.gamma5 * gs.gamma5 - i4).cwiseAbs().maxCoeff());
  for (int mu = 0; mu < 4; ++mu)
    r = std::max(r, anticommutator(gs.gamma5, gs.gamma[mu]).cwiseAbs().maxCoeff());
  if (gs.representation == GammaRep::Chiral) {
    r = std::max(r, (i * gs.gamma5 * gs.gamma[0] - kron(pauli(2), pauli(0))).cwiseAbs().maxCoeff());
    r = std::max(r, (-gs.gamma5 - kron(pauli(3), pauli(0))).cwiseAbs().maxCoeff());
  }
  return r;
}

double projector_pair_residual(const Direction3& axis) {
  const ProjectorPair pp = projector_pair(axis);
  const CMatrix i2 = CMatrix::Identity(2, 2);
  double r = (pp.plus * pp.plus - pp.plus).cwiseAbs().maxCoeff();
  r = std::max(r, (pp.minus * pp.minus - pp.minus).cwiseAbs().maxCoeff());
  r = std::max(r, (pp.plus * pp.minus).cwiseAbs().maxCoeff());
  r = std::max(r, (pp.minus * pp.plus).cwiseAbs().maxCoeff());
  r = std::max(r, (pp.plus + pp.minus - i2).cwiseAbs().maxCoeff());
  return r;
}

double tensor_family_residual(const std::vector<Direction3>& axes) {
  const int n = int(axes.size());
  const int count = 1 << n;
  const Eigen::Index dim = Eigen::Index(1) << n;
  std::vector<CMatrix> members;
  for (int mask = 0; mask < count; ++mask) {
    std::vector<SpinSpec> specs;
    for (int i = 0; i < n; ++i) specs.push_back({(mask >> i) & 1 ? -1 : +1, axes[i]});
    members.push_back(projector_tensor(specs));
  }
  CMatrix sum = CMatrix::Zero(dim, dim);
  double r = 0.0;
  for (int a = 0; a < count; ++a) {
    sum += members[a];
    r = std::max(r, (members[a] * members[a] - members[a]).cwiseAbs().maxCoeff());
    for (int b = 0; b < count; ++b)
      if (a != b) r = std::max(r, (members[a] * members[b]).cwiseAbs().maxCoeff());
  }
  r = std::max(r, (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
  return r;
}

double rotation_residual(double theta, const Direction3& axis) {
  const CMatrix r = rotation2(theta, axis);
  const ProjectorPair pp = projector_pair(axis);
  const Cx i(0, 1);
  const CMatrix decomposed = std::exp(i * theta / 2.0) * pp.plus + std::exp(-i * theta / 2.0) * pp.minus;
  return (r - decomposed).cwiseAbs().maxCoeff();
}

}  // namespace

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

RunReport verify_all(std::uint64_t seed, int trials, double tol_scale, const GammaSet* gamma_override) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.suite = "verify-all";
  report.seed = seed;
  SuiteRunner out(report, tol_scale);
  Rng rng(seed);

  // 1. Clifford algebra.
  out.add("clifford.algebra", clifford_residual(gamma_override ? *gamma_override : gamma_chiral()),
          1e-14);

  // 2. Projector families.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(1000, trials); ++i)
      r = std::max(r, projector_pair_residual(random_real_axis(rng)));
    out.add("projector.real_axes", r, 1e-12);

    r = 0.0;
    for (int i = 0; i < scaled(1000, trials); ++i)
      r = std::max(r, projector_pair_residual(random_complex_axis(rng)));
    out.add("projector.complex_axes", r, 1e-12);

    r = 0.0;
    for (int rep = 0; rep < scaled(20, trials); ++rep) {
      for (int n = 1; n <= 3; ++n) {
        std::vector<Direction3> axes;
        for (int i = 0; i < n; ++i)
          axes.push_back(i % 2 ? random_complex_axis(rng) : random_real_axis(rng));
        r = std::max(r, tensor_family_residual(axes));
      }
    }
    out.add("projector.tensor_families", r, 1e-12);
  }

  // 3. Rotation decomposition and double cover.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(1000, trials); ++i)
      r = std::max(r, rotation_residual(uniform(rng, -8, 8), random_real_axis(rng)));
    out.add("rotation.decomposition", r, 1e-13);

    double rc = 0.0;
    for (const Direction3& ax :
         {Direction3::unit_x(), Direction3::unit_y(), Direction3::unit_z(), random_real_axis(rng)}) {
      rc = std::max(rc, (rotation2(2 * std::numbers::pi, ax) + CMatrix::Identity(2, 2))
                            .cwiseAbs()
                            .maxCoeff());
    }
    out.add("rotation.double_cover", rc, 1e-15);
  }

  // 4. Gamma rewriting identities.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(100, trials); ++i)
      r = std::max(r, verify_gamma_rewrite(random_complex_axis(rng), random_real_axis(rng)).residual);
    out.add("gamma.rewrite", r, 1e-12);
  }

  // 5. Kernel, determinant and dispersion sweeps.
  {
    int dim_failures = 0;
    double solution_residual = 0.0;
    double det_residual = 0.0;
    int dispersion_failures = 0;
    for (int i = 0; i < scaled(200, trials); ++i) {
      const ShellPoint pt = random_on_shell(rng);
      for (CdeBranch b : {CdeBranch::MixedSigns, CdeBranch::EqualSigns}) {
        const auto sols = plane_wave_solutions(b, pt.p, pt.params);
        if (sols.size() != 2) ++dim_failures;
        const CMatrix d = cde_momentum_operator(b, pt.p, pt.params);
        for (const Bispinor& u : sols)
          solution_residual = std::max(solution_residual, (d * u.full()).norm());
      }
      const DispersionReport dr = dispersion_check(pt.p, pt.params);
      det_residual = std::max(det_residual, dr.det_residual);
      if (!dr.pass) ++dispersion_failures;
    }
    for (int i = 0; i < scaled(200, trials); ++i) {
      const ShellPoint pt = random_off_shell(rng);
      for (CdeBranch b : {CdeBranch::MixedSigns, CdeBranch::EqualSigns})
        if (!plane_wave_solutions(b, pt.p, pt.params).empty()) ++dim_failures;
      const DispersionReport dr = dispersion_check(pt.p, pt.params);
      det_residual = std::max(det_residual, dr.det_residual);
      if (!dr.pass) ++dispersion_failures;
    }
    out.add("solution.kernel_dimensions", double(dim_failures), 0.0);
    out.add("solution.residuals", solution_residual, 1e-10);
    out.add("solution.det_identity", det_residual, 1e-9);
    out.add("solution.dispersion", double(dispersion_failures), 0.0);
  }

  // 6. Projector-eigenstate construction solves the momentum-space operators.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(50, trials); ++i) {
      const ShellPoint pt = random_on_shell(rng);
      for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
          r = std::max(r, chi_solution_check(pt.p, pt.params, s1, s2).matched_residual);
    }
    out.add("chi.construction", r, 1e-10);
  }

  // 7. Chiral rotation maps the operator to the zero-angle form.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(50, trials); ++i) {
      const ShellPoint pt = random_on_shell(rng);
      r = std::max(r, chiral_rotation_equivalence(pt.p, pt.params).residual);
    }
    out.add("chiral_rotation.equivalence", r, 1e-12);
  }

  // 8. Lagrangian: stationary-path vanishing, variational convergence, and
  //    agreement with the direct operator.
  {
    double r = 0.0;
    const ShellPoint pt = random_on_shell(rng);
    const auto sols = plane_wave_solutions(CdeBranch::MixedSigns, pt.p, pt.params);
    const Cx i(0, 1);
    for (const Bispinor& u : sols) {
      for (int k = 0; k < 5; ++k) {
        const double t = uniform(rng, -1, 1), x = uniform(rng, -1, 1), y = uniform(rng, -1, 1),
                     z = uniform(rng, -1, 1);
        const Cx phase = std::exp(-i * (pt.p.E * t - pt.p.p1 * x - pt.p.p2 * y - pt.p.p3 * z));
        FieldSample s;
        s.psi = u.full() * phase;
        s.dpsi = {-i * pt.p.E * s.psi, i * pt.p.p1 * s.psi, i * pt.p.p2 * s.psi, i * pt.p.p3 * s.psi};
        r = std::max(r, std::abs(lagrangian_density(s, pt.params, LagrangianVariant::ChiralDirac)));
      }
    }
    out.add("lagrangian.stationary", r, 1e-12);

    const CVector amp = sols.front().full();
    const std::array<int, 4> ext{6, 6, 6, 6};
    const double h = 0.2;
    const double r1 = euler_lagrange_residual(plane_wave_grid(ext, h, amp, pt.p), pt.params).max_norm;
    const double r2 =
        euler_lagrange_residual(plane_wave_grid(ext, h / 2, amp, pt.p), pt.params).max_norm;
    const double order = std::log2(r1 / r2);
    out.add("lagrangian.el_order", std::abs(order - 2.0), 0.3);

    // Smooth non-solution field at h = 0.01.
    FieldGrid g(std::array<int, 4>{6, 6, 6, 6}, 0.01);
    for (int t = 0; t < 6; ++t)
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
          for (int z = 0; z < 6; ++z) {
            const double s2 = t * t + x * x + y * y + z * z;
            CVector v(4);
            for (int j = 0; j < 4; ++j)
              v(j) = Cx(std::exp(-0.001 * s2) * (j + 1), 0.3 * j - 0.002 * s2);
            g.at(t, x, y, z) = v;
          }
    const auto el = euler_lagrange_residual(g, pt.params);
    const auto direct = discrete_operator_field(g, pt.params);
    double diff = 0.0;
    for (std::size_t k = 0; k < el.residual.size(); ++k)
      diff = std::max(diff, (el.residual[k] - direct.residual[k]).norm());
    out.add("lagrangian.el_matches_operator", diff, 1e-6);
  }

  // 9. Lorentz covariance.
  {
    double r = 0.0;
    for (int i = 0; i < scaled(200, trials); ++i) {
      const ShellPoint pt = random_on_shell(rng);
      const bool boost = uniform(rng, 0, 1) < 0.5;
      const LorentzSpinorMap map =
          boost ? lorentz_spinor_map(LorentzKind::Boost, uniform(rng, -2, 2), random_real_axis(rng))
                : lorentz_spinor_map(LorentzKind::Rotation, uniform(rng, -6, 6), random_real_axis(rng));
      r = std::max(r, covariance_check(map, pt.p, pt.params).residual);
    }
    out.add("covariance.sweep", r, 1e-9);
  }

  // 10. Discrete symmetries: angle table, classifier, matrix realization.
  {
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Cx a(uniform(rng, -2, 2), uniform(rng, -2, 2));
      r = std::max(r, std::abs(alpha_transform(DiscreteKind::C, a) - std::conj(a)));
      r = std::max(r, std::abs(alpha_transform(DiscreteKind::P, a) + a));
      r = std::max(r, std::abs(alpha_transform(DiscreteKind::T, a) + std::conj(a)));
      r = std::max(r, std::abs(alpha_transform({DiscreteKind::C, DiscreteKind::P, DiscreteKind::T}, a) - a));
    }
    out.add("cpt.alpha_table", r, 0.0);

    int mismatches = 0;
    for (int ir = 0; ir <= 40; ++ir)
      for (int ii = 0; ii <= 40; ++ii) {
        const Cx a(-2.0 + 0.1 * ir, -2.0 + 0.1 * ii);
        const bool fix_c = std::abs(alpha_transform(DiscreteKind::C, a) - a) <= 1e-12;
        const bool fix_cp =
            std::abs(alpha_transform({DiscreteKind::C, DiscreteKind::P}, a) - a) <= 1e-12;
        const bool fix_cpt =
            std::abs(alpha_transform({DiscreteKind::C, DiscreteKind::P, DiscreteKind::T}, a) - a) <=
            1e-12;
        if (fix_c != classify_alpha(InvarianceClass::C).test(a)) ++mismatches;
        if (fix_cp != classify_alpha(InvarianceClass::CP).test(a)) ++mismatches;
        if (fix_cpt != classify_alpha(InvarianceClass::CPT).test(a)) ++mismatches;
      }
    out.add("cpt.classifier_grid", double(mismatches), 0.0);

    r = 0.0;
    for (int i = 0; i < scaled(20, trials); ++i) {
      ShellPoint pt = random_on_shell(rng);
      pt.params.alpha += Cx(0, uniform(rng, -1, 1));  // complex angles included
      for (DiscreteKind k : {DiscreteKind::C, DiscreteKind::P, DiscreteKind::T})
        r = std::max(r, verify_discrete_transform(k, pt.p, pt.params).residual);
    }
    out.add("cpt.realization", r, 1e-12);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"checks", std::move(checks)},
          {"all_pass", report.all_pass()}};
}

std::string report_to_table(const RunReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "  seed: " << report.seed << "\n";
  for (const CheckResult& c : report.checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ");
    os << c.name;
    for (std::size_t i = c.name.size(); i < 34; ++i) os << ' ';
    os << "residual " << c.residual << "  tol " << c.tolerance << "\n";
  }
  os << (report.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

}  // namespace cde
