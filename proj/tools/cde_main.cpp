// cde: construct, solve and verify the chiral-generalized Dirac operator
// from the command line. Machine output is JSON (--json); the default is a
// short human-readable table.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cde/cde_op.hpp"
#include "cde/clifford.hpp"
#include "cde/json_io.hpp"
#include "cde/lagrangian.hpp"
#include "cde/projectors.hpp"
#include "cde/symmetries.hpp"
#include "cde/verify.hpp"

namespace {

using cde::Cx;

Cx parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(is >> re)) throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
  }
  return {re, im};
}

std::vector<double> parse_doubles(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stod(item));
  if (out.size() != n)
    throw CLI::ValidationError(std::string(what) + ": expected " + std::to_string(n) +
                               " comma-separated values");
  return out;
}

void print_matrix(std::ostream& os, const std::string& name, const cde::CMatrix& m) {
  os << name << ":\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Cx c = m(i, j);
      char buf[48];
      std::snprintf(buf, sizeof(buf), "(%6.3f,%6.3f) ", c.real(), c.imag());
      os << buf;
    }
    os << "\n";
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CDE_SEED")) return std::strtoull(env, nullptr, 10);
  return 42;
}

int cmd_gamma(bool json) {
  const cde::GammaSet& gs = cde::gamma_chiral();
  if (json) {
    nlohmann::json j;
    j["representation"] = "chiral";
    j["metric"] = gs.metric;
    for (int mu = 0; mu < 4; ++mu) j["gamma" + std::to_string(mu)] = cde::matrix_to_json(gs.gamma[mu]);
    j["gamma5"] = cde::matrix_to_json(gs.gamma5);
    std::cout << j.dump(2) << "\n";
  } else {
    for (int mu = 0; mu < 4; ++mu) print_matrix(std::cout, "gamma" + std::to_string(mu), gs.gamma[mu]);
    print_matrix(std::cout, "gamma5", gs.gamma5);
  }
  return 0;
}

int cmd_projector(const std::string& axis_text, const std::string& sign_text, bool json) {
  const auto v = parse_doubles(axis_text, 6, "--axis");
  const cde::Direction3 axis{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
  if (sign_text != "+" && sign_text != "-") throw CLI::ValidationError("--sign must be + or -");
  const int s = sign_text == "+" ? +1 : -1;
  const cde::CMatrix p = cde::projector2(axis.normalized(), s);
  if (json)
    std::cout << cde::matrix_to_json(p).dump(2) << "\n";
  else
    print_matrix(std::cout, "P" + sign_text, p);
  return 0;
}

int cmd_solve(double e, const std::string& p_text, double m, const std::string& alpha_text,
              const std::string& branch_text, bool json) {
  const auto pv = parse_doubles(p_text, 3, "--p");
  const cde::FourMomentum p{e, pv[0], pv[1], pv[2]};
  const cde::ChiralParams params{m, parse_complex(alpha_text)};
  cde::CdeBranch branch;
  if (branch_text == "mixed")
    branch = cde::CdeBranch::MixedSigns;
  else if (branch_text == "equal")
    branch = cde::CdeBranch::EqualSigns;
  else
    throw CLI::ValidationError("--branch must be mixed or equal");

  const auto sols = cde::plane_wave_solutions(branch, p, params);
  const cde::CMatrix d = cde::cde_momentum_operator(branch, p, params);
  if (json) {
    nlohmann::json j;
    j["branch"] = branch_text;
    j["on_shell"] = p.on_shell(m);
    j["operator"] = cde::matrix_to_json(d);
    j["solutions"] = nlohmann::json::array();
    for (const auto& u : sols) j["solutions"].push_back(cde::vector_to_json(u.full()));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "on shell: " << (p.on_shell(m) ? "yes" : "no") << ", solutions: " << sols.size()
              << "\n";
    int k = 0;
    for (const auto& u : sols) print_matrix(std::cout, "u" + std::to_string(k++), u.full());
  }
  return 0;
}

int cmd_dispersion(double m, const std::string& alpha_text, double pmax, int steps) {
  parse_complex(alpha_text);  // validated; the relation does not depend on alpha
  if (steps < 1) throw CLI::ValidationError("--steps must be >= 1");
  std::cout << "p_abs,E\n";
  for (int i = 0; i <= steps; ++i) {
    const double pa = pmax * i / steps;
    std::cout << pa << "," << std::sqrt(pa * pa + m * m) << "\n";
  }
  return 0;
}

int cmd_lagrangian_check(double m, const std::string& alpha_text, const std::string& grid_text,
                         double h) {
  const auto ext = parse_doubles(grid_text, 4, "--grid");
  const std::array<int, 4> extent{int(ext[0]), int(ext[1]), int(ext[2]), int(ext[3])};
  const cde::ChiralParams params{m, parse_complex(alpha_text)};

  const cde::FourMomentum p{std::sqrt(1.0 + m * m), 1, 0, 0};
  const auto sols = cde::plane_wave_solutions(cde::CdeBranch::MixedSigns, p, params);
  const cde::CVector amp = sols.front().full();

  const cde::FieldGrid grid = cde::plane_wave_grid(extent, h, amp, p);
  const Cx s = cde::action(grid, params, cde::LagrangianVariant::ChiralDirac);
  const double r1 = cde::euler_lagrange_residual(grid, params).max_norm;
  const double r2 =
      cde::euler_lagrange_residual(cde::plane_wave_grid(extent, h / 2, amp, p), params).max_norm;

  nlohmann::json j;
  j["action"] = {s.real(), s.imag()};
  j["max_residual"] = r1;
  j["convergence_ratio"] = r1 / r2;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_cpt(const std::string& alpha_text, const std::string& check) {
  const Cx alpha = parse_complex(alpha_text);
  std::vector<cde::DiscreteKind> kinds;
  for (char c : check) {
    switch (c) {
      case 'C': kinds.push_back(cde::DiscreteKind::C); break;
      case 'P': kinds.push_back(cde::DiscreteKind::P); break;
      case 'T': kinds.push_back(cde::DiscreteKind::T); break;
      default: throw CLI::ValidationError("--check must be a string over {C,P,T}");
    }
  }
  const Cx out = cde::alpha_transform(kinds, alpha);
  const bool invariant = std::abs(out - alpha) <= 1e-12;
  nlohmann::json j;
  j["alpha_out"] = {out.real(), out.imag()};
  j["invariant"] = invariant;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_covariance(double rapidity, const std::string& axis_text, double m,
                   const std::string& alpha_text) {
  const auto av = parse_doubles(axis_text, 3, "--axis");
  cde::Direction3 axis{Cx(av[0], 0), Cx(av[1], 0), Cx(av[2], 0)};
  axis = axis.normalized();
  const cde::ChiralParams params{m, parse_complex(alpha_text)};
  if (!(m > 0)) throw CLI::ValidationError("--m must be positive (rest-frame reference state)");

  const auto map = cde::lorentz_spinor_map(cde::LorentzKind::Boost, rapidity, axis);
  const cde::FourMomentum rest{m, 0, 0, 0};
  const auto rep = cde::covariance_check(map, rest, params);

  nlohmann::json j;
  j["residual"] = rep.residual;
  j["tolerance"] = rep.tolerance;
  j["pass"] = rep.pass;
  std::cout << j.dump(2) << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_verify_all(std::uint64_t seed, int trials, double tol_scale, bool json) {
  const cde::RunReport report = cde::verify_all(seed, trials, tol_scale);
  if (json)
    std::cout << cde::report_to_json(report).dump(2) << "\n";
  else
    std::cout << cde::report_to_table(report);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiral Dirac operator toolkit"};
  app.require_subcommand(1);

  bool json = false;

  auto* gamma = app.add_subcommand("gamma", "print the gamma matrices");
  std::string rep = "chiral";
  gamma->add_option("--rep", rep)->check(CLI::IsMember({"chiral"}));
  gamma->add_flag("--json", json);

  auto* projector = app.add_subcommand("projector", "spin projector along a complex axis");
  std::string axis_text = "0,0,0,0,1,0", sign_text = "+";
  projector->add_option("--axis", axis_text, "re1,im1,re2,im2,re3,im3");
  projector->add_option("--sign", sign_text, "+ or -");
  projector->add_flag("--json", json);

  auto* solve = app.add_subcommand("solve", "plane-wave kernel of the momentum-space operator");
  double e = 1, m = 1, pmax = 2, h = 0.1, rapidity = 0.5;
  std::string p_text = "0,0,0", alpha_text = "0", branch_text = "mixed", grid_text = "6,6,6,6",
              check_text = "C", caxis_text = "0,0,1";
  solve->add_option("--E", e)->required();
  solve->add_option("--p", p_text, "px,py,pz")->required();
  solve->add_option("--m", m)->required();
  solve->add_option("--alpha", alpha_text, "re or re,im");
  solve->add_option("--branch", branch_text)->check(CLI::IsMember({"mixed", "equal"}));
  solve->add_flag("--json", json);

  auto* dispersion = app.add_subcommand("dispersion", "on-shell E(|p|) table as CSV");
  int steps = 50;
  dispersion->add_option("--m", m)->required();
  dispersion->add_option("--alpha", alpha_text);
  dispersion->add_option("--pmax", pmax)->required();
  dispersion->add_option("--steps", steps);

  auto* lag = app.add_subcommand("lagrangian-check", "action and variational residual report");
  lag->add_option("--m", m)->required();
  lag->add_option("--alpha", alpha_text);
  lag->add_option("--grid", grid_text, "n,n,n,n (each >= 5)");
  lag->add_option("--spacing", h);

  auto* cpt = app.add_subcommand("cpt", "chiral-angle map under discrete symmetries");
  cpt->add_option("--alpha", alpha_text)->required();
  cpt->add_option("--check", check_text, "composition over {C,P,T}, applied right-to-left");

  auto* cov = app.add_subcommand("covariance", "boost a rest-frame solution and re-check");
  cov->add_option("--rapidity", rapidity);
  cov->add_option("--axis", caxis_text, "x,y,z");
  cov->add_option("--m", m)->required();
  cov->add_option("--alpha", alpha_text);

  auto* verify = app.add_subcommand("verify-all", "run the full identity suite");
  std::uint64_t seed = default_seed();
  int trials = 100;
  double tol_scale = 1.0;
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--tol-scale", tol_scale)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gamma->parsed()) return cmd_gamma(json);
    if (projector->parsed()) return cmd_projector(axis_text, sign_text, json);
    if (solve->parsed()) return cmd_solve(e, p_text, m, alpha_text, branch_text, json);
    if (dispersion->parsed()) return cmd_dispersion(m, alpha_text, pmax, steps);
    if (lag->parsed()) return cmd_lagrangian_check(m, alpha_text, grid_text, h);
    if (cpt->parsed()) return cmd_cpt(alpha_text, check_text);
    if (cov->parsed()) return cmd_covariance(rapidity, caxis_text, m, alpha_text);
    if (verify->parsed()) return cmd_verify_all(seed, trials, tol_scale, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
