#include <doctest.h>

#include <random>

#include "cde/clifford.hpp"
#include "helpers.hpp"

using namespace cde;
using cdetest::max_abs;

TEST_CASE("pauli matrices") {
  CHECK(max_abs(pauli(0) - CMatrix::Identity(2, 2)) == 0.0);
  CMatrix s3 = CMatrix::Zero(2, 2);
  s3(0, 0) = 1, s3(1, 1) = -1;
  CHECK(max_abs(pauli(3) - s3) == 0.0);
  CHECK(max_abs(pauli(1) * pauli(2) - Cx(0, 1) * pauli(3)) < 1e-15);
  CHECK(std::abs(pauli(2).trace()) == 0.0);
  for (int k = 1; k <= 3; ++k) CHECK(max_abs(pauli(k) - pauli(k).adjoint()) == 0.0);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("chiral-representation gamma matrices") {
  const GammaSet& gs = gamma_chiral();
  CHECK(gs.representation == GammaRep::Chiral);
  CHECK(max_abs(gs.gamma[0] - kron(pauli(1), pauli(0))) == 0.0);
  for (int k = 1; k <= 3; ++k)
    CHECK(max_abs(gs.gamma[k] - Cx(0, 1) * kron(pauli(2), pauli(k))) == 0.0);
  CHECK(max_abs(gs.gamma5 + kron(pauli(3), pauli(0))) == 0.0);

  // gamma5 from the product definition, and the auxiliary block identities
  const CMatrix g5 = Cx(0, 1) * gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3];
  CHECK(max_abs(g5 - gs.gamma5) < 1e-15);
  CHECK(max_abs(Cx(0, 1) * gs.gamma5 * gs.gamma[0] - kron(pauli(2), pauli(0))) < 1e-15);
  CHECK(max_abs(gs.gamma5 * gs.gamma5 - CMatrix::Identity(4, 4)) == 0.0);
  for (int mu = 0; mu < 4; ++mu) CHECK(max_abs(anticommutator(gs.gamma5, gs.gamma[mu])) == 0.0);

  CHECK(max_abs(anticommutator(gs.gamma[1], gs.gamma[1]) + 2.0 * CMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("clifford_signature") {
  const auto rep = clifford_signature(gamma_chiral());
  REQUIRE(rep.ok);
  CHECK(rep.signature == std::array<int, 4>{+1, -1, -1, -1});

  GammaSet broken = gamma_chiral();
  broken.gamma[1] = CMatrix::Identity(4, 4);
  const auto bad = clifford_signature(broken);
  CHECK(!bad.ok);
  CHECK(bad.violating_mu == 0);
  CHECK(bad.violating_nu == 1);

  // similarity invariance under a seeded random unitary change of basis
  std::mt19937_64 rng(201);
  const CMatrix u = cdetest::random_unitary(rng, 4);
  const auto conj = clifford_signature(conjugated_representation(gamma_chiral(), u, "conj"));
  REQUIRE(conj.ok);
  CHECK(conj.signature == std::array<int, 4>{+1, -1, -1, -1});
}

TEST_CASE("chiral exponential closed form") {
  const GammaSet& gs = gamma_chiral();
  const CMatrix i4 = CMatrix::Identity(4, 4);

  CHECK(max_abs(chiral_exp(Cx(0)) - i4) == 0.0);
  CHECK(max_abs(chiral_exp(Cx(M_PI_2)) - Cx(0, 1) * gs.gamma5) < 1e-15);

  // alpha = i against a truncated power-series oracle (40 terms)
  const Cx alpha(0, 1);
  CMatrix series = CMatrix::Zero(4, 4), term = i4;
  for (int n = 1; n <= 40; ++n) {
    series += term;
    term = term * (Cx(0, 1) * alpha * gs.gamma5) / double(n);
  }
  CHECK(max_abs(chiral_exp(alpha) - series) < 1e-14);
  CHECK(max_abs(chiral_exp(alpha) - (std::cosh(1.0) * i4 - std::sinh(1.0) * gs.gamma5)) < 1e-12);
}

TEST_CASE("chiral exponential group laws") {
  const GammaSet& gs = gamma_chiral();
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int t = 0; t < 100; ++t) {
    const Cx a(dist(rng), dist(rng)), b(dist(rng), dist(rng));
    CHECK(max_abs(chiral_exp(a, +1) * chiral_exp(a, -1) - CMatrix::Identity(4, 4)) < 1e-12);
    CHECK(max_abs(chiral_exp(a) * chiral_exp(b) - chiral_exp(a + b)) < 1e-12);
    CHECK(std::abs(det(chiral_exp(a)) - Cx(1)) < 1e-10);
    for (int mu = 0; mu < 4; ++mu)
      CHECK(max_abs(gs.gamma[mu] * chiral_exp(a, +1) - chiral_exp(a, -1) * gs.gamma[mu]) < 1e-13);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ChiralParams(-1.0, Cx(0)), std::invalid_argument);
  CHECK_THROWS_AS(conjugated_representation(gamma_chiral(), 2.0 * CMatrix::Identity(4, 4), "x"),
                  std::invalid_argument);
}
