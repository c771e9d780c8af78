#include <doctest.h>

#include <random>

#include "cde/projectors.hpp"
#include "helpers.hpp"

using namespace cde;
using cdetest::max_abs;

TEST_CASE("projector2 canonical cases") {
  CMatrix pz = CMatrix::Zero(2, 2);
  pz(0, 0) = 1;
  CHECK(max_abs(projector2(Direction3::unit_z(), +1) - pz) == 0.0);

  CMatrix px(2, 2);
  px << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_abs(projector2(Direction3::unit_x(), +1) - px) == 0.0);

  // complex axis with bilinear norm 1: idempotent but not Hermitian
  const Direction3 c{0, Cx(0, 0.75), 1.25};
  REQUIRE(std::abs(c.bilinear_norm2() - Cx(1)) < 1e-14);
  const CMatrix p = projector2(c, +1);
  CHECK(max_abs(p * p - p) < 1e-14);
  CHECK(max_abs(p - p.adjoint()) > 0.1);

  CHECK_THROWS_AS(projector2(Direction3{1, 1, 0}, +1), std::invalid_argument);
  CHECK_THROWS_AS(projector2(Direction3::unit_z(), 2), std::invalid_argument);
}

TEST_CASE("projector pairs over random axes") {
  std::mt19937_64 rng(301);
  const CMatrix i2 = CMatrix::Identity(2, 2);
  for (int t = 0; t < 200; ++t) {
    const Direction3 axis = t % 2 ? cdetest::random_real_axis(rng) : cdetest::random_complex_axis(rng);
    const ProjectorPair pp = projector_pair(axis);
    CHECK(max_abs(pp.plus * pp.plus - pp.plus) < 1e-13);
    CHECK(max_abs(pp.minus * pp.minus - pp.minus) < 1e-13);
    CHECK(max_abs(pp.plus * pp.minus) < 1e-13);
    CHECK(max_abs(pp.plus + pp.minus - i2) < 1e-14);
    // rank-1 with unit trace, and the eigenvector outer-product structure
    CHECK(std::abs(pp.plus.trace() - Cx(1)) < 1e-12);
    const CVector v = eigvec2(axis, +1);
    CHECK((pp.plus * v - v).norm() < 1e-12);
    CHECK((pp.minus * v).norm() < 1e-12);
  }
}

TEST_CASE("idempotent expansion constraints") {
  const auto good = solve_idempotent_constraints(0.5, {0, 0, 0.5}, 0.5, {0, 0, -0.5});
  CHECK(good.satisfied);
  CHECK(!good.degenerate);
  CHECK(good.idempotency_residual < 1e-14);

  // {I, 0} resolves the identity but fails the expansion constraints
  const auto trivial = solve_idempotent_constraints(1.0, {0, 0, 0}, 0.0, {0, 0, 0});
  CHECK(!trivial.satisfied);
  CHECK(trivial.degenerate);

  // a.a != 1/4 shows up as a nonzero idempotency residual of the assembled
  // matrix; compare against a direct multiply oracle.
  const std::array<Cx, 3> a{0.25, 0.25, 0.3};
  const auto bad = solve_idempotent_constraints(0.5, a, 0.5, {-0.25, -0.25, -0.3});
  CHECK(!bad.satisfied);
  CMatrix p = 0.5 * CMatrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k) p += a[k] * pauli(k + 1);
  CHECK(bad.idempotency_residual ==
        doctest::Approx((p * p - p).cwiseAbs().maxCoeff()).epsilon(1e-10));
}

TEST_CASE("eigvec2") {
  const CVector ez = eigvec2(Direction3::unit_z(), +1);
  CHECK(std::abs(ez(0) - Cx(1)) < 1e-14);
  CHECK(std::abs(ez(1)) < 1e-14);

  const CVector ex = eigvec2(Direction3::unit_x(), +1);
  CHECK(std::abs(ex(0) - Cx(1 / std::sqrt(2))) < 1e-14);
  CHECK(std::abs(ex(1) - Cx(1 / std::sqrt(2))) < 1e-14);

  const Direction3 c{0, Cx(0, 0.75), 1.25};
  const CVector v = eigvec2(c, +1);
  CHECK((sigma_dot(c) * v - v).norm() <= 1e-12);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
}

TEST_CASE("tensor-product projector families") {
  std::mt19937_64 rng(302);
  for (int n = 1; n <= 3; ++n) {
    std::vector<Direction3> axes;
    for (int i = 0; i < n; ++i)
      axes.push_back(i % 2 ? cdetest::random_complex_axis(rng) : cdetest::random_real_axis(rng));

    const int dim = 1 << n, count = 1 << n;
    std::vector<CMatrix> family;
    for (int bits = 0; bits < count; ++bits) {
      std::vector<SpinSpec> specs;
      for (int i = 0; i < n; ++i) specs.emplace_back((bits >> i) & 1 ? +1 : -1, axes[i]);
      family.push_back(projector_tensor(specs));
    }
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < family.size(); ++i) {
      sum += family[i];
      CHECK(max_abs(family[i] * family[i] - family[i]) < 1e-12);
      for (std::size_t j = 0; j < i; ++j) CHECK(max_abs(family[i] * family[j]) < 1e-12);
    }
    CHECK(max_abs(sum - CMatrix::Identity(dim, dim)) < 1e-12);
  }
}

TEST_CASE("chi_tensor eigen-relations") {
  CVector e1 = CVector::Zero(4), e2 = CVector::Zero(4);
  e1(0) = 1, e2(1) = 1;
  const Direction3 z = Direction3::unit_z();
  CHECK((chi_tensor({{+1, z}, {+1, z}}) - e1).norm() < 1e-14);
  CHECK((chi_tensor({{+1, z}, {-1, z}}) - e2).norm() < 1e-14);

  std::mt19937_64 rng(303);
  const CMatrix i2 = CMatrix::Identity(2, 2);
  for (int t = 0; t < 50; ++t) {
    const Direction3 q = cdetest::random_complex_axis(rng), p = cdetest::random_real_axis(rng);
    for (int s1 : {-1, +1})
      for (int s2 : {-1, +1}) {
        const CVector chi = chi_tensor({{s1, q}, {s2, p}});
        CHECK((kron(sigma_dot(q), i2) * chi - double(s1) * chi).norm() < 1e-11);
        CHECK((kron(i2, sigma_dot(p)) * chi - double(s2) * chi).norm() < 1e-11);
        CHECK((projector_tensor({{s1, q}, {s2, p}}) * chi - chi).norm() < 1e-11);
        CHECK((projector_tensor({{-s1, q}, {s2, p}}) * chi).norm() < 1e-11);
      }
  }
}

TEST_CASE("rotation2") {
  const Direction3 z = Direction3::unit_z();
  CHECK(max_abs(rotation2(0, z) - CMatrix::Identity(2, 2)) == 0.0);

  std::mt19937_64 rng(304);
  for (int t = 0; t < 50; ++t) {
    const Direction3 a = cdetest::random_real_axis(rng);
    CHECK(max_abs(rotation2(2 * M_PI, a) + CMatrix::Identity(2, 2)) < 1e-15);

    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    const double theta = dist(rng);
    const ProjectorPair pp = projector_pair(a);
    const CMatrix decomposed =
        std::exp(Cx(0, theta / 2)) * pp.plus + std::exp(Cx(0, -theta / 2)) * pp.minus;
    const CMatrix r = rotation2(theta, a);
    CHECK(max_abs(r - decomposed) < 1e-13);
    CHECK(max_abs(r * r.adjoint() - CMatrix::Identity(2, 2)) < 1e-14);
    CHECK(std::abs(det(r) - Cx(1)) < 1e-13);

    // eigenstates pick up only a phase under rotations about their own axis
    const CVector chi = eigvec2(a, +1);
    CHECK((r * chi - std::exp(Cx(0, theta / 2)) * chi).norm() < 1e-12);
  }

  CHECK(max_abs(rotation2(M_PI, z) - Cx(0, 1) * pauli(3)) < 1e-15);
  CHECK_THROWS_AS(rotation2(1.0, Direction3{Cx(0, 1), 0, 0}), std::invalid_argument);
}
