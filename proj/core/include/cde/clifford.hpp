#ifndef CDE_CLIFFORD_HPP
#define CDE_CLIFFORD_HPP

#include <array>
#include <string>

#include "cde/tensor.hpp"

namespace cde {

// Mass m (natural units) and the chiral angle alpha. alpha may be complex;
// the mass term is then non-Hermitian but everything downstream still holds
// at the algebraic level.
struct ChiralParams {
  double mass = 0.0;
  Cx alpha{0.0, 0.0};

  ChiralParams() = default;
  ChiralParams(double m, Cx a);  // validates m >= 0 and finiteness
};

enum class GammaRep { Chiral, Other };

// The five 4x4 matrices gamma^0..gamma^3, gamma^5 in a named representation,
// together with the metric signature their anticommutators produce.
struct GammaSet {
  std::array<CMatrix, 4> gamma;  // gamma[mu], mu = 0..3
  CMatrix gamma5;
  GammaRep representation = GammaRep::Other;
  std::string label;
  std::array<int, 4> metric{+1, -1, -1, -1};
};

// Pauli matrices; k = 0 gives the 2x2 identity.
CMatrix pauli(int k);

// gamma^0 = sigma^1 (x) I2, gamma^k = i sigma^2 (x) sigma^k,
// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = -sigma^3 (x) I2.
// Metric comes out (+,-,-,-).
const GammaSet& gamma_chiral();

// Similarity transform U gamma U^dagger of every member; U must be unitary.
GammaSet conjugated_representation(const GammaSet& gs, const CMatrix& u, const std::string& label);

// exp(sign * i * alpha * gamma5) in closed form:
//   cos(alpha) I + sign * i * sin(alpha) gamma5
// (valid for complex alpha since gamma5^2 = I). Unitary iff alpha is real.
CMatrix chiral_exp(const GammaSet& gs, Cx alpha, int sign = +1);

inline CMatrix chiral_exp(Cx alpha, int sign = +1) { return chiral_exp(gamma_chiral(), alpha, sign); }

struct CliffordReport {
  bool ok = false;
  std::array<int, 4> signature{0, 0, 0, 0};
  int violating_mu = -1;
  int violating_nu = -1;
  double residual = 0.0;
};

// Checks all ten anticommutator pairs; tolerance 1e-13 on off-diagonal
// vanishing and on the diagonal being a multiple of the identity.
CliffordReport clifford_signature(const GammaSet& gs);

}  // namespace cde

#endif
