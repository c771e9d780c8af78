#include "cde/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace cde {

ChiralParams::ChiralParams(double m, Cx a) : mass(m), alpha(a) {
  if (!std::isfinite(m) || m < 0) throw std::invalid_argument("ChiralParams: mass must be finite and >= 0");
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw std::invalid_argument("ChiralParams: alpha must be finite");
}

CMatrix pauli(int k) {
  CMatrix s(2, 2);
  const Cx i(0, 1);
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be in {0,1,2,3}");
  }
  return s;
}

static GammaSet make_chiral() {
  GammaSet gs;
  gs.gamma[0] = kron(pauli(1), pauli(0));
  const Cx i(0, 1);
  for (int k = 1; k <= 3; ++k) gs.gamma[k] = kron(i * pauli(2), pauli(k));
  gs.gamma5 = i * gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3];
  gs.representation = GammaRep::Chiral;
  gs.label = "chiral";
  gs.metric = {+1, -1, -1, -1};
  return gs;
}

const GammaSet& gamma_chiral() {
  static const GammaSet gs = make_chiral();
  return gs;
}

GammaSet conjugated_representation(const GammaSet& gs, const CMatrix& u, const std::string& label) {
  if (u.rows() != 4 || u.cols() != 4) throw std::invalid_argument("conjugated_representation: U must be 4x4");
  if ((u * u.adjoint() - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("conjugated_representation: U must be unitary");
  GammaSet out;
  for (int mu = 0; mu < 4; ++mu) out.gamma[mu] = u * gs.gamma[mu] * u.adjoint();
  out.gamma5 = u * gs.gamma5 * u.adjoint();
  out.representation = GammaRep::Other;
  out.label = label;
  out.metric = gs.metric;
  return out;
}

CMatrix chiral_exp(const GammaSet& gs, Cx alpha, int sign) {
  const Cx i(0, 1);
  const double s = sign >= 0 ? 1.0 : -1.0;
  return std::cos(alpha) * CMatrix::Identity(4, 4) + s * i * std::sin(alpha) * gs.gamma5;
}

CliffordReport clifford_signature(const GammaSet& gs) {
  constexpr double tol = 1e-13;
  CliffordReport rep;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const CMatrix ac = anticommutator(gs.gamma[mu], gs.gamma[nu]);
      if (mu != nu) {
        const double r = ac.cwiseAbs().maxCoeff();
        if (r > tol) {
          rep.ok = false;
          rep.violating_mu = mu;
          rep.violating_nu = nu;
          rep.residual = r;
          return rep;
        }
      } else {
        const Cx d = ac(0, 0) / 2.0;
        const double r = (ac - 2.0 * d * CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff();
        const int sgn = d.real() > 0 ? +1 : -1;
        if (r > tol || std::abs(d - Cx(sgn, 0)) > tol) {
          rep.ok = false;
          rep.violating_mu = mu;
          rep.violating_nu = nu;
          rep.residual = std::max(r, std::abs(d - Cx(sgn, 0)));
          return rep;
        }
        rep.signature[mu] = sgn;
      }
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace cde
