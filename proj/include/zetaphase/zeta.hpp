#pragma once

#include "zetaphase/specfun.hpp"
#include "zetaphase/theta.hpp"

namespace zetaphase {

// zeta and its first two derivatives at s.
struct ZetaJet {
  Complex s;
  Complex f;
  Complex d1;
  Complex d2;
};

// Hardy Z and its first two derivatives on the critical line, plus the
// residuals of the two rotation identities that certify the composition:
// identity_residual = |Im(e^{i theta} zeta)|, which is zero in exact
// arithmetic, and d1_identity_residual = |Re(e^{i theta} zeta') + theta' Z|.
struct ZTriple {
  double t;
  double z;
  double d1;
  double d2;
  double identity_residual;
  double d1_identity_residual;
};

// Euler-Maclaurin evaluation with N ~ 2|Im s| harmonic terms and twelve
// Bernoulli corrections. Box: Re s in [-50, 4], |Im s| <= 1000; the left
// half is reached through the functional equation. Throws pole_error
// near s = 1 and box_error outside the box.
ZetaJet zeta_jet(Complex s);

// The Euler-Maclaurin engine alone, for Re s >= -0.5 with no cap on the
// right: reflection-scaled searches need jets far right of the box.
ZetaJet zeta_jet_em(Complex s);

ZTriple z_triple(double t);

// Same composition when the caller already has theta and the jet at
// 1/2 + it; avoids recomputing both inside inner loops.
ZTriple z_triple_from(const ThetaTriple& th, const ZetaJet& jet);

}  // namespace zetaphase
