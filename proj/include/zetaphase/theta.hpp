#pragma once

namespace zetaphase {

// Riemann-Siegel theta with first and second derivatives at t.
struct ThetaTriple {
  double t;
  double theta;
  double d1;
  double d2;
};

struct AbscissaATheta {
  double value;     // positive critical point of theta
  double residual;  // |theta'(value)|
};

// Series route: arctan partial fractions with Euler-Maclaurin tails, so the
// truncation error stays below 1e-14 with O(|t|) terms. Box |t| <= 1e4.
ThetaTriple theta_series(double t);

// Log-gamma route, for cross-checking the series. Needs |t| >= 1 (and the
// same outer box); the two routes agree to ~1e-11 on the overlap.
ThetaTriple theta_asymptotic(double t);

// The unique positive root of theta'; cached after the first call.
AbscissaATheta find_a_theta();

}  // namespace zetaphase
