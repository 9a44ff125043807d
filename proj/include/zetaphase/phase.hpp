#pragma once

#include <span>

#include "zetaphase/kappa.hpp"

namespace zetaphase {

struct PhaseReport {
  double t;
  double e;     // 3 pi/2 + theta - pi kappa
  double s;     // argument-variation term from the contour route
  long n;       // zero count from 1 + theta/pi + S
  long n00;     // floor(kappa)
  long rh;      // n - n00, zeros counted off the critical line
  double band;  // s + e/pi, the sawtooth observable
};

// E(t) = 3 pi/2 + theta(t) - pi kappa(t); E(0) = 2 pi.
double e_of(KappaAccumulator& acc, double t);

// E'(t) two ways: directly as theta' - pi kappa', and through the factored
// numerator that vanishes with Z. Used to cross-check each other.
double e_d1(double t);
double e_d1_z_form(double t);

// S(t) by contour integration of zeta'/zeta: up the line Re s = 2, then
// across to the critical line. ordinates must list every zero ordinate at
// or below t (they split the vertical panels and guard the horizontal
// pass); throws near_zero_error within 1e-4 of one.
double s_of(double t, std::span<const double> ordinates);

// Partial Fourier sum of the sawtooth: sum_{n<=n_terms} sin(2 pi n x)/(pi n).
double sawtooth_fourier(double x, int n_terms);

// Full counting snapshot at an off-ordinate t > a_theta.
PhaseReport phase_report(KappaAccumulator& acc, double t,
                         std::span<const double> ordinates);

}  // namespace zetaphase
