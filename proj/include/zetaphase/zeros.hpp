#pragma once

#include <utility>
#include <vector>

#include "zetaphase/kappa.hpp"

namespace zetaphase {

struct CriticalZero {
  long index;             // 1-based
  double ordinate;
  int multiplicity;
  double kappa_residual;  // |kappa(ordinate) - index| before snapping
  double z_residual;      // |Z(ordinate)|
};

struct EtaPoint {
  long index;         // 1-based catalog position (bracket n + 2)
  double ordinate;
  double half_value;  // the half-integer kappa takes there, n + 1/2
  double zprime_residual;
};

struct SpecialAbscissae {
  double a_theta;
  double a_kappa;
  double a_gamma;
};

struct Multiplicity {
  int value;
  bool flagged;  // true when order 1 was ruled out and 2 was accepted
};

// n-th zero of Z on the positive axis (n >= 1), seeded by the phase
// inverse and polished by Newton on Z. Snaps kappa(ordinate) = n into the
// accumulator after recording the pre-snap residual.
CriticalZero find_xi(KappaAccumulator& acc, long n);

// Critical point of Z between consecutive zeros: bracket (xi_n, xi_{n+1})
// for n >= 1, (a_theta, xi_1) for n = 0, and (-a_theta, a_theta) for
// n = -1. kappa passes through n + 1/2 there.
EtaPoint find_eta(KappaAccumulator& acc, long n);

SpecialAbscissae find_special_abscissae(KappaAccumulator& acc);

// floor(kappa(t)) for t > a_theta, i.e. the ordinate count on (0, t].
// Sets *near_integer when kappa sits within 1e-6 of an integer, meaning a
// zero ordinate is essentially at t and the count is fragile.
long count_zeros_to(KappaAccumulator& acc, double t, bool* near_integer = nullptr);

// Brute-force sign-change brackets of Z on a uniform grid (step <= 0.05);
// the oracle the phase-based count is checked against.
std::vector<std::pair<double, double>> scan_sign_changes(double t_lo,
                                                         double t_hi,
                                                         double step);

// Order of a located zero from the jet magnitudes against the local Z
// scale; throws indeterminate_error when neither derivative clears it.
Multiplicity multiplicity_of(double xi);

}  // namespace zetaphase
