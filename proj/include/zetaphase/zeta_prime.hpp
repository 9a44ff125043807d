#pragma once

#include <vector>

#include "zetaphase/kappa.hpp"
#include "zetaphase/zeros.hpp"

namespace zetaphase {

enum class ZpZeroKind { complex_zero, trivial_zero };

struct ZetaPrimeZero {
  ZpZeroKind kind;
  long index;       // 1-based within its kind
  double beta;      // real part (the zero itself for the trivial kind)
  double gamma;     // imaginary part; 0 for the trivial kind
  double residual;  // complex kind: |zeta'(rho)|; trivial kind: |zeta'/chi|
};

struct MLConstants {
  double a;        // -2 + zeta''(0)/zeta'(0), cross-checked in closed form
  double big_a;    // log(2)/2, exact
  double b_check;  // |zeta'(0) + log(2 pi)/2|
};

struct FValue {
  double value;
  double tail_bound;
};

struct ReconstructedD1 {
  double value;
  double budget;  // rigorous bound on the truncation left out of value
};

struct PhaseDiagnostic {
  double lhs;  // pi * kappa(t)
  double rhs;  // A t + sum of located angle terms
  double gap;
};

struct GyCheck {
  double gamma_c;  // nearest Z-zero ordinate
  double dist;
  double bound;    // 1.9 sqrt(beta - 1/2)
  bool within;
};

struct PrimeSplitCounts {
  long n_total;
  long n_left;    // beta < 1/2 (expected empty)
  long n_middle;  // 1/2 <= beta <= 1
  long n_right;   // beta > 1
  double berndt_ratio;  // n_total over the leading-term count
};

// Real zeros of zeta', one per interval (-2n-2, -2n), n = 1..count
// (count <= 500). Works on the reflection-scaled function zeta'/chi, which
// stays representable where |zeta'| itself overflows; residual reported on
// that scale, and |zeta'| directly checkable for small n.
std::vector<ZetaPrimeZero> find_trivial_zeros(int count);

// All zeros of zeta' with 0 < Im <= height (height <= 500), certified per
// 2-unit horizontal strip by argument-principle counts over the rectangle
// [0.01, 3.5] x [k, k+2] (perturbed and retried when a zero sits too close
// to a contour). Newton-polished to |zeta'| < 1e-7.
std::vector<ZetaPrimeZero> find_complex_zeros(double height);

MLConstants ml_constant_a();

// Partial-fraction sum over the pole and the trivial zeros (k_terms of
// them, 100..500) with its tail estimate; insufficient_terms_error when
// the tail exceeds max_tail.
FValue f_of(double t, int k_terms, double max_tail = 1e-2);

// kappa'(t) rebuilt from located zeros of zeta' plus the trivial sum;
// budget bounds everything truncated away (zeros above the catalog height
// and the f tail). Needs catalog height >= t + 50.
ReconstructedD1 kappa_d1_reconstructed(double t,
                                       const std::vector<ZetaPrimeZero>& zeros,
                                       int k_terms);

// Angle subtended at t by a complex zero pair: atan((t-gamma)/(beta-1/2))
// + atan((t+gamma)/(beta-1/2)); 0 in the beta = 1/2 limit.
double phi_angle(double t, const ZetaPrimeZero& zero);

// pi kappa(t) against the angle-sum form A t + sum phi; the gap collects
// the arctan tails of every zero not in the catalog.
PhaseDiagnostic kappa_phase_diagnostic(KappaAccumulator& acc, double t,
                                       const std::vector<ZetaPrimeZero>& zeros);

// Distance from a complex zeta' zero to the nearest Z-zero ordinate
// against the 1.9 sqrt(beta - 1/2) bound.
GyCheck gy_distance_check(const ZetaPrimeZero& zero,
                          const std::vector<double>& xi_ordinates);

PrimeSplitCounts count_prime_splits(double height,
                                    const std::vector<ZetaPrimeZero>& zeros);

}  // namespace zetaphase
