#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace zetaphase {

enum class KappaRoute { integrated, phase_formula };

struct KappaSample {
  double t;
  double kappa;
  double d1;
  KappaRoute route;
  // |e^{2 pi i kappa} - (1 + 2 theta' zeta/zeta')| at 1/2 + it; certifies
  // that kappa lands on the right point of the unit circle.
  double circle_residual;
};

// Phase slope at t. Smooth across simple zeros of Z; switches to the
// logarithmic-derivative form if the primary denominator underflows, and
// throws degenerate_point_error when both routes are unusable.
double kappa_d1(double t);

// Both routes at once for cross-checks: returns the primary value and
// writes the log-derivative route to *alt.
double kappa_d1_alt(double t, double* alt);

// Slope at a zero of Z of multiplicity omega, where the formula reduces
// to theta'/(pi * omega).
double kappa_d1_at_zero(double xi, int omega);

// The positive critical point of kappa (unique root of kappa'); cached.
double locate_a_kappa();

// Integrates kappa' between cached anchors, seeded with kappa(0) = -1/2.
// Anchors are laid down about one unit apart as evaluations spread out;
// located zeros snap exact integer values. Monotonicity failures on the
// increasing branch are recorded, never masked. Thread-safe; freeze()
// stops anchor insertion so concurrent reads stay reproducible.
class KappaAccumulator {
 public:
  KappaAccumulator();

  KappaSample kappa_of(double t);

  // Least t on the increasing branch (t >= a_kappa) with kappa(t) = u.
  // Requires u > kappa(a_kappa).
  double gamma_inverse(double u);

  void snap_integer_anchor(double xi, long n);
  double worst_snap_deviation() const;
  std::vector<std::pair<double, double>> monotonicity_violations() const;
  void freeze(bool on);

 private:
  double anchor_gap_integral(double from, double to);
  void insert_anchor(double t, double k);

  mutable std::mutex mu_;
  std::map<double, double> anchors_;
  std::vector<double> snapped_;
  std::vector<std::pair<double, double>> violations_;
  double worst_snap_ = 0.0;
  double a_gamma_ = 0.0;
  bool have_a_gamma_ = false;
  bool frozen_ = false;
};

// Rounds an integrated sample onto the nearest exact circle representative
// using the unimodular identity; the result is tagged phase_formula.
KappaSample kappa_phase_refine(const KappaSample& integrated);

}  // namespace zetaphase
