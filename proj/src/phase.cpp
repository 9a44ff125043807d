#include "zetaphase/phase.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/numeric.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/zeta.hpp"

namespace zetaphase {
namespace {

double log_deriv_real(double y) {
  const ZetaJet j = zeta_jet(Complex(2.0, y));
  return std::real(j.d1 / j.f);
}

double log_deriv_imag(double x, double t) {
  const ZetaJet j = zeta_jet(Complex(x, t));
  return std::imag(j.d1 / j.f);
}

}  // namespace

double e_of(KappaAccumulator& acc, double t) {
  return 1.5 * k_pi + theta_series(t).theta - k_pi * acc.kappa_of(t).kappa;
}

double e_d1(double t) { return theta_series(t).d1 - k_pi * kappa_d1(t); }

double e_d1_z_form(double t) {
  const ThetaTriple th = theta_series(t);
  const ZetaJet jet = zeta_jet(Complex(0.5, t));
  const ZTriple zt = z_triple_from(th, jet);
  const double zw = zt.z * th.d1;
  const double den = zt.d1 * zt.d1 + zw * zw;
  if (den < 1e-20)
    throw degenerate_point_error("e_d1_z_form: denominator underflow");
  const double num =
      zt.z * (zt.z * th.d1 * th.d1 * th.d1 - zt.d1 * th.d2 + zt.d2 * th.d1);
  return num / den;
}

double s_of(double t, std::span<const double> ordinates) {
  if (!(t >= 0.0 && t <= 1000.0))
    throw domain_violation("s_of: needs 0 <= t <= 1000");
  for (double g : ordinates)
    if (std::abs(t - g) < 1e-4)
      throw near_zero_error("s_of: t is within 1e-4 of a zero ordinate");
  if (t == 0.0) return 0.0;

  // Vertical leg: Re[zeta'/zeta] on Re s = 2 from 0 to t, split wherever
  // an ordinate's pole (1.5 away from the path) bends the integrand.
  std::vector<double> cuts{0.0, t};
  for (double g : ordinates) {
    for (double c : {g - 0.5, g, g + 0.5})
      if (c > 0.0 && c < t) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double vertical = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-14) continue;
    vertical +=
        integrate_adaptive(log_deriv_real, cuts[i], cuts[i + 1], 2e-10).value;
  }

  // Horizontal leg: Im[zeta'/zeta] across from 1/2 to 2 at height t.
  const double horizontal =
      integrate_adaptive([t](double x) { return log_deriv_imag(x, t); }, 0.5,
                         2.0, 1e-10)
          .value;

  return (vertical - horizontal) / k_pi;
}

double sawtooth_fourier(double x, int n_terms) {
  if (n_terms < 1) throw domain_violation("sawtooth_fourier: n_terms >= 1");
  double acc = 0.0;
  for (int n = n_terms; n >= 1; --n)
    acc += std::sin(2.0 * k_pi * n * x) / (k_pi * n);
  return acc;
}

PhaseReport phase_report(KappaAccumulator& acc, double t,
                         std::span<const double> ordinates) {
  if (!(t > find_a_theta().value))
    throw domain_violation("phase_report: needs t > a_theta");
  const ThetaTriple th = theta_series(t);
  const KappaSample ks = acc.kappa_of(t);
  const double e = 1.5 * k_pi + th.theta - k_pi * ks.kappa;
  const double s = s_of(t, ordinates);
  const double n_float = 1.0 + th.theta / k_pi + s;
  const long n = std::lround(n_float);
  if (std::abs(n_float - n) > 1e-6)
    throw cross_check_error("phase_report: contour count is not integral");
  const long n00 = static_cast<long>(std::floor(ks.kappa));
  const long rh = n - n00;
  if (rh < 0)
    throw search_failure("phase_report: negative off-line count");
  const double band = s + e / k_pi;
  return {t, e, s, n, n00, rh, band};
}

}  // namespace zetaphase
