#include "zetaphase/zeros.hpp"

#include <cmath>

#include "zetaphase/errors.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/zeta.hpp"

namespace zetaphase {
namespace {

double newton_on_z(double seed, double lo, double hi) {
  double x = seed;
  for (int it = 0; it < 80; ++it) {
    const ZTriple zt = z_triple(x);
    if (zt.d1 == 0.0) throw search_failure("find_xi: Z' vanished mid-iteration");
    double step = zt.z / zt.d1;
    if (step > 0.4) step = 0.4;
    if (step < -0.4) step = -0.4;
    const double x_next = x - step;
    if (std::abs(step) < 1e-12) return x_next;
    x = x_next;
    if (x < lo || x > hi)
      throw bracket_error("find_xi: Newton left its seeding interval");
  }
  throw search_failure("find_xi: Newton did not converge");
}

double newton_on_z1(double seed, double lo, double hi) {
  double x = seed;
  for (int it = 0; it < 80; ++it) {
    const ZTriple zt = z_triple(x);
    if (zt.d2 == 0.0) throw search_failure("find_eta: Z'' vanished mid-iteration");
    double step = zt.d1 / zt.d2;
    if (step > 0.4) step = 0.4;
    if (step < -0.4) step = -0.4;
    const double x_next = x - step;
    if (std::abs(step) < 1e-12) return x_next;
    x = x_next;
    if (x < lo || x > hi)
      throw bracket_error("find_eta: Newton left the bracket");
  }
  throw search_failure("find_eta: Newton did not converge");
}

}  // namespace

Multiplicity multiplicity_of(double xi) {
  double scale = 0.0;
  for (double d : {0.25, 0.5, 0.75, 1.0}) {
    scale = std::max(scale, std::abs(z_triple(xi + d).z));
    scale = std::max(scale, std::abs(z_triple(xi - d).z));
  }
  const ZTriple zt = z_triple(xi);
  if (std::abs(zt.d1) > 1e-4 * scale) return {1, false};
  if (std::abs(zt.d2) > 1e-4 * scale) return {2, true};
  throw indeterminate_error(
      "multiplicity_of: neither Z' nor Z'' clears the local scale");
}

CriticalZero find_xi(KappaAccumulator& acc, long n) {
  if (n < 1) throw domain_violation("find_xi: index must be >= 1");
  const double seed = acc.gamma_inverse(static_cast<double>(n));
  const double xi = newton_on_z(seed, seed - 1.5, seed + 1.5);
  const double zres = std::abs(z_triple(xi).z);
  const double kres =
      std::abs(acc.kappa_of(xi).kappa - static_cast<double>(n));
  const Multiplicity m = multiplicity_of(xi);
  acc.snap_integer_anchor(xi, n);
  return {n, xi, m.value, kres, zres};
}

EtaPoint find_eta(KappaAccumulator& acc, long n) {
  if (n < -1) throw domain_violation("find_eta: index must be >= -1");
  double lo, hi;
  if (n == -1) {
    const double at = find_a_theta().value;
    lo = -at;
    hi = at;
  } else if (n == 0) {
    lo = find_a_theta().value;
    hi = find_xi(acc, 1).ordinate;
  } else {
    lo = find_xi(acc, n).ordinate;
    hi = find_xi(acc, n + 1).ordinate;
  }
  const double seed = acc.gamma_inverse(static_cast<double>(n) + 0.5);
  const double eta = newton_on_z1(seed, lo, hi);
  if (!(eta > lo && eta < hi))
    throw bracket_error("find_eta: located point fell outside its bracket");
  const double res = std::abs(z_triple(eta).d1);
  return {n + 2, eta, static_cast<double>(n) + 0.5, res};
}

SpecialAbscissae find_special_abscissae(KappaAccumulator& acc) {
  const double a_theta = find_a_theta().value;
  const double a_kappa = locate_a_kappa();
  const double a_gamma = acc.kappa_of(a_kappa).kappa;
  return {a_theta, a_kappa, a_gamma};
}

long count_zeros_to(KappaAccumulator& acc, double t, bool* near_integer) {
  if (!(t > find_a_theta().value))
    throw domain_violation("count_zeros_to: needs t > a_theta");
  const double k = acc.kappa_of(t).kappa;
  const double fl = std::floor(k);
  if (near_integer) {
    const double frac = k - fl;
    *near_integer = (frac < 1e-6 || frac > 1.0 - 1e-6);
  }
  return static_cast<long>(fl);
}

std::vector<std::pair<double, double>> scan_sign_changes(double t_lo,
                                                         double t_hi,
                                                         double step) {
  if (!(step > 0.0 && step <= 0.05))
    throw domain_violation("scan_sign_changes: step must lie in (0, 0.05]");
  if (!(t_lo < t_hi))
    throw domain_violation("scan_sign_changes: empty range");
  std::vector<std::pair<double, double>> out;
  double prev_t = t_lo;
  double prev_z = z_triple(t_lo).z;
  const long steps = static_cast<long>(std::ceil((t_hi - t_lo) / step));
  for (long i = 1; i <= steps; ++i) {
    const double x = std::min(t_lo + i * step, t_hi);
    const double z = z_triple(x).z;
    if ((z < 0.0) != (prev_z < 0.0) || z == 0.0)
      out.emplace_back(prev_t, x);
    prev_t = x;
    prev_z = z;
  }
  return out;
}

}  // namespace zetaphase
