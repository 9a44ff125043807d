#include "zetaphase/kappa.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/numeric.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/zeta.hpp"

namespace zetaphase {
namespace {

constexpr double kTBox = 1000.0 + 1e-9;
constexpr double kDenFloor = 1e-20;

void check_t(double t) {
  if (!(std::abs(t) <= kTBox))
    throw box_error("kappa: |t| exceeds 1000");
}

double d1_primary(const ThetaTriple& th, const ZTriple& zt, double* den_out) {
  const double zw = zt.z * th.d1;
  const double den = zt.d1 * zt.d1 + zw * zw;
  if (den_out) *den_out = den;
  const double num = zt.z * zt.d1 * th.d2 + zt.d1 * zt.d1 * th.d1 -
                     zt.z * zt.d2 * th.d1;
  return num / den / k_pi;
}

double d1_log_form(const ThetaTriple& th, const ZetaJet& jet) {
  if (std::abs(jet.d1) < 1e-12 * (1.0 + std::abs(jet.d2)))
    throw degenerate_point_error(
        "kappa_d1: both routes degenerate (zeta' vanishes to working precision)");
  return (-th.d1 - std::real(jet.d2 / jet.d1)) / k_pi;
}

Complex circle_point(const ThetaTriple& th, const ZetaJet& jet) {
  return 1.0 + 2.0 * th.d1 * jet.f / jet.d1;
}

}  // namespace

double kappa_d1(double t) {
  check_t(t);
  const ThetaTriple th = theta_series(t);
  const ZetaJet jet = zeta_jet(Complex(0.5, t));
  const ZTriple zt = z_triple_from(th, jet);
  double den;
  const double v = d1_primary(th, zt, &den);
  if (den >= kDenFloor) return v;
  return d1_log_form(th, jet);
}

double kappa_d1_alt(double t, double* alt) {
  check_t(t);
  const ThetaTriple th = theta_series(t);
  const ZetaJet jet = zeta_jet(Complex(0.5, t));
  const ZTriple zt = z_triple_from(th, jet);
  if (alt) *alt = d1_log_form(th, jet);
  double den;
  const double v = d1_primary(th, zt, &den);
  if (den >= kDenFloor) return v;
  return d1_log_form(th, jet);
}

double kappa_d1_at_zero(double xi, int omega) {
  check_t(xi);
  if (omega < 1) throw domain_violation("kappa_d1_at_zero: omega must be >= 1");
  return theta_series(xi).d1 / (k_pi * omega);
}

double locate_a_kappa() {
  static std::optional<double> cached;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached) {
    auto f = [](double x) { return kappa_d1(x); };
    auto df = [](double x) {
      return (kappa_d1(x + 5e-6) - kappa_d1(x - 5e-6)) / 1e-5;
    };
    cached = bracketed_newton(f, df, 0.0, 1.2, 1e-13, 1e-13).x;
  }
  return *cached;
}

KappaAccumulator::KappaAccumulator() { anchors_[0.0] = -0.5; }

void KappaAccumulator::freeze(bool on) {
  std::lock_guard<std::mutex> lock(mu_);
  frozen_ = on;
}

double KappaAccumulator::anchor_gap_integral(double from, double to) {
  std::vector<double> snapped;
  {
    std::lock_guard<std::mutex> lock(mu_);
    snapped = snapped_;
  }
  auto f = [&snapped](double x) {
    // Stay 1e-12 clear of snapped ordinates; the slope is smooth there but
    // the exact node value is better sampled just off the zero.
    for (double xi : snapped)
      if (std::abs(x - xi) < 1e-12) {
        x = xi + 1e-12;
        break;
      }
    return kappa_d1(x);
  };
  const double tol = 1e-11 * std::max(1.0, std::abs(to - from));
  return integrate_adaptive(f, from, to, tol).value;
}

void KappaAccumulator::insert_anchor(double t, double k) {
  std::lock_guard<std::mutex> lock(mu_);
  if (frozen_) return;
  auto [it, fresh] = anchors_.emplace(t, k);
  if (!fresh) return;
  // Record (never repair) any non-increase against neighbours on the
  // increasing branch.
  const double a_k = 0.78;  // coarse; exact value only sharpens the check
  if (it != anchors_.begin()) {
    auto prev = std::prev(it);
    if (prev->first > a_k && k <= prev->second - 1e-12)
      violations_.emplace_back(prev->first, t);
  }
  auto next = std::next(it);
  if (next != anchors_.end() && t > a_k && next->second <= k - 1e-12)
    violations_.emplace_back(t, next->first);
}

KappaSample KappaAccumulator::kappa_of(double t) {
  check_t(t);
  double t0, k0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = anchors_.lower_bound(t);
    if (it == anchors_.end()) {
      --it;
    } else if (it != anchors_.begin()) {
      auto prev = std::prev(it);
      if (std::abs(prev->first - t) < std::abs(it->first - t)) it = prev;
    }
    t0 = it->first;
    k0 = it->second;
  }

  double kappa = k0;
  if (t != t0) {
    // Walk in unit steps so fresh anchors land about one apart.
    const double dir = (t > t0) ? 1.0 : -1.0;
    double x = t0;
    while (std::abs(t - x) > 1e-12) {
      const double x_next = (std::abs(t - x) > 1.25) ? x + dir : t;
      kappa += anchor_gap_integral(x, x_next);
      insert_anchor(x_next, kappa);
      x = x_next;
    }
  }

  const ThetaTriple th = theta_series(t);
  const ZetaJet jet = zeta_jet(Complex(0.5, t));
  const ZTriple zt = z_triple_from(th, jet);
  double den;
  double d1 = d1_primary(th, zt, &den);
  if (den < kDenFloor) d1 = d1_log_form(th, jet);

  double cr = std::numeric_limits<double>::infinity();
  if (std::abs(jet.d1) > 1e-280) {
    const Complex w = circle_point(th, jet);
    cr = std::abs(std::exp(Complex(0.0, 2.0 * k_pi * kappa)) - w);
  }
  return {t, kappa, d1, KappaRoute::integrated, cr};
}

double KappaAccumulator::gamma_inverse(double u) {
  const double a_k = locate_a_kappa();
  bool have;
  {
    std::lock_guard<std::mutex> lock(mu_);
    have = have_a_gamma_;
  }
  if (!have) {
    const double ag = kappa_of(a_k).kappa;
    std::lock_guard<std::mutex> lock(mu_);
    a_gamma_ = ag;
    have_a_gamma_ = true;
  }
  if (!(u > a_gamma_ + 1e-11))
    throw domain_violation("gamma_inverse: u must exceed the kappa minimum");

  double lo = a_k;
  double klo = a_gamma_;
  double hi = lo;
  double khi = klo;
  while (khi < u) {
    lo = hi;
    klo = khi;
    const double slope = std::max(0.25, kappa_d1(hi));
    hi = hi + std::min(8.0, std::max(0.5, (u - khi) / slope));
    if (hi > 1000.0)
      throw box_error("gamma_inverse: requested value lies beyond t = 1000");
    khi = kappa_of(hi).kappa;
  }
  if (khi == u) return hi;
  if (klo > u)
    throw monotonicity_error("gamma_inverse: bracket lost the target value");

  auto f = [this, u](double x) { return kappa_of(x).kappa - u; };
  auto df = [](double x) { return kappa_d1(x); };
  const RootResult r = bracketed_newton(f, df, lo, hi, 1e-12, 1e-11);
  if (std::abs(r.f_at_x) > 1e-10)
    throw search_failure("gamma_inverse: residual above 1e-10 after Newton");
  return r.x;
}

void KappaAccumulator::snap_integer_anchor(double xi, long n) {
  const double pre = kappa_of(xi).kappa;
  const double dev = std::abs(pre - static_cast<double>(n));
  std::lock_guard<std::mutex> lock(mu_);
  if (dev > worst_snap_) worst_snap_ = dev;
  if (!frozen_) {
    anchors_[xi] = static_cast<double>(n);
    snapped_.push_back(xi);
  }
}

double KappaAccumulator::worst_snap_deviation() const {
  std::lock_guard<std::mutex> lock(mu_);
  return worst_snap_;
}

std::vector<std::pair<double, double>> KappaAccumulator::monotonicity_violations()
    const {
  std::lock_guard<std::mutex> lock(mu_);
  return violations_;
}

KappaSample kappa_phase_refine(const KappaSample& integrated) {
  const ThetaTriple th = theta_series(integrated.t);
  const ZetaJet jet = zeta_jet(Complex(0.5, integrated.t));
  const Complex w = circle_point(th, jet);
  const double phi = std::arg(w) / (2.0 * k_pi);
  const double refined =
      std::round(integrated.kappa - phi) + phi;
  const double cr =
      std::abs(std::exp(Complex(0.0, 2.0 * k_pi * refined)) - w);
  return {integrated.t, refined, integrated.d1, KappaRoute::phase_formula, cr};
}

}  // namespace zetaphase
