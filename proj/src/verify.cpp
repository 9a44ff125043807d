#include "zetaphase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/kappa.hpp"
#include "zetaphase/numeric.hpp"
#include "zetaphase/phase.hpp"
#include "zetaphase/specfun.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/zeros.hpp"
#include "zetaphase/zeta.hpp"
#include "zetaphase/zeta_prime.hpp"

namespace zetaphase {

namespace {

struct Checker {
  SuiteReport rep;

  explicit Checker(std::string suite) { rep.suite = std::move(suite); }

  void add(const std::string& name, double residual, double tolerance) {
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    rep.checks.push_back({name, residual, tolerance, ok});
  }

  // For yes/no checks: residual 0 on success, 1 on failure.
  void require(const std::string& name, bool ok) {
    rep.checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
  }

  SuiteReport finish() {
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    return rep;
  }
};

// Reference ordinates of the first zeros of Z on the positive axis, used by
// several suites.  Independently computed to 1e-17 relative accuracy.
constexpr double kXiRef[7] = {
    14.134725141734693790,  21.022039638771554993,
    25.010857580145688763,  30.424876125859513210,
    32.935061587739189691,  37.586178158825671257,
    40.918719012147495187};

// First zeros of the derivative of zeta off the real axis (real, imag parts),
// reference digits good to about 5e-11.
constexpr double kRhoRef[7][2] = {
    {2.4631618694, 23.2983204927},
    {1.2864968222, 31.7082500831},
    {2.3075700637, 38.4899831730},
    {1.3827636057, 42.2909645545},
    {0.9646856227, 48.8471599050},
    {2.1016999009, 52.4321612451},
    {1.8959597624, 57.1347531990}};

std::vector<double> off_ordinate_grid(int count, double lo, double hi,
                                      const std::vector<double>& ordinates) {
  std::vector<double> pts;
  pts.reserve(count);
  for (int j = 0; j < count; ++j) {
    double t = lo + (hi - lo) * (j + 0.5) / count;
    auto near_ord = [&](double x) {
      for (double g : ordinates)
        if (std::abs(x - g) < 0.05) return true;
      return false;
    };
    while (near_ord(t)) t += 0.037;
    pts.push_back(t);
  }
  return pts;
}

SuiteReport suite_constants() {
  Checker c("constants");

  const AbscissaATheta at = find_a_theta();
  c.add("a_theta_value", std::abs(at.value - 6.2898359888369027797), 1e-11);
  c.add("a_theta_residual", std::abs(at.residual), 1e-13);

  const double ak = locate_a_kappa();
  c.add("a_kappa_value", std::abs(ak - 0.77985357533883603052), 5e-11);

  KappaAccumulator acc;
  const double ag = acc.kappa_of(ak).kappa;
  c.add("a_gamma_value", std::abs(ag - (-0.67025979876859950288)), 5e-10);

  c.add("kappa_d1_origin", std::abs(kappa_d1(0.0) - (-0.44401619244818732254)),
        1e-5);

  const MLConstants ml = ml_constant_a();
  c.add("ml_a_value", std::abs(ml.a - 0.18334130457201580877), 1e-4);
  const double g = k_euler_gamma;
  const double closed = k_pi * k_pi / (12.0 * k_log_2pi) -
                        (g * g + 2.0 * k_stieltjes1) / k_log_2pi + k_log_2pi -
                        2.0;
  c.add("ml_a_closed_form", std::abs(ml.a - closed), 1e-6);
  c.add("ml_big_a", std::abs(ml.big_a - 0.5 * k_log_2), 0.0);
  c.add("zeta_d1_at_zero", ml.b_check, 1e-10);

  return c.finish();
}

SuiteReport suite_identities() {
  Checker c("identities");

  // Rotated zeta stays real on the critical line, and the rotated first
  // derivative has the stated real part.
  {
    double worst = 0.0, worst1 = 0.0;
    for (int j = 0; j < 60; ++j) {
      const double t = 0.1 + j * (100.0 - 0.1) / 59.0;
      const ZTriple z = z_triple(t);
      worst = std::max(worst, z.identity_residual);
      worst1 = std::max(worst1, z.d1_identity_residual);
    }
    c.add("rotation_real", worst, 1e-9);
    c.add("rotation_d1", worst1, 1e-9);
  }

  // Conjugate-pair form of the derivative identity, with the reflected
  // derivative evaluated by an independent call at 1/2 - it.
  {
    double worst = 0.0;
    for (int j = 0; j < 200; ++j) {
      const double t = 0.25 + j * 0.5;
      const ThetaTriple th = theta_series(t);
      const Complex rot = std::exp(Complex(0.0, th.theta));
      const ZetaJet up = zeta_jet(Complex(0.5, t));
      const ZetaJet dn = zeta_jet(Complex(0.5, -t));
      const Complex lhs = rot * up.d1 + std::conj(rot) * dn.d1;
      const ZTriple z = z_triple_from(th, up);
      const double rhs = -2.0 * th.d1 * z.z;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    c.add("conjugate_pair_d1", worst, 1e-9);
  }

  // Series route against the log-gamma route for theta and derivatives.
  {
    double w0 = 0.0, w1 = 0.0, w2 = 0.0;
    for (int j = 0; j < 50; ++j) {
      const double t = 1.0 + j * 99.0 / 49.0;
      const ThetaTriple a = theta_series(t);
      const ThetaTriple b = theta_asymptotic(t);
      w0 = std::max(w0, std::abs(a.theta - b.theta));
      w1 = std::max(w1, std::abs(a.d1 - b.d1));
      w2 = std::max(w2, std::abs(a.d2 - b.d2));
    }
    c.add("theta_routes_value", w0, 1e-11);
    c.add("theta_routes_d1", w1, 1e-12);
    c.add("theta_routes_d2", w2, 1e-12);
  }

  // Finite differences pin the derivative slots to the value slots.
  {
    const double h = 1e-5;
    double wd1 = 0.0, wd2 = 0.0;
    for (double t : {0.7, 3.3, 17.5, 64.2}) {
      const ThetaTriple mid = theta_series(t);
      const ThetaTriple up = theta_series(t + h);
      const ThetaTriple dn = theta_series(t - h);
      wd1 = std::max(wd1, std::abs((up.theta - dn.theta) / (2.0 * h) - mid.d1));
      wd2 = std::max(wd2, std::abs((up.d1 - dn.d1) / (2.0 * h) - mid.d2));
    }
    c.add("theta_fd_d1", wd1, 1e-8);
    c.add("theta_fd_d2", wd2, 1e-8);
  }
  {
    const double h = 1e-5;
    double worst = 0.0;
    for (Complex s : {Complex(2.0, 33.3), Complex(0.5, 10.0)}) {
      const ZetaJet mid = zeta_jet(s);
      const ZetaJet up = zeta_jet(s + h);
      const ZetaJet dn = zeta_jet(s - h);
      const double r1 =
          std::abs((up.f - dn.f) / (2.0 * h) - mid.d1) / std::abs(mid.d1);
      const double r2 =
          std::abs((up.d1 - dn.d1) / (2.0 * h) - mid.d2) / std::abs(mid.d2);
      worst = std::max({worst, r1, r2});
    }
    c.add("zeta_fd_jets", worst, 1e-6);
  }

  // Completed-zeta symmetry under s -> 1-s.
  {
    double worst = 0.0;
    for (double sigma : {-2.3, -1.2, 0.3, 0.8}) {
      for (double t : {2.5, 7.7, 13.1, 26.9, 31.4}) {
        const Complex s(sigma, t);
        auto completed = [](Complex z) {
          return std::exp(-0.5 * z * k_log_pi + log_gamma(0.5 * z)) *
                 zeta_jet(z).f;
        };
        const Complex ratio = completed(s) / completed(1.0 - s);
        worst = std::max(worst, std::abs(ratio - 1.0));
      }
    }
    c.add("functional_equation", worst, 1e-9);
  }

  // The winding samples land on the unit circle.
  {
    KappaAccumulator acc;
    double worst = 0.0;
    for (int j = 0; j < 25; ++j) {
      const double t = 7.31 + 3.67 * j;
      worst = std::max(worst, acc.kappa_of(t).circle_residual);
    }
    c.add("circle_unimodular", worst, 1e-8);
  }

  // Rational and logarithmic forms of the winding rate agree.
  {
    double worst = 0.0;
    for (int j = 0; j < 500; ++j) {
      const double t = 0.05 + j * (100.0 - 0.05) / 499.0;
      double alt = 0.0;
      const double primary = kappa_d1_alt(t, &alt);
      worst = std::max(worst, std::abs(primary - alt) / (1.0 + std::abs(primary)));
    }
    c.add("kappa_d1_routes", worst, 1e-8);
  }

  // Gap-phase rate in direct and factored forms.
  {
    double worst = 0.0;
    for (int j = 0; j < 100; ++j) {
      const double t = 0.6 + j * 0.993;
      worst = std::max(worst, std::abs(e_d1(t) - e_d1_z_form(t)));
    }
    c.add("e_d1_routes", worst, 1e-8);
  }

  // kappa(t) + kappa(-t) = -1.
  {
    KappaAccumulator acc;
    double worst = 0.0;
    for (int j = 0; j < 50; ++j) {
      const double t = 0.9 + j * 2.01;
      const double sum = acc.kappa_of(t).kappa + acc.kappa_of(-t).kappa;
      worst = std::max(worst, std::abs(sum + 1.0));
    }
    c.add("kappa_oddness", worst, 2e-8);
  }

  // Unwinding the circle map reproduces the integrated phase.
  {
    KappaAccumulator acc;
    double worst = 0.0;
    for (int j = 0; j < 25; ++j) {
      const double t = 5.13 + 3.91 * j;
      const KappaSample s = acc.kappa_of(t);
      worst = std::max(worst, std::abs(kappa_phase_refine(s).kappa - s.kappa));
    }
    c.add("phase_refine_agreement", worst, 1e-8);
  }

  return c.finish();
}

SuiteReport suite_zeros() {
  Checker c("zeros");
  KappaAccumulator acc;

  std::vector<CriticalZero> xi;
  for (int n = 1; n <= 30; ++n) xi.push_back(find_xi(acc, n));

  {
    double worst = 0.0;
    for (int n = 1; n <= 7; ++n)
      worst = std::max(worst, std::abs(xi[n - 1].ordinate - kXiRef[n - 1]));
    c.add("table_xi", worst, 1e-8);
  }
  {
    double worst = 0.0;
    for (int n = 1; n <= 30; ++n)
      worst = std::max(worst, xi[n - 1].kappa_residual);
    c.add("xi_kappa_integer", worst, 1e-8);
  }
  {
    bool mult_ok = true;
    for (int n = 1; n <= 7; ++n) {
      const Multiplicity m = multiplicity_of(xi[n - 1].ordinate);
      mult_ok = mult_ok && m.value == 1 && !m.flagged;
    }
    c.require("multiplicity_simple", mult_ok);
  }

  {
    const EtaPoint e1 = find_eta(acc, -1);
    const EtaPoint e2 = find_eta(acc, 0);
    c.add("eta_1", std::abs(e1.ordinate - 2.4757266226375598691), 1e-4);
    c.add("eta_2", std::abs(e2.ordinate - 10.212074845235794431), 1e-4);
  }

  // One critical point of Z strictly between consecutive zeros, landing on a
  // half-integer of the winding count.
  {
    bool unique = true, inside = true;
    double whalf = 0.0, wz1 = 0.0;
    for (int n = 1; n <= 29; ++n) {
      const EtaPoint e = find_eta(acc, n);
      const double lo = xi[n - 1].ordinate, hi = xi[n].ordinate;
      inside = inside && e.ordinate > lo && e.ordinate < hi;
      wz1 = std::max(wz1, e.zprime_residual);
      const double frac =
          acc.kappa_of(e.ordinate).kappa - std::floor(acc.kappa_of(e.ordinate).kappa);
      whalf = std::max(whalf, std::abs(frac - 0.5));
      int crossings = 0;
      double prev = z_triple(lo + 1e-4).d1;
      for (double t = lo + 1e-4; t < hi - 1e-4; t += 0.02) {
        const double cur = z_triple(std::min(t + 0.02, hi - 1e-4)).d1;
        if ((prev < 0.0) != (cur < 0.0)) ++crossings;
        prev = cur;
      }
      unique = unique && crossings == 1;
    }
    c.require("eta_unique_per_gap", unique && inside);
    c.add("eta_zprime", wz1, 1e-7);
    c.add("eta_half_integer", whalf, 1e-8);
  }

  // Floor of the winding count against a brute-force sign scan.
  {
    bool ok = true;
    const double a_theta = find_a_theta().value;
    for (double t : {30.0, 50.0, 77.0, 100.0}) {
      const long long counted = count_zeros_to(acc, t, nullptr);
      const auto scanned = scan_sign_changes(a_theta + 1e-3, t, 0.02);
      ok = ok && counted == static_cast<long long>(scanned.size());
    }
    c.require("count_matches_scan", ok);
  }

  // Real zeros of the derivative of zeta, one per stated interval.
  {
    const auto triv = find_trivial_zeros(200);
    constexpr double kTrivRef[5] = {-2.7172628292045741016, -4.9367621085949478689,
                                    -7.0745971450071457343, -9.1704931627858280054,
                                    -11.241212325375343511};
    double worst = 0.0, wres = 0.0;
    for (int n = 1; n <= 5; ++n) {
      worst = std::max(worst, std::abs(triv[n - 1].beta - kTrivRef[n - 1]));
      wres = std::max(
          wres, std::abs(zeta_jet(Complex(triv[n - 1].beta, 0.0)).d1));
    }
    c.add("trivial_low", worst, 1e-8);
    c.add("trivial_residual", wres, 1e-8);

    bool brackets = true;
    for (const auto& z : triv) {
      const double lo = -2.0 * z.index - 2.0, hi = -2.0 * z.index;
      brackets = brackets && z.beta > lo && z.beta < hi;
    }
    c.require("trivial_brackets", brackets);

    // Offset from the even integers follows the predicted slow drift.
    auto drift = [&](int n) {
      const double cn = triv[n - 1].beta + 2.0 * n + 2.0;
      return std::abs(cn * std::log((2.0 * n + 1.0) / (2.0 * k_pi)) - 1.0);
    };
    c.add("trivial_drift_50", drift(50), 0.25);
    c.add("trivial_drift_200", drift(200), 0.25);
  }

  // Nonreal zeros of the derivative sit right of the critical line.
  {
    const auto zeros = find_complex_zeros(100.0);
    double min_beta = 1e9;
    for (const auto& z : zeros) min_beta = std::min(min_beta, z.beta);
    c.require("speiser_right_of_line", !zeros.empty() && min_beta > 0.5);

    double worst = 0.0;
    int with7 = 0;
    for (const auto& z : zeros) {
      if (z.gamma > 60.0) continue;
      ++with7;
      const int n = z.index;
      if (n >= 1 && n <= 7) {
        worst = std::max(worst, std::abs(z.beta - kRhoRef[n - 1][0]));
        worst = std::max(worst, std::abs(z.gamma - kRhoRef[n - 1][1]));
      }
    }
    c.require("table_rho_count", with7 == 7);
    c.add("table_rho", worst, 1e-7);
  }

  return c.finish();
}

SuiteReport suite_reconstruction() {
  Checker c("reconstruction");

  // Evenness and decay of the real-zero part of the rate.
  {
    double weven = 0.0;
    bool bound_ok = true;
    for (double t : {0.3, 1.7, 6.4, 22.9, 80.2}) {
      const FValue fp = f_of(t, 300);
      const FValue fm = f_of(-t, 300);
      weven = std::max(weven, std::abs(fp.value - fm.value));
      if (t > 1.0) {
        const double cap =
            2.0 / (1.0 + 4.0 * t * t) + 1.0 / t + fp.tail_bound;
        bound_ok = bound_ok && std::abs(fp.value) <= cap;
      }
    }
    c.add("f_even", weven, 1e-12);
    c.require("f_decay_bound", bound_ok);

    bool threw = false;
    try {
      f_of(1.0, 100, 1e-6);
    } catch (const insufficient_terms_error&) {
      threw = true;
    }
    c.require("f_tail_error_path", threw);
  }

  const auto zeros = find_complex_zeros(200.0);

  // Rate of the winding count recovered from the zero catalog.
  {
    double worst_gap = 0.0, worst_budget = 0.0;
    bool within = true;
    for (int j = 0; j < 20; ++j) {
      const double t = 10.0 + j * 80.0 / 19.0;
      const ReconstructedD1 rec = kappa_d1_reconstructed(t, zeros, 300);
      const double gap = std::abs(rec.value - kappa_d1(t));
      worst_gap = std::max(worst_gap, gap);
      worst_budget = std::max(worst_budget, rec.budget);
      within = within && gap <= rec.budget;
    }
    c.require("recon_within_budget", within);
    c.add("recon_budget_small", worst_budget, 0.05);
    c.add("recon_worst_gap", worst_gap, 0.05);
  }

  // Accumulated-angle form of the winding count.
  {
    KappaAccumulator acc;
    double worst = 0.0;
    for (double t : {50.0, 100.0}) {
      const PhaseDiagnostic d = kappa_phase_diagnostic(acc, t, zeros);
      worst = std::max(worst, std::abs(d.gap));
    }
    c.add("phase_diagnostic_gap", worst, 25.0);
  }

  // Every derivative zero lies within the stated distance of a zero of Z.
  {
    KappaAccumulator acc;
    std::vector<double> xis;
    for (int n = 1; n <= 30; ++n) xis.push_back(find_xi(acc, n).ordinate);

    bool all_within = true;
    double d1 = 0.0, b1 = 0.0;
    for (const auto& z : zeros) {
      if (z.gamma > 60.0) continue;
      const GyCheck g = gy_distance_check(z, xis);
      all_within = all_within && g.within;
      if (z.index == 1) {
        d1 = g.dist;
        b1 = g.bound;
      }
    }
    c.require("gy_all_within", all_within);
    c.add("gy_first_dist", std::abs(d1 - 1.71253708744569), 1e-6);
    c.add("gy_first_bound", std::abs(b1 - 2.66214468963165), 1e-6);
  }

  // Left/right split of the catalog and the leading-order count.
  {
    const PrimeSplitCounts s = count_prime_splits(200.0, zeros);
    c.require("split_none_left", s.n_left == 0);
    c.require("split_ratio", s.berndt_ratio > 0.8 && s.berndt_ratio < 1.25);
  }

  return c.finish();
}

SuiteReport suite_band() {
  Checker c("band");
  KappaAccumulator acc;

  std::vector<double> ords;
  for (int n = 1; n <= 29; ++n) ords.push_back(find_xi(acc, n).ordinate);

  const double a_theta = find_a_theta().value;
  const auto pts = off_ordinate_grid(300, a_theta + 0.2, 99.8, ords);

  bool rh_zero = true, band_in = true;
  double eq52 = 0.0;
  for (double t : pts) {
    const PhaseReport r = phase_report(acc, t, ords);
    rh_zero = rh_zero && r.rh == 0;
    band_in = band_in && r.band > -0.5 - 1e-8 && r.band <= 0.5 + 1e-8;
    const KappaSample ks = acc.kappa_of(t);
    const double frac = ks.kappa - std::floor(ks.kappa);
    const double lhs = r.band - (r.rh - (frac - 0.5));
    const double rhs = 1.0 + theta_series(t).theta / k_pi + r.s -
                       static_cast<double>(r.n);
    eq52 = std::max(eq52, std::abs(lhs - rhs));
  }
  c.require("rh_indicator_zero", rh_zero);
  c.require("band_in_range", band_in);
  c.add("band_identity", eq52, 1e-7);

  // Sawtooth partial sums against the band itself: with every zero on the
  // line the band equals 1/2 - frac(kappa), the sum's limit.
  {
    double worst = 0.0;
    int used = 0;
    for (double t : pts) {
      const KappaSample ks = acc.kappa_of(t);
      const double frac = ks.kappa - std::floor(ks.kappa);
      if (frac < 0.2 || frac > 0.8) continue;
      const PhaseReport r = phase_report(acc, t, ords);
      worst = std::max(worst, std::abs(sawtooth_fourier(frac, 200) - r.band));
      if (++used == 10) break;
    }
    c.require("fourier_points_found", used == 10);
    c.add("fourier_sawtooth", worst, 2e-3);
  }

  // Frozen local minimum of the gap phase near the first Lehmer-like pinch.
  {
    const double t0 = 39.5871273404193;
    c.add("e_local_min_value", std::abs(e_of(acc, t0) - 0.151790437053), 1e-6);
    c.require("e_local_min_bracket", e_d1(t0 - 0.05) < 0.0 && e_d1(t0 + 0.05) > 0.0);
  }

  // The gap phase is stationary at each zero of Z.
  {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n)
      worst = std::max(worst, std::abs(e_d1(ords[n - 1])));
    c.add("e_d1_at_xi", worst, 1e-7);
  }

  return c.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "constants", "identities", "zeros", "reconstruction", "band"};
  return names;
}

SuiteReport run_suite(const std::string& name) {
  if (name == "constants") return suite_constants();
  if (name == "identities") return suite_identities();
  if (name == "zeros") return suite_zeros();
  if (name == "reconstruction") return suite_reconstruction();
  if (name == "band") return suite_band();
  throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<SuiteReport> run_all() {
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n));
  return out;
}

}  // namespace zetaphase
