#include "zetaphase/zeta_prime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/numeric.hpp"
#include "zetaphase/specfun.hpp"
#include "zetaphase/zeta.hpp"

namespace zetaphase {
namespace {

// zeta'(s)/chi(s) on the real axis, via the functional equation:
// g1(s) zeta(1-s) - zeta'(1-s) with g1 = (log chi)'. Real, sign-definite
// blowups at the interval ends, and representable arbitrarily deep where
// zeta' itself overflows.
struct ScaledPrime {
  double f;
  double d1;
};

ScaledPrime scaled_prime(double s) {
  const double w = 1.0 - s;
  const ZetaJet j = zeta_jet_em(Complex(w, 0.0));
  const double z0 = j.f.real();
  const double z1 = j.d1.real();
  const double z2 = j.d2.real();
  // cot and csc^2 of pi s/2 after exact half-period reduction.
  const double half = 0.5 * s;
  const double r = half - std::nearbyint(half);
  const double sr = std::sin(k_pi * r);
  const double cr = std::cos(k_pi * r);
  const double cot = cr / sr;
  const double csc2 = 1.0 / (sr * sr);
  const double psi_w = std::real(digamma(Complex(w, 0.0)));
  const double psi1_w = std::real(trigamma(Complex(w, 0.0)));
  const double g1 = k_log_2pi + 0.5 * k_pi * cot - psi_w;
  const double g1p = -0.25 * k_pi * k_pi * csc2 + psi1_w;
  return {g1 * z0 - z1, g1p * z0 - g1 * z1 + z2};
}

// Cached trivial zeros for f_of.
std::vector<double>& trivial_cache(int count) {
  static std::vector<double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) < count) {
    cache.clear();
    for (const auto& z : find_trivial_zeros(count)) cache.push_back(z.beta);
  }
  return cache;
}

struct Winding {
  double re;
  double im;
  bool usable;
};

Winding contour_count(double xa, double xb, double ya, double yb) {
  const Complex corner[5] = {{xa, ya}, {xb, ya}, {xb, yb}, {xa, yb}, {xa, ya}};
  Complex total = 0.0;
  constexpr int M = 200;
  for (int side = 0; side < 4; ++side) {
    const Complex h = (corner[side + 1] - corner[side]) / static_cast<double>(M);
    Complex acc = 0.0;
    for (int j = 0; j <= M; ++j) {
      const Complex s = corner[side] + static_cast<double>(j) * h;
      const ZetaJet jet = zeta_jet(s);
      if (std::abs(jet.d1) < 1e-12) return {0.0, 0.0, false};
      const Complex val = jet.d2 / jet.d1;
      acc += (j == 0 || j == M) ? 0.5 * val : val;
    }
    total += acc * h;
  }
  const Complex w = total / Complex(0.0, 2.0 * k_pi);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    return {0.0, 0.0, false};
  return {w.real(), w.imag(), true};
}

// All zeros inside the rectangle, found by seeding Newton from |zeta'|
// local minima on successively finer lattices until the count matches m.
std::vector<Complex> hunt_roots(double xa, double xb, double ya, double yb,
                                long m) {
  const int grids[3][2] = {{9, 7}, {17, 13}, {33, 25}};
  for (const auto& g : grids) {
    const int nx = g[0], ny = g[1];
    std::vector<double> mag(static_cast<size_t>(nx) * ny);
    auto at = [&](int i, int j) -> double& {
      return mag[static_cast<size_t>(j) * nx + i];
    };
    const double dx = (xb - xa) / (nx - 1);
    const double dy = (yb - ya) / (ny - 1);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        at(i, j) = std::abs(zeta_jet(Complex(xa + i * dx, ya + j * dy)).d1);
    std::vector<std::pair<double, Complex>> seeds;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const double v = at(i, j);
        if (i > 0 && at(i - 1, j) < v) continue;
        if (i + 1 < nx && at(i + 1, j) < v) continue;
        if (j > 0 && at(i, j - 1) < v) continue;
        if (j + 1 < ny && at(i, j + 1) < v) continue;
        seeds.emplace_back(v, Complex(xa + i * dx, ya + j * dy));
      }
    std::sort(seeds.begin(), seeds.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (static_cast<long>(seeds.size()) > 3 * m + 6)
      seeds.resize(3 * m + 6);

    std::vector<Complex> roots;
    for (const auto& [v0, seed] : seeds) {
      Complex s = seed;
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        ZetaJet jet = zeta_jet(s);
        if (std::abs(jet.d2) < 1e-14 * (1.0 + std::abs(jet.d1))) {
          s += Complex(1e-4, 7e-5);
          continue;
        }
        Complex step = jet.d1 / jet.d2;
        if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
        s -= step;
        if (s.real() < -1.0 || s.real() > 4.0) break;
        if (std::abs(step) < 1e-13 * (1.0 + std::abs(s))) {
          ok = true;
          break;
        }
      }
      if (!ok) continue;
      // Membership must mirror the winding rectangle exactly: a margin here
      // once pulled in a root from the neighboring strip (gamma 0.03 below
      // the edge) and the count could never match. Zeros on the rectangle
      // itself make the contour unusable, which shifts the window instead.
      if (s.real() < xa || s.real() > xb || s.imag() < ya || s.imag() > yb)
        continue;
      if (std::abs(zeta_jet(s).d1) > 1e-7) continue;
      bool dup = false;
      for (const Complex& r : roots)
        if (std::abs(r - s) < 1e-8) {
          dup = true;
          break;
        }
      if (!dup) roots.push_back(s);
    }
    if (static_cast<long>(roots.size()) == m) return roots;
  }
  throw winding_error(
      "find_complex_zeros: located roots disagree with the contour count");
}

void rect_zeros(double ya, double yb, std::vector<Complex>& out) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    const double xa = std::max(0.004, 0.01 - 0.0017 * attempt);
    const double xb = std::min(3.98, 3.5 + 0.0023 * attempt);
    const double ya2 = std::max(0.05, ya - 0.0037 * attempt);
    const double yb2 = yb + 0.0041 * attempt;
    const Winding w = contour_count(xa, xb, ya2, yb2);
    if (!w.usable) continue;
    const long m = std::lround(w.re);
    if (std::abs(w.re - m) > 0.15 || std::abs(w.im) > 0.15 || m < 0) continue;
    if (m == 0) return;
    try {
      std::vector<Complex> roots = hunt_roots(xa, xb, ya2, yb2, m);
      out.insert(out.end(), roots.begin(), roots.end());
      return;
    } catch (const winding_error&) {
      if (attempt == 4) throw;
    }
  }
  throw winding_error(
      "find_complex_zeros: contour count never settled to an integer");
}

double tail_int(double t0, double t) {
  return (std::log(t0 / (4.0 * k_pi)) / (t0 - t) +
          std::log(t0 / (t0 - t)) / t) /
         (2.0 * k_pi);
}

double tail_int_conj(double t0, double t) {
  return (std::log(t0 / (4.0 * k_pi)) / (t0 + t) +
          std::log((t0 + t) / t0) / t) /
         (2.0 * k_pi);
}

}  // namespace

std::vector<ZetaPrimeZero> find_trivial_zeros(int count) {
  if (count < 1 || count > 500)
    throw domain_violation("find_trivial_zeros: count must lie in [1, 500]");
  std::vector<ZetaPrimeZero> out;
  out.reserve(count);
  for (int n = 1; n <= count; ++n) {
    const double lo = -2.0 * n - 2.0;
    const double hi = -2.0 * n;
    double delta = 1e-6;
    double a = lo + delta, b = hi - delta;
    bool bracketed = false;
    for (int tries = 0; tries < 4; ++tries) {
      if (scaled_prime(a).f > 0.0 && scaled_prime(b).f < 0.0) {
        bracketed = true;
        break;
      }
      delta *= 0.01;
      a = lo + delta;
      b = hi - delta;
    }
    if (!bracketed)
      throw bracket_error("find_trivial_zeros: endpoint signs did not appear");
    auto f = [](double x) { return scaled_prime(x).f; };
    auto df = [](double x) { return scaled_prime(x).d1; };
    const RootResult r = bracketed_newton(f, df, a, b, 1e-13, 1e-13);
    out.push_back(
        {ZpZeroKind::trivial_zero, n, r.x, 0.0, std::abs(r.f_at_x)});
  }
  return out;
}

std::vector<ZetaPrimeZero> find_complex_zeros(double height) {
  if (!(height > 0.0 && height <= 500.0))
    throw domain_violation("find_complex_zeros: height must lie in (0, 500]");
  std::vector<Complex> found;
  for (double y0 = 0.0; y0 < height; y0 += 2.0)
    rect_zeros(y0 == 0.0 ? 0.5 : y0, y0 + 2.0, found);
  std::sort(found.begin(), found.end(), [](Complex a, Complex b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  std::vector<ZetaPrimeZero> out;
  long idx = 0;
  for (size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && std::abs(found[i] - found[i - 1]) < 1e-8) continue;
    if (found[i].imag() > height + 1e-9) continue;
    ++idx;
    out.push_back({ZpZeroKind::complex_zero, idx, found[i].real(),
                   found[i].imag(), std::abs(zeta_jet(found[i]).d1)});
  }
  return out;
}

MLConstants ml_constant_a() {
  const ZetaJet j = zeta_jet(Complex(0.0, 0.0));
  const double a = -2.0 + std::real(j.d2 / j.d1);
  const double l2p = k_log_2pi;
  const double closed = k_pi * k_pi / (12.0 * l2p) -
                        (k_euler_gamma * k_euler_gamma + 2.0 * k_stieltjes1) /
                            l2p +
                        l2p - 2.0;
  if (std::abs(a - closed) > 1e-5)
    throw cross_check_error(
        "ml_constant_a: evaluator disagrees with the closed form");
  const double b_check = std::abs(j.d1 + Complex(0.5 * l2p, 0.0));
  return {a, 0.5 * k_log_2, b_check};
}

FValue f_of(double t, int k_terms, double max_tail) {
  if (k_terms < 100 || k_terms > 500)
    throw domain_violation("f_of: k_terms must lie in [100, 500]");
  const double X = 2.0 * k_terms + 2.5;
  const double tail = X / (X * X + t * t);
  if (tail > max_tail)
    throw insufficient_terms_error(
        "f_of: tail estimate exceeds the requested bound");
  const std::vector<double>& triv = trivial_cache(k_terms);
  const double t2 = t * t;
  double f = -2.0 / (1.0 + 4.0 * t2);
  for (int n = 1; n <= k_terms; ++n) {
    const double q = 4.0 * n + 1.0;
    const double b = 0.5 - triv[n - 1];
    f += 2.0 * q / (q * q + 4.0 * t2) - b / (b * b + t2);
  }
  if (std::abs(t) > 1.0) {
    const double bound = 2.0 / (1.0 + 4.0 * t2) + 1.0 / std::abs(t) + tail;
    if (std::abs(f) > bound)
      throw cross_check_error("f_of: decay bound violated");
  }
  return {f, tail};
}

ReconstructedD1 kappa_d1_reconstructed(double t,
                                       const std::vector<ZetaPrimeZero>& zeros,
                                       int k_terms) {
  if (!(t > 0.0))
    throw domain_violation("kappa_d1_reconstructed: needs t > 0");
  double t0 = 0.0;
  for (const auto& z : zeros)
    if (z.kind == ZpZeroKind::complex_zero) t0 = std::max(t0, z.gamma);
  if (t0 < t + 50.0)
    throw domain_violation(
        "kappa_d1_reconstructed: catalog height must reach t + 50");
  const FValue f = f_of(t, k_terms);
  double sum = 0.0;
  for (const auto& z : zeros) {
    if (z.kind != ZpZeroKind::complex_zero) continue;
    const double m = z.beta - 0.5;
    const double dm = t - z.gamma;
    const double dp = t + z.gamma;
    sum += m / (m * m + dm * dm) + m / (m * m + dp * dp);
  }
  const double value = (0.5 * k_log_2 + f.value + sum) / k_pi;
  const double budget =
      3.0 * (2.5 * (tail_int(t0, t) + tail_int_conj(t0, t)) + f.tail_bound) /
      k_pi;
  return {value, budget};
}

double phi_angle(double t, const ZetaPrimeZero& zero) {
  if (zero.kind != ZpZeroKind::complex_zero)
    throw domain_violation("phi_angle: needs a complex zero");
  const double b = zero.beta - 0.5;
  if (b <= 1e-12) return 0.0;
  return std::atan((t - zero.gamma) / b) + std::atan((t + zero.gamma) / b);
}

PhaseDiagnostic kappa_phase_diagnostic(KappaAccumulator& acc, double t,
                                       const std::vector<ZetaPrimeZero>& zeros) {
  double t0 = 0.0;
  for (const auto& z : zeros)
    if (z.kind == ZpZeroKind::complex_zero) t0 = std::max(t0, z.gamma);
  if (t0 < t + 50.0)
    throw domain_violation(
        "kappa_phase_diagnostic: catalog height must reach t + 50");
  const double lhs = k_pi * acc.kappa_of(t).kappa;
  double rhs = 0.5 * k_log_2 * t;
  for (const auto& z : zeros) {
    if (z.kind != ZpZeroKind::complex_zero) continue;
    rhs += phi_angle(t, z);
  }
  return {lhs, rhs, lhs - rhs};
}

GyCheck gy_distance_check(const ZetaPrimeZero& zero,
                          const std::vector<double>& xi_ordinates) {
  if (zero.kind != ZpZeroKind::complex_zero)
    throw domain_violation("gy_distance_check: needs a complex zero");
  if (xi_ordinates.empty())
    throw domain_violation("gy_distance_check: empty ordinate catalog");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double dist = lo;
  double gamma_c = 0.0;
  for (const double x : xi_ordinates) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    const double d = std::abs(zero.gamma - x);
    if (d < dist) {
      dist = d;
      gamma_c = x;
    }
  }
  if (lo > zero.gamma - 1.0 || hi < zero.gamma + 1.0)
    throw domain_violation(
        "gy_distance_check: catalog does not cover the zero's height");
  const double bound = 1.9 * std::sqrt(std::max(0.0, zero.beta - 0.5));
  return {gamma_c, dist, bound, dist <= bound + 1e-12};
}

PrimeSplitCounts count_prime_splits(double height,
                                    const std::vector<ZetaPrimeZero>& zeros) {
  PrimeSplitCounts out{0, 0, 0, 0, 0.0};
  for (const auto& z : zeros) {
    if (z.kind != ZpZeroKind::complex_zero || z.gamma > height) continue;
    ++out.n_total;
    if (z.beta < 0.5 - 1e-9)
      ++out.n_left;
    else if (z.beta > 1.0)
      ++out.n_right;
    else
      ++out.n_middle;
  }
  const double main = height / (2.0 * k_pi) * std::log(height / (4.0 * k_pi)) -
                      height / (2.0 * k_pi);
  out.berndt_ratio = (std::abs(main) > 1e-9) ? out.n_total / main : 0.0;
  return out;
}

}  // namespace zetaphase
