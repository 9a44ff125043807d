#include "zetaphase/theta.hpp"

#include <cmath>
#include <mutex>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/numeric.hpp"
#include "zetaphase/specfun.hpp"

namespace zetaphase {
namespace {

constexpr double kBoxT = 1.0e4;

// Heads of the three series.
constexpr double kHead0 =
    0.5 * (k_euler_gamma + k_log_pi + 3.0 * k_log_2 + 0.5 * k_pi);
constexpr double kHead1 = 0.5 * (k_euler_gamma + k_log_pi);

// x - atan(x) without cancellation for small x.
double x_minus_atan(double x) {
  if (x >= 0.25) return x - std::atan(x);
  const double x2 = x * x;
  double p = x * x2;  // +/- x^{2j+1}
  double acc = p / 3.0;
  for (int j = 2; j <= 26; ++j) {
    p *= -x2;
    const double add = p / (2.0 * j + 1.0);
    acc += add;
    if (std::abs(add) < 1e-19 * acc) break;
  }
  return acc;
}

struct Series {
  double theta, d1, d2;
};

// All three sums share the cutoff K and Euler-Maclaurin closures from K+1.
// The closures keep every truncation contribution below ~1e-15 while the
// direct sums stay O(|t|) long.
Series eval_series(double u) {
  const double a = 2.0 * u;
  const double a2 = a * a;
  const long K = std::max<long>(100, static_cast<long>(std::ceil(2.5 * u)));

  // theta: sum_{k>=0} (x - atan x), x = a/(4k+1)
  double s0 = 0.0;
  for (long k = K; k >= 0; --k) s0 += x_minus_atan(a / (4.0 * k + 1.0));

  // theta': sum_{k>=1} of 2q/(q^2+a^2) - 1/(2k) in its fused, sign-definite
  // form -(q + a^2) / (2k (q^2 + a^2)).
  double s1 = 0.0;
  for (long k = K; k >= 1; --k) {
    const double q = 4.0 * k + 1.0;
    s1 -= (q + a2) / (2.0 * k * (q * q + a2));
  }

  // theta'': 16 t * sum_{k>=0} q/(q^2+a^2)^2
  double s2 = 0.0;
  for (long k = K; k >= 0; --k) {
    const double q = 4.0 * k + 1.0;
    const double d = q * q + a2;
    s2 += q / (d * d);
  }

  const double kk = static_cast<double>(K + 1);
  const double Q = 4.0 * kk + 1.0;
  const double Q2 = Q * Q;
  const double D = Q2 + a2;   // Q^2 + a^2
  const double R = 1.0 / D;

  // tail of s0: integral as an alternating series in (a/Q)^2, then the
  // half-term and two derivative corrections.
  {
    double integral = 0.0;
    if (a > 0.0) {
      const double r2 = (a / Q) * (a / Q);
      double tj = a * a * a / (Q * Q) / 6.0;  // j = 1 term of the integral
      double sign = 1.0;
      for (int j = 1; j <= 40; ++j) {
        integral += sign * tj;
        const double j2 = 2.0 * j;
        tj *= r2 * (j2 * (j2 + 1.0)) / ((j2 + 2.0) * (j2 + 3.0));
        sign = -sign;
        if (tj < 1e-18 * (1.0 + integral)) break;
      }
      integral *= 0.25;
    }
    const double half = 0.5 * x_minus_atan(a / Q);
    const double fp = -4.0 * a * a2 / (Q2 * D);
    const double fppp =
        64.0 * (-2.0 * a * a2 * (10.0 * Q2 * Q2 + 9.0 * Q2 * a2 + 3.0 * a2 * a2) /
                (Q2 * Q2 * D * D * D));
    s0 += integral + half - fp / 12.0 + fppp / 720.0;
  }

  // tail of s1
  {
    const double integral = -0.5 * std::log1p(1.0 / (4.0 * kk)) -
                            0.25 * std::log1p(a2 / Q2);
    const double half = -0.5 * (Q + a2) / (2.0 * kk * D);
    const double hp =
        (2.0 * D * (a2 + 1.0) + 4.0 * Q * (Q - 1.0) * (Q + a2)) /
        (4.0 * kk * kk * D * D);
    const double R2 = R * R;
    const double hppp = -768.0 * R2 + 6144.0 * Q2 * R2 * R -
                        6144.0 * Q2 * Q2 * R2 * R2 +
                        3.0 / (kk * kk * kk * kk);
    s1 += integral + half - hp / 12.0 + hppp / 720.0;
  }

  // tail of s2
  {
    const double integral = 0.125 * R;
    const double half = 0.5 * Q * R * R;
    const double pp = 4.0 * R * R * R * (a2 - 3.0 * Q2);
    const double R3 = R * R * R;
    const double pppp3 = 64.0 * (-12.0 * R3 + 144.0 * Q2 * R3 * R -
                                 192.0 * Q2 * Q2 * R3 * R * R);
    s2 += integral + half - pp / 12.0 + pppp3 / 720.0;
  }

  Series out;
  out.theta = -kHead0 * u + s0;
  out.d1 = -kHead1 - 2.0 / (1.0 + a2) - s1;
  out.d2 = 16.0 * u * s2;
  return out;
}

}  // namespace

ThetaTriple theta_series(double t) {
  if (!(std::abs(t) <= kBoxT))
    throw box_error("theta_series: |t| exceeds 1e4");
  const double u = std::abs(t);
  const Series s = eval_series(u);
  // theta and theta'' are odd, theta' is even.
  if (t < 0.0) return {t, -s.theta, s.d1, -s.d2};
  return {t, s.theta, s.d1, s.d2};
}

ThetaTriple theta_asymptotic(double t) {
  if (!(std::abs(t) <= kBoxT))
    throw box_error("theta_asymptotic: |t| exceeds 1e4");
  if (std::abs(t) < 1.0)
    throw box_error("theta_asymptotic: needs |t| >= 1");
  const double u = std::abs(t);
  const Complex z(0.25, 0.5 * u);
  const double theta = std::imag(log_gamma(z)) - 0.5 * u * k_log_pi;
  const double d1 = 0.5 * std::real(digamma(z)) - 0.5 * k_log_pi;
  const double d2 = -0.25 * std::imag(trigamma(z));
  if (t < 0.0) return {t, -theta, d1, -d2};
  return {t, theta, d1, d2};
}

AbscissaATheta find_a_theta() {
  static AbscissaATheta cached;
  static std::once_flag once;
  std::call_once(once, [] {
    auto f = [](double x) { return theta_series(x).d1; };
    auto df = [](double x) { return theta_series(x).d2; };
    const RootResult r = bracketed_newton(f, df, 5.5, 7.0, 1e-14, 1e-14);
    cached = {r.x, std::abs(r.f_at_x)};
  });
  return cached;
}

}  // namespace zetaphase
