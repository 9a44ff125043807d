#include "zetaphase/specfun.hpp"

#include <cmath>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"

namespace zetaphase {
namespace {

constexpr double kTwoPi = 2.0 * k_pi;
constexpr double kHalfLog2Pi = 0.5 * k_log_2pi;

// B_2 .. B_24.
constexpr double kBern[12] = {
    1.0 / 6.0,    -1.0 / 30.0,     1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,   -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0,
    -236364091.0 / 2730.0};

void check_pole(Complex z, const char* who) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw pole_error(std::string(who) + " evaluated at a nonpositive integer");
}

// Lanczos approximation (g = 7, 9 terms), valid for Re z >= 0.5 at
// moderate |z|; relative error ~1e-14 there.
Complex log_gamma_lanczos(Complex z) {
  static constexpr double c[9] = {
      0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
      771.32342877765313,      -176.61502916214059, 12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,
      1.5056327351493116e-7};
  const Complex x = z - 1.0;
  Complex a = c[0];
  for (int k = 1; k < 9; ++k) a += c[k] / (x + static_cast<double>(k));
  const Complex t = z + 6.5;
  return kHalfLog2Pi + std::log(a) + (z - 0.5) * std::log(t) - t;
}

// Stirling series; accurate to ~1e-15 relative for |z| >= 12, Re z > 0.
Complex log_gamma_stirling(Complex z) {
  const Complex lz = std::log(z);
  Complex acc = (z - 0.5) * lz - z + kHalfLog2Pi;
  const Complex z2 = z * z;
  Complex zp = z;
  for (int k = 1; k <= 12; ++k) {
    const Complex term = kBern[k - 1] / ((2.0 * k) * (2.0 * k - 1.0) * zp);
    acc += term;
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) break;
    zp *= z2;
  }
  return acc;
}

Complex log_gamma_right(Complex z) {
  if (std::abs(z) >= 12.0) return log_gamma_stirling(z);
  return log_gamma_lanczos(z);
}

}  // namespace

Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}); |e^{2 pi i z}| <= 1
  // for Im z >= 0, so the Log argument stays in the right half-plane.
  const Complex i_pi_z = Complex(0.0, k_pi) * z;
  const Complex w = std::exp(2.0 * i_pi_z);
  return Complex(-k_log_2, 0.5 * k_pi) - i_pi_z + std::log(1.0 - w);
}

Complex cot_pi(Complex z) {
  const double y = z.imag();
  if (y > 18.0) {
    const Complex u = std::exp(Complex(0.0, kTwoPi) * z);
    return Complex(0.0, 1.0) * (u + 1.0) / (u - 1.0);
  }
  if (y < -18.0) {
    const Complex v = std::exp(Complex(0.0, -kTwoPi) * z);
    return Complex(0.0, 1.0) * (1.0 + v) / (1.0 - v);
  }
  // Reduce by the period so sin stays accurate near large real parts.
  const double m = std::nearbyint(z.real());
  const Complex w = k_pi * Complex(z.real() - m, y);
  return std::cos(w) / std::sin(w);
}

Complex csc_pi_sq(Complex z) {
  const double y = z.imag();
  if (y > 18.0) {
    const Complex u = std::exp(Complex(0.0, kTwoPi) * z);
    const Complex d = u - 1.0;
    return -4.0 * u / (d * d);
  }
  if (y < -18.0) {
    const Complex v = std::exp(Complex(0.0, -kTwoPi) * z);
    const Complex d = v - 1.0;
    return -4.0 * v / (d * d);
  }
  const double m = std::nearbyint(z.real());
  const Complex s = std::sin(k_pi * Complex(z.real() - m, y));
  return 1.0 / (s * s);
}

Complex log_gamma(Complex z) {
  check_pole(z, "log_gamma");
  if (z.real() < 0.5)
    return k_log_pi - log_sin_pi(z) - log_gamma_right(1.0 - z);
  return log_gamma_right(z);
}

Complex digamma(Complex z) {
  check_pole(z, "digamma");
  if (z.real() < 0.5) return digamma(1.0 - z) - k_pi * cot_pi(z);
  Complex acc = 0.0;
  while (std::abs(z) < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const Complex z2 = z * z;
  Complex result = std::log(z) - 0.5 / z;
  Complex zp = z2;
  for (int k = 1; k <= 10; ++k) {
    result -= kBern[k - 1] / ((2.0 * k) * zp);
    zp *= z2;
  }
  return result + acc;
}

Complex trigamma(Complex z) {
  check_pole(z, "trigamma");
  if (z.real() < 0.5)
    return -trigamma(1.0 - z) + k_pi * k_pi * csc_pi_sq(z);
  Complex acc = 0.0;
  while (std::abs(z) < 12.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const Complex z2 = z * z;
  Complex result = 1.0 / z + 0.5 / z2;
  Complex zp = z * z2;
  for (int k = 1; k <= 10; ++k) {
    result += kBern[k - 1] / zp;
    zp *= z2;
  }
  return result + acc;
}

}  // namespace zetaphase
