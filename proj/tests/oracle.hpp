// Slow long-double reference implementations, independent of the library
// code paths, used to pin the real-axis special functions and the hard-coded
// constants. Everything here favors clarity over speed.
#pragma once

#include <cmath>

namespace oracle {

// B_2 .. B_18 as exact fractions.
inline constexpr long double kB[9] = {
    1.0L / 6.0L,       -1.0L / 30.0L,     1.0L / 42.0L,
    -1.0L / 30.0L,     5.0L / 66.0L,      -691.0L / 2730.0L,
    7.0L / 6.0L,       -3617.0L / 510.0L, 43867.0L / 798.0L};

// Stirling with argument shift to x >= 24; valid for x > 0.
inline long double log_gamma(long double x) {
  long double shift = 0.0L;
  while (x < 24.0L) {
    shift -= std::log(x);
    x += 1.0L;
  }
  const long double half_log_2pi = 0.91893853320467274178032973640562L;
  long double s = (x - 0.5L) * std::log(x) - x + half_log_2pi;
  long double xp = x;
  const long double x2 = x * x;
  for (int k = 1; k <= 9; ++k) {
    s += kB[k - 1] / ((2.0L * k) * (2.0L * k - 1.0L) * xp);
    xp *= x2;
  }
  return s + shift;
}

inline long double digamma(long double x) {
  long double shift = 0.0L;
  while (x < 24.0L) {
    shift -= 1.0L / x;
    x += 1.0L;
  }
  long double s = std::log(x) - 0.5L / x;
  long double xp = x * x;
  const long double x2 = x * x;
  for (int k = 1; k <= 9; ++k) {
    s -= kB[k - 1] / ((2.0L * k) * xp);
    xp *= x2;
  }
  return s + shift;
}

// Euler's constant from the harmonic numbers with tail corrections.
inline long double euler_gamma_harmonic() {
  const int n = 200;
  long double h = 0.0L;
  for (int k = 1; k <= n; ++k) h += 1.0L / k;
  const long double x = n;
  long double s = h - std::log(x) - 0.5L / x;
  long double xp = x * x;
  const long double x2 = x * x;
  for (int k = 1; k <= 6; ++k) {
    s += kB[k - 1] / ((2.0L * k) * xp);
    xp *= x2;
  }
  return s;
}

// Euler's constant a second way: 1 - sum_{k>=2} (zeta(k)-1)/k, with each
// zeta(k)-1 summed directly plus an Euler-Maclaurin tail.
inline long double euler_gamma_series() {
  long double acc = 1.0L;
  const int m_cut = 400;
  for (int k = 2; k <= 75; ++k) {
    long double zk = 0.0L;
    for (int m = m_cut; m >= 2; --m)
      zk += std::pow((long double)m, (long double)-k);
    const long double mm = m_cut;
    const long double kk = k;
    const long double tail =
        std::pow(mm, 1.0L - kk) / (kk - 1.0L) -
        0.5L * std::pow(mm, -kk) + (kk / 12.0L) * std::pow(mm, -kk - 1.0L) -
        (kk * (kk + 1.0L) * (kk + 2.0L) / 720.0L) * std::pow(mm, -kk - 3.0L);
    acc -= (zk + tail) / k;
  }
  return acc;
}

// First generalized Euler constant: lim sum_{k<=n} ln(k)/k - ln(n)^2/2.
inline long double stieltjes1() {
  const long n = 100000;
  long double s = 0.0L;
  for (long k = 2; k <= n; ++k) {
    const long double x = k;
    s += std::log(x) / x;
  }
  const long double x = n;
  const long double ln = std::log(x);
  s -= 0.5L * ln * ln;
  s -= 0.5L * ln / x;                            // half-sample
  s -= (1.0L - ln) / (x * x) / 12.0L;            // f'/12
  s += (11.0L - 6.0L * ln) / (x * x * x * x) / 720.0L;  // f'''/720
  return s;
}

}  // namespace oracle
