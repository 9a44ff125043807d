#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracle.hpp"
#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/specfun.hpp"

using namespace zetaphase;

TEST_SUITE("specfun") {

TEST_CASE("hard-coded constants match the reference computations") {
  CHECK(std::abs((double)(oracle::euler_gamma_harmonic() - k_euler_gamma)) < 1e-17);
  CHECK(std::abs((double)(oracle::euler_gamma_series() - k_euler_gamma)) < 1e-17);
  // The Euler-Maclaurin oracle sums 1e5 long-double terms, so allow a few
  // units of accumulated rounding on top of the literal's half-ulp.
  CHECK(std::abs((double)(oracle::stieltjes1() - k_stieltjes1)) < 5e-16);
  CHECK(std::abs(k_log_pi - std::log(k_pi)) < 5e-16);
  // libm's log is only correct to a unit in the last place.
  CHECK(std::abs(k_log_2pi - std::log(2.0 * k_pi)) < 5e-16);
  CHECK(std::abs(k_log_2 - std::log(2.0)) < 1e-16);
}

TEST_CASE("log gamma agrees with the long-double oracle on the real axis") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 11.9, 12.1, 50.0, 200.0}) {
    const Complex got = log_gamma(Complex(x, 0.0));
    const double want = (double)oracle::log_gamma((long double)x);
    CHECK(std::abs(got.real() - want) <= 1e-12 * (1.0 + std::abs(want)));
    CHECK(std::abs(got.imag()) <= 1e-13);
  }
  CHECK(std::abs(log_gamma(Complex(0.5, 0.0)).real() - 0.5 * std::log(k_pi)) <
        1e-14);
}

TEST_CASE("log gamma at frozen complex points") {
  const Complex a = log_gamma(Complex(0.25, 3.0));
  CHECK(std::abs(a.real() - (-4.067219409137411985569)) < 1e-13);
  CHECK(std::abs(a.imag() - (-0.09338431339316938304969)) < 1e-13);

  const Complex b = log_gamma(Complex(0.25, 350.0));
  CHECK(std::abs(b.real() - (-550.3242590698544172794)) < 1e-10);
  CHECK(std::abs(b.imag() - 1699.88393474942035814) < 1e-10);

  const Complex c = log_gamma(Complex(-5.3, 2.0));
  CHECK(std::abs(c.real() - (-9.415109381889444950443)) < 1e-12);
  CHECK(std::abs(c.imag() - (-14.66502327230063954096)) < 1e-12);
}

TEST_CASE("gamma recurrence and reflection") {
  for (Complex z : {Complex(0.3, 0.7), Complex(-2.6, 1.3), Complex(5.5, -4.0),
                    Complex(-0.25, 0.0)}) {
    const Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
    CHECK(std::abs(ratio - z) <= 1e-12 * (1.0 + std::abs(z)));
  }
  for (Complex z : {Complex(0.3, 0.4), Complex(-1.7, 2.2), Complex(0.9, -6.0)}) {
    const Complex lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
    const Complex rhs = k_pi / std::sin(k_pi * z);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs));
  }
}

TEST_CASE("digamma at frozen points and pinned special values") {
  const Complex a = digamma(Complex(0.25, 5.0));
  CHECK(std::abs(a.real() - 1.609020512714330455422) < 1e-13);
  CHECK(std::abs(a.imag() - 1.620922939944299833179) < 1e-13);

  const Complex b = digamma(Complex(-3.7, 0.4));
  CHECK(std::abs(b.real() - 0.983772459075106159771) < 1e-12);
  CHECK(std::abs(b.imag() - 2.859210076058179543853) < 1e-12);

  CHECK(std::abs(digamma(Complex(0.5, 0.0)).real() -
                 (-1.963510026021423479441)) < 1e-13);
  CHECK(std::abs(digamma(Complex(1.0, 0.0)).real() - (-k_euler_gamma)) < 1e-14);

  for (double x : {0.7, 3.2, 11.5, 40.0}) {
    const double want = (double)oracle::digamma((long double)x);
    CHECK(std::abs(digamma(Complex(x, 0.0)).real() - want) < 1e-13);
  }
}

TEST_CASE("digamma recurrence and reflection") {
  for (Complex z : {Complex(0.4, 1.1), Complex(-2.2, 0.6)}) {
    const Complex d = digamma(z + 1.0) - digamma(z) - 1.0 / z;
    CHECK(std::abs(d) < 1e-12);
    const Complex r = digamma(1.0 - z) - digamma(z) - k_pi * cot_pi(z);
    CHECK(std::abs(r) < 1e-12);
  }
}

TEST_CASE("trigamma at frozen points and against identities") {
  const Complex a = trigamma(Complex(0.25, 5.0));
  CHECK(std::abs(a.real() - (-0.010076634743093015627)) < 1e-13);
  CHECK(std::abs(a.imag() - (-0.2001672546812546461223)) < 1e-13);

  const Complex b = trigamma(Complex(-3.7, 0.4));
  CHECK(std::abs(b.real() - 1.120045755934281767251) < 1e-11);
  CHECK(std::abs(b.imag() - (-2.728402867544732965262)) < 1e-11);

  CHECK(std::abs(trigamma(Complex(1.0, 0.0)).real() - k_pi * k_pi / 6.0) <
        1e-13);
  CHECK(std::abs(trigamma(Complex(0.5, 0.0)).real() - k_pi * k_pi / 2.0) <
        1e-12);

  for (Complex z : {Complex(0.4, 1.1), Complex(3.3, -2.0)}) {
    const Complex d = trigamma(z + 1.0) - trigamma(z) + 1.0 / (z * z);
    CHECK(std::abs(d) < 1e-12);
    const Complex r =
        trigamma(z) + trigamma(1.0 - z) - k_pi * k_pi * csc_pi_sq(z);
    CHECK(std::abs(r) < 1e-11);
  }
}

TEST_CASE("pole arguments are rejected") {
  CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), pole_error);
  CHECK_THROWS_AS(log_gamma(Complex(-2.0, 0.0)), pole_error);
  CHECK_THROWS_AS(digamma(Complex(-3.0, 0.0)), pole_error);
  CHECK_THROWS_AS(trigamma(Complex(-1.0, 0.0)), pole_error);
}

TEST_CASE("half-period cotangent and cosecant forms") {
  for (Complex z : {Complex(0.3, 0.2), Complex(-4.6, -1.1), Complex(12.2, 0.7)}) {
    const Complex w = k_pi * z;
    CHECK(std::abs(cot_pi(z) - std::cos(w) / std::sin(w)) < 1e-12);
    const Complex s = std::sin(w);
    CHECK(std::abs(csc_pi_sq(z) - 1.0 / (s * s)) < 1e-11);
  }
  // Saturated tails far from the real axis.
  CHECK(std::abs(cot_pi(Complex(0.3, 30.0)) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(cot_pi(Complex(0.3, -30.0)) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(csc_pi_sq(Complex(0.7, 40.0))) < 1e-15);
}

TEST_CASE("log sine tracks the principal logarithm near the axis") {
  // Principal values hold on the primary strip 0 < Re z < 1; outside it the
  // function is the analytic continuation the reflection formula needs, so
  // only the exponential can be compared there.
  for (Complex z : {Complex(0.3, 0.4), Complex(0.8, -1.2)}) {
    const Complex got = log_sin_pi(z);
    const Complex want = std::log(std::sin(k_pi * z));
    CHECK(std::abs(got - want) < 1e-12);
  }
  for (Complex z : {Complex(-2.6, 2.0), Complex(12.2, 0.7)}) {
    const Complex got = std::exp(log_sin_pi(z));
    const Complex want = std::sin(k_pi * z);
    CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
  }
  // High in the plane the direct sine would overflow; |sin| grows like
  // exp(pi y) there, so the log gains pi per unit height.
  const Complex base = log_sin_pi(Complex(0.4, 20.0));
  const Complex up = log_sin_pi(Complex(0.4, 21.0));
  CHECK(std::abs((up - base).real() - k_pi) < 1e-12);
}

}  // TEST_SUITE
