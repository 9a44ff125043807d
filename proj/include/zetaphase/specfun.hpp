#pragma once

#include <complex>

namespace zetaphase {

using Complex = std::complex<double>;

// Principal-branch log-gamma, continuous everywhere off the nonpositive
// real axis (agrees with the analytic continuation, not with log(gamma)).
// Throws pole_error at nonpositive integers. Target accuracy 1e-12
// relative over |Im s| <= 2100, which covers every caller in this library.
Complex log_gamma(Complex s);

// Digamma and trigamma with the same pole contract.
Complex digamma(Complex s);
Complex trigamma(Complex s);

// cot(pi z) and 1/sin^2(pi z), stable for large |Im z| where the naive
// quotient overflows. Shared by the reflection formulas here and in the
// zeta evaluator.
Complex cot_pi(Complex z);
Complex csc_pi_sq(Complex z);

// log(sin(pi z)) on the principal branch used by the gamma reflection:
// analytic off the real axis, continuous onto it from either side away
// from integers.
Complex log_sin_pi(Complex z);

}  // namespace zetaphase
