#pragma once

#include <functional>

namespace zetaphase {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b] to absolute tolerance abs_tol.
// Throws quadrature_error if the panel stack exhausts max_depth bisections
// without meeting the tolerance.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_depth = 48);

struct RootResult {
  double x = 0.0;
  double f_at_x = 0.0;
  int iterations = 0;
};

// Newton iteration safeguarded by a sign-change bracket [lo, hi]; any step
// that leaves the bracket falls back to bisection. Requires f(lo), f(hi)
// of opposite sign, else throws bracket_error.
RootResult bracketed_newton(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            double lo, double hi,
                            double x_tol, double f_tol, int max_iter = 120);

// Plain bisection to x_tol; same bracket requirement as above.
double bisect(const std::function<double(double)>& f,
              double lo, double hi, double x_tol, int max_iter = 200);

}  // namespace zetaphase
