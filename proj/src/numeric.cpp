#include "zetaphase/numeric.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "zetaphase/errors.hpp"

namespace zetaphase {
namespace {

// Kronrod-15 abscissae on [0, 1] side (symmetric), with the embedded
// Gauss-7 rule on the odd-index nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double result_k = kWgk[7] * fc;
  double result_g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  result_k *= h;
  result_g *= h;
  return {a, b, result_k, std::abs(result_k - result_g)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_depth) {
  if (a == b) return {0.0, 0.0, 0};
  QuadResult out;
  std::vector<std::pair<Panel, int>> stack;
  stack.push_back({gk15(f, a, b), 0});
  out.evaluations = 15;
  double done_value = 0.0;
  double done_error = 0.0;
  // Per-panel budget proportional to width keeps the total below abs_tol
  // no matter how unevenly the panels split.
  const double width = std::abs(b - a);
  while (!stack.empty()) {
    auto [panel, depth] = stack.back();
    stack.pop_back();
    const double share = abs_tol * std::abs(panel.b - panel.a) / width;
    if (panel.error <= share || panel.error <= 1e-300) {
      done_value += panel.value;
      done_error += panel.error;
      continue;
    }
    if (depth >= max_depth)
      throw quadrature_error("adaptive quadrature stalled before reaching tolerance");
    const double mid = 0.5 * (panel.a + panel.b);
    stack.push_back({gk15(f, panel.a, mid), depth + 1});
    stack.push_back({gk15(f, mid, panel.b), depth + 1});
    out.evaluations += 30;
  }
  out.value = done_value;
  out.error_estimate = done_error;
  return out;
}

RootResult bracketed_newton(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            double lo, double hi,
                            double x_tol, double f_tol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo < 0) == (fhi < 0))
    throw bracket_error("no sign change over the requested bracket");
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int it = 1; it <= max_iter; ++it) {
    if (std::abs(fx) <= f_tol && (hi - lo) <= 4 * x_tol) return {x, fx, it};
    // Shrink the bracket around the current sign change.
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    double x_next;
    const double d = df(x);
    if (d != 0.0) {
      x_next = x - fx / d;
      if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo + hi);
    } else {
      x_next = 0.5 * (lo + hi);
    }
    if (std::abs(x_next - x) <= x_tol) {
      x = x_next;
      fx = f(x);
      return {x, fx, it};
    }
    x = x_next;
    fx = f(x);
  }
  throw search_failure("safeguarded Newton did not converge");
}

double bisect(const std::function<double(double)>& f,
              double lo, double hi, double x_tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw bracket_error("no sign change over the requested bracket");
  for (int it = 0; it < max_iter && (hi - lo) > x_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace zetaphase
