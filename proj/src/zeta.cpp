#include "zetaphase/zeta.hpp"

#include <cmath>

#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"

namespace zetaphase {
namespace {

constexpr double kReLo = -50.0;
constexpr double kReHi = 4.0;
constexpr double kImBox = 1000.0 + 1e-9;

// B_{2k} / (2k)! for k = 1..12.
constexpr double kEmCoeff[12] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 523069747200.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 155112100433309859840000.0,
    -236364091.0 / 1693824136731743669452800000.0};

// Euler-Maclaurin jet, reliable for Re s >= -0.5 in the box.
ZetaJet em_jet(Complex s) {
  const long N =
      std::max<long>(20, static_cast<long>(std::ceil(2.0 * std::abs(s.imag()))));
  const double LN = std::log(static_cast<double>(N));

  Complex A = 0.0, A1 = 0.0, A2 = 0.0;
  for (long n = 1; n < N; ++n) {
    const double L = std::log(static_cast<double>(n));
    const Complex w = std::exp(-s * L);
    A += w;
    A1 -= L * w;
    A2 += L * L * w;
  }

  const Complex sm1 = s - 1.0;
  const Complex NS = std::exp(-s * LN);                   // N^{-s}
  const Complex M = NS * static_cast<double>(N) / sm1;    // N^{1-s}/(s-1)
  const Complex M1 = -M * (LN + 1.0 / sm1);
  const Complex M2 =
      M * (LN * LN + 2.0 * LN / sm1 + 2.0 / (sm1 * sm1));
  const Complex H = 0.5 * NS;
  const Complex H1 = -LN * H;
  const Complex H2 = LN * LN * H;

  Complex f = A + M + H;
  Complex d1 = A1 + M1 + H1;
  Complex d2 = A2 + M2 + H2;

  // Bernoulli corrections: c_k * P_{2k-1}(s) * N^{-s-2k+1}, where
  // P_m(s) = s(s+1)...(s+m-1) is carried as a (value, d1, d2) jet.
  Complex p = 1.0, p1 = 0.0, p2 = 0.0;
  Complex E = NS / static_cast<double>(N);
  const double invN2 = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
  int j = 0;
  for (int k = 1; k <= 12; ++k) {
    const int hi = 2 * k - 1;
    for (; j < hi; ++j) {
      const Complex fac = s + static_cast<double>(j);
      p2 = p2 * fac + 2.0 * p1;
      p1 = p1 * fac + p;
      p = p * fac;
    }
    const double c = kEmCoeff[k - 1];
    f += c * p * E;
    d1 += c * (p1 - LN * p) * E;
    d2 += c * (p2 - 2.0 * LN * p1 + LN * LN * p) * E;
    E *= invN2;
  }
  return {s, f, d1, d2};
}

struct ChiJet {
  Complex chi, d1, d2;
};

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) with two derivatives.
// The exponential route is used once |Im s| is large enough that sin(pi s/2)
// cannot vanish; the product route handles the strip near the real axis,
// including the sin zeros at negative even integers.
ChiJet chi_jet(Complex s) {
  const Complex w = 1.0 - s;
  if (std::abs(s.imag()) >= 5.0) {
    const Complex logchi = s * k_log_2 + (s - 1.0) * k_log_pi +
                           log_sin_pi(0.5 * s) + log_gamma(w);
    const Complex chi = std::exp(logchi);
    const Complex g1 = k_log_2 + k_log_pi + 0.5 * k_pi * cot_pi(0.5 * s) -
                       digamma(w);
    const Complex g2 =
        -0.25 * k_pi * k_pi * csc_pi_sq(0.5 * s) + trigamma(w);
    return {chi, chi * g1, chi * (g2 + g1 * g1)};
  }
  const Complex W =
      std::exp(s * k_log_2 + (s - 1.0) * k_log_pi + log_gamma(w));
  const Complex sig = std::sin(0.5 * k_pi * s);
  const Complex sig1 = 0.5 * k_pi * std::cos(0.5 * k_pi * s);
  const Complex sig2 = -0.25 * k_pi * k_pi * sig;
  const Complex beta = k_log_2pi - digamma(w);
  const Complex beta1 = trigamma(w);
  return {W * sig, W * (beta * sig + sig1),
          W * ((beta * beta + beta1) * sig + 2.0 * beta * sig1 + sig2)};
}

}  // namespace

ZetaJet zeta_jet_em(Complex s) {
  if (!(s.real() >= -0.5 && std::abs(s.imag()) <= kImBox))
    throw box_error("zeta_jet_em: needs Re s >= -0.5, |Im s| <= 1000");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-9)
    throw pole_error("zeta_jet_em: pole at s = 1");
  return em_jet(s);
}

ZetaJet zeta_jet(Complex s) {
  if (!(s.real() >= kReLo && s.real() <= kReHi &&
        std::abs(s.imag()) <= kImBox))
    throw box_error("zeta_jet: point outside the evaluation box");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-9)
    throw pole_error("zeta_jet: pole at s = 1");
  if (s.real() >= -0.5) return em_jet(s);

  // Functional equation: zeta(s) = chi(s) zeta(1-s).
  const Complex w = 1.0 - s;
  const ZetaJet jw = em_jet(w);
  const ChiJet c = chi_jet(s);
  const Complex f = c.chi * jw.f;
  const Complex d1 = c.d1 * jw.f - c.chi * jw.d1;
  const Complex d2 = c.d2 * jw.f - 2.0 * c.d1 * jw.d1 + c.chi * jw.d2;
  return {s, f, d1, d2};
}

ZTriple z_triple_from(const ThetaTriple& th, const ZetaJet& jet) {
  const Complex rot = std::exp(Complex(0.0, th.theta));
  const Complex rf = rot * jet.f;
  const Complex rd1 = rot * jet.d1;
  const Complex rd2 = rot * jet.d2;
  const double z = rf.real();
  const double z1 = -rd1.imag();
  const double z2 = th.d1 * th.d1 * z - rd2.real();
  return {th.t, z, z1, z2, std::abs(rf.imag()),
          std::abs(rd1.real() + th.d1 * z)};
}

ZTriple z_triple(double t) {
  const ThetaTriple th = theta_series(t);
  const ZetaJet jet = zeta_jet(Complex(0.5, t));
  return z_triple_from(th, jet);
}

}  // namespace zetaphase
