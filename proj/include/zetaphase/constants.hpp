#pragma once

namespace zetaphase {

// Mathematical constants to 40 significant digits; doubles keep 53 bits.
// euler_gamma and stieltjes1 feed the closed-form cross-check of the
// Mittag-Leffler expansion constant in zeta_prime.cpp.
inline constexpr double k_pi          = 3.141592653589793238462643383279502884197;
inline constexpr double k_euler_gamma = 0.5772156649015328606065120900824024310422;
inline constexpr double k_stieltjes1  = -0.07281584548367672486058637587490131913774;
inline constexpr double k_log_pi      = 1.144729885849400174143427351353058711647;
inline constexpr double k_log_2pi     = 1.837877066409345483560659472811235279723;
inline constexpr double k_log_2       = 0.6931471805599453094172321214581765680755;

struct NamedConstants {
  double pi;
  double euler_gamma;
  double stieltjes1;
  double log_2pi;
};

inline NamedConstants constants() {
  return {k_pi, k_euler_gamma, k_stieltjes1, k_log_2pi};
}

}  // namespace zetaphase
