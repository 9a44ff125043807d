#include <cmath>
#include <vector>

#include "doctest.h"
#include "zetaphase/constants.hpp"
#include "zetaphase/errors.hpp"
#include "zetaphase/kappa.hpp"
#include "zetaphase/zeta.hpp"
#include "zetaphase/zeta_prime.hpp"

using namespace zetaphase;

namespace {

// Real zeros of the derivative, one per interval (-2n-2, -2n).
constexpr double kTrivial[7] = {
    -2.717262829204574101571, -4.936762108594947868879,
    -7.074597145007145734336, -9.170493162785828005353,
    -11.24121232537534351087, -13.29557456903252038473,
    -15.33872907364828182116};

// First seven nonreal zeros (reference digits to about 5e-11).
constexpr double kComplexRef[7][2] = {
    {2.4631618694, 23.2983204927}, {1.2864968222, 31.7082500831},
    {2.3075700637, 38.4899831730}, {1.3827636057, 42.2909645545},
    {0.9646856227, 48.8471599050}, {2.1016999009, 52.4321612451},
    {1.8959597624, 57.1347531990}};

}  // namespace

TEST_SUITE("zeta_prime") {

TEST_CASE("real zeros land on the frozen references") {
  const auto zs = find_trivial_zeros(7);
  REQUIRE(zs.size() == 7);
  for (int n = 1; n <= 7; ++n) {
    const ZetaPrimeZero& z = zs[n - 1];
    CHECK(z.kind == ZpZeroKind::trivial_zero);
    CHECK(z.index == n);
    CHECK(z.gamma == 0.0);
    CHECK(std::abs(z.beta - kTrivial[n - 1]) < 1e-8);
    CHECK(std::abs(zeta_jet(Complex(z.beta, 0.0)).d1) < 1e-8);
  }
}

TEST_CASE("deep real zeros stay in their intervals and drift as predicted") {
  const auto zs = find_trivial_zeros(300);
  REQUIRE(zs.size() == 300);
  for (const auto& z : zs) {
    CHECK(z.beta > -2.0 * z.index - 2.0);
    CHECK(z.beta < -2.0 * z.index);
  }
  const double c300 = zs[299].beta + 602.0;
  CHECK(std::abs(c300 * std::log(601.0 / (2.0 * k_pi)) - 1.0) < 0.25);
  CHECK_THROWS_AS(find_trivial_zeros(501), domain_violation);
  CHECK_THROWS_AS(find_trivial_zeros(0), domain_violation);
}

TEST_CASE("nonreal zeros match the reference table") {
  const auto zs = find_complex_zeros(60.0);
  REQUIRE(zs.size() == 7);
  for (int n = 1; n <= 7; ++n) {
    const ZetaPrimeZero& z = zs[n - 1];
    CHECK(z.kind == ZpZeroKind::complex_zero);
    CHECK(z.index == n);
    CHECK(std::abs(z.beta - kComplexRef[n - 1][0]) < 1e-7);
    CHECK(std::abs(z.gamma - kComplexRef[n - 1][1]) < 1e-7);
    CHECK(z.residual < 1e-7);
    CHECK(z.beta > 0.5);  // right of the critical line
  }
  CHECK_THROWS_AS(find_complex_zeros(501.0), domain_violation);
}

TEST_CASE("logarithmic-mean constants") {
  const MLConstants ml = ml_constant_a();
  CHECK(std::abs(ml.a - 0.1833413045720158087669) < 1e-10);
  CHECK(ml.big_a == 0.5 * k_log_2);
  CHECK(ml.b_check < 1e-10);
}

TEST_CASE("real-zero sum is even and spends its tail budget") {
  const FValue a = f_of(12.7, 300);
  const FValue b = f_of(-12.7, 300);
  CHECK(a.value == b.value);
  CHECK(a.tail_bound > 0.0);
  CHECK(a.tail_bound < 1e-2);
  // X/(X^2+t^2) at X = 2k+2.5.
  const double x = 2.0 * 300.0 + 2.5;
  CHECK(a.tail_bound == doctest::Approx(x / (x * x + 12.7 * 12.7)));
  CHECK_THROWS_AS(f_of(1.0, 100, 1e-6), insufficient_terms_error);
  CHECK_THROWS_AS(f_of(1.0, 99), domain_violation);
}

TEST_CASE("slope rebuilt from the zero catalogs") {
  const auto zeros = find_complex_zeros(120.0);
  for (double t : {12.0, 33.0, 48.5}) {
    const ReconstructedD1 rec = kappa_d1_reconstructed(t, zeros, 300);
    CHECK(std::abs(rec.value - kappa_d1(t)) <= rec.budget);
    CHECK(rec.budget < 0.05);
  }
  CHECK_THROWS_AS(kappa_d1_reconstructed(90.0, zeros, 300), domain_violation);
}

TEST_CASE("angle contributions") {
  ZetaPrimeZero z{ZpZeroKind::complex_zero, 1, 2.4631618694, 23.2983204927,
                  0.0};
  CHECK(std::abs(phi_angle(z.gamma, z) - 1.528690254049018509328) < 1e-9);
  ZetaPrimeZero on_line{ZpZeroKind::complex_zero, 1, 0.5, 23.3, 0.0};
  CHECK(phi_angle(10.0, on_line) == 0.0);
  ZetaPrimeZero triv{ZpZeroKind::trivial_zero, 1, -2.7, 0.0, 0.0};
  CHECK_THROWS_AS(phi_angle(10.0, triv), domain_violation);
}

TEST_CASE("accumulated angle diagnostic") {
  KappaAccumulator acc;
  const auto zeros = find_complex_zeros(120.0);
  const PhaseDiagnostic d = kappa_phase_diagnostic(acc, 50.0, zeros);
  CHECK(std::abs(d.lhs - k_pi * acc.kappa_of(50.0).kappa) < 1e-9);
  CHECK(std::abs(d.gap - (d.lhs - d.rhs)) < 1e-12);
  CHECK(std::abs(d.gap) < 25.0);
  CHECK_THROWS_AS(kappa_phase_diagnostic(acc, 90.0, zeros), domain_violation);
}

TEST_CASE("distance to the nearest zero ordinate") {
  std::vector<double> xis = {14.13472514173469379, 21.02203963877155499,
                             25.01085758014568876, 30.42487612585951321};
  ZetaPrimeZero z{ZpZeroKind::complex_zero, 1, 2.4631618694, 23.2983204927,
                  0.0};
  const GyCheck g = gy_distance_check(z, xis);
  CHECK(std::abs(g.dist - 1.712537087445688763) < 1e-9);
  CHECK(std::abs(g.bound - 2.662144689631651107) < 1e-9);
  CHECK(g.within);

  // Coverage guard: the catalog must surround the ordinate.
  std::vector<double> short_list = {30.42487612585951321};
  CHECK_THROWS_AS(gy_distance_check(z, short_list), domain_violation);
}

TEST_CASE("catalog split counts") {
  const auto zeros = find_complex_zeros(60.0);
  const PrimeSplitCounts s = count_prime_splits(60.0, zeros);
  CHECK(s.n_total == 7);
  CHECK(s.n_left == 0);
  CHECK(s.n_middle + s.n_right == 7);
  CHECK(s.berndt_ratio > 0.5);
  CHECK(s.berndt_ratio < 2.0);
}

}  // TEST_SUITE
