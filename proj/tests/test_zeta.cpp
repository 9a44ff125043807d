#include <cmath>
#include <complex>

#include "doctest.h"
#include "zetaphase/errors.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/zeta.hpp"

using namespace zetaphase;

namespace {

struct FrozenJet {
  Complex s, f, d1, d2;
};

const FrozenJet kJets[] = {
    {{0.5, 10.0},
     {1.544895220296752766921, -0.1153364652712733754366},
     {-0.3609073730915718165638, -0.003593440735631065623471},
     {0.2268241175654549288572, 0.07498464031635358241591}},
    {{2.0, 0.0},
     {1.644934066848226436472, 0.0},
     {-0.9375482543158437537026, 0.0},
     {1.989280234298901023421, 0.0}},
    {{0.5, 100.0},
     {2.692619885681324090476, -0.02038602960259816177073},
     {-3.727312709644648238655, -0.1942287025737432333755},
     {9.554155226630616065046, 0.5567079426041645786272}},
    {{-5.3, 2.0},
     {-0.02577818841249507123348, -0.01773297516761354040374},
     {-0.02248290479732641406481, 0.0311090407230975436142},
     {0.03514408072904378803368, 0.02399608798359316247108}},
    {{2.0, 33.3},
     {0.8325351272069958104911, 0.2607893715279115423341},
     {0.1842360873675063457824, -0.1719814169885240031233},
     {-0.2453536361186099515681, 0.08633521230056427284292}},
    {{0.25, 700.0},
     {-1.797767040111282898996, -1.620088226829946445413},
     {11.33097385518548263188, 4.226261398435574290556},
     {-56.61121414552179733967, -15.3881515836902016037}},
};

void check_close(Complex got, Complex want, double tol) {
  CHECK(std::abs(got.real() - want.real()) <= tol);
  CHECK(std::abs(got.imag() - want.imag()) <= tol);
}

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("jets at frozen points") {
  for (const FrozenJet& j : kJets) {
    const ZetaJet z = zeta_jet(j.s);
    // Each harmonic term carries phase Im(s) ln k, and rounding that phase
    // product costs about an ulp of its ~|Im s| radians, so the attainable
    // accuracy degrades linearly with height.
    const double jitter = 1.0 + std::abs(j.s.imag()) / 100.0;
    check_close(z.f, j.f, 5e-13 * jitter * (1.0 + std::abs(j.f)));
    check_close(z.d1, j.d1, 5e-13 * jitter * (1.0 + std::abs(j.d1)));
    check_close(z.d2, j.d2, 5e-13 * jitter * (1.0 + std::abs(j.d2)));
  }
}

TEST_CASE("values on the real line") {
  const ZetaJet h = zeta_jet(Complex(0.5, 0.0));
  CHECK(std::abs(h.f.real() - (-1.460354508809586812889)) < 1e-13);
  CHECK(std::abs(h.d1.real() - (-3.922646139209151727472)) < 1e-12);
  CHECK(std::abs(h.d2.real() - (-16.00835701392866142269)) < 5e-12);

  const ZetaJet o = zeta_jet(Complex(0.0, 0.0));
  CHECK(std::abs(o.d1.real() - (-0.9189385332046727417803)) < 1e-13);
  CHECK(std::abs(o.d2.real() - (-2.00635645590858485121)) < 1e-12);
}

TEST_CASE("pole and box guards") {
  CHECK_THROWS_AS(zeta_jet(Complex(1.0, 0.0)), pole_error);
  CHECK_THROWS_AS(zeta_jet(Complex(1.0, 5e-11)), pole_error);
  CHECK_THROWS_AS(zeta_jet(Complex(-50.2, 0.5)), box_error);
  CHECK_THROWS_AS(zeta_jet(Complex(0.5, 1000.2)), box_error);
  CHECK_NOTHROW(zeta_jet(Complex(0.5, 1000.0)));
}

TEST_CASE("route seam is continuous") {
  // The reflection route takes over left of Re = -0.5.
  const ZetaJet a = zeta_jet(Complex(-0.5 + 1e-9, 2.2));
  const ZetaJet b = zeta_jet(Complex(-0.5 - 1e-9, 2.2));
  CHECK(std::abs(a.f - b.f) < 1e-8);
  CHECK(std::abs(a.d1 - b.d1) < 1e-7);
  CHECK(std::abs(a.d2 - b.d2) < 1e-7);
}

TEST_CASE("trivial zeros of zeta come out exactly from the reflection") {
  for (double s0 : {-2.0, -4.0, -12.0}) {
    const ZetaJet z = zeta_jet(Complex(s0, 0.0));
    CHECK(std::abs(z.f) < 1e-14);
    CHECK(std::abs(z.d1) > 1e-5);  // simple zeros
  }
}

TEST_CASE("direct series helper matches the dispatching front end") {
  for (Complex s : {Complex(0.5, 10.0), Complex(2.0, 33.3), Complex(-0.3, 7.0)}) {
    const ZetaJet a = zeta_jet(s);
    const ZetaJet b = zeta_jet_em(s);
    CHECK(std::abs(a.f - b.f) < 1e-12);
    CHECK(std::abs(a.d1 - b.d1) < 1e-12);
    CHECK(std::abs(a.d2 - b.d2) < 1e-12);
  }
}

TEST_CASE("rotated boundary values at frozen points") {
  struct FrozenZ {
    double t, z, d1, d2;
  };
  constexpr FrozenZ kZ[] = {
      {5.0, -0.7388634282752647644, -0.1466833735294819890, -0.03979647600125127786},
      {17.5, 2.301845755335056883, 0.1996602416776039469, -0.4992448610579190422},
      {50.0, -0.3407350059550249828, -1.577058195260867497, -0.4682460827135799715},
      {100.0, 2.692697056664463475, 0.2224420948783092225, -4.394573433880425432},
  };
  for (const FrozenZ& r : kZ) {
    const ZTriple z = z_triple(r.t);
    CHECK(std::abs(z.z - r.z) <= 1e-12);
    CHECK(std::abs(z.d1 - r.d1) <= 1e-12);
    CHECK(std::abs(z.d2 - r.d2) <= 5e-12);
    CHECK(z.identity_residual < 1e-13);
    CHECK(z.d1_identity_residual < 1e-12);
  }
}

TEST_CASE("boundary values at the origin") {
  const ZTriple z0 = z_triple(0.0);
  CHECK(std::abs(z0.z - (-1.460354508809586812889)) < 1e-13);
  // The rotation is trivial at t = 0, so Z'(0) picks up -Im zeta'(1/2) = 0
  // and theta'(0) Z(0) equals -zeta'(1/2).
  CHECK(std::abs(z0.d1) < 1e-13);
  const double lhs = theta_series(0.0).d1 * z0.z;
  CHECK(std::abs(lhs - 3.922646139209151727472) < 1e-12);
}

TEST_CASE("evenness of the boundary function") {
  for (double t : {0.8, 14.0, 33.3}) {
    const ZTriple p = z_triple(t);
    const ZTriple m = z_triple(-t);
    CHECK(std::abs(p.z - m.z) < 1e-12);
    CHECK(std::abs(p.d1 + m.d1) < 1e-12);
    CHECK(std::abs(p.d2 - m.d2) < 5e-12);
  }
}

}  // TEST_SUITE
