#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadrature.hpp"
#include "sivalley/coulomb.hpp"
#include "sivalley/errors.hpp"

using namespace sivalley;

TEST_CASE("orbital is normalised") {
  const GaussianOrbital phi{{0.3, -0.2, 0.1}, 1.7};
  // separable: each axis carries (2 pi s^2)^(-1/2) exp(-u^2 / 2 s^2) in |phi|^2
  const double s = phi.sigma;
  const double one_axis = quad::integrate(
      [&](double u) { return std::exp(-u * u / (2 * s * s)) / std::sqrt(2 * constants::pi * s * s); },
      -12 * s, 12 * s, 40);
  CHECK(one_axis == doctest::Approx(1.0).epsilon(1e-12));
  const Vec3 r{1.0, 0.5, -0.4};
  CHECK(phi.value(r) * phi.value(r) ==
        doctest::Approx(std::pow(2 * constants::pi * s * s, -1.5) *
                        std::exp(-(0.49 + 0.49 + 0.25) / (2 * s * s)))
            .epsilon(1e-12));
}

TEST_CASE("parity flags") {
  CoulombModel m;
  CHECK(m.d21() == 1);
  CHECK(m.d12() == 1);
  m.parity = ParityCase::opposite_preserved;
  CHECK(m.d21() == 1);
  CHECK(m.d12() == 0);
  m.parity = ParityCase::opposite_changed;
  CHECK(m.d21() == 0);
  CHECK(m.d12() == 1);
}

TEST_CASE("Yukawa kernel") {
  CHECK(yukawa(20.0, 10.0, 11.7) == doctest::Approx(1.43996448 * std::exp(-2.0) / (11.7 * 20.0)).epsilon(1e-15));
}

TEST_CASE("well separated narrow orbitals approach the point-charge value") {
  CoulombModel m;
  m.separation_nm = 20.0;
  m.samples = 200000;
  const GaussianOrbital phi{{0, 0, 0}, 0.05};
  const CoulombEstimate e = coulomb_matrix_element(phi, phi, m);
  const double ref = yukawa(20.0, m.screening_nm, m.relative_permittivity);
  CHECK(std::abs(e.value - ref) <= 3 * e.stderr_);
  CHECK(e.stderr_ < 0.01 * ref);
}

TEST_CASE("finite widths match the smeared Yukawa value") {
  // r1 - r2 is Gaussian about d with variance s^2 = 2 sigma^2 per axis:
  // <e^{-r/l}/r> = e^{s^2/2l^2}/(2d) [e^{-d/l} erfc((s^2/l - d)/(s sqrt2)) - e^{d/l} erfc((s^2/l + d)/(s sqrt2))]
  CoulombModel m;
  m.separation_nm = 20.0;
  m.samples = 400000;
  const double sigma = 0.3, d = 20.0, l = m.screening_nm;
  const double s = std::sqrt(2.0) * sigma;
  const double smeared = 1.43996448 / m.relative_permittivity * std::exp(s * s / (2 * l * l)) / (2 * d) *
                         (std::exp(-d / l) * std::erfc((s * s / l - d) / (s * std::sqrt(2.0))) -
                          std::exp(d / l) * std::erfc((s * s / l + d) / (s * std::sqrt(2.0))));
  const GaussianOrbital phi{{0, 0, 0}, sigma};
  const CoulombEstimate e = coulomb_matrix_element(phi, phi, m);
  CHECK(std::abs(e.value - smeared) <= 3 * e.stderr_);
  CHECK(smeared > yukawa(d, l, m.relative_permittivity));
}

TEST_CASE("identical orbitals on top of each other cancel") {
  CoulombModel m;
  m.separation_nm = 0.0;
  m.samples = 100000;
  const GaussianOrbital phi{{0, 0, 0}, 2.0};
  const CoulombEstimate e = coulomb_matrix_element(phi, phi, m);
  CHECK(std::abs(e.value) <= 3 * e.stderr_ + 1e-15);
  CHECK(std::isfinite(e.value));
}

TEST_CASE("overlapping orbitals stay finite and the direct term matches a radial oracle") {
  // direct term of two coincident Gaussians: |r1 - r2| is Maxwell distributed
  // with scale sqrt(2) s
  CoulombModel m;
  m.separation_nm = 0.0;
  m.parity = ParityCase::opposite_preserved;
  m.samples = 400000;
  const double s = 1.0;
  const GaussianOrbital phi{{0, 0, 0}, s};
  const CoulombEstimate e = coulomb_matrix_element(phi, phi, m);
  const double a = std::sqrt(2.0) * s;
  const double ref = quad::integrate(
      [&](double r) {
        const double pdf = std::sqrt(2.0 / constants::pi) * r * r / (a * a * a) * std::exp(-r * r / (2 * a * a));
        return pdf * yukawa(r, m.screening_nm, m.relative_permittivity);
      },
      1e-12, 12 * a, 200);
  CHECK(std::isfinite(e.value));
  CHECK(std::abs(e.value - ref) <= 3 * e.stderr_);
}

TEST_CASE("deterministic, thread independent, and 1/sqrt(N) error scaling") {
  CoulombModel m;
  m.samples = 100000;
  const GaussianOrbital phi{{0, 0, 0}, 3.0};
  const CoulombEstimate a = coulomb_matrix_element(phi, phi, m, 1);
  const CoulombEstimate b = coulomb_matrix_element(phi, phi, m, 4);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
  m.samples = 200000;
  const CoulombEstimate c = coulomb_matrix_element(phi, phi, m, 2);
  CHECK(c.stderr_ / a.stderr_ == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
  m.seed = 2;
  CHECK(coulomb_matrix_element(phi, phi, m).value != c.value);
}

TEST_CASE("argument checks") {
  CoulombModel m;
  m.samples = 100;
  const GaussianOrbital phi{{0, 0, 0}, 1.0};
  CHECK_THROWS_AS(coulomb_matrix_element(phi, phi, m), InvalidArgument);
  m.samples = 10000;
  CHECK_THROWS_AS(coulomb_matrix_element(phi, GaussianOrbital{{0, 0, 0}, 0.0}, m), InvalidArgument);
}

TEST_CASE("splitmix64 reference values") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(s) == 0x6E789E6AA1B965F4ULL);
}
