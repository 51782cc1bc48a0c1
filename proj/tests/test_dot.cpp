#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "sivalley/dot.hpp"
#include "sivalley/errors.hpp"

using namespace sivalley;
using cd = std::complex<double>;

namespace {

const double K0 = 0.85 * 2.0 * constants::pi / 0.543;

DotSpec hard_wall() {
  DotSpec s;
  s.barrier = BarrierMode::hard_wall;
  return s;
}

double box_energy(const Valley& v, const Vec3& L, const std::array<int, 3>& n) {
  double e = 0.0;
  for (int a = 0; a < 3; ++a) {
    const double k = n[a] * constants::pi / L[a];
    e += constants::hbar2_over_2m0 * k * k / v.mass[a];
  }
  return e;
}

// Piecewise composite rule on [-B/2, B/2] with breakpoints at the dot walls.
std::vector<std::pair<double, double>> axis_nodes(double box, double interior, double period_nm) {
  std::vector<double> cuts = {-0.5 * box, -0.5 * interior, 0.5 * interior, 0.5 * box};
  std::vector<std::pair<double, double>> nodes;
  const quad::Rule r = quad::gauss_legendre(20);
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s], b = cuts[s + 1];
    if (b - a <= 0.0) continue;
    const int panels = std::max(2, static_cast<int>(std::ceil(2.0 * (b - a) / period_nm)));
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
      for (int i = 0; i < 20; ++i) nodes.push_back({a + h * (p + 0.5 + 0.5 * r.x[i]), 0.5 * h * r.w[i]});
  }
  return nodes;
}

// <m|d^dm  exp(-i q z) V(r)  d^dn|n> by brute force in 3D, V from total_potential.
cd brute_kernel(const DotSpec& spec, const BasisSet& basis, double qz, int m, int n, int dm_z, int dn_z) {
  const auto mm = basis.modes_of(m), nn = basis.modes_of(n);
  const Vec3 box = spec.box_lengths();
  std::array<std::vector<std::pair<double, double>>, 3> nodes;
  for (int a = 0; a < 3; ++a) {
    const double k = basis.axes[a].wavenumber(basis.axes[a].modes);
    const double fastest = 2.0 * k + (a == 2 ? std::abs(qz) : 0.0);
    nodes[a] = axis_nodes(box[a], spec.dims_nm[a], 2.0 * constants::pi / fastest);
  }
  cd sum = 0.0;
  for (const auto& [x, wx] : nodes[0]) {
    const double fx = basis.axes[0].value(mm[0] + 1, x) * basis.axes[0].value(nn[0] + 1, x);
    if (fx == 0.0) continue;
    for (const auto& [y, wy] : nodes[1]) {
      const double fy = basis.axes[1].value(mm[1] + 1, y) * basis.axes[1].value(nn[1] + 1, y);
      for (const auto& [z, wz] : nodes[2]) {
        const auto& Z = basis.axes[2];
        const double gm = dm_z ? Z.derivative(mm[2] + 1, z) : Z.value(mm[2] + 1, z);
        const double gn = dn_z ? Z.derivative(nn[2] + 1, z) : Z.value(nn[2] + 1, z);
        const double V = total_potential({x, y, z}, spec);
        sum += wx * wy * wz * fx * fy * gm * gn * V * std::exp(cd(0.0, -qz * z));
      }
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("total potential") {
  DotSpec s;
  s.field_V_per_nm = 400e-4;
  CHECK(total_potential({0, 0, 0}, s) == 0.0);
  CHECK(total_potential({0, 0, 2.0}, s) == doctest::Approx(0.08).epsilon(1e-14));
  s.field_V_per_nm = 0.0;
  CHECK(total_potential({0, 0, 3.5}, s) == 3.1);
  CHECK_THROWS_AS(total_potential({0, 0, 5.01}, s), InvalidArgument);
  CHECK_THROWS_AS(total_potential({0, 0, 3.01}, hard_wall()), InvalidArgument);
}

TEST_CASE("spec validation") {
  DotSpec s;
  s.dims_nm[1] = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.barrier_eV = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = hard_wall();
  s.barrier_eV = 0.0;
  CHECK_NOTHROW(s.validate());
  CHECK(s.box_lengths() == s.dims_nm);
  s.B_tesla = -1.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
}

TEST_CASE("flat index is lexicographic with n_z fastest") {
  const BasisSet b = BasisSet::build(hard_wall(), {3, 4, 5});
  int expected = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 5; ++k) {
        CHECK(b.flat_index(i, j, k) == expected);
        CHECK(b.modes_of(expected) == std::array<int, 3>{i, j, k});
        ++expected;
      }
  CHECK(b.size() == 60);
  CHECK_THROWS_AS(BasisSet::build(hard_wall(), {0, 4, 5}), InvalidArgument);
}

TEST_CASE("kinetic matrix is the analytic box spectrum") {
  const auto vs = valley_set();
  const DotSpec s = hard_wall();
  const BasisSet b = BasisSet::build(s, {8, 10, 12});
  const Eigen::MatrixXd T5 = kinetic_matrix(vs[4], b);
  CHECK(std::abs(T5(0, 0) * 1e3 - 56.08) <= 0.01);
  CHECK(std::abs(kinetic_matrix(vs[0], b)(0, 0) * 1e3 - 75.14) <= 0.01);
  CHECK(T5(0, 0) == doctest::Approx(box_energy(vs[4], s.dims_nm, {1, 1, 1})).epsilon(1e-14));
  const int f = b.flat_index(2, 4, 7);
  CHECK(T5(f, f) == doctest::Approx(box_energy(vs[4], s.dims_nm, {3, 5, 8})).epsilon(1e-14));
  Eigen::MatrixXd off = T5;
  off.diagonal().setZero();
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("magnetic matrix") {
  const auto vs = valley_set();
  const DotSpec s = hard_wall();
  const BasisSet b = BasisSet::build(s, {4, 5, 3});
  CHECK(magnetic_matrix(0.0, vs[4], b).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(magnetic_matrix(-1.0, vs[4], b), InvalidArgument);

  const double B = 1.5;
  const Eigen::MatrixXcd H = magnetic_matrix(B, vs[4], b);
  CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * H.cwiseAbs().maxCoeff());

  // diamagnetic diagonal of (1,1,1) from quadrature moments and SI constants
  const double Lx = s.dims_nm[0], Ly = s.dims_nm[1];
  const auto x2 = oracle::axis(b.axes[0], 1, 1, 0, 0, 2, 0.0, -Lx / 2, Lx / 2).value.real();
  const auto y2 = oracle::axis(b.axes[1], 1, 1, 0, 0, 2, 0.0, -Ly / 2, Ly / 2).value.real();
  const double e = 1.602176634e-19, m0 = 9.1093837015e-31;
  const double pref_si = e * e * B * B / (8.0 * m0) / e * 1e-18;  // eV / nm^2
  const double expected = pref_si * (x2 / vs[4].mass[1] + y2 / vs[4].mass[0]);
  CHECK(H(0, 0).real() == doctest::Approx(expected).epsilon(1e-5));
  const double mu = constants::bohr_magneton_eV_per_T * B;
  const double pref = mu * mu / (4.0 * constants::hbar2_over_2m0);
  CHECK(H(0, 0).real() == doctest::Approx(pref * (x2 / vs[4].mass[1] + y2 / vs[4].mass[0])).epsilon(1e-10));

  // paramagnetic entry <(1,1,1)| . |(2,2,1)> as printed: -i mu/mx y d/dx - i mu/my x d/dy
  const int m = b.flat_index(0, 0, 0), n = b.flat_index(1, 1, 0);
  const double dx = oracle::axis(b.axes[0], 1, 2, 0, 1, 0, 0.0, -Lx / 2, Lx / 2).value.real();
  const double yy = oracle::axis(b.axes[1], 1, 2, 0, 0, 1, 0.0, -Ly / 2, Ly / 2).value.real();
  const double xx = oracle::axis(b.axes[0], 1, 2, 0, 0, 1, 0.0, -Lx / 2, Lx / 2).value.real();
  const double dy = oracle::axis(b.axes[1], 1, 2, 0, 1, 0, 0.0, -Ly / 2, Ly / 2).value.real();
  const double para = -(mu / vs[4].mass[0]) * yy * dx - (mu / vs[4].mass[1]) * xx * dy;
  CHECK(H(m, n).imag() == doctest::Approx(para).epsilon(1e-10));
  const Eigen::MatrixXcd Ht = magnetic_matrix(B, vs[4], b, MagneticGauge::textbook);
  const double para_t = (mu / vs[4].mass[0]) * yy * dx - (mu / vs[4].mass[1]) * xx * dy;
  CHECK(Ht(m, n).imag() == doctest::Approx(para_t).epsilon(1e-10));
}

TEST_CASE("potential matrix") {
  DotSpec s = hard_wall();
  const BasisSet b = BasisSet::build(s, {3, 3, 6});
  CHECK(potential_matrix(s, b).cwiseAbs().maxCoeff() == 0.0);
  s.field_V_per_nm = 400e-4;
  const Eigen::MatrixXd V = potential_matrix(s, b);
  CHECK((V - V.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(V.diagonal().cwiseAbs().maxCoeff() < 1e-15);
  const double L = s.dims_nm[2];
  CHECK(V(0, 1) == doctest::Approx(-16.0 / (9.0 * constants::pi * constants::pi) * s.field_V_per_nm * L).epsilon(1e-12));

  DotSpec f;
  f.field_V_per_nm = 250e-4;
  const BasisSet bf = BasisSet::build(f, {3, 3, 4});
  const Eigen::MatrixXd Vf = potential_matrix(f, bf);
  CHECK((Vf - Vf.transpose()).cwiseAbs().maxCoeff() == 0.0);
  for (auto [m, n] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{5, 14}}) {
    const cd ref = brute_kernel(f, bf, 0.0, m, n, 0, 0);
    CHECK(std::abs(Vf(m, n) - ref.real()) <= 1e-9 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("oscillatory kernel") {
  DotSpec s = hard_wall();
  const BasisSet b = BasisSet::build(s, {3, 3, 8});
  KernelOptions opt;
  opt.valley_wavenumber = K0;
  CHECK(oscillatory_kernel({0, 0, 0}, s, b, opt).value.cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(oscillatory_kernel({0, 0, 1.3 * K0}, s, b, opt), InvalidArgument);
  CHECK_THROWS_AS(oscillatory_kernel({K0, 0, 0}, s, b, opt), InvalidArgument);
  CHECK_NOTHROW(oscillatory_kernel({K0, 0, -K0}, s, b, opt));

  s.field_V_per_nm = 400e-4;
  const OscillatoryKernel osc = oscillatory_kernel({0, 0, 2 * K0}, s, b, opt);
  const OscillatoryKernel flat = oscillatory_kernel({0, 0, 0}, s, b, opt);
  CHECK(flat.value.cwiseAbs().maxCoeff() >= 1e2 * osc.value.cwiseAbs().maxCoeff());

  // hard wall: V = F z, so entries factorise; check z factors by quadrature
  const double L = s.dims_nm[2], F = s.field_V_per_nm, q = 2 * K0;
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) {
      const auto v = oracle::axis(b.axes[2], m + 1, n + 1, 0, 0, 1, q, -L / 2, L / 2);
      CHECK(oracle::rel_error(osc.value(m, n) / F, v) < 1e-8);
      const auto r = oracle::axis(b.axes[2], m + 1, n + 1, 0, 1, 1, q, -L / 2, L / 2);
      CHECK(oracle::rel_error(osc.grad_right(m, n) / F, r) < 1e-8);
      // d/dz (z e^{-iqz}) = (1 - i q z) e^{-iqz}
      const auto p0 = oracle::axis(b.axes[2], m + 1, n + 1, 0, 0, 0, q, -L / 2, L / 2);
      const auto p1 = oracle::axis(b.axes[2], m + 1, n + 1, 0, 0, 1, q, -L / 2, L / 2);
      const oracle::AxisResult gl{p0.value - cd(0.0, q) * p1.value, p0.scale + q * p1.scale};
      CHECK(oracle::rel_error(osc.grad_left(m, n) / F, gl) < 1e-8);
    }
}

TEST_CASE("oscillatory kernel with the barrier, brute force in 3D") {
  DotSpec s;
  s.field_V_per_nm = 400e-4;
  const BasisSet b = BasisSet::build(s, {2, 2, 6});
  KernelOptions opt;
  opt.valley_wavenumber = K0;
  const double q = 2 * K0;
  const OscillatoryKernel k = oscillatory_kernel({0, 0, q}, s, b, opt);
  for (auto [m, n] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{2, 19}}) {
    const cd v = brute_kernel(s, b, q, m, n, 0, 0);
    // (2, 19) differ in x parity and vanish; floor the denominator at 1e-6 eV
    CHECK(std::abs(k.value(m, n) - v) <= 1e-8 * std::max(std::abs(v), 1e-6));
    const cd r = brute_kernel(s, b, q, m, n, 0, 1);
    CHECK(std::abs(k.grad_right(m, n) - r) <= 1e-8 * std::max(std::abs(r), 1e-6));
    const cd l = -(brute_kernel(s, b, q, m, n, 1, 0) + r);
    CHECK(std::abs(k.grad_left(m, n) - l) <= 1e-8 * std::max(std::abs(l), 1e-6));
  }
  opt.source = CouplingSource::field_only;
  s.field_V_per_nm = 0.0;
  const OscillatoryKernel none = oscillatory_kernel({0, 0, q}, s, b, opt);
  CHECK(none.value.cwiseAbs().maxCoeff() == 0.0);
  CHECK(none.grad_left.cwiseAbs().maxCoeff() == 0.0);
  CHECK(none.grad_right.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("split kernel recombines") {
  DotSpec s;
  s.field_V_per_nm = 123e-4;
  const BasisSet b = BasisSet::build(s, {2, 3, 4});
  KernelOptions opt;
  opt.valley_wavenumber = K0;
  const SplitKernel sp = oscillatory_kernel_split({0, 0, 2 * K0}, s, b, opt);
  const OscillatoryKernel k = oscillatory_kernel({0, 0, 2 * K0}, s, b, opt);
  CHECK((sp.confinement.value + s.field_V_per_nm * sp.field.value - k.value).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("basis parity labels") {
  const BasisSet b = BasisSet::build(hard_wall(), {3, 3, 2});
  CHECK(b.xy_parity(b.flat_index(0, 0, 1)) == 1);
  CHECK(b.xy_parity(b.flat_index(1, 0, 0)) == -1);
  CHECK(b.xy_parity(b.flat_index(1, 2, 0)) == -1);
  CHECK(b.xy_parity(b.flat_index(2, 2, 1)) == 1);
}
