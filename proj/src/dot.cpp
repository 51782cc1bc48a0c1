#include "sivalley/dot.hpp"

#include <cmath>
#include <string>

#include "sivalley/errors.hpp"
#include "sivalley/units.hpp"

namespace sivalley {

void DotSpec::validate() const {
  for (double L : dims_nm) {
    if (!(L > 0.0)) throw InvalidArgument("dot dimensions must be positive");
  }
  if (barrier == BarrierMode::finite_barrier) {
    if (!(barrier_eV > 0.0)) throw InvalidArgument("finite barrier height must be positive");
    if (!(padding_nm > 0.0)) throw InvalidArgument("finite-barrier padding must be positive");
  }
  if (!std::isfinite(field_V_per_nm)) throw InvalidArgument("electric field must be finite");
  if (!(B_tesla >= 0.0)) throw InvalidArgument("magnetic field must be >= 0");
}

Vec3 DotSpec::box_lengths() const {
  const double p = effective_padding();
  return {dims_nm[0] + 2.0 * p, dims_nm[1] + 2.0 * p, dims_nm[2] + 2.0 * p};
}

BasisSet BasisSet::build(const DotSpec& spec, const std::array<int, 3>& modes) {
  spec.validate();
  const Vec3 box = spec.box_lengths();
  BasisSet basis;
  for (int a = 0; a < 3; ++a) {
    if (modes[a] < 1) throw InvalidArgument("basis needs at least one mode per axis");
    basis.axes[a] = AxisBasis{spec.dims_nm[a], box[a], modes[a]};
  }
  return basis;
}

int BasisSet::flat_index(int ix, int iy, int iz) const {
  return (ix * axes[1].modes + iy) * axes[2].modes + iz;
}

std::array<int, 3> BasisSet::modes_of(int flat) const {
  const int nz = axes[2].modes;
  const int ny = axes[1].modes;
  return {flat / (ny * nz), (flat / nz) % ny, flat % nz};
}

int BasisSet::xy_parity(int flat) const {
  const auto m = modes_of(flat);
  // sin(n pi (u + L/2)/L) has parity (-1)^(n-1); with 0-based index that is (-1)^index
  return ((m[0] + m[1]) % 2 == 0) ? 1 : -1;
}

double total_potential(const Vec3& r, const DotSpec& spec) {
  const Vec3 box = spec.box_lengths();
  bool inside_dot = true;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(r[a]) > 0.5 * box[a]) {
      throw InvalidArgument("position outside the embedding box");
    }
    if (std::abs(r[a]) > 0.5 * spec.dims_nm[a]) inside_dot = false;
  }
  const double confinement =
      (spec.barrier == BarrierMode::finite_barrier && !inside_dot) ? spec.barrier_eV : 0.0;
  return confinement + spec.field_V_per_nm * r[2];
}

Eigen::MatrixXd kron3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      const Eigen::MatrixXd& c) {
  const Eigen::Index na = a.rows(), nb = b.rows(), nc = c.rows();
  Eigen::MatrixXd out(na * nb * nc, na * nb * nc);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      for (Eigen::Index k = 0; k < nb; ++k)
        for (Eigen::Index l = 0; l < nb; ++l) {
          const double ab = a(i, j) * b(k, l);
          out.block((i * nb + k) * nc, (j * nb + l) * nc, nc, nc) = ab * c;
        }
  return out;
}

Eigen::MatrixXcd kron3(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       const Eigen::MatrixXcd& c) {
  const Eigen::Index na = a.rows(), nb = b.rows(), nc = c.rows();
  Eigen::MatrixXcd out(na * nb * nc, na * nb * nc);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      for (Eigen::Index k = 0; k < nb; ++k)
        for (Eigen::Index l = 0; l < nb; ++l) {
          const std::complex<double> ab = a(i, j) * b(k, l);
          out.block((i * nb + k) * nc, (j * nb + l) * nc, nc, nc) = ab * c;
        }
  return out;
}

Eigen::MatrixXd kinetic_matrix(const Valley& valley, const BasisSet& basis) {
  const int n = basis.size();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int f = 0; f < n; ++f) {
    const auto m = basis.modes_of(f);
    double e = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double k = basis.axes[a].wavenumber(m[a] + 1);
      e += constants::hbar2_over_2m0 / valley.mass[a] * k * k;
    }
    T(f, f) = e;
  }
  return T;
}

Eigen::MatrixXcd magnetic_matrix(double B_tesla, const Valley& valley, const BasisSet& basis,
                                 MagneticGauge gauge) {
  if (!(B_tesla >= 0.0)) throw InvalidArgument("magnetic field must be >= 0");
  const int n = basis.size();
  if (B_tesla == 0.0) return Eigen::MatrixXcd::Zero(n, n);

  const auto& X = basis.axes[0];
  const auto& Y = basis.axes[1];
  const auto& Z = basis.axes[2];
  const Eigen::MatrixXd Ix = Eigen::MatrixXd::Identity(X.modes, X.modes);
  const Eigen::MatrixXd Iy = Eigen::MatrixXd::Identity(Y.modes, Y.modes);
  const Eigen::MatrixXd Iz = Eigen::MatrixXd::Identity(Z.modes, Z.modes);
  const Eigen::MatrixXd Dx = axis_derivative(X);
  const Eigen::MatrixXd Dy = axis_derivative(Y);
  const Eigen::MatrixXd x1 = axis_moment(X, 1, Interval::box);
  const Eigen::MatrixXd y1 = axis_moment(Y, 1, Interval::box);
  const Eigen::MatrixXd x2 = axis_moment(X, 2, Interval::box);
  const Eigen::MatrixXd y2 = axis_moment(Y, 2, Interval::box);

  const double mu = constants::bohr_magneton_eV_per_T * B_tesla;  // e hbar B / 2 m0
  const double mx = valley.mass[0];
  const double my = valley.mass[1];
  const double y_dx_sign = gauge == MagneticGauge::as_printed ? -1.0 : 1.0;

  // real antisymmetric kernels; multiplied by i below
  const Eigen::MatrixXd para =
      y_dx_sign * (mu / mx) * kron3(Dx, y1, Iz) - (mu / my) * kron3(x1, Dy, Iz);
  const Eigen::MatrixXd dia =
      (mu * mu / (4.0 * constants::hbar2_over_2m0)) * (kron3(x2, Iy, Iz) / my + kron3(Ix, y2, Iz) / mx);

  Eigen::MatrixXcd H(n, n);
  H.real() = dia;
  H.imag() = para;
  return H;
}

Eigen::MatrixXd position_z_matrix(const BasisSet& basis) {
  const auto& X = basis.axes[0];
  const auto& Y = basis.axes[1];
  return kron3(Eigen::MatrixXd::Identity(X.modes, X.modes),
               Eigen::MatrixXd::Identity(Y.modes, Y.modes),
               axis_moment(basis.axes[2], 1, Interval::box));
}

namespace {

bool has_confinement(const BasisSet& basis) {
  for (const auto& ax : basis.axes) {
    if (ax.box_length > ax.interior_length) return true;
  }
  return false;
}

Eigen::MatrixXd confinement_matrix(const DotSpec& spec, const BasisSet& basis) {
  const int n = basis.size();
  Eigen::MatrixXd inside = kron3(axis_moment(basis.axes[0], 0, Interval::interior),
                                 axis_moment(basis.axes[1], 0, Interval::interior),
                                 axis_moment(basis.axes[2], 0, Interval::interior));
  return spec.barrier_eV * (Eigen::MatrixXd::Identity(n, n) - inside);
}

}  // namespace

Eigen::MatrixXd potential_matrix(const DotSpec& spec, const BasisSet& basis,
                                 bool include_confinement) {
  spec.validate();
  const int n = basis.size();
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
  if (include_confinement && spec.barrier == BarrierMode::finite_barrier && has_confinement(basis)) {
    V += confinement_matrix(spec, basis);
  }
  if (spec.field_V_per_nm != 0.0) V += spec.field_V_per_nm * position_z_matrix(basis);
  return V;
}

namespace {

void validate_q(const Vec3& q, double K0) {
  const double qn = norm(q);
  if (qn == 0.0) return;
  if (!(K0 > 0.0)) throw InvalidArgument("non-zero q needs the valley wavenumber to validate it");
  const double tol = 1e-9 * K0;
  int nonzero = 0;
  int single = 0;
  int twice = 0;
  for (double c : q) {
    const double a = std::abs(c);
    if (a <= tol) continue;
    ++nonzero;
    if (std::abs(a - K0) <= tol) ++single;
    else if (std::abs(a - 2.0 * K0) <= tol) ++twice;
  }
  const bool opposite = nonzero == 1 && twice == 1;
  const bool perpendicular = nonzero == 2 && single == 2;
  if (!opposite && !perpendicular) {
    throw InvalidArgument("q is not a difference of two valley wave vectors");
  }
}

struct KernelBuilder {
  const DotSpec& spec;
  const BasisSet& basis;
  Vec3 q;
  bool confinement;

  using Orders = std::array<int, 3>;

  Eigen::MatrixXcd factor(int axis, int dm, int dn, int power, Interval iv) const {
    return axis_integral(basis.axes[axis], dm, dn, power, q[axis], iv);
  }

  // <m| d^dm [ exp(-iq.r) V_c ] d^dn |n>, V_c with unit height
  Eigen::MatrixXcd confinement_part(const Orders& dm, const Orders& dn) const {
    const Eigen::MatrixXcd whole = kron3(factor(0, dm[0], dn[0], 0, Interval::box),
                                         factor(1, dm[1], dn[1], 0, Interval::box),
                                         factor(2, dm[2], dn[2], 0, Interval::box));
    const Eigen::MatrixXcd inner = kron3(factor(0, dm[0], dn[0], 0, Interval::interior),
                                         factor(1, dm[1], dn[1], 0, Interval::interior),
                                         factor(2, dm[2], dn[2], 0, Interval::interior));
    return spec.barrier_eV * (whole - inner);
  }

  // same with z in place of V_c (field of 1 V/nm)
  Eigen::MatrixXcd field_part(const Orders& dm, const Orders& dn) const {
    return kron3(factor(0, dm[0], dn[0], 0, Interval::box), factor(1, dm[1], dn[1], 0, Interval::box),
                 factor(2, dm[2], dn[2], 1, Interval::box));
  }

  // Returns (confinement kernel, per-unit-field kernel).
  std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> sandwich(const Orders& dm, const Orders& dn) const {
    const int n = basis.size();
    Eigen::MatrixXcd conf = confinement ? confinement_part(dm, dn) : Eigen::MatrixXcd::Zero(n, n);
    return {std::move(conf), field_part(dm, dn)};
  }
};

}  // namespace

SplitKernel oscillatory_kernel_split(const Vec3& q, const DotSpec& spec, const BasisSet& basis,
                                     const KernelOptions& options) {
  spec.validate();
  validate_q(q, options.valley_wavenumber);
  if (options.left_axis < 0 || options.left_axis > 2 || options.right_axis < 0 ||
      options.right_axis > 2) {
    throw InvalidArgument("gradient axis must be 0, 1 or 2");
  }
  const bool conf = options.source == CouplingSource::full &&
                    spec.barrier == BarrierMode::finite_barrier && has_confinement(basis);
  const KernelBuilder kb{spec, basis, q, conf};

  using Orders = KernelBuilder::Orders;
  const Orders none{0, 0, 0};
  Orders left{0, 0, 0};
  left[options.left_axis] = 1;
  Orders right{0, 0, 0};
  right[options.right_axis] = 1;

  SplitKernel out;
  auto value = kb.sandwich(none, none);
  out.confinement.value = std::move(value.first);
  out.field.value = std::move(value.second);

  auto ket_right = kb.sandwich(none, right);
  out.confinement.grad_right = ket_right.first;
  out.field.grad_right = ket_right.second;

  // d(W)/du as a multiplicative operator, by parts (basis vanishes on the box walls):
  // <m| W' |n> = -<m'| W |n> - <m| W |n'>
  auto bra_left = kb.sandwich(left, none);
  auto ket_left = options.left_axis == options.right_axis ? ket_right : kb.sandwich(none, left);
  out.confinement.grad_left = -(bra_left.first + ket_left.first);
  out.field.grad_left = -(bra_left.second + ket_left.second);
  return out;
}

OscillatoryKernel oscillatory_kernel(const Vec3& q, const DotSpec& spec, const BasisSet& basis,
                                     const KernelOptions& options) {
  SplitKernel split = oscillatory_kernel_split(q, spec, basis, options);
  const double F = spec.field_V_per_nm;
  OscillatoryKernel k;
  k.value = split.confinement.value + F * split.field.value;
  k.grad_left = split.confinement.grad_left + F * split.field.grad_left;
  k.grad_right = split.confinement.grad_right + F * split.field.grad_right;
  return k;
}

}  // namespace sivalley
