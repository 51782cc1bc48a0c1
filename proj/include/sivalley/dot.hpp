#ifndef SIVALLEY_DOT_HPP
#define SIVALLEY_DOT_HPP

// Rectangular dot: geometry, confinement, and the single-valley and
// inter-valley matrix elements in a sine-product (Galerkin) basis.
//
// Coordinates are centred on the dot. Flat basis index is lexicographic in
// (n_x, n_y, n_z) with n_z fastest; this ordering is part of the file format.

#include <array>

#include <Eigen/Dense>

#include "sivalley/trig_integrals.hpp"
#include "sivalley/valley.hpp"

namespace sivalley {

enum class BarrierMode { hard_wall, finite_barrier };

/// Sign convention of the paramagnetic term. `as_printed` keeps
/// -(i e hbar B / 2 m_x) y d/dx - (i e hbar B / 2 m_y) x d/dy; `textbook` is the
/// symmetric-gauge minimal-coupling result, which flips the y d/dx sign.
enum class MagneticGauge { as_printed, textbook };

/// Which potential enters the inter-valley kernel: V_c + eFz, or eFz only.
enum class CouplingSource { full, field_only };

struct DotSpec {
  Vec3 dims_nm{8.0, 12.0, 6.0};
  BarrierMode barrier = BarrierMode::finite_barrier;
  double barrier_eV = 3.1;
  double padding_nm = 2.0;
  double field_V_per_nm = 0.0;  // along +z
  double B_tesla = 0.0;         // along +z
  MagneticGauge gauge = MagneticGauge::as_printed;

  void validate() const;
  double effective_padding() const { return barrier == BarrierMode::hard_wall ? 0.0 : padding_nm; }
  Vec3 box_lengths() const;
};

struct BasisSet {
  std::array<AxisBasis, 3> axes;

  static BasisSet build(const DotSpec& spec, const std::array<int, 3>& modes);

  int size() const { return axes[0].modes * axes[1].modes * axes[2].modes; }
  /// 0-based mode numbers (n_x - 1, n_y - 1, n_z - 1) -> flat index.
  int flat_index(int ix, int iy, int iz) const;
  std::array<int, 3> modes_of(int flat) const;
  /// Combined x/y reflection parity (+1 / -1) of a basis function.
  int xy_parity(int flat) const;
};

/// V_c(r) + e F z. Throws InvalidArgument outside the embedding box.
double total_potential(const Vec3& r, const DotSpec& spec);

/// Diagonal kinetic energy: sum over axes of (hbar^2/2m_a) k_n^2.
Eigen::MatrixXd kinetic_matrix(const Valley& valley, const BasisSet& basis);

/// Paramagnetic cross terms plus the diamagnetic term for B along z.
Eigen::MatrixXcd magnetic_matrix(double B_tesla, const Valley& valley, const BasisSet& basis,
                                 MagneticGauge gauge = MagneticGauge::as_printed);

/// Matrix of V_c + e F z. With include_confinement = false only e F z.
Eigen::MatrixXd potential_matrix(const DotSpec& spec, const BasisSet& basis,
                                 bool include_confinement = true);

/// e F z with F = 1 V/nm (the field operator z).
Eigen::MatrixXd position_z_matrix(const BasisSet& basis);

Eigen::MatrixXd kron3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c);
Eigen::MatrixXcd kron3(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       const Eigen::MatrixXcd& c);

struct KernelOptions {
  CouplingSource source = CouplingSource::full;
  int left_axis = 2;             // axis of e_l (left-acting gradient)
  int right_axis = 2;            // axis of e_l' (right-acting gradient)
  double valley_wavenumber = 0;  // |K_l|; used to validate q
};

/// Matrix elements with W(r) = exp(-i q.r) V(r):
///   value      <m| W |n>
///   grad_left  <m| d/du_left (W) |n>      (derivative of the function W)
///   grad_right <m| W d/du_right |n>
struct OscillatoryKernel {
  Eigen::MatrixXcd value;
  Eigen::MatrixXcd grad_left;
  Eigen::MatrixXcd grad_right;
};

/// Throws InvalidArgument unless q is K_l - K_l' for some valley pair.
OscillatoryKernel oscillatory_kernel(const Vec3& q, const DotSpec& spec, const BasisSet& basis,
                                     const KernelOptions& options);

/// Kernel split into F-independent (confinement) and per-unit-field parts:
/// kernel(F) = confinement + F * field.
struct SplitKernel {
  OscillatoryKernel confinement;
  OscillatoryKernel field;
};

SplitKernel oscillatory_kernel_split(const Vec3& q, const DotSpec& spec, const BasisSet& basis,
                                     const KernelOptions& options);

}  // namespace sivalley

#endif  // SIVALLEY_DOT_HPP
