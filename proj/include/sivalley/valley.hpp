#ifndef SIVALLEY_VALLEY_HPP
#define SIVALLEY_VALLEY_HPP

// Six-valley geometry of the silicon conduction band and the inter-valley
// coupling constants of the two-band (Gamma_2' - Gamma_15) model.

#include <array>

#include "sivalley/units.hpp"

namespace sivalley {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

/// One conduction-band minimum. Index runs 1..6 as (+x, -x, +y, -y, +z, -z).
struct Valley {
  int index = 0;
  Vec3 axis{};   // unit vector e_l
  Vec3 K{};      // minimum wave vector, nm^-1
  Vec3 mass{};   // (m_x, m_y, m_z) in m0

  /// 0, 1 or 2: the Cartesian axis e_l lies along.
  int axis_index() const;
};

std::array<Valley, 6> valley_set(const SiliconParams& si = {}, double K_fraction = 0.85);

/// How the dimensionless "a.u." of the band parameter T is read.
enum class BandUnitReading { rydberg_bohr, hartree_bohr };

/// Two-band model: tan(2 lambda_K) = 2 T K / eps_G.
struct BandModel {
  double T_eV_nm = 1.08 * constants::rydberg_eV * constants::bohr_nm;
  double gap_eV = 0.268 * constants::rydberg_eV;

  static BandModel with_reading(BandUnitReading reading, double T_au = 1.08,
                                double gap_Ry = 0.268);

  /// Mixing angle in radians, in [0, pi/4). K in nm^-1, K >= 0.
  double lambda(double K) const;
  /// d lambda / dK in nm.
  double dlambda_dK(double K) const;
};

/// I_ll' = 1/2 (1 + e.e') - 1/2 (1 - e.e') cos(2 lambda_K), evaluated at |K_l|.
/// Throws InvalidArgument when l == l'.
double coupling_I(const Valley& l, const Valley& lp, const BandModel& band);

struct CouplingJ {
  Vec3 J{};        // along e_l, nm
  Vec3 J_prime{};  // along e_l', nm
  double magnitude = 0.0;
};

/// J_ll' = e_l (1 - e.e') (d lambda/dK) sin(2 lambda_K); J' has the same size along e_l'.
CouplingJ coupling_J(const Valley& l, const Valley& lp, const BandModel& band);

struct CouplingConstants {
  double I = 0.0;
  CouplingJ J;
  double lambda = 0.0;
  double dlambda_dK = 0.0;
  double K = 0.0;
};

CouplingConstants coupling_constants(const Valley& l, const Valley& lp, const BandModel& band);

/// Linear model I = alpha e.e' + beta fitted to the tabulated pseudopotential values.
struct LinearModel {
  double alpha = 0.0;
  double beta = 0.0;
  double perpendicular_value = 0.3915;
  double opposite_value = -0.2171;
};

LinearModel linear_model_constants();

}  // namespace sivalley

#endif  // SIVALLEY_VALLEY_HPP
