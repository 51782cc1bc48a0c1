#ifndef SIVALLEY_UNITS_HPP
#define SIVALLEY_UNITS_HPP

// Physical constants, silicon parameters and unit conversion.
//
// Internal unit system: energy eV, length nm, electric field V/nm
// (so e*F*z is in eV when z is in nm), magnetic field T, temperature K,
// time s, frequency Hz. Effective masses are in units of the free
// electron mass m0.

#include <numbers>
#include <string>
#include <string_view>

namespace sivalley {

namespace constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double rydberg_eV = 13.605693;
inline constexpr double hartree_eV = 2.0 * rydberg_eV;
inline constexpr double bohr_nm = 0.0529177;
inline constexpr double hbar_eVs = 6.582120e-16;
inline constexpr double planck_eVs = 2.0 * pi * hbar_eVs;
inline constexpr double boltzmann_eV_per_K = 8.617333e-5;
/// hbar^2 / (2 m0) in eV nm^2.
inline constexpr double hbar2_over_2m0 = 0.0380998;
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double erg_per_eV = 1.602176634e-12;
/// e^2 / (4 pi eps0) in eV nm.
inline constexpr double coulomb_eV_nm = 1.43996448;
/// hbar / e expressed in T nm^2 (1 V s = 1 T m^2).
inline constexpr double hbar_over_e_T_nm2 = hbar_eVs * 1e18;
/// e hbar / (2 m0) in eV/T, derived from the two constants above.
inline constexpr double bohr_magneton_eV_per_T = hbar2_over_2m0 / hbar_over_e_T_nm2;

}  // namespace constants

/// Bulk silicon parameters. Masses in m0.
struct SiliconParams {
  double lattice_constant_nm = 0.543;
  double longitudinal_mass = 0.916;
  double transverse_mass = 0.190;
  double density_g_per_cm3 = 2.33;
  double sound_velocity_cm_per_s = 9.01e5;
  double deformation_potential_eV = 4.7;
  double relative_permittivity = 11.7;
  double oxide_band_offset_eV = 3.1;

  /// Throws InvalidArgument unless m_l > m_t > 0 and the material constants are positive.
  void validate() const;
};

enum class Dimension { energy, length, field, magnetic, temperature, time, frequency };

enum class Unit {
  // energy
  eV,
  meV,
  ueV,
  Ry,
  Hartree,
  erg,
  // length
  nm,
  bohr,
  angstrom,
  um,
  cm,
  m,
  // electric field
  V_per_nm,
  kV_per_cm,
  MV_per_cm,
  V_per_m,
  // magnetic field
  tesla,
  gauss,
  // temperature
  kelvin,
  millikelvin,
  // time
  s,
  ms,
  us,
  ns,
  ps,
  // frequency
  Hz,
  MHz,
  GHz,
};

Dimension dimension_of(Unit unit);
std::string_view dimension_name(Dimension dim);

/// Multiplicative factor taking a value in `unit` to the internal unit.
double to_internal_factor(Unit unit);

/// value * factor(from -> to). Throws DimensionMismatch naming both dimensions.
double convert(double value, Unit from, Unit to);

/// Parses a unit symbol such as "kV/cm", "ueV", "T", "bohr". Throws InvalidArgument.
Unit parse_unit(std::string_view symbol);
std::string_view unit_symbol(Unit unit);

}  // namespace sivalley

#endif  // SIVALLEY_UNITS_HPP
