#ifndef SIVALLEY_DECOHERENCE_HPP
#define SIVALLEY_DECOHERENCE_HPP

// Upper bound of the LA-phonon scattering rate and the matching lower bound
// of the decoherence time.

#include <vector>

#include "sivalley/units.hpp"

namespace sivalley {

struct PhononModel {
  double density_g_per_cm3 = 2.33;
  double sound_velocity_cm_per_s = 9.01e5;
  double deformation_potential_eV = 4.7;

  static PhononModel from(const SiliconParams& si);
  void validate() const;
};

/// 4 pi^2 dE^3 E_ac^2 / (rho hbar^4 c_l^5) exp(-dE / k_B T), 1/s.
/// dE in eV, T in K. Evaluated in CGS.
double phonon_rate(double dE, double T, const PhononModel& model = {});

/// The same rate evaluated with eV, nm and s throughout.
double phonon_rate_internal(double dE, double T, const PhononModel& model = {});

struct DecoherenceTime {
  double seconds = 0.0;
  bool infinite = false;  // rate is exactly zero (dE = 0)
};

DecoherenceTime decoherence_time(double dE, double T, const PhononModel& model = {});

struct PhononRow {
  double dE = 0.0;  // eV
  double T = 0.0;   // K
  double rate = 0.0;
  DecoherenceTime tau;
};

struct PhononTables {
  std::vector<PhononRow> by_energy;       // one tau(T) curve per dE: outer dE, inner T
  std::vector<PhononRow> by_temperature;  // one tau(dE) curve per T: outer T, inner dE
};

PhononTables fig7_tables(const std::vector<double>& dE_grid, const std::vector<double>& T_grid,
                         const PhononModel& model = {});

}  // namespace sivalley

#endif  // SIVALLEY_DECOHERENCE_HPP
