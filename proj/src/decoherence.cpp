#include "sivalley/decoherence.hpp"

#include <cmath>
#include <limits>

#include "sivalley/errors.hpp"

namespace sivalley {

PhononModel PhononModel::from(const SiliconParams& si) {
  return {si.density_g_per_cm3, si.sound_velocity_cm_per_s, si.deformation_potential_eV};
}

void PhononModel::validate() const {
  if (!(density_g_per_cm3 > 0.0) || !(sound_velocity_cm_per_s > 0.0) ||
      !(deformation_potential_eV > 0.0)) {
    throw InvalidArgument("phonon material parameters must be positive");
  }
}

namespace {

void check(double dE, double T, const PhononModel& model) {
  model.validate();
  if (!(T > 0.0)) throw InvalidArgument("temperature must be > 0 K");
  if (!(dE >= 0.0)) throw InvalidArgument("energy difference must be >= 0");
}

double boltzmann(double dE, double T) {
  return std::exp(-dE / (constants::boltzmann_eV_per_K * T));
}

}  // namespace

double phonon_rate(double dE, double T, const PhononModel& model) {
  check(dE, T, model);
  const double erg = constants::erg_per_eV;
  const double de = dE * erg;                                 // erg
  const double eac = model.deformation_potential_eV * erg;    // erg
  const double hbar = constants::hbar_eVs * erg;              // erg s
  const double c = model.sound_velocity_cm_per_s;             // cm/s
  const double prefactor = 4.0 * constants::pi * constants::pi * de * de * de * eac * eac /
                           (model.density_g_per_cm3 * std::pow(hbar, 4) * std::pow(c, 5));
  return prefactor * boltzmann(dE, T);
}

double phonon_rate_internal(double dE, double T, const PhononModel& model) {
  check(dE, T, model);
  // 1 g = 1 erg s^2 / cm^2 = (1 / erg_per_eV) eV s^2 / (1e14 nm^2); 1 cm^3 = 1e21 nm^3
  const double rho = model.density_g_per_cm3 / (constants::erg_per_eV * 1e14 * 1e21);  // eV s^2/nm^5
  const double c = model.sound_velocity_cm_per_s * 1e7;                                 // nm/s
  const double eac = model.deformation_potential_eV;
  const double hbar = constants::hbar_eVs;
  const double prefactor = 4.0 * constants::pi * constants::pi * dE * dE * dE * eac * eac /
                           (rho * std::pow(hbar, 4) * std::pow(c, 5));
  return prefactor * boltzmann(dE, T);
}

DecoherenceTime decoherence_time(double dE, double T, const PhononModel& model) {
  const double w = phonon_rate(dE, T, model);
  if (w == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {1.0 / w, false};
}

PhononTables fig7_tables(const std::vector<double>& dE_grid, const std::vector<double>& T_grid,
                         const PhononModel& model) {
  if (dE_grid.empty() || T_grid.empty()) throw InvalidArgument("phonon grids must be non-empty");
  PhononTables t;
  for (double e : dE_grid)
    for (double T : T_grid) {
      const double w = phonon_rate(e, T, model);
      t.by_energy.push_back({e, T, w, decoherence_time(e, T, model)});
    }
  for (double T : T_grid)
    for (double e : dE_grid) {
      const double w = phonon_rate(e, T, model);
      t.by_temperature.push_back({e, T, w, decoherence_time(e, T, model)});
    }
  return t;
}

}  // namespace sivalley
