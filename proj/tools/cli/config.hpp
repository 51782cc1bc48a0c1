#ifndef SIVALLEY_CLI_CONFIG_HPP
#define SIVALLEY_CLI_CONFIG_HPP

// Flat `key = value [unit]` run configuration for the sivalley driver.
//
//   # comment
//   dims_nm         = 8 12 6
//   field_kV_per_cm = linspace(0, 300, 31)
//   B_tesla         = 1.5 T
//
// A unit after the value must match the key's dimension; without one the
// unit in the key name applies. Unknown keys are rejected.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sivalley/coulomb.hpp"
#include "sivalley/decoherence.hpp"
#include "sivalley/dot.hpp"
#include "sivalley/multivalley.hpp"
#include "sivalley/qubit.hpp"
#include "sivalley/two_qubit.hpp"

namespace sivalley::cli {

struct RunConfig {
  DotSpec dot;
  SolverOptions solver;
  std::vector<double> fields;  // V/nm

  int levels = 6;  // z-valley doublets in the spectrum
  std::array<int, 2> anticross_levels{3, 5};
  double anticross_lo = 0.0;      // V/nm
  double anticross_hi = 300e-4;   // V/nm
  int anticross_coarse = 31;
  double anticross_window = 5e-4;  // V/nm, half width of the magnified sweep

  double epsilon = 63.5e-6;  // eV
  double delta = 31.6e-6;    // eV
  double delta_low = 0.0;    // eV, Delta at the low-field end of a pulse
  QubitForm qubit_form = QubitForm::printed;
  std::vector<double> rabi_times;  // s
  double pulse_rise = 50e-12;      // s
  double pulse_hold = -1.0;        // s; < 0 means half a population period

  double swap_delta = 1e-6;  // eV
  std::vector<double> swap_ratios;
  std::uint64_t coulomb_samples = 0;  // 0 skips the Monte Carlo element
  CoulombModel coulomb;
  double coulomb_sigma_nm = 2.0;

  std::vector<double> phonon_energies;      // eV
  std::vector<double> phonon_temperatures;  // K
  PhononModel phonon;

  std::uint64_t seed = 1;
  int threads = 1;

  /// key -> canonical value text, for the resolved-config echo and manifests.
  std::map<std::string, std::string> resolved;
};

/// Throws ConfigError (with the line number) on malformed input or unknown keys.
RunConfig parse_config(const std::string& text);

/// Reads and parses a file; IoError when it cannot be read.
RunConfig load_config(const std::string& path);

/// Command-line overrides; keeps the derived fields and the echo in step.
void apply_overrides(RunConfig& config, std::optional<std::uint64_t> seed, std::optional<int> threads);

/// `key = value` lines in key order, canonical internal units.
std::string resolved_text(const RunConfig& config);

}  // namespace sivalley::cli

#endif  // SIVALLEY_CLI_CONFIG_HPP
