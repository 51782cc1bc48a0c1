#ifndef SIVALLEY_QUBIT_HPP
#define SIVALLEY_QUBIT_HPP

// Reduced two-level valley qubit: effective Hamiltonian, Rabi dynamics,
// pulse timing rules, parity-selective tunneling and the operation budget.

#include <cstdint>

#include <Eigen/Dense>

namespace sivalley {

/// printed:  [[eps, Delta], [Delta, eps]]
/// detuning: [[eps/2, Delta], [Delta, -eps/2]]
enum class QubitForm { printed, detuning };

struct QubitModel {
  double epsilon = 0.0;  // eV
  double delta = 0.0;    // eV
  QubitForm form = QubitForm::printed;

  /// sqrt(eps^2 + Delta^2) / hbar, rad/s.
  double omega() const;
};

Eigen::Matrix2cd effective_hamiltonian(double epsilon, double delta,
                                       QubitForm form = QubitForm::printed);

/// sqrt(eps^2 + Delta^2) / h in GHz (cyclic).
double rabi_frequency_GHz(double epsilon, double delta);

/// exp(-i H t / hbar) applied to state; t in seconds.
Eigen::Vector2cd evolve(const Eigen::Vector2cd& state, const QubitModel& model, double t);

enum class PseudoSpin { S, A };

struct PseudoSpinState {
  PseudoSpin parity = PseudoSpin::S;
  int orbital = 0;  // handle of the orbital envelope

  /// (1, +1)/sqrt2 for S, (1, -1)/sqrt2 for A.
  Eigen::Vector2d spinor() const;
};

struct TunnelingModel {
  double t0 = 1.0;               // eV
  double orbital_overlap = 1.0;  // dimensionless
};

/// chi_a^dagger chi_b, rounded to exactly 0 or 1.
int parity_factor(const PseudoSpinState& a, const PseudoSpinState& b);

double tunneling_amplitude(const PseudoSpinState& a, const PseudoSpinState& b,
                           const TunnelingModel& model);

struct PulseReport {
  double hbar_over_delta_low = 0.0;   // s; infinite when Delta(F_low) = 0
  double hbar_over_delta_high = 0.0;  // s
  bool rise_shorter_than_low = false;
  bool rise_longer_than_high = false;
  bool valid = false;
  double p0 = 1.0;  // populations after the hold, starting in |0> = (1, 0)
  double p1 = 0.0;
};

/// low/high are the qubit parameters at F_low < F_high. Throws
/// InvalidArgument when Delta(F_high) = 0 or the fields are not ordered.
PulseReport pulse_protocol(double f_low, double f_high, double hold_time, double rise_time,
                           const QubitModel& low, const QubitModel& high);

/// floor(tau Delta / hbar).
std::uint64_t operation_budget(double delta, double tau);

}  // namespace sivalley

#endif  // SIVALLEY_QUBIT_HPP
