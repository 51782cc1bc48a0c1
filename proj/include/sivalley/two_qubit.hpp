#ifndef SIVALLEY_TWO_QUBIT_HPP
#define SIVALLEY_TWO_QUBIT_HPP

// Two coupled valley qubits in the basis |11>, |10>, |01>, |00>: the 4x4
// Hamiltonian, the closed-form evolution operator and an exact oracle, and
// the SWAP protocol.

#include <complex>

#include <Eigen/Dense>

namespace sivalley {

struct TwoQubitModel {
  double E11 = 0.0, E10 = 0.0, E01 = 0.0, E00 = 0.0;
  double Ec = 0.0;
  // special-case parameters (E11 = 3D, E10 = E01 = D, E00 = -D, Ec = d)
  double Delta = 0.0;
  double delta = 0.0;

  static TwoQubitModel special(double Delta, double delta);
  bool is_special() const;

  double omega1() const;  // sqrt(D^2 + d^2)
  double omega2() const;  // sqrt(D^2 + 3 d^2)
  double omega3() const;  // sqrt(2 d D)
};

/// Delta giving Omega_2 = 2 Omega_3: (4 + sqrt 13) delta.
double swap_condition_delta(double delta);

Eigen::Matrix4cd hamiltonian4(const TwoQubitModel& model);

/// exp(+iHt) (hbar = 1, t in inverse energy units) or exp(-iHt/hbar) with t in seconds.
enum class TimeConvention { printed, physical };

/// The printed closed form, evaluated verbatim. Needs the special case.
Eigen::Matrix4cd evolve_closed_form(const TwoQubitModel& model, double t);

/// Matrix exponential from the eigendecomposition of hamiltonian4.
Eigen::Matrix4cd evolve_exact(const TwoQubitModel& model, double t,
                              TimeConvention convention = TimeConvention::printed);

/// ||U^dagger U - I||_F
double unitarity_defect(const Eigen::Matrix4cd& u);

enum class SwapVariant { printed_t, half_t, exact };

const char* swap_variant_name(SwapVariant v);

struct SwapReport {
  double t = 0.0;
  double Delta = 0.0, delta = 0.0;
  double omega1 = 0.0, omega2 = 0.0, omega3 = 0.0;
  std::complex<double> closed_01, closed_10;  // amplitudes of U|10>
  std::complex<double> exact_01, exact_10;
  double fidelity_closed = 0.0;  // |<01|U|10>|^2
  double fidelity_exact = 0.0;
  double unitarity_defect_closed = 0.0;
  double printed_residual = 0.0;  // cos(pi Omega_1 / (2 Omega_2))
};

/// printed_t: t = pi/(2 Omega_3); half_t: t = pi/(2 Omega_2); exact: t = pi/(2 delta).
/// Delta defaults to swap_condition_delta(delta) when Delta <= 0.
SwapReport swap_protocol(double delta, SwapVariant variant, double Delta = 0.0);

}  // namespace sivalley

#endif  // SIVALLEY_TWO_QUBIT_HPP
