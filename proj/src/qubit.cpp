#include "sivalley/qubit.hpp"

#include <cmath>
#include <limits>

#include "sivalley/errors.hpp"
#include "sivalley/units.hpp"

namespace sivalley {

double QubitModel::omega() const { return std::hypot(epsilon, delta) / constants::hbar_eVs; }

Eigen::Matrix2cd effective_hamiltonian(double epsilon, double delta, QubitForm form) {
  if (!std::isfinite(epsilon) || !std::isfinite(delta)) {
    throw InvalidArgument("qubit parameters must be finite");
  }
  Eigen::Matrix2cd h;
  if (form == QubitForm::printed) {
    h << epsilon, delta, delta, epsilon;
  } else {
    h << 0.5 * epsilon, delta, delta, -0.5 * epsilon;
  }
  return h;
}

double rabi_frequency_GHz(double epsilon, double delta) {
  return std::hypot(epsilon, delta) / constants::planck_eVs * 1e-9;
}

Eigen::Vector2cd evolve(const Eigen::Vector2cd& state, const QubitModel& model, double t) {
  // H = a0 + a.sigma with a = (ax, 0, az)
  double a0, ax, az;
  if (model.form == QubitForm::printed) {
    a0 = model.epsilon;
    ax = model.delta;
    az = 0.0;
  } else {
    a0 = 0.0;
    ax = model.delta;
    az = 0.5 * model.epsilon;
  }
  const double a = std::hypot(ax, az);
  const double phi = a * t / constants::hbar_eVs;
  const std::complex<double> i{0.0, 1.0};
  Eigen::Matrix2cd u = std::cos(phi) * Eigen::Matrix2cd::Identity();
  if (a > 0.0) {
    Eigen::Matrix2cd n;
    n << az, ax, ax, -az;
    u -= i * std::sin(phi) / a * n;
  }
  return std::exp(-i * (a0 * t / constants::hbar_eVs)) * (u * state);
}

Eigen::Vector2d PseudoSpinState::spinor() const {
  const double s = 1.0 / std::sqrt(2.0);
  return parity == PseudoSpin::S ? Eigen::Vector2d(s, s) : Eigen::Vector2d(s, -s);
}

int parity_factor(const PseudoSpinState& a, const PseudoSpinState& b) {
  return std::abs(a.spinor().dot(b.spinor())) > 0.5 ? 1 : 0;
}

double tunneling_amplitude(const PseudoSpinState& a, const PseudoSpinState& b,
                           const TunnelingModel& model) {
  if (parity_factor(a, b) == 0) return 0.0;
  return model.t0 * model.orbital_overlap;
}

PulseReport pulse_protocol(double f_low, double f_high, double hold_time, double rise_time,
                           const QubitModel& low, const QubitModel& high) {
  if (!(f_low < f_high)) throw InvalidArgument("pulse needs F_low < F_high");
  if (high.delta == 0.0) throw InvalidArgument("no inter-valley coupling at F_high: no gate");
  if (hold_time < 0.0 || rise_time < 0.0) throw InvalidArgument("times must be >= 0");
  PulseReport r;
  const double h = constants::hbar_eVs;
  r.hbar_over_delta_low =
      low.delta == 0.0 ? std::numeric_limits<double>::infinity() : h / std::abs(low.delta);
  r.hbar_over_delta_high = h / std::abs(high.delta);
  r.rise_shorter_than_low = rise_time < r.hbar_over_delta_low;
  r.rise_longer_than_high = rise_time > r.hbar_over_delta_high;
  r.valid = r.rise_shorter_than_low && r.rise_longer_than_high;
  const Eigen::Vector2cd psi = evolve(Eigen::Vector2cd(1.0, 0.0), high, hold_time);
  r.p0 = std::norm(psi[0]);
  r.p1 = std::norm(psi[1]);
  return r;
}

std::uint64_t operation_budget(double delta, double tau) {
  if (tau == 0.0) return 0;
  if (!(delta > 0.0) || !(tau > 0.0)) throw InvalidArgument("budget needs Delta > 0 and tau >= 0");
  if (std::isinf(tau)) throw InvalidArgument("budget is unbounded for infinite tau");
  return static_cast<std::uint64_t>(std::floor(tau * delta / constants::hbar_eVs));
}

}  // namespace sivalley
