#include "sivalley/two_qubit.hpp"

#include <cmath>

#include "sivalley/errors.hpp"
#include "sivalley/units.hpp"

namespace sivalley {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

TwoQubitModel TwoQubitModel::special(double Delta, double delta) {
  TwoQubitModel m;
  m.E11 = 3.0 * Delta;
  m.E10 = Delta;
  m.E01 = Delta;
  m.E00 = -Delta;
  m.Ec = delta;
  m.Delta = Delta;
  m.delta = delta;
  return m;
}

bool TwoQubitModel::is_special() const {
  return E11 == 3.0 * Delta && E10 == Delta && E01 == Delta && E00 == -Delta && Ec == delta;
}

double TwoQubitModel::omega1() const { return std::sqrt(Delta * Delta + delta * delta); }
double TwoQubitModel::omega2() const { return std::sqrt(Delta * Delta + 3.0 * delta * delta); }
double TwoQubitModel::omega3() const {
  if (delta * Delta < 0.0) throw InvalidArgument("Omega_3 needs delta Delta >= 0");
  return std::sqrt(2.0 * delta * Delta);
}

double swap_condition_delta(double delta) { return (4.0 + std::sqrt(13.0)) * delta; }

Eigen::Matrix4cd hamiltonian4(const TwoQubitModel& m) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 0) = m.E11;
  h(1, 1) = m.E10;
  h(2, 2) = m.E01;
  h(3, 3) = m.E00;
  h(1, 2) = m.Ec;
  h(2, 1) = m.Ec;
  return h;
}

Eigen::Matrix4cd evolve_closed_form(const TwoQubitModel& m, double t) {
  if (!m.is_special()) throw InvalidArgument("closed form needs the special-case energies");
  const double D = m.Delta, d = m.delta;
  const double w1 = m.omega1(), w2 = m.omega2(), w3 = m.omega3();
  const double s2 = w2 > 0.0 ? std::sin(w2 * t) / w2 : t;
  const std::complex<double> diag = std::cos(w1 * t) + kI * D * s2;
  const std::complex<double> off = std::cos(w3 * t) - 1.0 + kI * d * s2;
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = std::exp(kI * (3.0 * D * t));
  u(1, 1) = diag;
  u(2, 2) = diag;
  u(3, 3) = std::exp(-kI * (D * t));
  u(1, 2) = off;
  u(2, 1) = off;
  return u;
}

Eigen::Matrix4cd evolve_exact(const TwoQubitModel& m, double t, TimeConvention convention) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(hamiltonian4(m));
  if (es.info() != Eigen::Success) throw NumericalError("4x4 eigendecomposition failed");
  const double scale = convention == TimeConvention::printed ? t : -t / constants::hbar_eVs;
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) phases[i] = std::exp(kI * (es.eigenvalues()[i] * scale));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double unitarity_defect(const Eigen::Matrix4cd& u) {
  return (u.adjoint() * u - Eigen::Matrix4cd::Identity()).norm();
}

const char* swap_variant_name(SwapVariant v) {
  switch (v) {
    case SwapVariant::printed_t: return "printed-t";
    case SwapVariant::half_t: return "half-t";
    case SwapVariant::exact: return "exact";
  }
  return "printed-t";
}

SwapReport swap_protocol(double delta, SwapVariant variant, double Delta) {
  if (!(delta > 0.0)) throw InvalidArgument("swap needs delta > 0");
  if (!(Delta > 0.0)) Delta = swap_condition_delta(delta);
  const TwoQubitModel m = TwoQubitModel::special(Delta, delta);
  SwapReport r;
  r.Delta = Delta;
  r.delta = delta;
  r.omega1 = m.omega1();
  r.omega2 = m.omega2();
  r.omega3 = m.omega3();
  const double pi = constants::pi;
  switch (variant) {
    case SwapVariant::printed_t: r.t = pi / (2.0 * r.omega3); break;
    case SwapVariant::half_t: r.t = pi / (2.0 * r.omega2); break;
    case SwapVariant::exact: r.t = pi / (2.0 * delta); break;
  }
  const Eigen::Matrix4cd uc = evolve_closed_form(m, r.t);
  const Eigen::Matrix4cd ue = evolve_exact(m, r.t);
  // |10> is basis index 1, |01> index 2
  r.closed_10 = uc(1, 1);
  r.closed_01 = uc(2, 1);
  r.exact_10 = ue(1, 1);
  r.exact_01 = ue(2, 1);
  r.fidelity_closed = std::norm(r.closed_01);
  r.fidelity_exact = std::norm(r.exact_01);
  r.unitarity_defect_closed = unitarity_defect(uc);
  r.printed_residual = std::cos(pi * r.omega1 / (2.0 * r.omega2));
  return r;
}

}  // namespace sivalley
