#include "sivalley/trig_integrals.hpp"

#include <algorithm>
#include <cmath>

#include "sivalley/errors.hpp"
#include "sivalley/units.hpp"

namespace sivalley {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Taylor expansion of exp(i kappa u), used when |kappa u| is small on the
// interval so that the closed form would cancel catastrophically.
cd exp_moment_series(int power, double kappa, double a, double b) {
  cd sum = 0.0;
  cd coeff = 1.0;  // (i kappa)^j / j!
  double apow = std::pow(a, power + 1);
  double bpow = std::pow(b, power + 1);
  for (int j = 0; j < 60; ++j) {
    const int n = power + j + 1;
    const cd term = coeff * (bpow - apow) / static_cast<double>(n);
    sum += term;
    // bound rather than the term itself: on symmetric intervals every other term vanishes
    const double bound = std::abs(coeff) * std::max(std::abs(apow), std::abs(bpow)) * 2.0 / n;
    if (j > 4 && bound <= 1e-18 * std::max(1.0, std::abs(sum))) break;
    coeff *= kI * kappa / static_cast<double>(j + 1);
    apow *= a;
    bpow *= b;
  }
  return sum;
}

cd primitive(int power, double kappa, double u) {
  const cd ik = kI * kappa;
  const cd e = std::exp(ik * u);
  switch (power) {
    case 0: return e / ik;
    case 1: return e * (u / ik - 1.0 / (ik * ik));
    case 2: return e * (u * u / ik - 2.0 * u / (ik * ik) + 2.0 / (ik * ik * ik));
    default: break;
  }
  throw InvalidArgument("exp_moment supports powers 0..2");
}

}  // namespace

std::complex<double> exp_moment(int power, double kappa, double a, double b) {
  if (power < 0 || power > 2) throw InvalidArgument("exp_moment supports powers 0..2");
  const double reach = std::abs(kappa) * std::max(std::abs(a), std::abs(b));
  if (reach <= 1.0) return exp_moment_series(power, kappa, a, b);
  return primitive(power, kappa, b) - primitive(power, kappa, a);
}

double AxisBasis::wavenumber(int n) const { return n * constants::pi / box_length; }

double AxisBasis::value(int n, double u) const {
  return std::sqrt(2.0 / box_length) * std::sin(wavenumber(n) * (u + 0.5 * box_length));
}

double AxisBasis::derivative(int n, double u) const {
  const double k = wavenumber(n);
  return std::sqrt(2.0 / box_length) * k * std::cos(k * (u + 0.5 * box_length));
}

Eigen::MatrixXcd axis_integral(const AxisBasis& basis, int dm, int dn, int power, double q,
                               Interval interval) {
  if (dm < 0 || dm > 1 || dn < 0 || dn > 1) {
    throw InvalidArgument("axis_integral supports derivative orders 0 and 1");
  }
  const double half = 0.5 * (interval == Interval::box ? basis.box_length : basis.interior_length);
  const double a = -half;
  const double b = half;
  const int N = basis.modes;
  const double norm2 = 2.0 / basis.box_length;
  Eigen::MatrixXcd out(N, N);
  // phi_n^(d)(u) = A k^d sin(k u + n pi/2 + d pi/2)
  //             = A k^d (e^{i(ku+ph)} - e^{-i(ku+ph)}) / (2i)
  for (int m = 1; m <= N; ++m) {
    const double km = basis.wavenumber(m);
    const double phm = 0.5 * constants::pi * (m + dm);
    for (int n = 1; n <= N; ++n) {
      const double kn = basis.wavenumber(n);
      const double phn = 0.5 * constants::pi * (n + dn);
      cd acc = 0.0;
      for (int s = -1; s <= 1; s += 2) {
        for (int t = -1; t <= 1; t += 2) {
          const double kappa = s * km + t * kn - q;
          const cd phase = std::exp(kI * (s * phm + t * phn));
          acc += static_cast<double>(s * t) * phase * exp_moment(power, kappa, a, b);
        }
      }
      // (1/2i)^2 = -1/4
      out(m - 1, n - 1) = -0.25 * norm2 * std::pow(km, dm) * std::pow(kn, dn) * acc;
    }
  }
  return out;
}

Eigen::MatrixXd axis_moment(const AxisBasis& basis, int power, Interval interval) {
  const Eigen::MatrixXcd full = axis_integral(basis, 0, 0, power, 0.0, interval);
  const int N = basis.modes;
  Eigen::MatrixXd out(N, N);
  for (int m = 0; m < N; ++m) {
    for (int n = m; n < N; ++n) {
      out(m, n) = full(m, n).real();
      out(n, m) = out(m, n);
    }
  }
  return out;
}

Eigen::MatrixXd axis_derivative(const AxisBasis& basis) {
  const Eigen::MatrixXcd full = axis_integral(basis, 0, 1, 0, 0.0, Interval::box);
  const int N = basis.modes;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N, N);
  for (int m = 0; m < N; ++m) {
    for (int n = m + 1; n < N; ++n) {
      out(m, n) = full(m, n).real();
      out(n, m) = -out(m, n);
    }
  }
  return out;
}

}  // namespace sivalley
