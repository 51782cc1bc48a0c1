#ifndef SIVALLEY_TRIG_INTEGRALS_HPP
#define SIVALLEY_TRIG_INTEGRALS_HPP

// Closed-form 1D integrals over products of sine basis functions.
//
// Along one axis the basis is phi_n(u) = sqrt(2/L) sin(k_n (u + L/2)),
// k_n = n pi / L, n = 1..N, on the centred box [-L/2, L/2]. Every matrix
// element the dot model needs factorises into integrals of the form
//
//   int_a^b  phi_m^(dm)(u) phi_n^(dn)(u) u^p exp(-i q u) du
//
// which reduce to moments of complex exponentials. Those are evaluated
// analytically, so the rapidly oscillating inter-valley factors
// (period ~0.3 nm) cost nothing extra.

#include <complex>

#include <Eigen/Dense>

namespace sivalley {

/// int_a^b u^p exp(i kappa u) du for p = 0, 1, 2.
std::complex<double> exp_moment(int power, double kappa, double a, double b);

struct AxisBasis {
  double interior_length = 0.0;  // dot extent along the axis
  double box_length = 0.0;       // embedding box (>= interior)
  int modes = 0;

  double wavenumber(int n) const;  // n is 1-based
  double value(int n, double u) const;
  double derivative(int n, double u) const;
};

enum class Interval { box, interior };

/// Matrix over (m, n) of int phi_m^(dm) phi_n^(dn) u^p exp(-i q u) du.
/// Derivative orders are 0 or 1; p is 0, 1 or 2.
Eigen::MatrixXcd axis_integral(const AxisBasis& basis, int dm, int dn, int power, double q,
                               Interval interval);

/// Real symmetric variant for q = 0 and dm = dn = 0; mirrored from the upper triangle.
Eigen::MatrixXd axis_moment(const AxisBasis& basis, int power, Interval interval);

/// <m| d/du |n> over the box: real antisymmetric.
Eigen::MatrixXd axis_derivative(const AxisBasis& basis);

}  // namespace sivalley

#endif  // SIVALLEY_TRIG_INTEGRALS_HPP
