#ifndef SIVALLEY_EIGENSOLVER_HPP
#define SIVALLEY_EIGENSOLVER_HPP

// Lowest eigenpairs of dense complex Hermitian matrices (LAPACK zheevr),
// with residual verification and deterministic phases.

#include <vector>

#include <Eigen/Dense>

namespace sivalley {

struct EigenPairs {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns, unit norm
  Eigen::VectorXd residuals; // ||H v - lambda v|| per pair
};

/// k lowest eigenpairs. Only the lower triangle is read, but the input must be
/// Hermitian to 1e-12 relative (InvalidArgument otherwise). Throws
/// NumericalError when LAPACK fails or a residual exceeds 1e-10 ||H||_F.
EigenPairs eigensolve(const Eigen::MatrixXcd& H, int k);

/// Same result, solving each symmetry block separately. labels[i] is the
/// symmetry label of basis index i. If H couples different labels the
/// blocking is abandoned and the full matrix is solved.
EigenPairs eigensolve_blocked(const Eigen::MatrixXcd& H, int k, const std::vector<int>& labels);

/// Rotates a vector so its largest-magnitude component is real and positive.
void fix_phase(Eigen::Ref<Eigen::VectorXcd> v);

double hermiticity_defect(const Eigen::MatrixXcd& H);

}  // namespace sivalley

#endif  // SIVALLEY_EIGENSOLVER_HPP
