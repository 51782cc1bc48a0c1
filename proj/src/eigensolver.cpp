#include "sivalley/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <lapacke.h>

#include "sivalley/errors.hpp"

namespace sivalley {

double hermiticity_defect(const Eigen::MatrixXcd& H) {
  const double scale = H.norm();
  if (scale == 0.0) return 0.0;
  return (H - H.adjoint()).norm() / scale;
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  if (v.size() == 0) return;
  double largest = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) largest = std::max(largest, std::abs(v[i]));
  if (largest == 0.0) return;
  // first component within rounding of the maximum, so near-ties resolve by index
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= largest * (1.0 - 1e-9)) {
      pivot = i;
      break;
    }
  }
  const std::complex<double> phase = std::conj(v[pivot]) / std::abs(v[pivot]);
  v *= phase;
  v[pivot] = std::abs(v[pivot]);
}

namespace {

EigenPairs solve_lapack(const Eigen::MatrixXcd& H, int k) {
  const int n = static_cast<int>(H.rows());
  Eigen::MatrixXcd a = H;  // zheevr destroys its input
  std::vector<double> w(n);
  Eigen::MatrixXcd z(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, reinterpret_cast<lapack_complex_double*>(a.data()), n, 0.0,
      0.0, 1, k, 0.0, &found, w.data(), reinterpret_cast<lapack_complex_double*>(z.data()), n,
      isuppz.data());
  if (info != 0 || found != k) {
    throw NumericalError("zheevr failed: info = " + std::to_string(info) + ", found " +
                         std::to_string(found) + " of " + std::to_string(k) +
                         " eigenpairs (n = " + std::to_string(n) + ")");
  }
  EigenPairs out;
  out.values = Eigen::Map<Eigen::VectorXd>(w.data(), k);
  out.vectors = std::move(z);
  return out;
}

void verify(const Eigen::MatrixXcd& H, EigenPairs& pairs) {
  const double tol = 1e-10 * std::max(H.norm(), 1e-300);
  const Eigen::Index k = pairs.values.size();
  pairs.residuals.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!std::isfinite(pairs.values[j])) throw NumericalError("non-finite eigenvalue");
    fix_phase(pairs.vectors.col(j));
    const double r = (H * pairs.vectors.col(j) - pairs.values[j] * pairs.vectors.col(j)).norm();
    pairs.residuals[j] = r;
    if (!(r <= tol)) {
      throw NumericalError("eigenpair " + std::to_string(j) + " residual " + std::to_string(r) +
                           " exceeds " + std::to_string(tol));
    }
  }
}

void check_input(const Eigen::MatrixXcd& H, int k) {
  if (H.rows() != H.cols()) throw InvalidArgument("eigensolve needs a square matrix");
  if (k < 1 || k > H.rows()) throw InvalidArgument("need 1 <= k <= dimension");
  if (!H.allFinite()) throw InvalidArgument("matrix has non-finite entries");
  if (hermiticity_defect(H) > 1e-12) throw InvalidArgument("matrix is not Hermitian");
}

}  // namespace

EigenPairs eigensolve(const Eigen::MatrixXcd& H, int k) {
  check_input(H, k);
  EigenPairs out;
  if (k == 0) {
    out.values.resize(0);
    out.vectors.resize(H.rows(), 0);
    out.residuals.resize(0);
    return out;
  }
  out = solve_lapack(H, k);
  verify(H, out);
  return out;
}

EigenPairs eigensolve_blocked(const Eigen::MatrixXcd& H, int k, const std::vector<int>& labels) {
  check_input(H, k);
  const Eigen::Index n = H.rows();
  if (static_cast<Eigen::Index>(labels.size()) != n) {
    throw InvalidArgument("one symmetry label per basis index required");
  }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[labels[i]].push_back(i);
  if (blocks.size() < 2 || k == 0) return eigensolve(H, k);

  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (labels[i] != labels[j]) off += std::norm(H(i, j));
  if (std::sqrt(off) > 1e-14 * H.norm()) return eigensolve(H, k);

  struct Candidate {
    double value;
    int block;
    int column;
  };
  std::vector<Candidate> candidates;
  std::vector<Eigen::MatrixXcd> block_vectors;
  std::vector<const std::vector<int>*> block_index;
  for (const auto& [label, idx] : blocks) {
    const int m = static_cast<int>(idx.size());
    Eigen::MatrixXcd sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub(i, j) = H(idx[i], idx[j]);
    const int kb = std::min(k, m);
    EigenPairs part = solve_lapack(sub, kb);
    const int b = static_cast<int>(block_vectors.size());
    for (int c = 0; c < kb; ++c) candidates.push_back({part.values[c], b, c});
    block_vectors.push_back(std::move(part.vectors));
    block_index.push_back(&idx);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  EigenPairs out;
  out.values.resize(k);
  out.vectors = Eigen::MatrixXcd::Zero(n, k);
  for (int j = 0; j < k; ++j) {
    const Candidate& c = candidates[j];
    out.values[j] = c.value;
    const auto& idx = *block_index[c.block];
    for (size_t i = 0; i < idx.size(); ++i) out.vectors(idx[i], j) = block_vectors[c.block](i, c.column);
  }
  verify(H, out);
  return out;
}

}  // namespace sivalley
