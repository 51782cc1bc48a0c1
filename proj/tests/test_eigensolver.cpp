#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "sivalley/eigensolver.hpp"
#include "sivalley/errors.hpp"

using namespace sivalley;
using cd = std::complex<double>;

namespace {

Eigen::MatrixXcd random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = cd(g(rng), g(rng));
  return 0.5 * (A + A.adjoint());
}

}  // namespace

TEST_CASE("scaled identity") {
  const EigenPairs p = eigensolve(2.5 * Eigen::MatrixXcd::Identity(6, 6), 6);
  for (int i = 0; i < 6; ++i) CHECK(p.values[i] == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("2x2 off-diagonal") {
  Eigen::MatrixXcd H(2, 2);
  H << 0.0, 0.3, 0.3, 0.0;
  const EigenPairs p = eigensolve(H, 2);
  CHECK(p.values[0] == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(p.values[1] == doctest::Approx(0.3).epsilon(1e-15));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(p.vectors(0, 0) - r) < 1e-15);
  CHECK(std::abs(p.vectors(1, 0) + r) < 1e-15);
  CHECK(std::abs(p.vectors(0, 1) - r) < 1e-15);
  CHECK(std::abs(p.vectors(1, 1) - r) < 1e-15);
}

TEST_CASE("random Hermitian: spectral mapping oracle") {
  const Eigen::MatrixXcd H = random_hermitian(50, 7);
  const EigenPairs p = eigensolve(H, 50);
  const EigenPairs p2 = eigensolve(H * H, 50);
  std::vector<double> sq(50);
  for (int i = 0; i < 50; ++i) sq[i] = p.values[i] * p.values[i];
  std::sort(sq.begin(), sq.end());
  for (int i = 0; i < 50; ++i) CHECK(std::abs(sq[i] - p2.values[i]) <= 1e-9);
  // trace oracle
  CHECK(p.values.sum() == doctest::Approx(H.trace().real()).epsilon(1e-12));
}

TEST_CASE("residuals, orthonormality and phases") {
  const Eigen::MatrixXcd H = random_hermitian(40, 11);
  const EigenPairs p = eigensolve(H, 12);
  CHECK(p.values.size() == 12);
  for (int i = 1; i < 12; ++i) CHECK(p.values[i] >= p.values[i - 1]);
  const Eigen::MatrixXcd G = p.vectors.adjoint() * p.vectors;
  CHECK((G - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-10);
  for (int i = 0; i < 12; ++i) {
    const double res = (H * p.vectors.col(i) - p.values[i] * p.vectors.col(i)).norm();
    CHECK(res == doctest::Approx(p.residuals[i]).epsilon(1e-6).scale(1e-14));
    CHECK(res <= 1e-10 * H.norm());
    Eigen::Index at = 0;
    p.vectors.col(i).cwiseAbs().maxCoeff(&at);
    CHECK(p.vectors(at, i).imag() == 0.0);
    CHECK(p.vectors(at, i).real() > 0.0);
  }
}

TEST_CASE("deterministic") {
  const Eigen::MatrixXcd H = random_hermitian(30, 3);
  const EigenPairs a = eigensolve(H, 5), b = eigensolve(H, 5);
  CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("blocked solve agrees with the full solve") {
  const int n = 24;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = (i * 7) % 3;
  Eigen::MatrixXcd H = random_hermitian(n, 5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (labels[i] != labels[j]) H(i, j) = 0.0;
  const EigenPairs full = eigensolve(H, 10), blocked = eigensolve_blocked(H, 10, labels);
  CHECK((full.values - blocked.values).cwiseAbs().maxCoeff() < 1e-12);
  for (int i = 0; i < 10; ++i) {
    const double res = (H * blocked.vectors.col(i) - blocked.values[i] * blocked.vectors.col(i)).norm();
    CHECK(res < 1e-12);
  }
  // coupling across labels falls back to the full problem
  H(0, 1) = H(1, 0) = 0.5;
  const EigenPairs fb = eigensolve_blocked(H, 10, labels);
  CHECK((fb.values - eigensolve(H, 10).values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("input validation") {
  Eigen::MatrixXcd H = random_hermitian(5, 1);
  CHECK_THROWS_AS(eigensolve(H, 0), InvalidArgument);
  CHECK_THROWS_AS(eigensolve(H, 6), InvalidArgument);
  CHECK_THROWS_AS(eigensolve(Eigen::MatrixXcd::Zero(3, 4), 1), InvalidArgument);
  Eigen::MatrixXcd bad = H;
  bad(0, 1) += 1e-3;
  CHECK(hermiticity_defect(bad) > 1e-12);
  CHECK_THROWS_AS(eigensolve(bad, 2), InvalidArgument);
  bad = H;
  bad(2, 2) = std::nan("");
  CHECK_THROWS_AS(eigensolve(bad, 2), InvalidArgument);
  CHECK(hermiticity_defect(H) == 0.0);
}

TEST_CASE("fix_phase") {
  Eigen::VectorXcd v(3);
  v << cd(0.1, 0.2), cd(0.0, -0.9), cd(0.3, 0.0);
  fix_phase(v);
  CHECK(v[1].imag() == 0.0);
  CHECK(v[1].real() == doctest::Approx(0.9).epsilon(1e-15));
}
