#ifndef SIVALLEY_TRACKING_HPP
#define SIVALLEY_TRACKING_HPP

// Following eigenstates through a parameter sweep by eigenvector overlap, and
// locating avoided crossings between two followed levels.

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sivalley {

struct LevelSet {
  Eigen::VectorXd energies;  // ascending
  Eigen::MatrixXcd vectors;  // columns
  Eigen::VectorXd residuals;
};

/// Lowest levels of some Hermitian problem at a given field (V/nm).
using LevelSolver = std::function<LevelSet(double field)>;

struct TrackedPoint {
  double field = 0.0;
  LevelSet levels;
  std::vector<int> ids;  // ids[j] = tracked id of column j
};

struct TrackedSweep {
  std::vector<TrackedPoint> points;
  std::vector<std::string> warnings;

  /// Energy of tracked level `id` at point p.
  double energy(std::size_t p, int id) const;
  /// Column holding tracked level `id` at point p.
  int column(std::size_t p, int id) const;
};

/// Greedy maximum-overlap matching between adjacent points. At the first point
/// ids follow energy order. Overlaps within 1e-6 of each other in one row are
/// reported as a warning and resolved by energy proximity.
TrackedSweep track_levels(const LevelSolver& solver, const std::vector<double>& grid);

/// Same matching applied to precomputed level sets.
TrackedSweep track_levels(std::vector<TrackedPoint> points);

enum class CrossingKind { anticrossing, crossing, none };

const char* crossing_kind_name(CrossingKind kind);

struct AnticrossingSearch {
  int coarse_points = 31;
  double tolerance = 1e-5;   // V/nm (0.1 kV/cm)
  double gap_floor = 1e-9;   // eV; smaller minimum gaps count as a true crossing
};

struct AnticrossingResult {
  CrossingKind kind = CrossingKind::none;
  double field = 0.0;  // V/nm
  double gap = 0.0;    // eV; 0 for a true crossing
  std::vector<std::pair<double, double>> trace;  // (field, gap) at every refinement evaluation
  TrackedSweep coarse;
};

/// Minimum of E_b - E_a between tracked levels a and b over [f_lo, f_hi].
AnticrossingResult find_anticrossing(const LevelSolver& solver, int level_a, int level_b,
                                     double f_lo, double f_hi, const AnticrossingSearch& search = {});

}  // namespace sivalley

#endif  // SIVALLEY_TRACKING_HPP
