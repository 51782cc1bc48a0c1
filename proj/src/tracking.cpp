#include "sivalley/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sivalley/errors.hpp"

namespace sivalley {

double TrackedSweep::energy(std::size_t p, int id) const {
  return points.at(p).levels.energies[column(p, id)];
}

int TrackedSweep::column(std::size_t p, int id) const {
  const auto& ids = points.at(p).ids;
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw InvalidArgument("level id " + std::to_string(id) + " is not tracked");
  return static_cast<int>(it - ids.begin());
}

namespace {

constexpr double kTie = 1e-6;

void match(const TrackedPoint& prev, TrackedPoint& cur, std::vector<std::string>& warnings) {
  const int k = static_cast<int>(prev.levels.energies.size());
  if (cur.levels.energies.size() != k || cur.levels.vectors.rows() != prev.levels.vectors.rows()) {
    throw InvalidArgument("level sets at adjacent points differ in shape");
  }
  const Eigen::MatrixXd overlap = (prev.levels.vectors.adjoint() * cur.levels.vectors).cwiseAbs2();
  std::vector<bool> row_used(k, false), col_used(k, false);
  cur.ids.assign(k, -1);
  for (int step = 0; step < k; ++step) {
    double best = -1.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!row_used[i] && !col_used[j]) best = std::max(best, overlap(i, j));
    // among near-equal overlaps pick the closest energy, then the lowest indices
    int bi = -1, bj = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (row_used[i] || col_used[j] || overlap(i, j) < best - kTie) continue;
        const double d = std::abs(prev.levels.energies[i] - cur.levels.energies[j]);
        if (d < bd) {
          bd = d;
          bi = i;
          bj = j;
        }
      }
    // ambiguous only if a near-equal contender competes for the same state
    bool ambiguous = false;
    for (int t = 0; t < k; ++t) {
      if (t != bj && !col_used[t] && overlap(bi, t) >= best - kTie) ambiguous = true;
      if (t != bi && !row_used[t] && overlap(t, bj) >= best - kTie) ambiguous = true;
    }
    if (ambiguous && best > kTie) {
      std::ostringstream msg;
      msg << "ambiguous overlap (" << best << ") for level " << prev.ids[bi] << " at field "
          << cur.field << " V/nm; assigned by energy";
      warnings.push_back(msg.str());
    }
    row_used[bi] = true;
    col_used[bj] = true;
    cur.ids[bj] = prev.ids[bi];
  }
}

}  // namespace

TrackedSweep track_levels(std::vector<TrackedPoint> points) {
  TrackedSweep sweep;
  if (points.empty()) return sweep;
  const int k = static_cast<int>(points[0].levels.energies.size());
  points[0].ids.resize(k);
  for (int j = 0; j < k; ++j) points[0].ids[j] = j;
  for (std::size_t p = 1; p < points.size(); ++p) match(points[p - 1], points[p], sweep.warnings);
  sweep.points = std::move(points);
  return sweep;
}

TrackedSweep track_levels(const LevelSolver& solver, const std::vector<double>& grid) {
  std::vector<TrackedPoint> points;
  points.reserve(grid.size());
  for (double f : grid) points.push_back({f, solver(f), {}});
  return track_levels(std::move(points));
}

const char* crossing_kind_name(CrossingKind kind) {
  switch (kind) {
    case CrossingKind::anticrossing: return "anticrossing";
    case CrossingKind::crossing: return "crossing";
    case CrossingKind::none: return "none";
  }
  return "none";
}

namespace {

// Adiabatic gap between the two eigenstates living mostly in span{a, b}.
struct PairGap {
  const LevelSolver& solver;
  Eigen::VectorXcd a, b;
  std::vector<std::pair<double, double>>& trace;

  double operator()(double f) const {
    const LevelSet s = solver(f);
    const Eigen::Index k = s.energies.size();
    Eigen::VectorXd weight(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      weight[j] = std::norm(a.dot(s.vectors.col(j))) + std::norm(b.dot(s.vectors.col(j)));
    }
    Eigen::Index j1 = 0;
    weight.maxCoeff(&j1);
    weight[j1] = -1.0;
    Eigen::Index j2 = 0;
    weight.maxCoeff(&j2);
    const double gap = std::abs(s.energies[j1] - s.energies[j2]);
    trace.emplace_back(f, gap);
    return gap;
  }
};

struct GoldenResult {
  double x, fx, lo, hi;
};

GoldenResult golden(const PairGap& g, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = g(x2);
    }
  }
  return f1 <= f2 ? GoldenResult{x1, f1, lo, hi} : GoldenResult{x2, f2, lo, hi};
}

}  // namespace

AnticrossingResult find_anticrossing(const LevelSolver& solver, int level_a, int level_b,
                                     double f_lo, double f_hi, const AnticrossingSearch& search) {
  if (!(f_hi > f_lo)) throw InvalidArgument("anticrossing range must be increasing");
  if (search.coarse_points < 3) throw InvalidArgument("need at least 3 coarse points");
  if (level_a == level_b) throw InvalidArgument("need two distinct levels");

  AnticrossingResult out;
  std::vector<double> grid(search.coarse_points);
  for (int i = 0; i < search.coarse_points; ++i) {
    grid[i] = f_lo + (f_hi - f_lo) * i / (search.coarse_points - 1);
  }
  out.coarse = track_levels(solver, grid);
  const TrackedSweep& sweep = out.coarse;

  std::size_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double d = std::abs(sweep.energy(p, level_b) - sweep.energy(p, level_a));
    if (d < best_gap) {
      best_gap = d;
      best = p;
    }
  }
  out.field = grid[best];
  out.gap = best_gap;
  if (best == 0 || best + 1 == grid.size()) {
    out.kind = CrossingKind::none;
    return out;
  }

  const auto& ref = sweep.points[best].levels.vectors;
  PairGap g{solver, ref.col(sweep.column(best, level_a)), ref.col(sweep.column(best, level_b)),
            out.trace};
  GoldenResult r = golden(g, grid[best - 1], grid[best + 1], search.tolerance);

  // A gap no larger than (coarse slope x final bracket) is unresolved and may
  // be a true crossing: keep shrinking the bracket and see whether it follows.
  const double spacing = grid[1] - grid[0];
  auto tracked_gap = [&](std::size_t p) {
    return std::abs(sweep.energy(p, level_b) - sweep.energy(p, level_a));
  };
  const double slope =
      std::max(tracked_gap(best - 1), tracked_gap(best + 1)) / spacing;
  const double width = r.hi - r.lo;
  if (r.fx > search.gap_floor && r.fx <= slope * width) {
    const double fine = 1e-12 * std::max(1.0, std::abs(f_hi - f_lo));
    if (width > fine) r = golden(g, r.lo, r.hi, fine);
  }
  out.field = r.x;
  out.gap = r.fx;
  if (r.fx <= search.gap_floor) {
    out.kind = CrossingKind::crossing;
    out.gap = 0.0;
  } else {
    out.kind = CrossingKind::anticrossing;
  }
  return out;
}

}  // namespace sivalley
