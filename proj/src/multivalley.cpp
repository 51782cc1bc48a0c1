#include "sivalley/multivalley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sivalley/eigensolver.hpp"
#include "sivalley/errors.hpp"
#include "sivalley/parallel.hpp"

namespace sivalley {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

DotSpec without_field(DotSpec spec) {
  spec.field_V_per_nm = 0.0;
  return spec;
}

Eigen::MatrixXcd field_free_hamiltonian(const Valley& v, const DotSpec& spec, const BasisSet& basis) {
  Eigen::MatrixXcd h = magnetic_matrix(spec.B_tesla, v, basis, spec.gauge);
  h.real() += kinetic_matrix(v, basis) + potential_matrix(without_field(spec), basis);
  return h;
}

LevelSet to_levels(EigenPairs&& p) {
  return LevelSet{std::move(p.values), std::move(p.vectors), std::move(p.residuals)};
}

Valley pick(const std::array<Valley, 6>& set, int index) {
  if (index < 1 || index > 6) throw InvalidArgument("valley index must be 1..6");
  return set[index - 1];
}

}  // namespace

ValleyPairModel::ValleyPairModel(const DotSpec& spec, int l, int lp, const SolverOptions& options)
    : spec_(without_field(spec)) {
  spec_.validate();
  if (l == lp) throw InvalidArgument("a valley pair needs two different valleys");
  const auto set = valley_set(options.si, options.K_fraction);
  l_ = pick(set, l);
  lp_ = pick(set, lp);
  basis_ = BasisSet::build(spec_, options.modes);
  constants_ = coupling_constants(l_, lp_, options.band);
  opposite_ = dot(l_.axis, lp_.axis) < -0.5;

  h0_l_ = field_free_hamiltonian(l_, spec_, basis_);
  h0_lp_ = l_.mass == lp_.mass ? h0_l_ : field_free_hamiltonian(lp_, spec_, basis_);
  z_ = position_z_matrix(basis_);

  KernelOptions ko;
  ko.source = options.source;
  ko.left_axis = l_.axis_index();
  ko.right_axis = lp_.axis_index();
  ko.valley_wavenumber = norm(l_.K);
  const SplitKernel k = oscillatory_kernel_split(l_.K - lp_.K, spec_, basis_, ko);
  const double I = constants_.I;
  const double J = norm(constants_.J.J);
  const double Jp = norm(constants_.J.J_prime);
  auto combine = [&](const OscillatoryKernel& part) -> Eigen::MatrixXcd {
    return I * part.value - kI * J * part.grad_left - kI * Jp * part.grad_right;
  };
  c_conf_ = combine(k.confinement);
  c_field_ = combine(k.field);

  labels_.resize(basis_.size());
  for (int f = 0; f < basis_.size(); ++f) labels_[f] = basis_.xy_parity(f);
}

Eigen::MatrixXcd ValleyPairModel::single_valley(int which, double field) const {
  Eigen::MatrixXcd h = which == 0 ? h0_l_ : h0_lp_;
  if (field != 0.0) h.real() += field * z_;
  return h;
}

Eigen::MatrixXcd ValleyPairModel::coupling_block(double field) const {
  if (field == 0.0) return c_conf_;
  return c_conf_ + field * c_field_;
}

Eigen::MatrixXcd ValleyPairModel::hamiltonian(double field) const {
  if (!opposite_) throw InvalidArgument("coupled Hamiltonian is built for opposite valleys only");
  const int n = size();
  Eigen::MatrixXcd H(2 * n, 2 * n);
  const Eigen::MatrixXcd c = coupling_block(field);
  H.topLeftCorner(n, n) = single_valley(0, field);
  H.bottomRightCorner(n, n) = single_valley(1, field);
  H.topRightCorner(n, n) = c;
  H.bottomLeftCorner(n, n) = c.adjoint();
  return H;
}

std::vector<int> ValleyPairModel::coupled_labels() const {
  // only a q along z leaves the x/y reflections intact
  if (l_.axis_index() == 2 && lp_.axis_index() == 2) {
    std::vector<int> out(labels_);
    out.insert(out.end(), labels_.begin(), labels_.end());
    return out;
  }
  return std::vector<int>(2 * labels_.size(), 0);
}

LevelSet ValleyPairModel::solve_single(int which, double field, int k) const {
  return to_levels(eigensolve_blocked(single_valley(which, field), k, labels_));
}

LevelSet ValleyPairModel::solve_coupled(double field, int k) const {
  return to_levels(eigensolve_blocked(hamiltonian(field), k, coupled_labels()));
}

Eigen::MatrixXcd assemble(int l, int lp, const DotSpec& spec, const SolverOptions& options) {
  const ValleyPairModel model(spec, l, lp, options);
  if (!model.opposite()) {
    throw InvalidArgument("perpendicular valleys: use cross_axis_coupling");
  }
  return model.hamiltonian(spec.field_V_per_nm);
}

SplittingResult splitting_and_coupling(const ValleyPairModel& model, double field) {
  const LevelSet a = model.solve_single(0, field, 1);
  const LevelSet b = model.solve_single(1, field, 1);
  const Eigen::MatrixXcd c = model.coupling_block(field);
  SplittingResult out;
  out.delta = std::abs(a.vectors.col(0).dot(c * b.vectors.col(0)));
  const LevelSet pair = model.solve_coupled(field, 2);
  out.epsilon = pair.energies[1] - pair.energies[0];
  out.ground = pair.energies[0];
  return out;
}

std::array<double, 6> valley_ground_energies(const DotSpec& spec, const SolverOptions& options) {
  spec.validate();
  const BasisSet basis = BasisSet::build(spec, options.modes);
  const auto set = valley_set(options.si, options.K_fraction);
  std::vector<int> labels(basis.size());
  for (int f = 0; f < basis.size(); ++f) labels[f] = basis.xy_parity(f);
  const Eigen::MatrixXd z = position_z_matrix(basis);
  std::array<double, 6> out{};
  for (int v = 0; v < 6; ++v) {
    if (v % 2 == 1 && set[v].mass == set[v - 1].mass) {
      out[v] = out[v - 1];
      continue;
    }
    Eigen::MatrixXcd h = field_free_hamiltonian(set[v], spec, basis);
    h.real() += spec.field_V_per_nm * z;
    out[v] = eigensolve_blocked(h, 1, labels).values[0];
  }
  return out;
}

SplittingResult splitting_and_coupling(const DotSpec& spec, const SolverOptions& options) {
  const auto e = valley_ground_energies(spec, options);
  const double transverse = std::min({e[0], e[1], e[2], e[3]});
  if (!(std::min(e[4], e[5]) <= transverse)) {
    throw InvalidArgument("the ground state does not belong to valleys 5 and 6");
  }
  const ValleyPairModel model(spec, 5, 6, options);
  return splitting_and_coupling(model, spec.field_V_per_nm);
}

char parity_symbol(Parity p) {
  switch (p) {
    case Parity::symmetric: return 'S';
    case Parity::antisymmetric: return 'A';
    case Parity::undetermined: return '-';
  }
  return '-';
}

Parity coupled_parity(const ValleyPairModel& model, double field, const Eigen::VectorXcd& state) {
  const int n = model.size();
  if (state.size() != 2 * n) throw DimensionMismatch("state is not a coupled-pair vector");
  const double e = 2.0 * std::real(state.head(n).dot(model.coupling_block(field) * state.tail(n)));
  if (std::abs(e) <= 1e-12) return Parity::undetermined;
  return e < 0.0 ? Parity::symmetric : Parity::antisymmetric;
}

std::vector<SpectrumRow> Spectrum::rows() const {
  std::vector<SpectrumRow> out;
  for (std::size_t p = 0; p < sweep.points.size(); ++p) {
    const TrackedPoint& pt = sweep.points[p];
    const int k = static_cast<int>(pt.ids.size());
    for (int id = 0; id < k; ++id) {
      const int c = sweep.column(p, id);
      SpectrumRow r;
      r.field = pt.field;
      r.level_id = id;
      r.energy = pt.levels.energies[c];
      r.valley_pair = valley_pair;
      r.parity = p < parity.size() ? parity_symbol(parity[p][c]) : '-';
      r.residual = pt.levels.residuals[c];
      out.push_back(r);
    }
  }
  return out;
}

Spectrum sweep_field(const ValleyPairModel& model, const std::vector<double>& grid, int k,
                     int threads) {
  if (grid.size() < 2) throw InvalidArgument("a field sweep needs at least two points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InvalidArgument("field grid must be strictly increasing");
  }
  std::vector<TrackedPoint> points(grid.size());
  std::vector<std::vector<Parity>> parity(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    points[i].field = grid[i];
    points[i].levels = model.solve_coupled(grid[i], k);
    parity[i].resize(k);
    for (int j = 0; j < k; ++j) {
      parity[i][j] = coupled_parity(model, grid[i], points[i].levels.vectors.col(j));
    }
  });
  Spectrum s;
  s.sweep = track_levels(std::move(points));
  s.parity = std::move(parity);
  s.valley_pair = std::to_string(model.valley(0).index) + "-" + std::to_string(model.valley(1).index);
  return s;
}

std::array<int, 3> dominant_mode(const BasisSet& basis, const Eigen::VectorXcd& state) {
  if (state.size() != basis.size()) throw DimensionMismatch("state does not match the basis");
  Eigen::Index best = 0;
  state.cwiseAbs2().maxCoeff(&best);
  auto m = basis.modes_of(static_cast<int>(best));
  return {m[0] + 1, m[1] + 1, m[2] + 1};
}

std::array<int, 3> separable_mode(const Valley& valley, const Vec3& dims_nm, int label) {
  if (label < 0) throw InvalidArgument("level label must be >= 0");
  // enough modes per axis to contain the first label+1 states
  const int n = label + 1;
  struct Entry {
    double e;
    std::array<int, 3> m;
  };
  std::vector<Entry> all;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        const std::array<int, 3> m{a, b, c};
        double e = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double kk = m[k] * constants::pi / dims_nm[k];
          e += constants::hbar2_over_2m0 / valley.mass[k] * kk * kk;
        }
        all.push_back({e, m});
      }
  std::stable_sort(all.begin(), all.end(), [](const Entry& x, const Entry& y) { return x.e < y.e; });
  return all[label].m;
}

int level_with_mode(const BasisSet& basis, const LevelSet& levels, const std::array<int, 3>& mode) {
  for (Eigen::Index j = 0; j < levels.vectors.cols(); ++j) {
    if (dominant_mode(basis, levels.vectors.col(j)) == mode) return static_cast<int>(j);
  }
  return -1;
}

CrossAxisResult cross_axis_coupling(const DotSpec& spec, const SolverOptions& options) {
  const double F = spec.field_V_per_nm;
  const ValleyPairModel zz(spec, 5, 6, options);
  const ValleyPairModel xz(spec, 1, 5, options);
  const Eigen::VectorXcd f5 = zz.solve_single(0, F, 1).vectors.col(0);
  const Eigen::VectorXcd f6 = zz.solve_single(1, F, 1).vectors.col(0);
  const Eigen::VectorXcd f1 = xz.solve_single(0, F, 1).vectors.col(0);
  CrossAxisResult out;
  out.denominator = std::abs(f5.dot(zz.coupling_block(F) * f6));
  out.numerator = std::abs(f1.dot(xz.coupling_block(F) * f5));
  if (out.denominator > 0.0) {
    out.ratio = out.numerator / out.denominator;
  } else {
    out.ratio = out.numerator > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return out;
}

}  // namespace sivalley
