#ifndef SIVALLEY_MULTIVALLEY_HPP
#define SIVALLEY_MULTIVALLEY_HPP

// Coupled two-valley envelope problem for a valley pair, its field sweeps,
// the valley splitting and coupling, and the cross-axis diagnostic.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sivalley/dot.hpp"
#include "sivalley/tracking.hpp"
#include "sivalley/valley.hpp"

namespace sivalley {

struct SolverOptions {
  std::array<int, 3> modes{8, 10, 12};
  CouplingSource source = CouplingSource::full;
  BandModel band;
  SiliconParams si;
  double K_fraction = 0.85;
};

/// Field-independent pieces of a valley pair, so that at field F
///   H_l(F)   = H0_l + F Z
///   H_ll'(F) = C_conf + F C_field
class ValleyPairModel {
 public:
  /// spec.field_V_per_nm is ignored; everything else is fixed here.
  /// l and lp are 1-based valley indices.
  ValleyPairModel(const DotSpec& spec, int l, int lp, const SolverOptions& options = {});

  const BasisSet& basis() const { return basis_; }
  const Valley& valley(int which) const { return which == 0 ? l_ : lp_; }
  const CouplingConstants& constants() const { return constants_; }
  bool opposite() const { return opposite_; }
  int size() const { return basis_.size(); }

  /// which = 0 for l, 1 for l'.
  Eigen::MatrixXcd single_valley(int which, double field) const;
  Eigen::MatrixXcd coupling_block(double field) const;
  /// [[H_l, H_ll'], [H_ll'^dagger, H_l']]; opposite pairs only.
  Eigen::MatrixXcd hamiltonian(double field) const;

  /// Basis symmetry labels (x/y reflection parity) of the single-valley problem.
  const std::vector<int>& single_labels() const { return labels_; }
  /// Labels of the coupled problem when the pair's coupling conserves them, else all zero.
  std::vector<int> coupled_labels() const;

  LevelSet solve_single(int which, double field, int k) const;
  LevelSet solve_coupled(double field, int k) const;

 private:
  DotSpec spec_;
  BasisSet basis_;
  Valley l_, lp_;
  CouplingConstants constants_;
  bool opposite_ = false;
  Eigen::MatrixXcd h0_l_, h0_lp_;
  Eigen::MatrixXd z_;
  Eigen::MatrixXcd c_conf_, c_field_;
  std::vector<int> labels_;
};

/// Coupled Hamiltonian at spec.field_V_per_nm for an opposite pair.
/// Throws InvalidArgument for a perpendicular pair.
Eigen::MatrixXcd assemble(int l, int lp, const DotSpec& spec, const SolverOptions& options = {});

struct SplittingResult {
  double epsilon = 0.0;  // E_1 - E_0 of the coupled problem, eV
  double delta = 0.0;    // |<F_l|H_ll'|F_l'>|, eV
  double ground = 0.0;   // E_0, eV
};

/// Splitting and coupling at a field using a prepared (5, 6) model.
SplittingResult splitting_and_coupling(const ValleyPairModel& model, double field);

/// Builds the (5, 6) model for spec, checks the z valleys hold the ground
/// state (InvalidArgument otherwise) and evaluates at spec.field_V_per_nm.
SplittingResult splitting_and_coupling(const DotSpec& spec, const SolverOptions& options = {});

/// Lowest single-valley energy of each valley (index 0..5) at spec's field.
std::array<double, 6> valley_ground_energies(const DotSpec& spec, const SolverOptions& options = {});

enum class Parity { symmetric, antisymmetric, undetermined };
char parity_symbol(Parity p);

/// S when the state gains energy from the inter-valley block with negative sign.
Parity coupled_parity(const ValleyPairModel& model, double field, const Eigen::VectorXcd& state);

struct SpectrumRow {
  double field = 0.0;  // V/nm
  int level_id = 0;
  double energy = 0.0;
  std::string valley_pair;
  char parity = '-';
  double residual = 0.0;
};

struct Spectrum {
  TrackedSweep sweep;
  std::vector<std::vector<Parity>> parity;  // [point][column]
  std::vector<SpectrumRow> rows() const;
  std::string valley_pair;
};

/// Tracked sweep of the lowest k coupled levels. Grid strictly increasing, >= 2 points.
Spectrum sweep_field(const ValleyPairModel& model, const std::vector<double>& grid, int k,
                     int threads = 1);

/// 1-based (n_x, n_y, n_z) of the basis function carrying most of the weight
/// of a single-valley state.
std::array<int, 3> dominant_mode(const BasisSet& basis, const Eigen::VectorXcd& state);

/// Mode numbers of single-valley level `label` (0-based) of the hard-wall box
/// at F = B = 0, where the problem separates. Used to name levels E_k.
std::array<int, 3> separable_mode(const Valley& valley, const Vec3& dims_nm, int label);

/// Column of `levels` whose dominant mode is `mode`; -1 if none.
int level_with_mode(const BasisSet& basis, const LevelSet& levels, const std::array<int, 3>& mode);

struct CrossAxisResult {
  double ratio = 0.0;
  double numerator = 0.0;    // |<F_1|H_15|F_5>|
  double denominator = 0.0;  // |<F_5|H_56|F_6>|
};

CrossAxisResult cross_axis_coupling(const DotSpec& spec, const SolverOptions& options = {});

}  // namespace sivalley

#endif  // SIVALLEY_MULTIVALLEY_HPP
