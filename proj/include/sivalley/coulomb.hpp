#ifndef SIVALLEY_COULOMB_HPP
#define SIVALLEY_COULOMB_HPP

// Monte Carlo estimate of the inter-dot direct-minus-exchange Coulomb element
// with a Yukawa-screened kernel, for Gaussian orbitals.

#include <cstdint>

#include "sivalley/valley.hpp"

namespace sivalley {

/// phi(r) = (2 pi s^2)^(-3/4) exp(-|r - c|^2 / (4 s^2)), so |phi|^2 is a
/// normal density with standard deviation s per axis.
struct GaussianOrbital {
  Vec3 center{};
  double sigma = 1.0;  // nm

  double value(const Vec3& r) const;
  double log_value(const Vec3& r) const;
};

/// Parity cases of the two electrons:
///   same parity                      -> D21 = D12 = 1
///   opposite, both preserved         -> D21 = 1, D12 = 0
///   opposite, both changed           -> D21 = 0, D12 = 1
enum class ParityCase { same, opposite_preserved, opposite_changed };

struct CoulombModel {
  double separation_nm = 20.0;  // dot 2 orbital is shifted by this along x
  double screening_nm = 10.0;
  double relative_permittivity = 11.7;
  ParityCase parity = ParityCase::same;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  double window_nm = 0.1;  // |r1 - r2| below this is sampled with a 1/r proposal

  int d21() const;
  int d12() const;
};

/// e^2 exp(-r/lambda) / (4 pi eps0 eps_r r), eV.
double yukawa(double r_nm, double screening_nm, double relative_permittivity);

struct CoulombEstimate {
  double value = 0.0;   // eV
  double stderr_ = 0.0;  // eV
};

/// Independent seeded streams (fixed count) are merged in stream order, so the
/// result does not depend on `threads`.
CoulombEstimate coulomb_matrix_element(const GaussianOrbital& phi1, const GaussianOrbital& phi2,
                                       const CoulombModel& model, int threads = 1);

/// SplitMix64 step; used to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace sivalley

#endif  // SIVALLEY_COULOMB_HPP
