#include "sivalley/coulomb.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "sivalley/errors.hpp"
#include "sivalley/parallel.hpp"
#include "sivalley/units.hpp"

namespace sivalley {

double GaussianOrbital::log_value(const Vec3& r) const {
  const Vec3 d = r - center;
  return -0.75 * std::log(2.0 * constants::pi * sigma * sigma) - dot(d, d) / (4.0 * sigma * sigma);
}

double GaussianOrbital::value(const Vec3& r) const { return std::exp(log_value(r)); }

int CoulombModel::d21() const { return parity == ParityCase::opposite_changed ? 0 : 1; }
int CoulombModel::d12() const { return parity == ParityCase::opposite_preserved ? 0 : 1; }

double yukawa(double r, double screening, double eps_r) {
  return constants::coulomb_eV_nm * std::exp(-r / screening) / (eps_r * r);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr int kStreams = 16;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double stderr_() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

struct StreamResult {
  Moments far, near;
};

Vec3 gaussian_point(const GaussianOrbital& phi, std::mt19937_64& rng,
                    std::normal_distribution<double>& normal) {
  return {phi.center[0] + phi.sigma * normal(rng), phi.center[1] + phi.sigma * normal(rng),
          phi.center[2] + phi.sigma * normal(rng)};
}

}  // namespace

CoulombEstimate coulomb_matrix_element(const GaussianOrbital& phi1_in,
                                       const GaussianOrbital& phi2_in, const CoulombModel& model,
                                       int threads) {
  if (model.samples < 10000) throw InvalidArgument("Coulomb element needs at least 1e4 samples");
  if (!(phi1_in.sigma > 0.0) || !(phi2_in.sigma > 0.0)) {
    throw InvalidArgument("orbital widths must be positive");
  }
  if (!(model.screening_nm > 0.0) || !(model.relative_permittivity > 0.0) ||
      !(model.window_nm > 0.0)) {
    throw InvalidArgument("screening length, permittivity and window must be positive");
  }
  const GaussianOrbital phi1 = phi1_in;
  GaussianOrbital phi2 = phi2_in;
  phi2.center[0] += model.separation_nm;
  const double d21 = model.d21(), d12 = model.d12();
  const double w = model.window_nm;
  auto kernel = [&](double r) { return yukawa(r, model.screening_nm, model.relative_permittivity); };

  // half of the samples for each region
  const std::uint64_t per_region = model.samples / 2;
  std::vector<std::uint64_t> seeds(kStreams);
  std::uint64_t state = model.seed;
  for (auto& s : seeds) s = splitmix64(state);
  std::vector<StreamResult> results(kStreams);

  parallel_for(kStreams, threads, [&](std::size_t k) {
    std::mt19937_64 rng(seeds[k]);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const std::uint64_t count = per_region / kStreams + (k < per_region % kStreams ? 1 : 0);
    StreamResult& out = results[k];

    // |r1 - r2| >= w: r1 ~ phi1^2, r2 ~ phi2^2
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vec3 r1 = gaussian_point(phi1, rng, normal);
      const Vec3 r2 = gaussian_point(phi2, rng, normal);
      const double r = norm(r1 - r2);
      if (r < w) {
        out.far.add(0.0);
        continue;
      }
      double bracket = d21;
      if (d12 != 0.0) {
        bracket -= d12 * std::exp(phi2.log_value(r1) + phi1.log_value(r2) - phi1.log_value(r1) -
                                  phi2.log_value(r2));
      }
      out.far.add(bracket * kernel(r));
    }

    // |r1 - r2| < w: r1 ~ phi1^2, s = r2 - r1 with density 1 / (2 pi w^2 |s|),
    // whose radial part 2 s / w^2 is sampled as s = w sqrt(u)
    const double v_over_p_scale =
        constants::coulomb_eV_nm / model.relative_permittivity * 2.0 * constants::pi * w * w;
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vec3 r1 = gaussian_point(phi1, rng, normal);
      const double s = w * std::sqrt(uniform(rng));
      const double cos_t = 2.0 * uniform(rng) - 1.0;
      const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
      const double ph = 2.0 * constants::pi * uniform(rng);
      const Vec3 r2{r1[0] + s * sin_t * std::cos(ph), r1[1] + s * sin_t * std::sin(ph),
                    r1[2] + s * cos_t};
      // integrand / (phi1(r1)^2 p(s))
      const double l11 = phi1.log_value(r1), l22 = phi2.log_value(r2);
      double bracket = d21 * std::exp(2.0 * l22);
      if (d12 != 0.0) {
        bracket -= d12 * std::exp(phi2.log_value(r1) + phi1.log_value(r2) + l22 - l11);
      }
      out.near.add(bracket * v_over_p_scale * std::exp(-s / model.screening_nm));
    }
  });

  Moments far, near;
  for (const auto& r : results) {
    far.merge(r.far);
    near.merge(r.near);
  }
  CoulombEstimate est;
  est.value = far.mean() + near.mean();
  est.stderr_ = std::hypot(far.stderr_(), near.stderr_());
  return est;
}

}  // namespace sivalley
