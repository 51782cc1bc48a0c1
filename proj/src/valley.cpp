#include "sivalley/valley.hpp"

#include <cmath>
#include <string>

#include "sivalley/errors.hpp"

namespace sivalley {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

int Valley::axis_index() const {
  for (int i = 0; i < 3; ++i) {
    if (axis[i] != 0.0) return i;
  }
  return -1;
}

std::array<Valley, 6> valley_set(const SiliconParams& si, double K_fraction) {
  si.validate();
  if (!(K_fraction > 0.0)) throw InvalidArgument("K_fraction must be positive");
  const double K0 = K_fraction * 2.0 * constants::pi / si.lattice_constant_nm;
  std::array<Valley, 6> valleys{};
  for (int l = 0; l < 6; ++l) {
    const int ax = l / 2;
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    Valley& v = valleys[l];
    v.index = l + 1;
    v.axis = {0.0, 0.0, 0.0};
    v.axis[ax] = sign;
    v.K = K0 * v.axis;
    v.mass = {si.transverse_mass, si.transverse_mass, si.transverse_mass};
    v.mass[ax] = si.longitudinal_mass;
  }
  return valleys;
}

BandModel BandModel::with_reading(BandUnitReading reading, double T_au, double gap_Ry) {
  const double energy_au =
      reading == BandUnitReading::rydberg_bohr ? constants::rydberg_eV : constants::hartree_eV;
  BandModel band;
  band.T_eV_nm = T_au * energy_au * constants::bohr_nm;
  band.gap_eV = gap_Ry * constants::rydberg_eV;
  return band;
}

double BandModel::lambda(double K) const {
  if (K < 0.0) throw InvalidArgument("lambda_K requires K >= 0");
  return 0.5 * std::atan(2.0 * T_eV_nm * K / gap_eV);
}

double BandModel::dlambda_dK(double K) const {
  if (K < 0.0) throw InvalidArgument("dlambda_dK requires K >= 0");
  return T_eV_nm * gap_eV / (gap_eV * gap_eV + 4.0 * T_eV_nm * T_eV_nm * K * K);
}

namespace {

void require_distinct(const Valley& l, const Valley& lp) {
  if (l.index == lp.index) {
    throw InvalidArgument("inter-valley coupling needs two distinct valleys (got " +
                          std::to_string(l.index) + " twice)");
  }
}

}  // namespace

double coupling_I(const Valley& l, const Valley& lp, const BandModel& band) {
  require_distinct(l, lp);
  const double c = dot(l.axis, lp.axis);
  const double two_lambda = 2.0 * band.lambda(norm(l.K));
  return 0.5 * (1.0 + c) - 0.5 * (1.0 - c) * std::cos(two_lambda);
}

CouplingJ coupling_J(const Valley& l, const Valley& lp, const BandModel& band) {
  require_distinct(l, lp);
  const double K = norm(l.K);
  const double c = dot(l.axis, lp.axis);
  const double size = (1.0 - c) * band.dlambda_dK(K) * std::sin(2.0 * band.lambda(K));
  CouplingJ out;
  out.J = size * l.axis;
  out.J_prime = size * lp.axis;
  out.magnitude = std::abs(size);
  return out;
}

CouplingConstants coupling_constants(const Valley& l, const Valley& lp, const BandModel& band) {
  CouplingConstants c;
  c.I = coupling_I(l, lp, band);
  c.J = coupling_J(l, lp, band);
  c.K = norm(l.K);
  c.lambda = band.lambda(c.K);
  c.dlambda_dK = band.dlambda_dK(c.K);
  return c;
}

LinearModel linear_model_constants() {
  LinearModel m;
  // perpendicular pair: e.e' = 0 -> I = beta; opposite pair: e.e' = -1 -> I = beta - alpha
  m.beta = m.perpendicular_value;
  m.alpha = m.beta - m.opposite_value;
  return m;
}

}  // namespace sivalley
