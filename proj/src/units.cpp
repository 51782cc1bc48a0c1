#include "sivalley/units.hpp"

#include <array>
#include <string>

#include "sivalley/errors.hpp"

namespace sivalley {

namespace {

struct UnitInfo {
  Unit unit;
  Dimension dimension;
  double factor;  // to internal
  std::string_view symbol;
};

constexpr std::array kUnits = {
    UnitInfo{Unit::eV, Dimension::energy, 1.0, "eV"},
    UnitInfo{Unit::meV, Dimension::energy, 1e-3, "meV"},
    UnitInfo{Unit::ueV, Dimension::energy, 1e-6, "ueV"},
    UnitInfo{Unit::Ry, Dimension::energy, constants::rydberg_eV, "Ry"},
    UnitInfo{Unit::Hartree, Dimension::energy, constants::hartree_eV, "Hartree"},
    UnitInfo{Unit::erg, Dimension::energy, 1.0 / constants::erg_per_eV, "erg"},
    UnitInfo{Unit::nm, Dimension::length, 1.0, "nm"},
    UnitInfo{Unit::bohr, Dimension::length, constants::bohr_nm, "bohr"},
    UnitInfo{Unit::angstrom, Dimension::length, 0.1, "A"},
    UnitInfo{Unit::um, Dimension::length, 1e3, "um"},
    UnitInfo{Unit::cm, Dimension::length, 1e7, "cm"},
    UnitInfo{Unit::m, Dimension::length, 1e9, "m"},
    UnitInfo{Unit::V_per_nm, Dimension::field, 1.0, "V/nm"},
    UnitInfo{Unit::kV_per_cm, Dimension::field, 1e-4, "kV/cm"},
    UnitInfo{Unit::MV_per_cm, Dimension::field, 1e-1, "MV/cm"},
    UnitInfo{Unit::V_per_m, Dimension::field, 1e-9, "V/m"},
    UnitInfo{Unit::tesla, Dimension::magnetic, 1.0, "T"},
    UnitInfo{Unit::gauss, Dimension::magnetic, 1e-4, "G"},
    UnitInfo{Unit::kelvin, Dimension::temperature, 1.0, "K"},
    UnitInfo{Unit::millikelvin, Dimension::temperature, 1e-3, "mK"},
    UnitInfo{Unit::s, Dimension::time, 1.0, "s"},
    UnitInfo{Unit::ms, Dimension::time, 1e-3, "ms"},
    UnitInfo{Unit::us, Dimension::time, 1e-6, "us"},
    UnitInfo{Unit::ns, Dimension::time, 1e-9, "ns"},
    UnitInfo{Unit::ps, Dimension::time, 1e-12, "ps"},
    UnitInfo{Unit::Hz, Dimension::frequency, 1.0, "Hz"},
    UnitInfo{Unit::MHz, Dimension::frequency, 1e6, "MHz"},
    UnitInfo{Unit::GHz, Dimension::frequency, 1e9, "GHz"},
};

const UnitInfo& info(Unit unit) {
  for (const auto& u : kUnits) {
    if (u.unit == unit) return u;
  }
  throw InvalidArgument("unknown unit tag");
}

}  // namespace

void SiliconParams::validate() const {
  if (!(transverse_mass > 0.0) || !(longitudinal_mass > transverse_mass)) {
    throw InvalidArgument("silicon masses must satisfy m_l > m_t > 0");
  }
  if (!(lattice_constant_nm > 0.0) || !(density_g_per_cm3 > 0.0) ||
      !(sound_velocity_cm_per_s > 0.0) || !(deformation_potential_eV > 0.0) ||
      !(relative_permittivity > 0.0)) {
    throw InvalidArgument("silicon material constants must be positive");
  }
}

Dimension dimension_of(Unit unit) { return info(unit).dimension; }

std::string_view dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::energy: return "energy";
    case Dimension::length: return "length";
    case Dimension::field: return "electric field";
    case Dimension::magnetic: return "magnetic field";
    case Dimension::temperature: return "temperature";
    case Dimension::time: return "time";
    case Dimension::frequency: return "frequency";
  }
  return "unknown";
}

double to_internal_factor(Unit unit) { return info(unit).factor; }

double convert(double value, Unit from, Unit to) {
  const auto& a = info(from);
  const auto& b = info(to);
  if (a.dimension != b.dimension) {
    throw DimensionMismatch("cannot convert " + std::string(dimension_name(a.dimension)) + " (" +
                            std::string(a.symbol) + ") to " +
                            std::string(dimension_name(b.dimension)) + " (" +
                            std::string(b.symbol) + ")");
  }
  return value * (a.factor / b.factor);
}

Unit parse_unit(std::string_view symbol) {
  for (const auto& u : kUnits) {
    if (u.symbol == symbol) return u.unit;
  }
  // a few accepted spellings
  if (symbol == "μeV" || symbol == "µeV") return Unit::ueV;
  if (symbol == "Ha" || symbol == "hartree") return Unit::Hartree;
  if (symbol == "a0") return Unit::bohr;
  if (symbol == "angstrom") return Unit::angstrom;
  if (symbol == "Tesla" || symbol == "tesla") return Unit::tesla;
  if (symbol == "kV_per_cm") return Unit::kV_per_cm;
  if (symbol == "V_per_nm") return Unit::V_per_nm;
  if (symbol == "sec") return Unit::s;
  throw InvalidArgument("unknown unit symbol '" + std::string(symbol) + "'");
}

std::string_view unit_symbol(Unit unit) { return info(unit).symbol; }

}  // namespace sivalley
