#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cli/format.hpp"
#include "sivalley/errors.hpp"
#include "sivalley/units.hpp"

namespace sivalley::cli {

namespace {

struct Value {
  std::vector<double> numbers;
  std::vector<std::string> words;  // non-numeric tokens
  std::string unit;                // first non-numeric token after numbers
  std::string raw;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

Value parse_value(const std::string& text) {
  Value v;
  v.raw = text;
  std::string rest = text;
  if (rest.rfind("linspace(", 0) == 0) {
    const auto close = rest.find(')');
    if (close == std::string::npos) throw ConfigError("unterminated linspace(");
    std::string inner = rest.substr(9, close - 9);
    for (char& c : inner)
      if (c == ',') c = ' ';
    std::istringstream in(inner);
    std::string a, b, n;
    double lo, hi, count;
    if (!(in >> a >> b >> n) || !parse_number(a, lo) || !parse_number(b, hi) ||
        !parse_number(n, count) || count < 1 || count != std::floor(count)) {
      throw ConfigError("linspace needs (start, stop, count >= 1)");
    }
    const int m = static_cast<int>(count);
    for (int i = 0; i < m; ++i) v.numbers.push_back(m == 1 ? lo : lo + (hi - lo) * i / (m - 1));
    v.unit = trim(rest.substr(close + 1));
    return v;
  }
  for (char& c : rest)
    if (c == ',') c = ' ';
  std::istringstream in(rest);
  std::string tok;
  bool numeric = true;
  while (in >> tok) {
    double x;
    if (numeric && parse_number(tok, x)) {
      v.numbers.push_back(x);
    } else {
      numeric = false;
      v.words.push_back(tok);
    }
  }
  if (!v.numbers.empty() && !v.words.empty()) {
    if (v.words.size() != 1) throw ConfigError("expected at most one unit after the numbers");
    v.unit = v.words[0];
    v.words.clear();
  }
  return v;
}

std::vector<double> quantities(const Value& v, Dimension dim, Unit fallback) {
  if (v.numbers.empty()) throw ConfigError("expected a number");
  Unit unit = fallback;
  if (!v.unit.empty()) {
    try {
      unit = parse_unit(v.unit);
    } catch (const Error&) {
      throw ConfigError("unknown unit '" + v.unit + "'");
    }
    if (dimension_of(unit) != dim) {
      throw ConfigError("unit '" + v.unit + "' is a " + std::string(dimension_name(dimension_of(unit))) +
                        ", expected " + std::string(dimension_name(dim)));
    }
  }
  std::vector<double> out;
  for (double x : v.numbers) out.push_back(x * to_internal_factor(unit));
  return out;
}

double quantity(const Value& v, Dimension dim, Unit fallback) {
  const auto q = quantities(v, dim, fallback);
  if (q.size() != 1) throw ConfigError("expected a single value");
  return q[0];
}

std::vector<double> plain_list(const Value& v) {
  if (v.numbers.empty() || !v.unit.empty() || !v.words.empty()) {
    throw ConfigError("expected dimensionless numbers");
  }
  return v.numbers;
}

double plain(const Value& v) {
  const auto q = plain_list(v);
  if (q.size() != 1) throw ConfigError("expected a single number");
  return q[0];
}

std::int64_t integer(const Value& v) {
  const double x = plain(v);
  if (x != std::floor(x) || std::abs(x) > 9.0e15) throw ConfigError("expected an integer");
  return static_cast<std::int64_t>(x);
}

std::vector<int> integers(const Value& v, std::size_t count) {
  const auto q = plain_list(v);
  if (q.size() != count) throw ConfigError("expected " + std::to_string(count) + " integers");
  std::vector<int> out;
  for (double x : q) {
    if (x != std::floor(x) || std::abs(x) > 1e9) throw ConfigError("expected integers");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

const std::string& word(const Value& v) {
  if (v.words.size() != 1 || !v.numbers.empty()) throw ConfigError("expected a single word");
  return v.words[0];
}

template <typename E>
E choice(const Value& v, const std::vector<std::pair<std::string, E>>& options) {
  const std::string& w = word(v);
  std::string known;
  for (const auto& [name, e] : options) {
    if (name == w) return e;
    known += (known.empty() ? "" : ", ") + name;
  }
  throw ConfigError("'" + w + "' is not one of: " + known);
}

using Handler = std::function<void(RunConfig&, const Value&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"dims_nm",
       [](RunConfig& c, const Value& v) {
         const auto q = quantities(v, Dimension::length, Unit::nm);
         if (q.size() != 3) throw ConfigError("dims_nm needs three lengths");
         c.dot.dims_nm = {q[0], q[1], q[2]};
       }},
      {"barrier_mode",
       [](RunConfig& c, const Value& v) {
         c.dot.barrier = choice<BarrierMode>(v, {{"finite_barrier", BarrierMode::finite_barrier},
                                                 {"hard_wall", BarrierMode::hard_wall}});
       }},
      {"barrier_eV",
       [](RunConfig& c, const Value& v) { c.dot.barrier_eV = quantity(v, Dimension::energy, Unit::eV); }},
      {"padding_nm",
       [](RunConfig& c, const Value& v) { c.dot.padding_nm = quantity(v, Dimension::length, Unit::nm); }},
      {"basis",
       [](RunConfig& c, const Value& v) {
         const auto n = integers(v, 3);
         c.solver.modes = {n[0], n[1], n[2]};
       }},
      {"field_kV_per_cm",
       [](RunConfig& c, const Value& v) { c.fields = quantities(v, Dimension::field, Unit::kV_per_cm); }},
      {"B_tesla",
       [](RunConfig& c, const Value& v) { c.dot.B_tesla = quantity(v, Dimension::magnetic, Unit::tesla); }},
      {"magnetic_gauge",
       [](RunConfig& c, const Value& v) {
         c.dot.gauge = choice<MagneticGauge>(
             v, {{"as_printed", MagneticGauge::as_printed}, {"textbook", MagneticGauge::textbook}});
       }},
      {"coupling_source",
       [](RunConfig& c, const Value& v) {
         c.solver.source = choice<CouplingSource>(
             v, {{"full", CouplingSource::full}, {"field_only", CouplingSource::field_only}});
       }},
      {"band_parameter_T",
       [](RunConfig& c, const Value& v) {
         if (v.numbers.size() != 1) throw ConfigError("band_parameter_T needs one value");
         if (v.unit == "eV*nm") {
           c.solver.band.T_eV_nm = v.numbers[0];
           return;
         }
         double energy = constants::rydberg_eV;
         if (v.unit == "Ha_bohr" || v.unit == "Hartree_bohr") {
           energy = constants::hartree_eV;
         } else if (!v.unit.empty() && v.unit != "Ry_bohr") {
           throw ConfigError("band_parameter_T unit must be Ry_bohr, Ha_bohr or eV*nm");
         }
         c.solver.band.T_eV_nm = v.numbers[0] * energy * constants::bohr_nm;
       }},
      {"band_gap_epsG",
       [](RunConfig& c, const Value& v) { c.solver.band.gap_eV = quantity(v, Dimension::energy, Unit::Ry); }},
      {"K_fraction", [](RunConfig& c, const Value& v) { c.solver.K_fraction = plain(v); }},
      {"m_l", [](RunConfig& c, const Value& v) { c.solver.si.longitudinal_mass = plain(v); }},
      {"m_t", [](RunConfig& c, const Value& v) { c.solver.si.transverse_mass = plain(v); }},
      {"levels", [](RunConfig& c, const Value& v) { c.levels = static_cast<int>(integer(v)); }},
      {"anticross_levels",
       [](RunConfig& c, const Value& v) {
         const auto n = integers(v, 2);
         c.anticross_levels = {n[0], n[1]};
       }},
      {"anticross_range_kV_per_cm",
       [](RunConfig& c, const Value& v) {
         const auto q = quantities(v, Dimension::field, Unit::kV_per_cm);
         if (q.size() != 2) throw ConfigError("anticross_range needs two fields");
         c.anticross_lo = q[0];
         c.anticross_hi = q[1];
       }},
      {"anticross_coarse_points",
       [](RunConfig& c, const Value& v) { c.anticross_coarse = static_cast<int>(integer(v)); }},
      {"anticross_window_kV_per_cm",
       [](RunConfig& c, const Value& v) {
         c.anticross_window = quantity(v, Dimension::field, Unit::kV_per_cm);
       }},
      {"epsilon_ueV",
       [](RunConfig& c, const Value& v) { c.epsilon = quantity(v, Dimension::energy, Unit::ueV); }},
      {"delta_ueV",
       [](RunConfig& c, const Value& v) { c.delta = quantity(v, Dimension::energy, Unit::ueV); }},
      {"delta_low_ueV",
       [](RunConfig& c, const Value& v) { c.delta_low = quantity(v, Dimension::energy, Unit::ueV); }},
      {"qubit_form",
       [](RunConfig& c, const Value& v) {
         c.qubit_form = choice<QubitForm>(v, {{"printed", QubitForm::printed},
                                              {"detuning", QubitForm::detuning}});
       }},
      {"rabi_t_ns",
       [](RunConfig& c, const Value& v) { c.rabi_times = quantities(v, Dimension::time, Unit::ns); }},
      {"pulse_rise_ns",
       [](RunConfig& c, const Value& v) { c.pulse_rise = quantity(v, Dimension::time, Unit::ns); }},
      {"pulse_hold_ns",
       [](RunConfig& c, const Value& v) { c.pulse_hold = quantity(v, Dimension::time, Unit::ns); }},
      {"swap_delta_ueV",
       [](RunConfig& c, const Value& v) { c.swap_delta = quantity(v, Dimension::energy, Unit::ueV); }},
      {"swap_ratio", [](RunConfig& c, const Value& v) { c.swap_ratios = plain_list(v); }},
      {"coulomb_samples",
       [](RunConfig& c, const Value& v) {
         const auto n = integer(v);
         if (n < 0) throw ConfigError("coulomb_samples must be >= 0");
         c.coulomb_samples = static_cast<std::uint64_t>(n);
       }},
      {"coulomb_separation_nm",
       [](RunConfig& c, const Value& v) {
         c.coulomb.separation_nm = quantity(v, Dimension::length, Unit::nm);
       }},
      {"coulomb_sigma_nm",
       [](RunConfig& c, const Value& v) { c.coulomb_sigma_nm = quantity(v, Dimension::length, Unit::nm); }},
      {"coulomb_screening_nm",
       [](RunConfig& c, const Value& v) {
         c.coulomb.screening_nm = quantity(v, Dimension::length, Unit::nm);
       }},
      {"coulomb_parity",
       [](RunConfig& c, const Value& v) {
         c.coulomb.parity = choice<ParityCase>(v, {{"same", ParityCase::same},
                                                   {"opposite_preserved", ParityCase::opposite_preserved},
                                                   {"opposite_changed", ParityCase::opposite_changed}});
       }},
      {"phonon_dE_ueV",
       [](RunConfig& c, const Value& v) {
         c.phonon_energies = quantities(v, Dimension::energy, Unit::ueV);
       }},
      {"phonon_T_K",
       [](RunConfig& c, const Value& v) {
         c.phonon_temperatures = quantities(v, Dimension::temperature, Unit::kelvin);
       }},
      {"seed",
       [](RunConfig& c, const Value& v) {
         const auto n = integer(v);
         if (n < 0) throw ConfigError("seed must be >= 0");
         c.seed = static_cast<std::uint64_t>(n);
       }},
      {"threads",
       [](RunConfig& c, const Value& v) {
         const auto n = integer(v);
         if (n < 1) throw ConfigError("threads must be >= 1");
         c.threads = static_cast<int>(n);
       }},
  };
  return table;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

void set_defaults(RunConfig& c) {
  c.dot.B_tesla = 1.5;
  c.fields = linspace(0.0, 300e-4, 31);
  c.rabi_times = linspace(0.0, 0.2e-9, 201);
  c.swap_ratios = {0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 1.0 / (4.0 + std::sqrt(13.0)), 0.2};
  c.phonon_energies = linspace(30e-6, 100e-6, 8);
  c.phonon_temperatures = linspace(0.05, 0.3, 6);
  c.coulomb.separation_nm = 30.0;
}

void validate(RunConfig& c) {
  try {
    c.dot.validate();
    c.solver.si.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  for (int n : c.solver.modes)
    if (n < 1) throw ConfigError("basis needs at least one mode per axis");
  if (!(c.solver.K_fraction > 0.0)) throw ConfigError("K_fraction must be > 0");
  if (!(c.solver.band.T_eV_nm > 0.0) || !(c.solver.band.gap_eV > 0.0)) {
    throw ConfigError("band parameters must be > 0");
  }
  if (c.levels < 1) throw ConfigError("levels must be >= 1");
  if (c.anticross_levels[0] < 0 || c.anticross_levels[1] < 0 ||
      c.anticross_levels[0] == c.anticross_levels[1]) {
    throw ConfigError("anticross_levels needs two distinct labels >= 0");
  }
  if (!(c.anticross_hi > c.anticross_lo)) throw ConfigError("anticross range must be increasing");
  if (c.anticross_coarse < 3) throw ConfigError("anticross_coarse_points must be >= 3");
  if (!(c.swap_delta > 0.0)) throw ConfigError("swap_delta_ueV must be > 0");
  for (double r : c.swap_ratios)
    if (!(r > 0.0)) throw ConfigError("swap ratios must be > 0");
  for (double T : c.phonon_temperatures)
    if (!(T > 0.0)) throw ConfigError("phonon temperatures must be > 0");
  for (double e : c.phonon_energies)
    if (!(e >= 0.0)) throw ConfigError("phonon energies must be >= 0");
}

std::string list_text(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : ", ") + format_number(x);
  return s;
}

template <typename E>
std::string name_of(E e, const std::vector<std::pair<std::string, E>>& names) {
  for (const auto& [n, v] : names)
    if (v == e) return n;
  return "?";
}

void fill_resolved(RunConfig& c) {
  auto& r = c.resolved;
  r.clear();
  const auto& d = c.dot;
  r["dims_nm"] = list_text({d.dims_nm[0], d.dims_nm[1], d.dims_nm[2]}) + " nm";
  r["barrier_mode"] = d.barrier == BarrierMode::hard_wall ? "hard_wall" : "finite_barrier";
  r["barrier_eV"] = format_number(d.barrier_eV) + " eV";
  r["padding_nm"] = format_number(d.effective_padding()) + " nm";
  r["basis"] = std::to_string(c.solver.modes[0]) + ", " + std::to_string(c.solver.modes[1]) + ", " +
               std::to_string(c.solver.modes[2]);
  r["field_kV_per_cm"] = list_text(c.fields) + " V/nm";
  r["B_tesla"] = format_number(d.B_tesla) + " T";
  r["magnetic_gauge"] = d.gauge == MagneticGauge::as_printed ? "as_printed" : "textbook";
  r["coupling_source"] = c.solver.source == CouplingSource::full ? "full" : "field_only";
  r["band_parameter_T"] = format_number(c.solver.band.T_eV_nm) + " eV*nm";
  r["band_gap_epsG"] = format_number(c.solver.band.gap_eV) + " eV";
  r["K_fraction"] = format_number(c.solver.K_fraction);
  r["m_l"] = format_number(c.solver.si.longitudinal_mass);
  r["m_t"] = format_number(c.solver.si.transverse_mass);
  r["levels"] = std::to_string(c.levels);
  r["anticross_levels"] =
      std::to_string(c.anticross_levels[0]) + ", " + std::to_string(c.anticross_levels[1]);
  r["anticross_range_kV_per_cm"] = list_text({c.anticross_lo, c.anticross_hi}) + " V/nm";
  r["anticross_coarse_points"] = std::to_string(c.anticross_coarse);
  r["anticross_window_kV_per_cm"] = format_number(c.anticross_window) + " V/nm";
  r["epsilon_ueV"] = format_number(c.epsilon) + " eV";
  r["delta_ueV"] = format_number(c.delta) + " eV";
  r["delta_low_ueV"] = format_number(c.delta_low) + " eV";
  r["qubit_form"] = c.qubit_form == QubitForm::printed ? "printed" : "detuning";
  r["rabi_t_ns"] = list_text(c.rabi_times) + " s";
  r["pulse_rise_ns"] = format_number(c.pulse_rise) + " s";
  r["pulse_hold_ns"] = format_number(c.pulse_hold) + " s";
  r["swap_delta_ueV"] = format_number(c.swap_delta) + " eV";
  r["swap_ratio"] = list_text(c.swap_ratios);
  r["coulomb_samples"] = std::to_string(c.coulomb_samples);
  r["coulomb_separation_nm"] = format_number(c.coulomb.separation_nm) + " nm";
  r["coulomb_sigma_nm"] = format_number(c.coulomb_sigma_nm) + " nm";
  r["coulomb_screening_nm"] = format_number(c.coulomb.screening_nm) + " nm";
  r["coulomb_parity"] = name_of<ParityCase>(c.coulomb.parity,
                                            {{"same", ParityCase::same},
                                             {"opposite_preserved", ParityCase::opposite_preserved},
                                             {"opposite_changed", ParityCase::opposite_changed}});
  r["phonon_dE_ueV"] = list_text(c.phonon_energies) + " eV";
  r["phonon_T_K"] = list_text(c.phonon_temperatures) + " K";
  r["seed"] = std::to_string(c.seed);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  set_defaults(c);
  std::istringstream in(text);
  std::string line;
  int number = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = handlers().find(key);
    if (it == handlers().end()) throw ConfigError(where + "unknown key '" + key + "'");
    if (seen.count(key)) {
      throw ConfigError(where + "duplicate key '" + key + "' (first on line " +
                        std::to_string(seen[key]) + ")");
    }
    seen[key] = number;
    if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'");
    try {
      it->second(c, parse_value(value));
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  validate(c);
  c.coulomb.seed = c.seed;
  c.coulomb.samples = c.coulomb_samples;
  c.phonon = PhononModel::from(c.solver.si);
  fill_resolved(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_overrides(RunConfig& config, std::optional<std::uint64_t> seed, std::optional<int> threads) {
  if (seed) {
    config.seed = *seed;
    config.coulomb.seed = *seed;
    config.resolved["seed"] = std::to_string(*seed);
  }
  if (threads) {
    if (*threads < 1) throw ConfigError("threads must be >= 1");
    config.threads = *threads;
  }
}

std::string resolved_text(const RunConfig& config) {
  std::string out;
  for (const auto& [k, v] : config.resolved) out += k + " = " + v + "\n";
  return out;
}

}  // namespace sivalley::cli
