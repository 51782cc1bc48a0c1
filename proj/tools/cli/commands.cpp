#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

#include "sivalley/coulomb.hpp"
#include "sivalley/decoherence.hpp"
#include "sivalley/errors.hpp"
#include "sivalley/multivalley.hpp"
#include "sivalley/parallel.hpp"
#include "sivalley/qubit.hpp"
#include "sivalley/tracking.hpp"
#include "sivalley/two_qubit.hpp"
#include "sivalley/units.hpp"

namespace sivalley::cli {

namespace {

constexpr double kVcm = 1e-4;  // V/nm per kV/cm

double to_kVcm(double f) { return f / kVcm; }

void require_fields(const RunConfig& c, std::size_t minimum) {
  if (c.fields.size() < minimum) {
    throw ConfigError("field_kV_per_cm needs at least " + std::to_string(minimum) + " value(s)");
  }
}

void require_increasing(const std::vector<double>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ConfigError("field grid must be strictly increasing");
  }
}

Json mode_json(const std::array<int, 3>& m) { return Json::array({m[0], m[1], m[2]}); }

struct AnticrossSetup {
  std::array<int, 3> mode_a, mode_b;
  int column_a = -1, column_b = -1;
  int k = 0;
};

// Levels are named by the hard-wall ordering; find them among the lowest
// single-valley states at the start of the range.
AnticrossSetup anticross_setup(const RunConfig& c, const ValleyPairModel& model) {
  AnticrossSetup s;
  const Valley& v = model.valley(0);
  s.mode_a = separable_mode(v, c.dot.dims_nm, c.anticross_levels[0]);
  s.mode_b = separable_mode(v, c.dot.dims_nm, c.anticross_levels[1]);
  s.k = std::min(model.size(), std::max(c.anticross_levels[0], c.anticross_levels[1]) + 4);
  const LevelSet start = model.solve_single(0, c.anticross_lo, s.k);
  s.column_a = level_with_mode(model.basis(), start, s.mode_a);
  s.column_b = level_with_mode(model.basis(), start, s.mode_b);
  if (s.column_a < 0 || s.column_b < 0) {
    throw NumericalError("could not identify the requested levels among the lowest " +
                         std::to_string(s.k) + " states");
  }
  return s;
}

AnticrossingResult run_anticross(const RunConfig& c, const ValleyPairModel& model,
                                 const AnticrossSetup& s) {
  LevelSolver solver = [&](double f) { return model.solve_single(0, f, s.k); };
  AnticrossingSearch search;
  search.coarse_points = c.anticross_coarse;
  return find_anticrossing(solver, s.column_a, s.column_b, c.anticross_lo, c.anticross_hi, search);
}

Json anticross_json(const AnticrossSetup& s, const AnticrossingResult& r) {
  Json j;
  j["kind"] = crossing_kind_name(r.kind);
  j["field_kV_cm"] = to_kVcm(r.field);
  j["gap_ueV"] = r.gap * 1e6;
  j["mode_a"] = mode_json(s.mode_a);
  j["mode_b"] = mode_json(s.mode_b);
  j["evaluations"] = r.trace.size();
  return j;
}

double max_residual(const TrackedSweep& sweep) {
  double m = 0.0;
  for (const auto& p : sweep.points)
    if (p.levels.residuals.size()) m = std::max(m, p.levels.residuals.maxCoeff());
  return m;
}

CommandOutput cmd_spectrum(const RunConfig& c) {
  require_fields(c, 2);
  require_increasing(c.fields);
  CommandOutput out;
  const ValleyPairModel zz(c.dot, 5, 6, c.solver);
  const Spectrum spec = sweep_field(zz, c.fields, 2 * c.levels, c.threads);
  out.warnings = spec.sweep.warnings;
  out.residual_max = max_residual(spec.sweep);

  CsvTable table({"field_kV_cm", "level_id", "energy_eV", "valley_pair", "parity", "residual"});
  for (const SpectrumRow& r : spec.rows()) {
    table.add(to_kVcm(r.field)).add(static_cast<long long>(r.level_id)).add(r.energy);
    table.add(r.valley_pair).add(std::string(1, r.parity)).add(r.residual);
    table.end_row();
  }
  // lowest single-valley level of an x and a y valley
  const ValleyPairModel xy(c.dot, 1, 3, c.solver);
  std::vector<LevelSet> transverse(2 * c.fields.size());
  parallel_for(transverse.size(), c.threads, [&](std::size_t i) {
    transverse[i] = xy.solve_single(static_cast<int>(i % 2), c.fields[i / 2], 1);
  });
  for (std::size_t p = 0; p < c.fields.size(); ++p) {
    for (int w = 0; w < 2; ++w) {
      const LevelSet& s = transverse[2 * p + w];
      out.residual_max = std::max(out.residual_max, s.residuals[0]);
      table.add(to_kVcm(c.fields[p])).add(0LL).add(s.energies[0]);
      table.add(std::string(w == 0 ? "1" : "3")).add(std::string("-")).add(s.residuals[0]);
      table.end_row();
    }
  }
  out.tables.emplace_back("spectrum.csv", std::move(table));

  CsvTable doublet({"field_kV_cm", "E0_eV", "E1_eV", "splitting_ueV"});
  for (std::size_t p = 0; p < spec.sweep.points.size(); ++p) {
    const double e0 = spec.sweep.energy(p, 0), e1 = spec.sweep.energy(p, 1);
    doublet.add(to_kVcm(spec.sweep.points[p].field)).add(e0).add(e1).add((e1 - e0) * 1e6);
    doublet.end_row();
  }
  out.tables.emplace_back("spectrum_ground_doublet.csv", std::move(doublet));

  const AnticrossSetup setup = anticross_setup(c, zz);
  const AnticrossingResult ac = run_anticross(c, zz, setup);
  out.results["anticrossing"] = anticross_json(setup, ac);
  std::vector<double> fine(41);
  for (int i = 0; i < 41; ++i) fine[i] = ac.field - c.anticross_window + 2.0 * c.anticross_window * i / 40;
  std::vector<TrackedPoint> pts(fine.size());
  parallel_for(fine.size(), c.threads, [&](std::size_t i) {
    pts[i].field = fine[i];
    pts[i].levels = zz.solve_single(0, fine[i], setup.k);
  });
  // start the tracking from the coarse sweep's identification
  const TrackedSweep fine_sweep = track_levels(std::move(pts));
  const LevelSet& first = fine_sweep.points[0].levels;
  const int a0 = level_with_mode(zz.basis(), first, setup.mode_a);
  const int b0 = level_with_mode(zz.basis(), first, setup.mode_b);
  CsvTable inset({"field_kV_cm", "level", "energy_eV"});
  if (a0 >= 0 && b0 >= 0) {
    for (std::size_t p = 0; p < fine_sweep.points.size(); ++p) {
      inset.add(to_kVcm(fine[p])).add(static_cast<long long>(c.anticross_levels[0]));
      inset.add(fine_sweep.energy(p, a0)).end_row();
      inset.add(to_kVcm(fine[p])).add(static_cast<long long>(c.anticross_levels[1]));
      inset.add(fine_sweep.energy(p, b0)).end_row();
    }
  } else {
    out.warnings.push_back("anticrossing inset: levels not identifiable at the window start");
  }
  out.tables.emplace_back("spectrum_anticrossing.csv", std::move(inset));

  out.results["valley_pair"] = spec.valley_pair;
  out.results["levels"] = 2 * c.levels;
  out.results["points"] = c.fields.size();
  return out;
}

CommandOutput cmd_coupling(const RunConfig& c) {
  require_fields(c, 1);
  CommandOutput out;
  const ValleyPairModel zz(c.dot, 5, 6, c.solver);
  std::vector<SplittingResult> res(c.fields.size());
  std::vector<std::array<double, 6>> grounds(c.fields.size());
  parallel_for(c.fields.size(), c.threads, [&](std::size_t i) {
    DotSpec at = c.dot;
    at.field_V_per_nm = c.fields[i];
    grounds[i] = valley_ground_energies(at, c.solver);
    res[i] = splitting_and_coupling(zz, c.fields[i]);
  });
  CsvTable table({"F_kV_cm", "eps_ueV", "delta_ueV", "eps_over_delta"});
  for (std::size_t i = 0; i < res.size(); ++i) {
    const auto& g = grounds[i];
    if (std::min(g[4], g[5]) > std::min({g[0], g[1], g[2], g[3]})) {
      throw NumericalError("ground state leaves the z valleys at " +
                           format_number(to_kVcm(c.fields[i])) + " kV/cm");
    }
    const double ratio = res[i].delta > 0.0 ? res[i].epsilon / res[i].delta : std::nan("");
    table.add(to_kVcm(c.fields[i])).add(res[i].epsilon * 1e6).add(res[i].delta * 1e6).add(ratio);
    table.end_row();
  }
  out.tables.emplace_back("coupling.csv", std::move(table));
  out.results["points"] = c.fields.size();
  out.results["coupling_I"] = zz.constants().I;
  out.results["coupling_J_nm"] = zz.constants().J.magnitude;
  return out;
}

CommandOutput cmd_anticross(const RunConfig& c) {
  CommandOutput out;
  const ValleyPairModel zz(c.dot, 5, 6, c.solver);
  const AnticrossSetup setup = anticross_setup(c, zz);
  const AnticrossingResult r = run_anticross(c, zz, setup);
  out.results = anticross_json(setup, r);
  out.warnings = r.coarse.warnings;
  out.residual_max = max_residual(r.coarse);

  CsvTable coarse({"field_kV_cm", "energy_a_eV", "energy_b_eV", "gap_ueV"});
  for (std::size_t p = 0; p < r.coarse.points.size(); ++p) {
    const double ea = r.coarse.energy(p, setup.column_a), eb = r.coarse.energy(p, setup.column_b);
    coarse.add(to_kVcm(r.coarse.points[p].field)).add(ea).add(eb).add(std::abs(eb - ea) * 1e6);
    coarse.end_row();
  }
  out.tables.emplace_back("anticross_coarse.csv", std::move(coarse));
  CsvTable trace({"step", "field_kV_cm", "gap_ueV"});
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    trace.add(static_cast<long long>(i)).add(to_kVcm(r.trace[i].first)).add(r.trace[i].second * 1e6);
    trace.end_row();
  }
  out.tables.emplace_back("anticross_trace.csv", std::move(trace));
  return out;
}

CommandOutput cmd_rabi(const RunConfig& c) {
  CommandOutput out;
  const QubitModel high{c.epsilon, c.delta, c.qubit_form};
  const QubitModel low{c.epsilon, c.delta_low, c.qubit_form};
  CsvTable table({"t_ns", "p0", "p1"});
  const Eigen::Vector2cd start(1.0, 0.0);
  for (double t : c.rabi_times) {
    const Eigen::Vector2cd psi = evolve(start, high, t);
    table.add(t * 1e9).add(std::norm(psi[0])).add(std::norm(psi[1])).end_row();
  }
  out.tables.emplace_back("rabi.csv", std::move(table));

  const double hold =
      c.pulse_hold >= 0.0 ? c.pulse_hold : constants::pi * constants::hbar_eVs / (2.0 * c.delta);
  const PulseReport p = pulse_protocol(0.0, 1.0, hold, c.pulse_rise, low, high);
  out.results["rabi_frequency_GHz"] = rabi_frequency_GHz(c.epsilon, c.delta);
  out.results["hbar_over_delta_s"] = p.hbar_over_delta_high;
  Json pulse;
  pulse["hold_s"] = hold;
  pulse["rise_s"] = c.pulse_rise;
  pulse["hbar_over_delta_low_s"] = std::isinf(p.hbar_over_delta_low) ? Json("inf") : Json(p.hbar_over_delta_low);
  pulse["rise_shorter_than_low"] = p.rise_shorter_than_low;
  pulse["rise_longer_than_high"] = p.rise_longer_than_high;
  pulse["valid"] = p.valid;
  pulse["p0"] = p.p0;
  pulse["p1"] = p.p1;
  out.results["pulse"] = pulse;
  return out;
}

CommandOutput cmd_swap(const RunConfig& c) {
  CommandOutput out;
  const double hbar = constants::hbar_eVs;
  CsvTable table({"variant", "delta_over_Delta", "t", "fidelity_closed", "fidelity_exact",
                  "unitarity_defect"});
  for (SwapVariant v : {SwapVariant::printed_t, SwapVariant::half_t, SwapVariant::exact}) {
    for (double ratio : c.swap_ratios) {
      const SwapReport r = swap_protocol(c.swap_delta, v, c.swap_delta / ratio);
      table.add(std::string(swap_variant_name(v))).add(ratio).add(r.t * hbar);
      table.add(r.fidelity_closed).add(r.fidelity_exact).add(r.unitarity_defect_closed).end_row();
    }
  }
  out.tables.emplace_back("swap.csv", std::move(table));

  Json at_condition = Json::object();
  for (SwapVariant v : {SwapVariant::printed_t, SwapVariant::half_t, SwapVariant::exact}) {
    const SwapReport r = swap_protocol(c.swap_delta, v);
    Json j;
    j["t_s"] = r.t * hbar;
    j["closed_01"] = Json::array({r.closed_01.real(), r.closed_01.imag()});
    j["closed_10"] = Json::array({r.closed_10.real(), r.closed_10.imag()});
    j["exact_01"] = Json::array({r.exact_01.real(), r.exact_01.imag()});
    j["exact_10"] = Json::array({r.exact_10.real(), r.exact_10.imag()});
    j["fidelity_closed"] = r.fidelity_closed;
    j["fidelity_exact"] = r.fidelity_exact;
    j["unitarity_defect_closed"] = r.unitarity_defect_closed;
    at_condition[swap_variant_name(v)] = j;
  }
  const SwapReport base = swap_protocol(c.swap_delta, SwapVariant::printed_t);
  out.results["Delta_eV"] = base.Delta;
  out.results["delta_eV"] = base.delta;
  out.results["omega2_over_omega3"] = base.omega2 / base.omega3;
  out.results["printed_residual"] = base.printed_residual;
  out.results["variants"] = at_condition;
  if (c.coulomb_samples > 0) {
    const GaussianOrbital phi{{0.0, 0.0, 0.0}, c.coulomb_sigma_nm};
    CoulombModel m = c.coulomb;
    const CoulombEstimate e = coulomb_matrix_element(phi, phi, m, c.threads);
    Json j;
    j["value_eV"] = e.value;
    j["stderr_eV"] = e.stderr_;
    j["samples"] = m.samples;
    j["point_charge_eV"] = yukawa(m.separation_nm, m.screening_nm, m.relative_permittivity);
    out.results["coulomb"] = j;
  }
  return out;
}

CommandOutput cmd_phonon(const RunConfig& c) {
  CommandOutput out;
  const PhononTables t = fig7_tables(c.phonon_energies, c.phonon_temperatures, c.phonon);
  auto table = [](const std::vector<PhononRow>& rows) {
    CsvTable csv({"deltaE_ueV", "T_K", "rate_per_s", "tau_s"});
    for (const PhononRow& r : rows) {
      csv.add(r.dE * 1e6).add(r.T).add(r.rate).add(r.tau.seconds).end_row();
    }
    return csv;
  };
  out.tables.emplace_back("phonon_vs_T.csv", table(t.by_energy));
  out.tables.emplace_back("phonon_vs_dE.csv", table(t.by_temperature));
  double worst = 0.0;
  for (const PhononRow& r : t.by_energy) {
    if (r.rate > 0.0) {
      worst = std::max(worst, std::abs(phonon_rate_internal(r.dE, r.T, c.phonon) - r.rate) / r.rate);
    }
  }
  out.results["unit_path_max_rel_diff"] = worst;
  out.results["rows"] = t.by_energy.size();
  return out;
}

CommandOutput cmd_crosstalk(const RunConfig& c) {
  require_fields(c, 1);
  CommandOutput out;
  std::vector<CrossAxisResult> res(c.fields.size());
  parallel_for(c.fields.size(), c.threads, [&](std::size_t i) {
    DotSpec at = c.dot;
    at.field_V_per_nm = c.fields[i];
    res[i] = cross_axis_coupling(at, c.solver);
  });
  CsvTable table({"field_kV_cm", "ratio", "numerator", "denominator"});
  for (std::size_t i = 0; i < res.size(); ++i) {
    table.add(to_kVcm(c.fields[i])).add(res[i].ratio).add(res[i].numerator).add(res[i].denominator);
    table.end_row();
  }
  out.tables.emplace_back("crosstalk.csv", std::move(table));
  return out;
}

using Command = CommandOutput (*)(const RunConfig&);

const std::map<std::string, Command>& table() {
  static const std::map<std::string, Command> t = {
      {"spectrum", cmd_spectrum}, {"coupling", cmd_coupling}, {"anticross", cmd_anticross},
      {"rabi", cmd_rabi},         {"swap", cmd_swap},         {"phonon", cmd_phonon},
      {"crosstalk", cmd_crosstalk}};
  return t;
}

std::string stem(const std::string& file) {
  const auto dot = file.rfind('.');
  return dot == std::string::npos ? file : file.substr(0, dot);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"spectrum", "coupling",  "anticross", "rabi",
                                                 "swap",     "phonon",    "crosstalk"};
  return names;
}

CommandOutput run_command(const std::string& name, const RunConfig& config) {
  const auto it = table().find(name);
  if (it == table().end()) throw ConfigError("unknown command '" + name + "'");
  return it->second(config);
}

Json build_manifest(const std::string& command, const RunConfig& config, const CommandOutput& output,
                    const std::string& file, const WriteOptions& options) {
  Json m;
  m["schema"] = "sivalley-manifest/1";
  m["tool"] = "sivalley";
  m["version"] = kVersion;
  m["command"] = command;
  m["file"] = file;
  Json outputs = Json::array();
  for (const auto& [name, t] : output.tables) {
    const std::string text = t.text();
    Json o;
    o["file"] = name;
    o["rows"] = t.rows();
    o["columns"] = t.header();
    o["fnv1a64"] = fnv1a64(text);
    outputs.push_back(o);
  }
  m["outputs"] = outputs;
  Json cfg = Json::object();
  for (const auto& [k, v] : config.resolved) cfg[k] = v;
  m["config"] = cfg;
  m["seed"] = config.seed;
  m["results"] = output.results;
  m["residual_max"] = output.residual_max;
  m["warnings"] = output.warnings;
  if (options.timing) m["runtime_s"] = options.runtime_s;
  return m;
}

std::vector<std::string> write_outputs(const std::string& command, const RunConfig& config,
                                       const CommandOutput& output, const WriteOptions& options) {
  namespace fs = std::filesystem;
  const fs::path dir(options.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + options.out_dir + "': " + ec.message());
  std::vector<std::string> written;
  for (const auto& [name, t] : output.tables) {
    write_file(dir / name, t.text());
    written.push_back((dir / name).string());
    const Json manifest = build_manifest(command, config, output, name, options);
    const fs::path mpath = dir / (stem(name) + ".manifest.json");
    write_file(mpath, manifest.dump(2) + "\n");
    written.push_back(mpath.string());
  }
  const fs::path echo = dir / (command + ".config.txt");
  write_file(echo, resolved_text(config));
  written.push_back(echo.string());
  return written;
}

}  // namespace sivalley::cli
