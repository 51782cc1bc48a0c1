// Acceptance criteria 1-13. One PASS/FAIL line per criterion with the
// measured values; exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sivalley/coulomb.hpp"
#include "sivalley/decoherence.hpp"
#include "sivalley/multivalley.hpp"
#include "sivalley/qubit.hpp"
#include "sivalley/tracking.hpp"
#include "sivalley/two_qubit.hpp"
#include "sivalley/units.hpp"

using namespace sivalley;
using cd = std::complex<double>;
namespace fs = std::filesystem;

namespace {

constexpr double kVcm = 1e-4;
constexpr double ueV = 1e-6;
const double K0 = 0.85 * 2.0 * constants::pi / 0.543;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(secs < limit_s, "runtime limit");
  std::printf("%s %2d %s:%s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.str().c_str(), secs, limit_s);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

DotSpec hard_wall(double F = 0.0) {
  DotSpec s;
  s.barrier = BarrierMode::hard_wall;
  s.field_V_per_nm = F;
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  std::printf("acceptance: criteria 1-13\n");

  criterion(1, "coupling constant I_56 vs tabulated -0.2171", 1, [](Outcome& o) {
    const auto vs = valley_set();
    const double I = coupling_I(vs[4], vs[5], BandModel{});
    const double rel = std::abs(I - (-0.2171)) / 0.2171;
    o.detail << " I_56 = " << I << ", relative difference " << rel;
    o.check(rel <= 0.10, "within 10%");
  });

  criterion(2, "hard-wall box energy and valley ordering", 10, [](Outcome& o) {
    const auto e = valley_ground_energies(hard_wall(), SolverOptions{});
    const Valley v = valley_set()[4];
    double analytic = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double k = constants::pi / hard_wall().dims_nm[a];
      analytic += constants::hbar2_over_2m0 * k * k / v.mass[a];
    }
    o.detail << " E(5) = " << e[4] * 1e3 << " meV (analytic " << analytic * 1e3
             << "), E(1) = " << e[0] * 1e3 << ", E(3) = " << e[2] * 1e3;
    o.check(std::abs(e[4] - 56.08e-3) <= 1e-3 * 56.08e-3, "56.08 meV within 0.1%");
    o.check(std::abs(e[4] - analytic) <= 1e-3 * analytic, "analytic within 0.1%");
    o.check(e[4] < e[0] && e[5] < e[0] && e[0] < e[2] && e[1] < e[3], "ordering 5/6 < 1/2 < 3/4");
  });

  criterion(3, "closed-form integrals vs Gauss-Legendre", 60, [](Outcome& o) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> len(4.0, 14.0), pad(0.5, 3.0);
    double worst = 0.0;
    int count = 0;
    for (int draw = 0; draw < 100; ++draw) {
      const double L = len(rng);
      const AxisBasis ax{L, L + 2 * pad(rng), 12};
      const int m = 1 + static_cast<int>(rng() % 12), n = 1 + static_cast<int>(rng() % 12);
      int dm = 0, dn = 0, p = 0;
      double q = 0.0;
      Interval iv = Interval::box;
      switch (draw % 3) {
        case 0:  // potential: barrier overlaps and the field moment
          p = static_cast<int>(rng() % 2);
          iv = rng() % 2 ? Interval::interior : Interval::box;
          break;
        case 1:  // magnetic: u d/du, u^2
          if (rng() % 2) {
            dn = 1;
            p = 0;
          } else {
            p = 1 + static_cast<int>(rng() % 2);
          }
          break;
        default:  // oscillatory inter-valley factors
          q = rng() % 2 ? 2 * K0 : K0;
          dm = static_cast<int>(rng() % 2);
          dn = dm ? 0 : static_cast<int>(rng() % 2);
          p = static_cast<int>(rng() % 2);
          iv = rng() % 2 ? Interval::interior : Interval::box;
          break;
      }
      const double half = 0.5 * (iv == Interval::box ? ax.box_length : ax.interior_length);
      const cd got = axis_integral(ax, dm, dn, p, q, iv)(m - 1, n - 1);
      worst = std::max(worst, oracle::rel_error(got, oracle::axis(ax, m, n, dm, dn, p, q, -half, half)));
      ++count;
    }
    o.detail << " " << count << " draws, worst relative error " << worst;
    o.check(worst <= 1e-8, "1e-8 relative");
  });

  criterion(4, "field-controlled coupling, 26-point sweep to 500 kV/cm", 600, [](Outcome& o) {
    SolverOptions opt;
    opt.source = CouplingSource::field_only;
    const ValleyPairModel m(hard_wall(), 5, 6, opt);
    std::vector<SplittingResult> r;
    for (int i = 0; i <= 25; ++i) r.push_back(splitting_and_coupling(m, 20.0 * i * kVcm));
    bool monotone = true;
    double ratio_lo = 1e300, ratio_hi = -1e300;
    for (int i = 1; i <= 25; ++i) {
      monotone = monotone && r[i].delta >= r[i - 1].delta;
      if (i >= 5) {
        ratio_lo = std::min(ratio_lo, r[i].epsilon / r[i].delta);
        ratio_hi = std::max(ratio_hi, r[i].epsilon / r[i].delta);
      }
    }
    const double d400 = r[20].delta / ueV, d500 = r[25].delta / ueV;
    o.detail << " hard wall, field-only source: Delta(0) = " << r[0].delta << " eV, Delta(400) = " << d400
             << " ueV, Delta(500) = " << d500 << " ueV, eps/Delta in [" << ratio_lo << ", " << ratio_hi
             << "], monotone " << (monotone ? "yes" : "no");
    o.check(monotone, "monotone");
    o.check(r[0].delta <= 1e-10, "Delta(0) <= 1e-10 eV");
    o.check(d400 >= 15.8 && d400 <= 63.2, "Delta(400) in [15.8, 63.2] ueV");
    o.check(d500 >= 21.5 && d500 <= 86.0, "Delta(500) in [21.5, 86] ueV");
    o.check(ratio_lo >= 1.7 && ratio_hi <= 2.3, "eps/Delta in [1.7, 2.3]");
  });

  criterion(5, "Rabi frequency", 1, [](Outcome& o) {
    const double f = rabi_frequency_GHz(63.5 * ueV, 31.6 * ueV);
    o.detail << " " << f << " GHz";
    o.check(std::abs(f - 17.2) <= 0.005 * 17.2, "within 0.5% of 17.2 GHz");
  });

  criterion(6, "anticrossing of E3/E5", 900, [](Outcome& o) {
    // synthetic [[aF, c], [c, -aF]]
    const double a = 0.5, c = 0.01;
    LevelSolver two = [&](double F) {
      Eigen::MatrixXcd H(2, 2);
      H << a * F, c, c, -a * F;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
      return LevelSet{es.eigenvalues(), es.eigenvectors(), Eigen::VectorXd::Zero(2)};
    };
    const AnticrossingResult syn = find_anticrossing(two, 0, 1, -1.0, 1.5);
    o.detail << " synthetic F* = " << syn.field << ", gap = " << syn.gap << " (2c = " << 2 * c << ");";
    o.check(syn.kind == CrossingKind::anticrossing && std::abs(syn.field) <= 1e-5 &&
                std::abs(syn.gap - 2 * c) <= 1e-9 * 2 * c,
            "synthetic 2x2 oracle");

    DotSpec s;
    s.B_tesla = 1.5;
    const ValleyPairModel m(s, 5, 6, SolverOptions{});
    const Valley& v = m.valley(0);
    const auto ma = separable_mode(v, s.dims_nm, 3), mb = separable_mode(v, s.dims_nm, 5);
    const int k = 9;
    const LevelSet start = m.solve_single(0, 0.0, k);
    const int ca = level_with_mode(m.basis(), start, ma), cb = level_with_mode(m.basis(), start, mb);
    if (ca < 0 || cb < 0) throw std::runtime_error("E3/E5 not identified");
    LevelSolver solver = [&](double F) { return m.solve_single(0, F, k); };
    const AnticrossingResult r = find_anticrossing(solver, ca, cb, 0.0, 300 * kVcm);
    o.detail << " E3 = (" << ma[0] << "," << ma[1] << "," << ma[2] << "), E5 = (" << mb[0] << "," << mb[1]
             << "," << mb[2] << "): " << crossing_kind_name(r.kind) << " at F* = " << r.field / kVcm
             << " kV/cm, gap = " << r.gap / ueV << " ueV";
    o.check(r.kind == CrossingKind::anticrossing, "interior minimum");
    o.check(r.field / kVcm >= 65 && r.field / kVcm <= 265, "F* in [65, 265] kV/cm");
    o.check(r.gap / ueV >= 58 && r.gap / ueV <= 234, "gap in [58, 234] ueV");
  });

  criterion(7, "cross-axis suppression at 400 kV/cm", 300, [](Outcome& o) {
    DotSpec s;
    s.field_V_per_nm = 400 * kVcm;
    const CrossAxisResult r = cross_axis_coupling(s, SolverOptions{});
    o.detail << " |D15|/|D56| = " << r.ratio << " (" << r.numerator << " / " << r.denominator << " eV)";
    o.check(r.ratio <= 1e-3, "ratio <= 1e-3");
  });

  criterion(8, "parity selection", 1, [](Outcome& o) {
    const PseudoSpinState S{PseudoSpin::S, 0}, A{PseudoSpin::A, 0};
    const TunnelingModel t{1.0, 0.7};
    const double sa = tunneling_amplitude(S, A, t), as = tunneling_amplitude(A, S, t);
    const double ss = tunneling_amplitude(S, S, t), aa = tunneling_amplitude(A, A, t);
    o.detail << " T(S,A) = " << sa << ", T(A,S) = " << as << ", T(S,S) = " << ss << ", T(A,A) = " << aa;
    o.check(sa == 0.0 && as == 0.0, "opposite parity exactly 0");
    o.check(ss != 0.0 && aa != 0.0, "equal parity non-zero");
  });

  criterion(9, "two-qubit gates", 10, [](Outcome& o) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.01, 2.0);
    double unit = 0.0, group = 0.0;
    for (int i = 0; i < 200; ++i) {
      const TwoQubitModel m = TwoQubitModel::special(u(rng), u(rng));
      const double t1 = 5 * u(rng), t2 = 5 * u(rng);
      unit = std::max(unit, unitarity_defect(evolve_exact(m, t1)));
      group = std::max(group, (evolve_exact(m, t1) * evolve_exact(m, t2) - evolve_exact(m, t1 + t2))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    double limit = 0.0;
    const TwoQubitModel z = TwoQubitModel::special(1.0, 1e-14);
    for (int i = 0; i <= 20; ++i)
      limit = std::max(limit, (evolve_closed_form(z, 0.25 * i) - evolve_exact(z, 0.25 * i)).cwiseAbs().maxCoeff());
    const SwapReport p = swap_protocol(1e-6, SwapVariant::printed_t);
    const double w = std::abs(p.omega2 - 2 * p.omega3) / p.omega2;
    const SwapReport e = swap_protocol(1e-6, SwapVariant::exact);
    o.detail << " unitarity " << unit << ", group " << group << ", delta->0 " << limit << ", |W2-2W3|/W2 "
             << w << ", closed <01| = " << p.closed_01.real() << (p.closed_01.imag() < 0 ? "-" : "+")
             << std::abs(p.closed_01.imag()) << "i, residual " << p.printed_residual << ", exact swap |amp| "
             << std::abs(e.exact_01);
    o.check(unit <= 1e-13, "unitary to 1e-13");
    o.check(group <= 1e-12, "group property to 1e-12");
    o.check(limit <= 1e-10, "closed form = exact as delta -> 0");
    o.check(w <= 4 * std::numeric_limits<double>::epsilon(), "Omega2 = 2 Omega3");
    o.check(std::abs(p.closed_01 - cd(-1.0)) <= 1e-12, "closed-form amplitude -1");
    o.check(std::abs(p.printed_residual - 0.0261) <= 0.001, "printed residual 0.0261");
    o.check(std::abs(std::abs(e.exact_01) - 1.0) <= 1e-12, "exact swap amplitude 1");
  });

  criterion(10, "Coulomb Monte Carlo oracles at 1e6 samples", 120, [](Outcome& o) {
    CoulombModel m;
    m.separation_nm = 20.0;
    m.samples = 1000000;
    const GaussianOrbital narrow{{0, 0, 0}, 0.05};
    const CoulombEstimate sep = coulomb_matrix_element(narrow, narrow, m);
    const double ref = yukawa(m.separation_nm, m.screening_nm, m.relative_permittivity);
    CoulombModel same = m;
    same.separation_nm = 0.0;
    const GaussianOrbital wide{{0, 0, 0}, 2.0};
    const CoulombEstimate cancel = coulomb_matrix_element(wide, wide, same);
    o.detail << " separated: " << sep.value << " +- " << sep.stderr_ << " eV vs point charge " << ref
             << "; identical: " << cancel.value << " +- " << cancel.stderr_;
    o.check(std::abs(sep.value - ref) <= 3 * sep.stderr_, "point-charge limit within 3 sigma");
    o.check(std::abs(cancel.value) <= 3 * cancel.stderr_ + 1e-300, "cancellation within 3 sigma");
  });

  double tau_ref = 0.0;
  criterion(11, "phonon rates and decoherence times", 1, [&](Outcome& o) {
    // independent CGS arithmetic
    const double erg = 1.602176634e-12, hbar = 1.054571817e-27, kB = 1.380649e-16;
    const double dE = 50e-6 * erg;
    const double pi = 3.14159265358979323846;
    const double hand = 4 * pi * pi * std::pow(dE, 3) * std::pow(4.7 * erg, 2) /
                        (2.33 * std::pow(hbar, 4) * std::pow(9.01e5, 5)) * std::exp(-dE / (kB * 0.1));
    const double W = phonon_rate(50e-6, 0.1);
    tau_ref = decoherence_time(50e-6, 0.1).seconds;
    double lo = 1e300, hi = 0.0, paths = 0.0;
    for (int i = 0; i <= 14; ++i)
      for (int j = 0; j <= 10; ++j) {
        const double e = (30.0 + 5.0 * i) * ueV, T = 0.05 + 0.025 * j;
        const double tau = decoherence_time(e, T).seconds;
        lo = std::min(lo, tau);
        hi = std::max(hi, tau);
        paths = std::max(paths, std::abs(phonon_rate_internal(e, T) - phonon_rate(e, T)) / phonon_rate(e, T));
      }
    o.detail << " W(50 ueV, 0.1 K) = " << W << " /s (hand CGS " << hand << "), tau over the grid in [" << lo
             << ", " << hi << "] s, unit paths " << paths;
    o.check(std::abs(W - 2.0e6) <= 0.2 * 2.0e6 && std::abs(W - hand) <= 0.2 * 2.0e6, "2.0e6 /s +- 20%");
    o.check(lo >= 1e-7 && hi <= 1e-5, "tau in [1e-7, 1e-5] s");
    o.check(paths <= 1e-10, "CGS vs internal 1e-10");
  });

  criterion(12, "operation budget", 1, [&](Outcome& o) {
    const auto n = operation_budget(31.6 * ueV, tau_ref);
    o.detail << " tau = " << tau_ref << " s, budget = " << n;
    o.check(n >= 1000, "budget >= 1e3");
  });

  criterion(13, "CLI reproducibility", 600, [](Outcome& o) {
    const char* exe = std::getenv("SIVALLEY_EXE");
    if (!exe) throw std::runtime_error("SIVALLEY_EXE not set");
    const fs::path root = fs::temp_directory_path() / "sivalley_acceptance_13";
    fs::remove_all(root);
    const std::string conf = std::string(SIVALLEY_SOURCE_DIR) + "/tests/data/small.conf";
    int files = 0, diffs = 0;
    for (const char* cmd : {"spectrum", "coupling", "anticross", "rabi", "swap", "phonon", "crosstalk"}) {
      const std::vector<std::pair<std::string, std::string>> runs = {
          {"a", "--threads 1"}, {"b", "--threads 1"}, {"c", "--threads 3"}};
      for (const auto& [tag, extra] : runs) {
        const std::string cmdline = std::string(exe) + " " + cmd + " --config " + conf + " --seed 17 --out " +
                                    (root / cmd / tag).string() + " " + extra + " >/dev/null 2>&1";
        if (std::system(cmdline.c_str()) != 0) throw std::runtime_error(std::string("run failed: ") + cmd);
      }
      for (const auto& entry : fs::directory_iterator(root / cmd / "a")) {
        const std::string name = entry.path().filename().string();
        const std::string a = slurp(entry.path());
        ++files;
        if (a != slurp(root / cmd / "b" / name) || a != slurp(root / cmd / "c" / name)) ++diffs;
      }
    }
    o.detail << " " << files << " files across 7 commands, " << diffs << " differ (repeat and 1 vs 3 threads)";
    o.check(files > 0 && diffs == 0, "byte-identical");
  });

  std::printf("acceptance: %d failing\n", failures);
  return failures == 0 ? 0 : 1;
}
