#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qosc/angular.hpp"
#include "qosc/check.hpp"
#include "qosc/cli_config.hpp"
#include "qosc/observables.hpp"
#include "qosc/qnum.hpp"
#include "qosc/radial.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/table.hpp"

namespace {

using namespace qosc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCheckFailed = 3;

struct CommonOpts {
  std::string regime = "real";
  double w = 0.0;
  std::string w_range;
  std::string casimir = "cq";
  std::string format = "csv";
  std::string out;
  std::optional<std::string> out_path() const {
    return out.empty() ? std::nullopt : std::optional<std::string>(out);
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_range = true) {
  cmd->add_option("--regime", o.regime, "Deformation regime")
      ->check(CLI::IsMember({"real", "circle"}))
      ->capture_default_str();
  auto* w_opt = cmd->add_option("--w", o.w, "Deformation parameter w")
                    ->capture_default_str();
  if (with_range) {
    cmd->add_option("--w-range", o.w_range, "Sweep A:B:STEP over w")
        ->excludes(w_opt);
  }
  cmd->add_option("--casimir", o.casimir, "Casimir operator choice")
      ->check(CLI::IsMember({"cq", "cqprime"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to this file");
}

Regime parse_regime(const std::string& s) {
  return s == "real" ? Regime::RealPositive : Regime::UnitCircle;
}

CasimirKind parse_kind(const std::string& s) {
  return s == "cq" ? CasimirKind::Cq : CasimirKind::CqPrime;
}

RootBranch parse_branch(const std::string& s) {
  return s == "plus" ? RootBranch::Plus : RootBranch::Minus;
}

QParam make_param(Regime regime, double w) {
  return regime == Regime::RealPositive ? QParam::real_positive(w)
                                        : QParam::unit_circle(w);
}

// Grid for sweep commands: the explicit range, or the single w.
std::vector<double> sweep_grid(const CommonOpts& o) {
  if (!o.w_range.empty()) return parse_w_range(o.w_range);
  return {o.w};
}

int cmd_spectrum(const CommonOpts& o, int n_max, int l_max) {
  const Regime regime = parse_regime(o.regime);
  const CasimirKind kind = parse_kind(o.casimir);
  const bool sweep = !o.w_range.empty();
  Table t;
  t.columns = sweep ? std::vector<std::string>{"w", "n", "l", "kind", "branch",
                                               "alpha", "energy"}
                    : std::vector<std::string>{"n", "l", "kind", "branch",
                                               "alpha", "energy"};
  for (double w : sweep_grid(o)) {
    std::vector<Level> levels;
    try {
      levels = enumerate_levels(n_max, l_max, kind, make_param(regime, w));
    } catch (const DomainError& e) {
      if (!sweep) throw;
      std::cerr << "warning: skipping w = " << w << ": " << e.what() << "\n";
      continue;
    }
    for (const Level& lv : levels) {
      std::vector<Cell> row;
      if (sweep) row.push_back(w);
      row.insert(row.end(),
                 {static_cast<std::int64_t>(lv.n),
                  static_cast<std::int64_t>(lv.l), to_string(lv.kind),
                  to_string(lv.branch), lv.alpha, lv.energy});
      t.add_row(row);
    }
  }
  write_table(t, o.format, o.out_path());
  return kExitOk;
}

int cmd_wavefunction(const CommonOpts& o, int n, int l, int m,
                     const std::string& branch_s,
                     const std::vector<double>& rs,
                     const std::vector<double>& thetas,
                     const std::vector<double>& phis, bool dump_harmonic) {
  const QParam qp = make_param(parse_regime(o.regime), o.w);
  const CasimirKind kind = parse_kind(o.casimir);
  const RootBranch branch = parse_branch(branch_s);
  const RadialState state = make_radial_state(n, l, kind, branch, qp);
  const QSphericalHarmonic harmonic = spherical_harmonic(l, m, qp);
  if (dump_harmonic) {
    const std::string payload = dump_json(harmonic.f) + "\n";
    if (auto path = o.out_path()) {
      std::ofstream file(*path, std::ios::binary);
      if (!file) {
        throw std::invalid_argument("cannot open output file: " + *path);
      }
      file << payload;
    } else {
      std::cout << payload;
    }
    return kExitOk;
  }
  Table t;
  t.columns = {"r", "theta", "phi", "re_psi", "im_psi"};
  for (double r : rs) {
    const double radial = radial_wavefunction(state, r);
    for (double theta : thetas) {
      for (double phi : phis) {
        const std::complex<double> psi =
            radial * evaluate(harmonic.f, theta, phi);
        t.add_row({r, theta, phi, psi.real(), psi.imag()});
      }
    }
  }
  write_table(t, o.format, o.out_path());
  return kExitOk;
}

int cmd_quadrupole(const CommonOpts& o, int n_max, const std::string& branch_s) {
  const Regime regime = parse_regime(o.regime);
  const CasimirKind kind = parse_kind(o.casimir);
  const RootBranch branch = parse_branch(branch_s);
  const bool sweep = !o.w_range.empty();
  Table t;
  t.columns = {"w", "n", "kind", "branch", "radial", "angular", "value"};
  for (double w : sweep_grid(o)) {
    for (int n = 0; n <= n_max; ++n) {
      try {
        const QuadrupoleResult r =
            quadrupole_moment(n, kind, branch, make_param(regime, w));
        t.add_row({w, static_cast<std::int64_t>(r.n), to_string(r.kind),
                   to_string(r.branch), r.radial_part, r.angular_part,
                   r.value});
      } catch (const DomainError& e) {
        if (!sweep) throw;
        std::cerr << "warning: skipping w = " << w << ", n = " << n << ": "
                  << e.what() << "\n";
      }
    }
  }
  write_table(t, o.format, o.out_path());
  return kExitOk;
}

int cmd_figures(const CommonOpts& o, const std::string& figure_s) {
  Figure figure = Figure::Fig1;
  std::string default_range = "0.1:3.0:0.1";
  if (figure_s == "fig2") {
    figure = Figure::Fig2;
    default_range = "0.05:3.1:0.05";
  } else if (figure_s == "fig3") {
    figure = Figure::Fig3;
  } else if (figure_s == "fig4") {
    figure = Figure::Fig4;
    default_range = "0.05:3.1:0.05";
  }
  const std::string range = o.w_range.empty() ? default_range : o.w_range;
  const Table t = figure_data(figure, parse_w_range(range));
  write_table(t, o.format, o.out_path());
  return kExitOk;
}

int cmd_check(const std::vector<std::string>& tol_flags,
              const std::string& group) {
  Tolerances tol;
  if (const char* env = std::getenv("QOSC_TOL_OVERRIDE")) {
    apply_tol_overrides(tol, env);
  }
  for (const std::string& entry : tol_flags) {
    apply_tol_overrides(tol, entry);
  }
  const std::optional<std::string> group_filter =
      group.empty() ? std::nullopt : std::optional<std::string>(group);
  const std::vector<CheckResult> results = run_checks(tol, group_filter);
  bool all_passed = true;
  for (const CheckResult& r : results) {
    std::printf("%s  %-22s  residual %.3e  tol %.3e  (%s)\n",
                r.passed ? "PASS" : "FAIL", r.group.c_str(), r.residual,
                r.tolerance, r.detail.c_str());
    all_passed = all_passed && r.passed;
  }
  std::printf("%s\n", all_passed ? "all checks passed" : "CHECKS FAILED");
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed isotropic harmonic oscillator toolkit"};
  app.require_subcommand(1);
  // one [section] per subcommand, e.g.  [spectrum]\n w=0.8\n nmax=3
  app.set_config("--config", "",
                 "Read options from an INI file with one section per "
                 "subcommand");

  CommonOpts spec_opts;
  int spec_nmax = 2;
  int spec_lmax = 2;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Energy level tables");
  add_common(spectrum, spec_opts);
  spectrum->add_option("--nmax", spec_nmax, "Largest radial quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spectrum->add_option("--lmax", spec_lmax, "Largest angular momentum")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CommonOpts wf_opts;
  int wf_n = 0;
  int wf_l = 0;
  int wf_m = 0;
  std::string wf_branch = "plus";
  std::vector<double> wf_r{1.0};
  std::vector<double> wf_theta{1.5707963267948966};
  std::vector<double> wf_phi{0.0};
  bool wf_dump = false;
  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "Evaluate psi_{nlmq} on a grid");
  add_common(wavefunction, wf_opts, /*with_range=*/false);
  wavefunction->add_option("--n", wf_n, "Radial quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wavefunction->add_option("--l", wf_l, "Angular momentum")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wavefunction->add_option("--m", wf_m, "Azimuthal quantum number")
      ->capture_default_str();
  wavefunction->add_option("--branch", wf_branch, "Root branch")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  wavefunction->add_option("--r", wf_r, "Radial grid values")->delimiter(',');
  wavefunction->add_option("--theta", wf_theta, "Polar grid values")
      ->delimiter(',');
  wavefunction->add_option("--phi", wf_phi, "Azimuthal grid values")
      ->delimiter(',');
  wavefunction->add_flag("--dump-harmonic", wf_dump,
                         "Dump the harmonic term list as JSON instead");

  CommonOpts quad_opts;
  int quad_nmax = 1;
  std::string quad_branch = "plus";
  CLI::App* quadrupole =
      app.add_subcommand("quadrupole", "Quadrupole moments of l = 0 states");
  add_common(quadrupole, quad_opts);
  quadrupole->add_option("--nmax", quad_nmax, "Largest radial quantum number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  quadrupole->add_option("--branch", quad_branch, "Root branch")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();

  CommonOpts fig_opts;
  std::string fig_name;
  CLI::App* figures =
      app.add_subcommand("figures", "Tabulate energy and quadrupole curves");
  add_common(figures, fig_opts);
  figures->add_option("--figure", fig_name, "Figure to tabulate")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}))
      ->required();

  std::vector<std::string> check_tols;
  std::string check_group;
  CLI::App* check = app.add_subcommand("check", "Run the invariant self-checks");
  check->add_option("--tol", check_tols,
                    "Tolerance override name=value[,name=value...]");
  check->add_option("--group", check_group, "Run a single invariant group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(spectrum)) {
      return cmd_spectrum(spec_opts, spec_nmax, spec_lmax);
    }
    if (app.got_subcommand(wavefunction)) {
      return cmd_wavefunction(wf_opts, wf_n, wf_l, wf_m, wf_branch, wf_r,
                              wf_theta, wf_phi, wf_dump);
    }
    if (app.got_subcommand(quadrupole)) {
      return cmd_quadrupole(quad_opts, quad_nmax, quad_branch);
    }
    if (app.got_subcommand(figures)) {
      return cmd_figures(fig_opts, fig_name);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(check_tols, check_group);
    }
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
