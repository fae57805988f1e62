#include "qosc/check.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qosc/angular.hpp"
#include "qosc/observables.hpp"
#include "qosc/qnum.hpp"
#include "qosc/radial.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::vector<double> theta_grid(int points) {
  std::vector<double> grid;
  grid.reserve(points);
  for (int i = 1; i <= points; ++i) {
    grid.push_back(kPi * i / (points + 1));
  }
  return grid;
}

// sup |A - B| / max(sup|A|, sup|B|, sup|ref|): comparing operator identities
// against the scale of a reference function keeps exact zeros testable.
double residual_vs(const AngularFunction& a, const AngularFunction& b,
                   const AngularFunction& ref, const std::vector<double>& grid) {
  const double phi = 0.3;
  double diff = 0.0;
  double scale = 0.0;
  for (double theta : grid) {
    const Complex va = evaluate(a, theta, phi);
    const Complex vb = evaluate(b, theta, phi);
    diff = std::max(diff, std::abs(va - vb));
    scale = std::max({scale, std::abs(va), std::abs(vb),
                      std::abs(evaluate(ref, theta, phi))});
  }
  return scale == 0.0 ? diff : diff / scale;
}

// sup-norm residual of (C f)(theta) - c f(theta), relative to sup |c f|.
double eigen_residual(const AngularFunction& applied, const AngularFunction& f,
                      double eigenvalue, const std::vector<double>& grid) {
  const double phi = 0.3;
  double diff = 0.0;
  double scale = 0.0;
  for (double theta : grid) {
    const Complex lhs = evaluate(applied, theta, phi);
    const Complex rhs = eigenvalue * evaluate(f, theta, phi);
    diff = std::max(diff, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  return scale == 0.0 ? diff : diff / scale;
}

std::vector<QParam> check_params() {
  return {QParam::real_positive(0.2), QParam::real_positive(0.5),
          QParam::real_positive(1.0), QParam::unit_circle(0.3),
          QParam::unit_circle(0.7)};
}

CheckResult make_result(std::string group, std::string detail, double residual,
                        double tolerance) {
  CheckResult r;
  r.group = std::move(group);
  r.detail = std::move(detail);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  return r;
}

void check_qnum_brackets(const Tolerances& tol, std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (const QParam& qp : check_params()) {
    for (double x : {0.5, 1.0, 1.7, 2.0, 3.3, 5.0}) {
      const Complex num = qp.q_power(x) - qp.q_power(-x);
      const Complex den = qp.q_power(1.0) - qp.q_power(-1.0);
      const Complex ratio = num / den;
      worst = std::max(worst, std::abs(bracket(x, qp) - ratio) /
                                  std::max(1.0, std::abs(ratio)));
      const double lhs = bracket(x + 1.0, qp) * bracket(x - 1.0, qp);
      const double rhs = bracket(x, qp) * bracket(x, qp) - 1.0;
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  out.push_back(make_result("qnum-brackets",
                            "defining ratio and [x+1][x-1] = [x]^2 - 1",
                            worst, tol.get("bracket")));
}

void check_qnum_gamma(const Tolerances& tol, std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (double w : {0.3, 0.7, 1.3}) {
    QParam qp = QParam::unit_circle(w);
    const double s = std::sin(w);
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      for (int l = 0; l <= 4; ++l) {
        const double lhs = gamma_q(l, kind, qp);
        const double rhs = 4.0 * s * s * casimir_eigenvalue(l, kind, qp);
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
  }
  out.push_back(make_result("qnum-gamma",
                            "gamma = 4 sin^2(w) * casimir, both kinds",
                            worst, tol.get("gamma")));
}

void check_angular_eigen(const Tolerances& tol, std::vector<CheckResult>& out) {
  const auto grid = theta_grid(20);
  double worst = 0.0;
  for (const QParam& qp : check_params()) {
    for (int l = 0; l <= 3; ++l) {
      for (int m = -l; m <= l; ++m) {
        const AngularFunction f = harmonic_shape(l, m, qp);
        for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
          const AngularFunction cf = apply_casimir(f, kind, qp);
          worst = std::max(
              worst, eigen_residual(cf, f, casimir_eigenvalue(l, kind, qp),
                                    grid));
        }
      }
    }
  }
  out.push_back(make_result("angular-eigen",
                            "Casimir eigenvalue equations, l <= 3",
                            worst, tol.get("eigen")));
}

void check_angular_commutators(const Tolerances& tol,
                               std::vector<CheckResult>& out) {
  const auto grid = theta_grid(20);
  double worst = 0.0;
  for (const QParam& qp :
       {QParam::real_positive(0.5), QParam::unit_circle(0.7)}) {
    for (auto [l, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1},
                                                        {3, -2}}) {
      const AngularFunction y = harmonic_shape(l, m, qp);
      // [J3, J+] y = J+ y
      const AngularFunction jy = apply_jplus(y, qp);
      const AngularFunction lhs1 =
          add(apply_j3(jy), multiply_scalar(apply_jplus(apply_j3(y), qp), -1.0));
      worst = std::max(worst, residual_vs(lhs1, jy, jy, grid));
      // [J+, J-] y = [2 J3] y = [2m] y
      const AngularFunction lhs2 =
          add(apply_jplus(apply_jminus(y, qp), qp),
              multiply_scalar(apply_jminus(apply_jplus(y, qp), qp), -1.0));
      const AngularFunction rhs2 = multiply_scalar(y, bracket(2.0 * m, qp));
      worst = std::max(worst, residual_vs(lhs2, rhs2, y, grid));
    }
  }
  out.push_back(make_result("angular-commutators",
                            "[J3, J+] = J+ and [J+, J-] = [2 J3]",
                            worst, tol.get("commutator")));
}

void check_angular_ladder(const Tolerances& tol,
                          std::vector<CheckResult>& out) {
  const auto grid = theta_grid(20);
  double worst = 0.0;
  for (const QParam& qp :
       {QParam::real_positive(0.5), QParam::unit_circle(0.7)}) {
    const int l_max = qp.regime() == Regime::UnitCircle ? 1 : 2;
    for (int l = 0; l <= l_max; ++l) {
      for (int m = -l; m < l; ++m) {
        const QSphericalHarmonic ylm = spherical_harmonic(l, m, qp);
        const QSphericalHarmonic up = spherical_harmonic(l, m + 1, qp);
        const double amp = std::sqrt(bracket(l - m, qp) *
                                     bracket(l + m + 1, qp));
        const AngularFunction lhs = apply_jplus(ylm.f, qp);
        const AngularFunction rhs = multiply_scalar(up.f, amp);
        worst = std::max(worst, residual_vs(lhs, rhs, rhs, grid));
      }
      // top-of-ladder annihilation must simplify to the exact zero function
      const AngularFunction top =
          simplified(apply_jplus(harmonic_shape(l, l, qp), qp));
      if (!top.is_zero()) {
        for (double theta : grid) {
          worst = std::max(worst, std::abs(evaluate(top, theta, 0.3)));
        }
      }
    }
  }
  out.push_back(make_result("angular-ladder",
                            "J+ amplitudes and highest-weight annihilation",
                            worst, tol.get("ladder")));
}

void check_angular_orthonormality(const Tolerances& tol,
                                  std::vector<CheckResult>& out) {
  double worst = 0.0;
  auto gram = [&](const QParam& qp, int l_max) {
    for (int l = 0; l <= l_max; ++l) {
      for (int lp = 0; lp <= l_max; ++lp) {
        for (int m = -std::min(l, lp); m <= std::min(l, lp); ++m) {
          const Complex g = deformed_inner_product(lp, m, l, m, qp);
          const double target = (l == lp) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(g - target));
        }
      }
    }
    // distinct azimuthal sectors decouple exactly
    worst = std::max(worst,
                     std::abs(deformed_inner_product(1, 1, 1, 0, qp)));
  };
  gram(QParam::real_positive(0.5), 2);
  gram(QParam::unit_circle(0.7), 1);
  out.push_back(make_result("angular-orthonormality",
                            "deformed Gram matrix vs identity",
                            worst, tol.get("orthonormality")));
}

double half_line_overlap(const RadialState& a, const RadialState& b) {
  const auto res = integrate_real(
      [&](double u) {
        const double r = u / (1.0 - u);
        const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        return radial_wavefunction(a, r) * radial_wavefunction(b, r) * jac;
      },
      0.0, 1.0);
  return res.value.real();
}

void check_radial(const Tolerances& tol, std::vector<CheckResult>& out) {
  QParam qp = QParam::real_positive(0.8);
  double worst_ortho = 0.0;
  for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
    for (int l : {0, 2}) {
      for (int n = 0; n <= 3; ++n) {
        const RadialState sn = make_radial_state(n, l, kind, RootBranch::Plus,
                                                 qp);
        for (int np = n; np <= 3; ++np) {
          const RadialState sm = make_radial_state(np, l, kind,
                                                   RootBranch::Plus, qp);
          const double target = (n == np) ? 1.0 : 0.0;
          worst_ortho = std::max(worst_ortho,
                                 std::abs(half_line_overlap(sn, sm) - target));
        }
      }
    }
  }
  out.push_back(make_result("radial", "orthonormality of S_{nlq}, n <= 3",
                            worst_ortho, tol.get("radial-orthonormality")));

  // S'' = (C/r^2 + r^2 - 2E) S via central differences
  double worst_ode = 0.0;
  for (auto [n, l] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {1, 3}}) {
    for (const QParam& p :
         {QParam::real_positive(0.8), QParam::unit_circle(0.6)}) {
      const RadialState s = make_radial_state(n, l, CasimirKind::Cq,
                                              RootBranch::Plus, p);
      const double c = s.alpha * (s.alpha - 1.0);
      const double e = energy(s);
      const double h = 1e-4;
      double max_abs = 0.0;
      double max_res = 0.0;
      for (double r = 0.1; r <= 4.0; r += 0.13) {
        const double sm = radial_wavefunction(s, r - h);
        const double s0 = radial_wavefunction(s, r);
        const double sp = radial_wavefunction(s, r + h);
        const double lhs = (sp - 2.0 * s0 + sm) / (h * h);
        const double rhs = (c / (r * r) + r * r - 2.0 * e) * s0;
        max_abs = std::max(max_abs, std::abs(s0));
        max_res = std::max(max_res, std::abs(lhs - rhs));
      }
      worst_ode = std::max(worst_ode, max_res / max_abs);
    }
  }
  out.push_back(make_result("radial", "reduced radial ODE residual",
                            worst_ode, tol.get("ode")));

  double worst_r2 = 0.0;
  for (int n = 0; n <= 2; ++n) {
    const RadialState s = make_radial_state(n, 1, CasimirKind::CqPrime,
                                            RootBranch::Plus, qp);
    const auto res = integrate_real(
        [&](double u) {
          const double r = u / (1.0 - u);
          const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
          const double v = radial_wavefunction(s, r);
          return v * r * r * v * jac;
        },
        0.0, 1.0);
    worst_r2 = std::max(worst_r2, std::abs(res.value.real() -
                                           radial_r2_matrix_element(s)));
  }
  out.push_back(make_result("radial", "<r^2> closed form vs quadrature",
                            worst_r2, tol.get("r2")));
}

void check_spectrum(const Tolerances& tol, std::vector<CheckResult>& out) {
  double worst = 0.0;
  auto sweep = [&](const QParam& qp) {
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      for (int l = 0; l <= 4; ++l) {
        for (const AlphaRoot& root : alpha_roots(l, kind, qp)) {
          const double via_alpha = 2.0 * 1 + root.alpha + 0.5;
          const double closed = energy_closed_form(1, l, kind, root.branch, qp);
          worst = std::max(worst, std::abs(closed - via_alpha) /
                                      std::max(1.0, std::abs(via_alpha)));
        }
      }
    }
  };
  for (int i = 1; i <= 50; ++i) {
    sweep(QParam::real_positive(3.0 * i / 50.0));
    const double w = kPi * i / 51.0;
    if (!nearest_root_of_unity(w, 64, 1e-9).has_value()) {
      sweep(QParam::unit_circle(w));
    }
  }
  out.push_back(make_result("spectrum", "closed-form energies vs alpha roots",
                            worst, tol.get("closed-form")));
}

void check_observables(const Tolerances& tol, std::vector<CheckResult>& out) {
  double worst_iq = 0.0;
  auto iq_pair = [&](const QParam& qp) {
    const double closed = iq_integral(qp, IqMethod::Closed);
    const double quad = iq_integral(qp, IqMethod::Quadrature);
    worst_iq = std::max(worst_iq, std::abs(closed - quad) /
                                      std::max(1.0, std::abs(closed)));
  };
  iq_pair(QParam::real_positive(0.25));
  iq_pair(QParam::real_positive(1.0));
  iq_pair(QParam::unit_circle(0.5));
  iq_pair(QParam::unit_circle(2.0));
  out.push_back(make_result("observables", "I_q closed form vs quadrature",
                            worst_iq, tol.get("iq")));

  double worst_q = 0.0;
  auto route = [&](const QParam& qp) {
    const double both = iq_integral(qp, IqMethod::Quadrature) +
                        iq_integral(qp.inverse(), IqMethod::Quadrature);
    const double w = qp.w();
    const double pre = qp.regime() == Regime::RealPositive
                           ? 3.0 * std::sinh(w) / (8.0 * kPi * w)
                           : 3.0 * std::sin(w) / (8.0 * kPi * w);
    const double via_iq = pre * both - 1.0;
    worst_q = std::max(worst_q,
                       std::abs(via_iq - quadrupole_angular_closed(qp)));
  };
  route(QParam::real_positive(0.25));
  route(QParam::real_positive(0.75));
  route(QParam::unit_circle(0.3));
  route(QParam::unit_circle(1.2));
  out.push_back(make_result("observables",
                            "angular quadrupole via I_q vs closed form",
                            worst_q, tol.get("quadrupole")));
}

}  // namespace

Tolerances::Tolerances()
    : values_{{"bracket", 1e-12},
              {"gamma", 1e-12},
              {"eigen", 1e-9},
              {"commutator", 1e-9},
              {"ladder", 1e-9},
              {"orthonormality", 1e-8},
              {"radial-orthonormality", 1e-9},
              {"ode", 1e-5},
              {"r2", 1e-9},
              {"closed-form", 1e-12},
              {"iq", 1e-8},
              {"quadrupole", 1e-8}} {}

void Tolerances::set(const std::string& name, double value) {
  auto it = values_.find(name);
  if (it == values_.end()) {
    throw std::invalid_argument("unknown tolerance name: " + name);
  }
  if (!(value > 0.0)) {
    throw std::invalid_argument("tolerance must be positive: " + name);
  }
  it->second = value;
}

double Tolerances::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) {
    throw std::invalid_argument("unknown tolerance name: " + name);
  }
  return it->second;
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{
      "qnum-brackets",  "qnum-gamma",        "angular-eigen",
      "angular-commutators", "angular-ladder", "angular-orthonormality",
      "radial",         "spectrum",          "observables"};
  return groups;
}

std::vector<CheckResult> run_checks(const Tolerances& tol,
                                    const std::optional<std::string>& group) {
  using Runner = std::function<void(const Tolerances&,
                                    std::vector<CheckResult>&)>;
  const std::vector<std::pair<std::string, Runner>> runners{
      {"qnum-brackets", check_qnum_brackets},
      {"qnum-gamma", check_qnum_gamma},
      {"angular-eigen", check_angular_eigen},
      {"angular-commutators", check_angular_commutators},
      {"angular-ladder", check_angular_ladder},
      {"angular-orthonormality", check_angular_orthonormality},
      {"radial", check_radial},
      {"spectrum", check_spectrum},
      {"observables", check_observables}};
  if (group.has_value()) {
    const bool known =
        std::any_of(runners.begin(), runners.end(),
                    [&](const auto& r) { return r.first == *group; });
    if (!known) {
      std::string names;
      for (const auto& [name, fn] : runners) {
        if (!names.empty()) names += ", ";
        names += name;
      }
      throw std::invalid_argument("unknown check group '" + *group +
                                  "' (known: " + names + ")");
    }
  }
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : runners) {
    if (group.has_value() && name != *group) continue;
    fn(tol, out);
  }
  return out;
}

}  // namespace qosc
