// Acceptance suite: one line per criterion, exit code = number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "qosc/angular.hpp"
#include "qosc/observables.hpp"
#include "qosc/qnum.hpp"
#include "qosc/radial.hpp"
#include "qosc/spectrum.hpp"

using namespace qosc;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int criterion, bool passed, const std::string& what,
            double achieved, double tol) {
  std::printf("criterion %d: %s  %s (achieved %.3e, tol %.3e)\n", criterion,
              passed ? "PASS" : "FAIL", what.c_str(), achieved, tol);
  if (!passed) ++failures;
}

std::vector<double> theta_grid(int points) {
  std::vector<double> grid;
  for (int i = 1; i <= points; ++i) grid.push_back(kPi * i / (points + 1));
  return grid;
}

double residual_vs(const AngularFunction& a, const AngularFunction& b,
                   const AngularFunction& ref,
                   const std::vector<double>& grid) {
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

// --- criterion 1: undeformed limit -----------------------------------------
void criterion_1() {
  const double tol = 1e-6;
  double worst = 0.0;
  for (Regime regime : {Regime::RealPositive, Regime::UnitCircle}) {
    const QParam qp = regime == Regime::RealPositive
                          ? QParam::real_positive(1e-7)
                          : QParam::unit_circle(1e-7);
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      for (int n = 0; n <= 3; ++n) {
        for (int l = 0; l <= 4; ++l) {
          const double e =
              energy_closed_form(n, l, kind, RootBranch::Plus, qp);
          worst = std::max(worst, std::abs(e - (2 * n + l + 1.5)));
        }
      }
    }
  }
  // exact shell degeneracy at q = 1: weights 2l+1 within a shell N = 2n+l
  bool shells_ok = true;
  const QParam q1 = QParam::real_positive(0.0);
  for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
    std::map<int, int> weight;
    for (const Level& lv : enumerate_levels(2, 4, kind, q1)) {
      weight[2 * lv.n + lv.l] += 2 * lv.l + 1;
    }
    for (int shell = 0; shell <= 4; ++shell) {
      shells_ok = shells_ok &&
                  weight[shell] == (shell + 1) * (shell + 2) / 2;
    }
  }
  report(1, worst <= tol && shells_ok,
         "undeformed limit 2n+l+3/2 at w=1e-7 and exact shell degeneracy",
         worst, tol);
}

// --- criterion 2: eigen-operator suite -------------------------------------
void criterion_2() {
  const double tol = 1e-9;
  const auto grid = theta_grid(100);
  double worst = 0.0;
  const std::vector<QParam> params{
      QParam::real_positive(0.2), QParam::real_positive(0.5),
      QParam::real_positive(1.0), QParam::unit_circle(0.3),
      QParam::unit_circle(0.7)};
  for (const QParam& qp : params) {
    for (int l = 0; l <= 4; ++l) {
      for (int m = -l; m <= l; ++m) {
        const AngularFunction y = harmonic_shape(l, m, qp);
        for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
          const AngularFunction cy = apply_casimir(y, kind, qp);
          const AngularFunction ref =
              multiply_scalar(y, casimir_eigenvalue(l, kind, qp));
          worst = std::max(worst, residual_vs(cy, ref, ref, grid));
        }
        const AngularFunction jy = apply_jplus(y, qp);
        const AngularFunction comm1 = add(
            apply_j3(jy), multiply_scalar(apply_jplus(apply_j3(y), qp), -1.0));
        // scale by the operand harmonic: at m = +l both sides are zero and a
        // noise-over-noise ratio would be meaningless
        worst = std::max(worst, residual_vs(comm1, jy, y, grid));
        const AngularFunction comm2 =
            add(apply_jplus(apply_jminus(y, qp), qp),
                multiply_scalar(apply_jminus(apply_jplus(y, qp), qp), -1.0));
        const AngularFunction rhs2 =
            multiply_scalar(y, bracket(2.0 * m, qp));
        worst = std::max(worst, residual_vs(comm2, rhs2, y, grid));
      }
    }
  }
  report(2, worst <= tol,
         "Casimir eigenvalues and ladder commutators, l <= 4, 100-point grid",
         worst, tol);
}

// --- criterion 3: orthonormality -------------------------------------------
void criterion_3() {
  const double tol = 1e-8;
  const double time_budget_s = 60.0;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  auto gram = [&](const QParam& qp, int l_max) {
    for (int l = 0; l <= l_max; ++l) {
      for (int lp = 0; lp <= l_max; ++lp) {
        for (int m = -std::min(l, lp); m <= std::min(l, lp); ++m) {
          const Complex g = deformed_inner_product(lp, m, l, m, qp);
          const double target = l == lp ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(g - target));
        }
      }
    }
  };
  gram(QParam::real_positive(0.2), 4);
  gram(QParam::real_positive(0.5), 4);
  gram(QParam::real_positive(1.0), 4);
  gram(QParam::unit_circle(0.3), 4);
  gram(QParam::unit_circle(0.7), 1);  // largest l with positive norms here
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(3, worst <= tol && elapsed <= time_budget_s,
         "deformed Gram matrices vs identity (ran in " +
             std::to_string(elapsed).substr(0, 5) + " s)",
         worst, tol);
}

// --- criterion 4: closed-form spectra and the two-level window --------------
double gamma_l1(double w) {
  // classifier for the extra l = 1 minus level, written directly in w
  return 0.5 * (-4.0 * std::cos(3.0 * w) + std::cos(2.0 * w) + 3.0);
}

void criterion_4() {
  const double tol_energy = 1e-12;
  const double tol_cos = 1e-10;
  double worst = 0.0;
  auto sweep = [&](const QParam& qp) {
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      for (int l = 0; l <= 6; ++l) {
        for (const AlphaRoot& root : alpha_roots(l, kind, qp)) {
          const double via_alpha = root.alpha + 0.5;  // n = 0
          const double closed =
              energy_closed_form(0, l, kind, root.branch, qp);
          worst = std::max(worst, std::abs(closed - via_alpha) /
                                      std::max(1.0, std::abs(via_alpha)));
        }
      }
    }
  };
  for (int i = 1; i <= 200; ++i) {
    sweep(QParam::real_positive(3.0 * i / 200.0));
    const double w = kPi * i / 201.0;
    if (!nearest_root_of_unity(w, 64, 1e-9).has_value()) {
      sweep(QParam::unit_circle(w));
    }
  }
  // two-level window boundaries: bisect the sign changes of the classifier
  auto bisect = [](double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (std::signbit(gamma_l1(lo)) == std::signbit(gamma_l1(mid))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  const double w_lo = bisect(1.5, 2.0);   // gamma turns negative
  const double w_hi = bisect(2.0, 2.7);   // gamma turns positive again
  const double cos_hi = (-7.0 + std::sqrt(17.0)) / 16.0;
  const double cos_lo = (-7.0 - std::sqrt(17.0)) / 16.0;
  const double cos_err = std::max(std::abs(std::cos(w_lo) - cos_hi),
                                  std::abs(std::cos(w_hi) - cos_lo));
  report(4, worst <= tol_energy && cos_err <= tol_cos,
         "closed-form energies on 200-point grids; window boundary cos error " +
             std::to_string(cos_err).substr(0, 8),
         worst, tol_energy);
}

// --- criterion 5: series order ----------------------------------------------
void criterion_5() {
  const double lo = 48.0;
  const double hi = 80.0;
  bool ok = true;
  double worst_ratio = 64.0;
  for (Regime regime : {Regime::RealPositive, Regime::UnitCircle}) {
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      for (int l : {0, 1, 2}) {
        auto err = [&](double w) {
          const QParam qp = regime == Regime::RealPositive
                                ? QParam::real_positive(w)
                                : QParam::unit_circle(w);
          return std::abs(
              energy_closed_form(0, l, kind, RootBranch::Plus, qp) -
              energy_series(0, l, kind, RootBranch::Plus, regime, w, 4));
        };
        const double e1 = err(0.1);
        const double e2 = err(0.05);
        if (e1 < 1e-14 && e2 < 1e-14) continue;  // series is exact here
        const double ratio = e1 / e2;
        if (ratio < lo || ratio > hi) ok = false;
        if (std::abs(ratio - 64.0) > std::abs(worst_ratio - 64.0)) {
          worst_ratio = ratio;
        }
      }
    }
  }
  report(5, ok, "series truncation error scales as w^6 (worst ratio vs 64)",
         worst_ratio, hi);
}

// --- criterion 6: near-degeneracy at w = pi/2 --------------------------------
void criterion_6() {
  const double tol = 5e-4;
  const QParam qp = QParam::unit_circle(kPi / 2.0 - 1e-4);
  const double target = 1.0 + 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (int l = 1; l <= 6; ++l) {
    const double e = energy_closed_form(0, l, CasimirKind::Cq,
                                        RootBranch::Plus, qp);
    worst = std::max(worst, std::abs(e - target));
  }
  report(6, worst <= tol, "l-independent level 1 + 1/sqrt(2) near w = pi/2",
         worst, tol);
}

// --- criterion 7: quadrupole oracle -----------------------------------------
void criterion_7() {
  const double tol = 1e-8;
  double worst = 0.0;
  auto compare = [&](const QParam& qp) {
    const double both = iq_integral(qp, IqMethod::Quadrature) +
                        iq_integral(qp.inverse(), IqMethod::Quadrature);
    const double w = qp.w();
    const double pre = qp.regime() == Regime::RealPositive
                           ? 3.0 * std::sinh(w) / (8.0 * kPi * w)
                           : 3.0 * std::sin(w) / (8.0 * kPi * w);
    worst = std::max(worst, std::abs(pre * both - 1.0 -
                                     quadrupole_angular_closed(qp)));
  };
  for (double w : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    compare(QParam::real_positive(w));
  }
  for (double w : {0.2, 0.5, 1.0, 2.0}) {
    compare(QParam::unit_circle(w));
  }
  // sign and monotonicity of Q_{n0q}
  bool trends = true;
  for (int n : {0, 1}) {
    double prev = 0.0;
    for (double w : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
      const double v = quadrupole_moment(n, CasimirKind::Cq, RootBranch::Plus,
                                         QParam::real_positive(w))
                           .value;
      trends = trends && v > prev;
      prev = v;
    }
    prev = 0.0;
    for (double w : {0.3, 0.8, 1.3, 1.8}) {
      const double v = quadrupole_moment(n, CasimirKind::Cq, RootBranch::Plus,
                                         QParam::unit_circle(w))
                           .value;
      trends = trends && v < prev;
      prev = v;
    }
  }
  report(7, worst <= tol && trends,
         "closed quadrupole factor vs quadrature; signs and monotonicity",
         worst, tol);
}

// --- criterion 8: radial suite ----------------------------------------------
void criterion_8() {
  const double tol_orth = 1e-9;
  const double tol_ode = 1e-5;
  const double tol_r2 = 1e-9;
  const QParam qp = QParam::real_positive(0.8);
  double worst_orth = 0.0;
  for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
    for (int l : {0, 2}) {
      std::vector<RadialState> states;
      for (int n = 0; n <= 5; ++n) {
        states.push_back(make_radial_state(n, l, kind, RootBranch::Plus, qp));
      }
      for (int n = 0; n <= 5; ++n) {
        for (int np = n; np <= 5; ++np) {
          const auto res = integrate_real(
              [&](double u) {
                const double r = u / (1.0 - u);
                const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
                return radial_wavefunction(states[n], r) *
                       radial_wavefunction(states[np], r) * jac;
              },
              0.0, 1.0);
          const double target = n == np ? 1.0 : 0.0;
          worst_orth =
              std::max(worst_orth, std::abs(res.value.real() - target));
        }
      }
    }
  }
  double worst_ode = 0.0;
  for (auto [n, l] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {1, 3}}) {
    for (const QParam& p :
         {QParam::real_positive(0.8), QParam::unit_circle(0.6)}) {
      const RadialState s =
          make_radial_state(n, l, CasimirKind::Cq, RootBranch::Plus, p);
      const double c = s.alpha * (s.alpha - 1.0);
      const double e = energy(s);
      const double h = 1e-4;
      double max_abs = 0.0;
      double max_res = 0.0;
      for (double r = 0.1; r <= 4.0; r += 0.05) {
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
  double worst_r2 = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const RadialState s =
        make_radial_state(n, 1, CasimirKind::CqPrime, RootBranch::Plus, qp);
    const auto res = integrate_real(
        [&](double u) {
          const double r = u / (1.0 - u);
          const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
          const double v = radial_wavefunction(s, r);
          return v * r * r * v * jac;
        },
        0.0, 1.0);
    worst_r2 = std::max(
        worst_r2, std::abs(res.value.real() - radial_r2_matrix_element(s)));
  }
  const bool ok =
      worst_orth <= tol_orth && worst_ode <= tol_ode && worst_r2 <= tol_r2;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "radial suite: ODE residual %.3e (tol %.0e), <r^2> %.3e "
                "(tol %.0e), orthonormality",
                worst_ode, tol_ode, worst_r2, tol_r2);
  report(8, ok, detail, worst_orth, tol_orth);
}

// --- criterion 9: figure tables ---------------------------------------------
double curve_value(const Table& t, double w, const std::string& curve) {
  for (const auto& row : t.rows) {
    if (std::get<double>(row[0]) == w &&
        std::get<std::string>(row[1]) == curve) {
      return std::get<double>(row[2]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void criterion_9() {
  bool ok = true;
  // figure 1: the extra minus-branch l=0 curve lies below its plus partner
  std::vector<double> grid1;
  for (int i = 1; i <= 30; ++i) grid1.push_back(0.1 * i);
  const Table f1 = figure_data(Figure::Fig1, grid1);
  for (double w : grid1) {
    const double minus = curve_value(f1, w, "E_00q-");
    const double plus = curve_value(f1, w, "E_00q+");
    ok = ok && std::isfinite(minus) && std::isfinite(plus) && minus < plus;
  }
  // figure 2: level order changes at large w (mixing)
  std::vector<double> grid2;
  for (int i = 1; i <= 62; ++i) grid2.push_back(0.05 * i);
  const Table f2 = figure_data(Figure::Fig2, grid2);
  bool mixed = false;
  for (double w : grid2) {
    const double e0 = curve_value(f2, w, "E_00q");
    for (int l = 1; l <= 3; ++l) {
      const double el = curve_value(f2, w, "E_0" + std::to_string(l) + "q");
      if (std::isfinite(e0) && std::isfinite(el) && el < e0) mixed = true;
    }
  }
  ok = ok && mixed;
  // figure 3: n = 0 curves stay below their n = 1 partners (all positive)
  const Table f3 = figure_data(Figure::Fig3, grid1);
  const std::vector<std::string> suffixes{"0q+", "0q-", "0q"};
  for (double w : grid1) {
    for (const std::string& suffix : suffixes) {
      const bool primed = suffix == "0q";
      const std::string c0 = (primed ? "Q'_0" : "Q_0") + suffix;
      const std::string c1 = (primed ? "Q'_1" : "Q_1") + suffix;
      const double v0 = curve_value(f3, w, c0);
      const double v1 = curve_value(f3, w, c1);
      ok = ok && std::isfinite(v0) && std::isfinite(v1) && v0 > 0.0 &&
           v0 < v1;
    }
  }
  // figure 4: both families negative, n = 0 above n = 1
  const Table f4 = figure_data(Figure::Fig4, grid2);
  int compared = 0;
  for (double w : grid2) {
    for (const bool primed : {false, true}) {
      const std::string c0 = primed ? "Q'_00q" : "Q_00q";
      const std::string c1 = primed ? "Q'_10q" : "Q_10q";
      const double v0 = curve_value(f4, w, c0);
      const double v1 = curve_value(f4, w, c1);
      if (!std::isfinite(v0) || !std::isfinite(v1)) continue;  // warning rows
      ok = ok && v0 < 0.0 && v1 < 0.0 && v0 > v1;
      ++compared;
    }
  }
  ok = ok && compared > 100;
  report(9, ok, "figure tables reproduce the documented qualitative features",
         ok ? 0.0 : 1.0, 0.5);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
