#include "qosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "qosc/observables.hpp"
#include "qosc/qnum.hpp"
#include "qosc/radial.hpp"

namespace qosc {

std::vector<Level> enumerate_levels(int n_max, int l_max, CasimirKind kind,
                                    const QParam& qp) {
  if (n_max < 0 || l_max < 0) {
    throw DomainError("enumerate_levels requires n_max, l_max >= 0");
  }
  std::vector<Level> levels;
  for (int l = 0; l <= l_max; ++l) {
    for (const AlphaRoot& root : alpha_roots(l, kind, qp)) {
      for (int n = 0; n <= n_max; ++n) {
        levels.push_back(Level{n, l, kind, root.branch, root.alpha,
                               2.0 * n + root.alpha + 0.5, qp});
      }
    }
  }
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    return std::tuple(a.energy, a.l, a.n, static_cast<int>(a.branch)) <
           std::tuple(b.energy, b.l, b.n, static_cast<int>(b.branch));
  });
  return levels;
}

namespace {

void require_level(int l, CasimirKind kind, RootBranch branch,
                   const QParam& qp) {
  for (const AlphaRoot& root : alpha_roots(l, kind, qp)) {
    if (root.branch == branch) return;
  }
  std::string why;
  if (qp.regime() == Regime::RealPositive) {
    why = "1/2 - lambda_q(l) <= 0 for real q";
  } else if (kind == CasimirKind::Cq) {
    why = "gamma_q(l) = " + std::to_string(gamma_q(l, kind, qp)) +
          " >= 0 admits only the plus branch";
  } else {
    const double g = gamma_q(l, kind, qp);
    const double s2 = std::sin(qp.w()) * std::sin(qp.w());
    why = "gamma'_q(l) = " + std::to_string(g) +
          (g < -s2 ? " < -sin^2 w = " + std::to_string(-s2) +
                         ": no admissible level"
                   : " >= 0 admits only the plus branch");
  }
  throw DomainError("level (l=" + std::to_string(l) + ", " + to_string(kind) +
                    ", " + to_string(branch) + ") does not exist: " + why);
}

}  // namespace

double energy_closed_form(int n, int l, CasimirKind kind, RootBranch branch,
                          const QParam& qp) {
  if (n < 0 || l < 0) throw DomainError("energy_closed_form needs n, l >= 0");
  require_level(l, kind, branch, qp);
  const double w = std::abs(qp.w());
  const double sign = branch == RootBranch::Plus ? 1.0 : -1.0;
  if (qp.regime() == Regime::RealPositive) {
    if (w == 0.0) return 2.0 * n + l + 1.5;
    if (kind == CasimirKind::Cq) {
      if (l == 0) {
        return 2.0 * n + 1.0 + sign * 0.5 / std::cosh(0.5 * w);
      }
      return 2.0 * n + 1.0 + std::sinh((l + 0.5) * w) / std::sinh(w);
    }
    return 2.0 * n + 1.0 +
           std::sqrt(4.0 * std::sinh(l * w) * std::sinh((l + 1.0) * w) +
                     std::sinh(w) * std::sinh(w)) /
               (2.0 * std::sinh(w));
  }
  if (kind == CasimirKind::Cq) {
    return 2.0 * n + 1.0 + sign * std::abs(std::sin((l + 0.5) * w)) /
                               std::sin(w);
  }
  const double s = std::sin(w);
  const double radicand =
      s * s + 4.0 * std::sin(l * w) * std::sin((l + 1.0) * w);
  return 2.0 * n + 1.0 +
         sign * std::sqrt(std::max(radicand, 0.0)) / (2.0 * s);
}

double energy_series(int n, int l, CasimirKind kind, RootBranch branch,
                     Regime regime, double w, int order) {
  if (n < 0 || l < 0) throw DomainError("energy_series needs n, l >= 0");
  if (order < 0 || order > 4) {
    throw DomainError("energy_series order must lie in [0, 4]");
  }
  if (!(std::abs(w) <= 0.3)) {
    throw DomainError("energy_series requires |w| <= 0.3");
  }
  double e0 = 2.0 * n + l + 1.5;
  double a = 0.0;
  double b = 0.0;
  if (kind == CasimirKind::Cq && l == 0) {
    if (branch == RootBranch::Minus) {
      if (regime != Regime::RealPositive) {
        throw DomainError(
            "minus branch near w = 0 exists only for real q at l = 0");
      }
      e0 = 2.0 * n + 0.5;
      a = 1.0 / 16.0;
      b = -5.0 / 768.0;
    } else {
      a = -1.0 / 16.0;
      b = 5.0 / 768.0;
    }
  } else if (branch == RootBranch::Minus) {
    throw DomainError("minus branch near w = 0 exists only for l = 0");
  } else if (kind == CasimirKind::Cq) {
    a = (2.0 * l - 1.0) * (2.0 * l + 1.0) * (2.0 * l + 3.0) / 48.0;
    b = a * (12.0 * l * (l + 1.0) - 25.0) / 240.0;
  } else {
    const double u = static_cast<double>(l) * (l + 1.0);
    const double d = 2.0 * l + 1.0;
    a = u * (2.0 * u - 1.0) / (6.0 * d);
    b = u * (24.0 * u * u * u - 56.0 * u * u - 10.0 * u + 7.0) /
        (360.0 * d * d * d);
  }
  if (regime == Regime::UnitCircle) a = -a;
  const double w2 = w * w;
  double out = e0;
  if (order >= 2) out += a * w2;
  if (order >= 4) out += b * w2 * w2;
  return out;
}

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

// A curve that does not exist at this w (e.g. a minus branch at w = 0) keeps
// its row with a NaN value so every w emits the same set of curve ids.
template <typename Fn>
void add_value_row(Table& t, double w, const std::string& curve, Fn&& value) {
  double v = kNaN;
  try {
    v = value();
  } catch (const DomainError&) {
  }
  t.add_row({w, curve, v});
}

void real_figure_rows(Table& t, Figure figure, double w) {
  QParam qp = QParam::real_positive(w);
  if (figure == Figure::Fig1) {
    add_value_row(t, w, "E_00q+", [&] {
      return energy_closed_form(0, 0, CasimirKind::Cq, RootBranch::Plus, qp);
    });
    add_value_row(t, w, "E_00q-", [&] {
      return energy_closed_form(0, 0, CasimirKind::Cq, RootBranch::Minus, qp);
    });
    for (int l = 1; l <= 6; ++l) {
      add_value_row(t, w, "E_0" + std::to_string(l) + "q", [&] {
        return energy_closed_form(0, l, CasimirKind::Cq, RootBranch::Plus, qp);
      });
    }
    return;
  }
  for (int n = 0; n <= 1; ++n) {
    const std::string nn = std::to_string(n);
    add_value_row(t, w, "Q_" + nn + "0q+", [&] {
      return quadrupole_moment(n, CasimirKind::Cq, RootBranch::Plus, qp).value;
    });
    add_value_row(t, w, "Q_" + nn + "0q-", [&] {
      return quadrupole_moment(n, CasimirKind::Cq, RootBranch::Minus, qp).value;
    });
    add_value_row(t, w, "Q'_" + nn + "0q", [&] {
      return quadrupole_moment(n, CasimirKind::CqPrime, RootBranch::Plus, qp)
          .value;
    });
  }
}

void circle_figure_rows(Table& t, Figure figure, double w) {
  QParam qp = QParam::unit_circle(w);
  if (figure == Figure::Fig2) {
    for (int l = 0; l <= 3; ++l) {
      add_value_row(t, w, "E_0" + std::to_string(l) + "q", [&] {
        return energy_closed_form(0, l, CasimirKind::Cq, RootBranch::Plus, qp);
      });
    }
    return;
  }
  for (int n = 0; n <= 1; ++n) {
    const std::string nn = std::to_string(n);
    add_value_row(t, w, "Q_" + nn + "0q", [&] {
      return quadrupole_moment(n, CasimirKind::Cq, RootBranch::Plus, qp).value;
    });
    add_value_row(t, w, "Q'_" + nn + "0q", [&] {
      return quadrupole_moment(n, CasimirKind::CqPrime, RootBranch::Plus, qp)
          .value;
    });
  }
}

}  // namespace

Table figure_data(Figure figure, const std::vector<double>& w_grid) {
  Table t;
  t.columns = {"w", "curve", "value"};
  const bool circle = figure == Figure::Fig2 || figure == Figure::Fig4;
  for (double w : w_grid) {
    if (circle) {
      if (nearest_root_of_unity(w, 64, 1e-6).has_value()) {
        t.add_row({w, std::string("warning"), kNaN});
        continue;
      }
      try {
        circle_figure_rows(t, figure, w);
      } catch (const DomainError&) {
        t.add_row({w, std::string("warning"), kNaN});
      }
      continue;
    }
    try {
      real_figure_rows(t, figure, w);
    } catch (const DomainError&) {
      t.add_row({w, std::string("warning"), kNaN});
    }
  }
  return t;
}

}  // namespace qosc
