#pragma once

#include <vector>

#include "qosc/qparam.hpp"
#include "qosc/table.hpp"

namespace qosc {

struct Level {
  int n = 0;
  int l = 0;
  CasimirKind kind = CasimirKind::Cq;
  RootBranch branch = RootBranch::Plus;
  double alpha = 0.0;
  double energy = 0.0;
  QParam qp;
};

// Every admissible (n, l, branch) with n <= n_max, l <= l_max, sorted by
// ascending energy, ties broken by (l, n, branch).
std::vector<Level> enumerate_levels(int n_max, int l_max, CasimirKind kind,
                                    const QParam& qp);

// Literal evaluation of the printed closed forms for E_{nlq}; agrees with
// energy(make_radial_state(...)) to relative 1e-12. Throws DomainError naming
// the violated region condition when the requested level does not exist.
double energy_closed_form(int n, int l, CasimirKind kind, RootBranch branch,
                          const QParam& qp);

// Power series of the energy around w = 0 up to the requested even order
// (0, 2 or 4 terms kept; order must lie in [0, 4], |w| <= 0.3). The circle
// series follows from w -> i w, flipping the w^2 coefficient.
double energy_series(int n, int l, CasimirKind kind, RootBranch branch,
                     Regime regime, double w, int order);

enum class Figure { Fig1, Fig2, Fig3, Fig4 };

// Tidy (w, curve, value) table for the four figures. Circle-regime grids drop
// points within 1e-6 of a root of unity pi p/s (s <= 64) as warning rows with
// a NaN value.
Table figure_data(Figure figure, const std::vector<double>& w_grid);

}  // namespace qosc
