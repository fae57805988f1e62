#pragma once

#include <vector>

#include "qosc/qparam.hpp"

namespace qosc {

struct AlphaRoot {
  RootBranch branch;
  double alpha;
};

// Admissible exponents alpha with alpha(alpha-1) = C(l) and alpha > 0:
// alpha = 1/2 +/- lambda. Returns 0, 1 or 2 roots; the boundary radicand
// 1/4 + C' = 0 (within 1e-12) yields the single root alpha = 1/2 labelled
// Plus, since the two roots coincide there.
std::vector<AlphaRoot> alpha_roots(int l, CasimirKind kind, const QParam& qp);

// Associated Laguerre L_n^a(x) by the three-term recurrence.
double laguerre(int n, double a, double x);

struct RadialState {
  int n = 0;
  int l = 0;
  double alpha = 0.0;
  CasimirKind kind = CasimirKind::Cq;
  RootBranch branch = RootBranch::Plus;
  QParam qp;
};

// Resolves the branch against alpha_roots; throws DomainError when the
// requested branch is not admissible in this regime.
RadialState make_radial_state(int n, int l, CasimirKind kind, RootBranch branch,
                              const QParam& qp);

// S_{nlq}(r) = sqrt(2 n!) Gamma(alpha+n+1/2)^{-1/2} e^{-r^2/2} r^alpha
//              L_n^{alpha-1/2}(r^2), normalized on [0, inf).
double radial_wavefunction(const RadialState& state, double r);

// E_{nlq} = 2n + alpha + 1/2.
double energy(const RadialState& state);

// Diagonal <n l| r^2 |n l> = 2n + alpha + 1/2.
double radial_r2_matrix_element(const RadialState& state);

}  // namespace qosc
