#include "qosc/radial.hpp"

#include <cmath>
#include <string>

#include "qosc/qnum.hpp"

namespace qosc {

std::vector<AlphaRoot> alpha_roots(int l, CasimirKind kind, const QParam& qp) {
  if (l < 0) throw DomainError("alpha_roots requires l >= 0");
  double lam = 0.0;
  if (kind == CasimirKind::Cq) {
    lam = lambda_q(l, kind, qp);  // |[l+1/2]|, radicand an exact square
  } else {
    const double radicand = 0.25 + casimir_eigenvalue(l, kind, qp);
    if (radicand < -1e-12) return {};
    if (std::abs(radicand) <= 1e-12) {
      // Double root alpha = 1/2: the two branches coincide.
      return {{RootBranch::Plus, 0.5}};
    }
    lam = std::sqrt(radicand);
  }
  std::vector<AlphaRoot> roots{{RootBranch::Plus, 0.5 + lam}};
  if (0.5 - lam > 0.0) roots.push_back({RootBranch::Minus, 0.5 - lam});
  return roots;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre requires n >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) /
                        (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

RadialState make_radial_state(int n, int l, CasimirKind kind, RootBranch branch,
                              const QParam& qp) {
  if (n < 0) throw DomainError("radial state requires n >= 0");
  for (const AlphaRoot& root : alpha_roots(l, kind, qp)) {
    if (root.branch == branch) {
      return RadialState{n, l, root.alpha, kind, branch, qp};
    }
  }
  throw DomainError("no admissible " + to_string(branch) +
                    " root for l = " + std::to_string(l) + ", kind " +
                    to_string(kind) + ", regime " + to_string(qp.regime()) +
                    ", w = " + std::to_string(qp.w()));
}

double radial_wavefunction(const RadialState& state, double r) {
  if (r < 0.0) throw DomainError("radial coordinate must be >= 0");
  const double norm = std::exp(
      0.5 * (std::log(2.0) + std::lgamma(state.n + 1.0) -
             std::lgamma(state.alpha + state.n + 0.5)));
  return norm * std::exp(-0.5 * r * r) * std::pow(r, state.alpha) *
         laguerre(state.n, state.alpha - 0.5, r * r);
}

double energy(const RadialState& state) {
  return 2.0 * state.n + state.alpha + 0.5;
}

double radial_r2_matrix_element(const RadialState& state) {
  return 2.0 * state.n + state.alpha + 0.5;
}

}  // namespace qosc
