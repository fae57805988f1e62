#pragma once

#include "qosc/qparam.hpp"
#include "qosc/quadrature.hpp"

namespace qosc {

enum class IqMethod { Closed, Quadrature };

struct QuadrupoleResult {
  int n = 0;
  CasimirKind kind = CasimirKind::Cq;
  RootBranch branch = RootBranch::Plus;
  double radial_part = 0.0;
  double angular_part = 0.0;
  double value = 0.0;
  QParam qp;
};

// Q_{nl} = (2n + l + 3/2)(-2l/(2l+3)), the undeformed reference.
double undeformed_quadrupole(int n, int l);

// <00|(3 cos^2(theta) - 1)|00>_q: (2 cosh^2 w + 1)/sinh^2 w - 3 cosh w/(w sinh w)
// for real q, -(2 cos^2 w + 1)/sin^2 w + 3 cos w/(w sin w) on the circle; even
// in w. Below |w| = 1e-4 the two terms cancel to O(w^2), so a series is used.
double quadrupole_angular_closed(const QParam& qp);

// I_q of the angular quadrupole computation: closed form
// 8 pi (q+q^-1)/(q-q^-1)^2 ((q+q^-1)/(q-q^-1) ln q - 1), or adaptive
// quadrature of the eta-integrand (4 pi / q) (1 - q^{-2} eta)^2 /
// ((1+eta)(1+q^{-2} eta)^3). On the circle the integrand is complex and the
// denominator's triple pole crosses the positive real axis at |w| = pi/2,
// where a residue term restores agreement with the closed form.
double iq_integral(const QParam& qp, IqMethod method,
                   const QuadratureOptions& opts = {});

// Q_{n0q} = <n0|r^2|n0>_q * <00|(3cos^2 theta - 1)|00>_q (l = 0 states).
QuadrupoleResult quadrupole_moment(int n, CasimirKind kind, RootBranch branch,
                                   const QParam& qp);

}  // namespace qosc
