#pragma once

#include "qosc/qparam.hpp"

namespace qosc {

// [x]_q = (q^x - q^{-x})/(q - q^{-1}) = sinh(xw)/sinh(w) (real) or
// sin(xw)/sin(w) (unit circle). Even in w; switches to a 4th-order series
// below |w| = 1e-6 so the w -> 0 limit is exact.
double bracket(double x, const QParam& qp);

// [x]_q! = [x][x-1]...[1]; [0]! = 1. Negative x is a domain error.
double q_factorial(int x, const QParam& qp);

// Cq: [l+1/2]^2 - 1/4; CqPrime: [l][l+1]. Both reduce to l(l+1) at q = 1.
double casimir_eigenvalue(int l, CasimirKind kind, const QParam& qp);

// sqrt(1/4 + casimir_eigenvalue); throws DomainError when the radicand is
// below -1e-12 (no real roots region).
double lambda_q(int l, CasimirKind kind, const QParam& qp);

// 4 sin^2(w) * casimir_eigenvalue via the exact trigonometric forms;
// UnitCircle only.
double gamma_q(int l, CasimirKind kind, const QParam& qp);

}  // namespace qosc
