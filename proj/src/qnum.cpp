#include "qosc/qnum.hpp"

#include <cmath>
#include <sstream>

namespace qosc {

namespace {

constexpr double kSeriesW = 1e-6;

// [x] = x(1 +/- (x^2-1)w^2/6 + (3x^4-10x^2+7)w^4/360); '-' on the w^2 term in
// the unit-circle regime.
double bracket_series(double x, double w2, bool circle) {
  const double x2 = x * x;
  const double c2 = (x2 - 1.0) / 6.0;
  const double c4 = (3.0 * x2 * x2 - 10.0 * x2 + 7.0) / 360.0;
  return x * (1.0 + w2 * ((circle ? -c2 : c2) + w2 * c4));
}

}  // namespace

double bracket(double x, const QParam& qp) {
  const double w = std::abs(qp.w());
  const bool circle = qp.regime() == Regime::UnitCircle;
  if (w < kSeriesW) return bracket_series(x, w * w, circle);
  return circle ? std::sin(x * w) / std::sin(w)
                : std::sinh(x * w) / std::sinh(w);
}

double q_factorial(int x, const QParam& qp) {
  if (x < 0) {
    std::ostringstream os;
    os << "q_factorial requires x >= 0 (got " << x << ")";
    throw DomainError(os.str());
  }
  double prod = 1.0;
  for (int k = 1; k <= x; ++k) prod *= bracket(static_cast<double>(k), qp);
  return prod;
}

double casimir_eigenvalue(int l, CasimirKind kind, const QParam& qp) {
  if (l < 0) throw DomainError("casimir_eigenvalue requires l >= 0");
  if (kind == CasimirKind::Cq) {
    const double b = bracket(l + 0.5, qp);
    return b * b - 0.25;
  }
  return bracket(static_cast<double>(l), qp) *
         bracket(static_cast<double>(l + 1), qp);
}

double lambda_q(int l, CasimirKind kind, const QParam& qp) {
  double radicand;
  if (kind == CasimirKind::Cq) {
    // 1/4 + C = [l+1/2]^2, an exact square: never spuriously negative.
    const double b = bracket(l + 0.5, qp);
    radicand = b * b;
  } else {
    radicand = 0.25 + casimir_eigenvalue(l, kind, qp);
  }
  if (radicand < -1e-12) {
    std::ostringstream os;
    os << "no real roots: 1/4 + C = " << radicand << " < 0 for l=" << l
       << ", kind=" << to_string(kind) << ", w=" << qp.w();
    throw DomainError(os.str());
  }
  return std::sqrt(std::max(radicand, 0.0));
}

double gamma_q(int l, CasimirKind kind, const QParam& qp) {
  if (qp.regime() != Regime::UnitCircle) {
    throw DomainError("gamma_q is defined for UnitCircle parameters only");
  }
  if (l < 0) throw DomainError("gamma_q requires l >= 0");
  const double w = qp.w();
  if (kind == CasimirKind::Cq) {
    return 0.5 * (-4.0 * std::cos((2 * l + 1) * w) + std::cos(2.0 * w) + 3.0);
  }
  return 4.0 * std::sin((l + 1) * w) * std::sin(l * w);
}

}  // namespace qosc
