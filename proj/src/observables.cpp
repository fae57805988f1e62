#include "qosc/observables.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qosc/radial.hpp"

namespace qosc {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

}  // namespace

double undeformed_quadrupole(int n, int l) {
  if (n < 0 || l < 0) {
    throw std::invalid_argument("undeformed_quadrupole needs n, l >= 0");
  }
  return (2.0 * n + l + 1.5) * (-2.0 * l / (2.0 * l + 3.0));
}

double quadrupole_angular_closed(const QParam& qp) {
  const double w = std::abs(qp.w());
  const bool circle = qp.regime() == Regime::UnitCircle;
  if (w < 1e-4) {
    const double w2 = w * w;
    const double leading = circle ? -4.0 / 15.0 : 4.0 / 15.0;
    return w2 * (leading - w2 * (4.0 / 105.0));
  }
  if (circle) {
    const double s = std::sin(w);
    const double c = std::cos(w);
    return -(2.0 * c * c + 1.0) / (s * s) + 3.0 * c / (w * s);
  }
  const double s = std::sinh(w);
  const double c = std::cosh(w);
  return (2.0 * c * c + 1.0) / (s * s) - 3.0 * c / (w * s);
}

namespace {

double iq_closed(const QParam& qp) {
  const double w = std::abs(qp.w());
  const bool circle = qp.regime() == Regime::UnitCircle;
  if (w < 1e-3) {
    // 4 pi (1/3 +/- w^2/30): the closed form has a 0/0 cancellation at w = 0.
    const double w2 = w * w;
    return 4.0 * kPi * (1.0 / 3.0 + (circle ? -1.0 : 1.0) * w2 / 30.0);
  }
  if (circle) {
    const double s = std::sin(w);
    return -4.0 * kPi * std::cos(w) * (w * std::cos(w) / s - 1.0) / (s * s);
  }
  const double s = std::sinh(w);
  return 4.0 * kPi * std::cosh(w) * (w * std::cosh(w) / s - 1.0) / (s * s);
}

double iq_quadrature(const QParam& qp, const QuadratureOptions& opts) {
  const Complex q = qp.q_power(1.0);
  const Complex c = qp.q_power(-2.0);
  auto integrand = [&](double t) {
    const double eta = t / (1.0 - t);
    const Complex one_minus = 1.0 - c * eta;
    const Complex one_plus = 1.0 + c * eta;
    return (4.0 * kPi / q) * (1.0 + eta) * one_minus * one_minus /
           (one_plus * one_plus * one_plus);
  };
  IntegrationResult res = integrate(integrand, 0.0, 1.0, opts);
  require_converged(res, "I_q quadrature");
  Complex value = res.value;
  if (qp.regime() == Regime::UnitCircle && std::abs(qp.w()) > kPi / 2.0) {
    // The triple pole eta0 = -q^2 of the integrand crosses the positive real
    // axis at |w| = pi/2; the straight-axis integral then differs from the
    // closed form by the full residue of the pole.
    const Complex q2 = qp.q_power(2.0);
    const Complex one_plus_q2 = 1.0 + q2;
    const Complex one_minus_q2 = 1.0 - q2;
    const Complex residue = 4.0 * kPi * q * one_plus_q2 * one_plus_q2 /
                            (one_minus_q2 * one_minus_q2 * one_minus_q2);
    const double sign = qp.w() > 0.0 ? 1.0 : -1.0;
    value -= sign * Complex{0.0, 2.0 * kPi} * residue;
  }
  if (std::abs(value.imag()) > 1e-8) {
    throw QuadratureError("I_q quadrature left a non-real residue",
                          std::abs(value.imag()));
  }
  return value.real();
}

}  // namespace

double iq_integral(const QParam& qp, IqMethod method,
                   const QuadratureOptions& opts) {
  return method == IqMethod::Closed ? iq_closed(qp) : iq_quadrature(qp, opts);
}

QuadrupoleResult quadrupole_moment(int n, CasimirKind kind, RootBranch branch,
                                   const QParam& qp) {
  const RadialState state = make_radial_state(n, 0, kind, branch, qp);
  QuadrupoleResult out{n,
                       kind,
                       branch,
                       radial_r2_matrix_element(state),
                       quadrupole_angular_closed(qp),
                       0.0,
                       qp};
  out.value = out.radial_part * out.angular_part;
  return out;
}

}  // namespace qosc
