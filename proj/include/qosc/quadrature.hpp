#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qosc {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_panels = 1 << 20;
};

struct IntegrationResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;  // accumulated per-panel error estimate
  int panels = 0;      // accepted panels
  bool converged = true;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error(achieved_error) {}
  double achieved_error;
};

namespace detail {

// Gauss-Kronrod 7-15 positive half-nodes, sorted descending; odd indices and
// the center are the embedded 7-point Gauss nodes.
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993945, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15Weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472783};
inline constexpr double kG7Weights[4] = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694};

// Scalar is double for ordinary integrands; long double integrands lower the
// sample noise floor for large-magnitude cancelling integrals.
template <typename Scalar>
struct PanelEstimate {
  std::complex<Scalar> value{Scalar(0), Scalar(0)};
  Scalar error = Scalar(0);
  Scalar abs_mass = Scalar(0);  // integral of |f|, for the noise floor
};

template <typename Scalar, typename F>
PanelEstimate<Scalar> gk15(F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::complex<Scalar> kron{Scalar(0), Scalar(0)};
  std::complex<Scalar> gauss{Scalar(0), Scalar(0)};
  Scalar mass = Scalar(0);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const std::complex<Scalar> hi = f(mid + dx);
    const std::complex<Scalar> lo = f(mid - dx);
    kron += static_cast<Scalar>(kGK15Weights[i]) * (hi + lo);
    mass += static_cast<Scalar>(kGK15Weights[i]) * (std::abs(hi) + std::abs(lo));
    if (i % 2 == 1) gauss += static_cast<Scalar>(kG7Weights[i / 2]) * (hi + lo);
  }
  const std::complex<Scalar> fc = f(mid);
  kron += static_cast<Scalar>(kGK15Weights[7]) * fc;
  mass += static_cast<Scalar>(kGK15Weights[7]) * std::abs(fc);
  gauss += static_cast<Scalar>(kG7Weights[3]) * fc;
  const Scalar h = static_cast<Scalar>(half);
  return {kron * h, std::abs((kron - gauss) * h), mass * h};
}

}  // namespace detail

// Globally adaptive bisection with a Gauss-Kronrod 7-15 rule on each panel:
// the panel with the largest error estimate is split first, so an exhausted
// panel budget leaves only the least significant panels unrefined. The
// integrand is complex-valued on (a, b); endpoints are never evaluated. An
// integrand returning std::complex<long double> is accumulated in extended
// precision, which lowers the noise floor accordingly.
//
// A panel whose error estimate sits at the sample noise floor of its |f|
// mass is retired as-is: splitting cannot improve it. The run counts as
// converged when the accumulated error is explained by the requested
// absolute tolerance plus that noise floor summed over the partition.
template <typename F>
IntegrationResult integrate(F&& f, double a, double b,
                            const QuadratureOptions& opts = {}) {
  using CValue = std::remove_cvref_t<std::invoke_result_t<F&, double>>;
  using Scalar = typename CValue::value_type;
  struct Panel {
    double a, b;
    detail::PanelEstimate<Scalar> est;
    bool operator<(const Panel& o) const { return est.error < o.est.error; }
  };
  IntegrationResult res;
  if (b - a == 0.0) return res;
  constexpr Scalar kFloorFactor =
      Scalar(50) * std::numeric_limits<Scalar>::epsilon();
  std::priority_queue<Panel> active;  // splittable panels, worst error on top
  std::complex<Scalar> value{Scalar(0), Scalar(0)};
  Scalar err_sum = Scalar(0);
  Scalar mass_sum = Scalar(0);
  int leaves = 0;
  bool poisoned = false;  // a panel estimate overflowed; refinement cannot help
  auto admit = [&](double lo, double hi) {
    const Panel p{lo, hi, detail::gk15<Scalar>(f, lo, hi)};
    value += p.est.value;
    err_sum += p.est.error;
    mass_sum += p.est.abs_mass;
    leaves += 1;
    if (!std::isfinite(p.est.error) || !std::isfinite(p.est.abs_mass)) {
      poisoned = true;
      return;
    }
    const double mid = 0.5 * (lo + hi);
    const bool at_floor = p.est.error <= kFloorFactor * p.est.abs_mass;
    if (!at_floor && mid > lo && mid < hi) active.push(p);
  };
  admit(a, b);
  while (!poisoned && !active.empty() &&
         err_sum > opts.abs_tol + kFloorFactor * mass_sum &&
         leaves < opts.max_panels) {
    const Panel p = active.top();
    active.pop();
    value -= p.est.value;
    err_sum -= p.est.error;
    mass_sum -= p.est.abs_mass;
    leaves -= 1;
    const double mid = 0.5 * (p.a + p.b);
    admit(p.a, mid);
    admit(mid, p.b);
  }
  res.value = std::complex<double>(static_cast<double>(value.real()),
                                   static_cast<double>(value.imag()));
  res.error = static_cast<double>(err_sum);
  res.panels = leaves;
  res.converged =
      !poisoned && err_sum <= opts.abs_tol + kFloorFactor * mass_sum;
  return res;
}

// Real-valued convenience wrapper.
template <typename F>
IntegrationResult integrate_real(F&& f, double a, double b,
                                 const QuadratureOptions& opts = {}) {
  return integrate(
      [&f](double x) {
        return std::complex<double>(f(x), 0.0);
      },
      a, b, opts);
}

inline IntegrationResult require_converged(IntegrationResult r,
                                           const std::string& what) {
  if (!r.converged) {
    throw QuadratureError(what + ": quadrature tolerance not met (achieved " +
                              std::to_string(r.error) + " over " +
                              std::to_string(r.panels) + " panels)",
                          r.error);
  }
  return r;
}

}  // namespace qosc
