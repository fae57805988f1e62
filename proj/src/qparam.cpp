#include "qosc/qparam.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qosc {

std::string to_string(Regime r) {
  return r == Regime::RealPositive ? "real" : "circle";
}

std::string to_string(CasimirKind k) {
  return k == CasimirKind::Cq ? "cq" : "cqprime";
}

std::string to_string(RootBranch b) {
  return b == RootBranch::Plus ? "plus" : "minus";
}

std::optional<std::pair<int, int>> nearest_root_of_unity(double w,
                                                         int max_denominator,
                                                         double tol) {
  const double x = w / std::numbers::pi;
  for (int s = 1; s <= max_denominator; ++s) {
    const double ps = std::round(x * s);
    if (std::abs(w - std::numbers::pi * ps / s) <= tol) {
      int p = static_cast<int>(ps);
      const int g = std::gcd(p == 0 ? s : std::abs(p), s);
      return std::make_pair(p / g, s / g);
    }
  }
  return std::nullopt;
}

QParam QParam::real_positive(double w) {
  if (!(w >= 0.0)) {
    std::ostringstream os;
    os << "real_positive requires w >= 0 (got w=" << w
       << "); q^{-1} parameters are produced by inverse()";
    throw DomainError(os.str());
  }
  return QParam(Regime::RealPositive, w);
}

QParam QParam::unit_circle(double w) {
  if (!(w > 0.0) || !(w < std::numbers::pi)) {
    std::ostringstream os;
    os << "unit_circle requires 0 < w < pi (got w=" << w << ")";
    throw DomainError(os.str());
  }
  if (auto ps = nearest_root_of_unity(w, 64, 1e-9)) {
    std::ostringstream os;
    os << "unit_circle rejects w=" << w << ": within 1e-9 of root-of-unity angle pi*"
       << ps->first << "/" << ps->second;
    throw DomainError(os.str());
  }
  return QParam(Regime::UnitCircle, w);
}

std::complex<double> QParam::q_power(double t) const {
  if (regime_ == Regime::RealPositive) {
    return {std::exp(t * w_), 0.0};
  }
  return {std::cos(t * w_), std::sin(t * w_)};
}

}  // namespace qosc
