#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qosc {

enum class Regime { RealPositive, UnitCircle };
enum class CasimirKind { Cq, CqPrime };
enum class RootBranch { Plus, Minus };

// Requested object does not exist in the given parameter region (no admissible
// root, undefined harmonic, invalid deformation parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::string to_string(Regime r);
std::string to_string(CasimirKind k);
std::string to_string(RootBranch b);

// Deformation parameter q = e^w (RealPositive) or q = e^{iw} (UnitCircle).
class QParam {
 public:
  // w >= 0; w == 0 is the undeformed point q = 1.
  static QParam real_positive(double w);
  // 0 < w < pi, rejecting w within 1e-9 of any root-of-unity angle pi*p/s
  // with denominator s <= 64.
  static QParam unit_circle(double w);

  Regime regime() const { return regime_; }
  double w() const { return w_; }
  bool is_undeformed() const {
    return regime_ == Regime::RealPositive && w_ == 0.0;
  }

  // Parameter representing q^{-1} (w -> -w); bypasses range validation.
  QParam inverse() const { return QParam(regime_, -w_); }

  // q^t as a complex number: e^{t w} or e^{i t w}.
  std::complex<double> q_power(double t) const;
  std::complex<double> q() const { return q_power(1.0); }

 private:
  QParam(Regime regime, double w) : regime_(regime), w_(w) {}
  Regime regime_;
  double w_;
};

// Reduced fraction p/s with 1 <= s <= max_denominator and |w - pi*p/s| <= tol,
// if any exists (smallest such s).
std::optional<std::pair<int, int>> nearest_root_of_unity(double w,
                                                         int max_denominator,
                                                         double tol);

}  // namespace qosc
