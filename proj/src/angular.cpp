#include "qosc/angular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "qosc/qnum.hpp"

namespace qosc {

namespace {

using Complex = std::complex<double>;

template <typename Scalar>
std::complex<Scalar> ipow(std::complex<Scalar> z, int n) {
  if (n < 0) return std::complex<Scalar>{Scalar(1), Scalar(0)} / ipow(z, -n);
  std::complex<Scalar> r{Scalar(1), Scalar(0)};
  while (n) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

void check_same_sector(const AngularFunction& f, const AngularFunction& g) {
  if (!f.is_zero() && !g.is_zero() && f.m != g.m) {
    throw std::invalid_argument("angular sum across azimuthal sectors");
  }
}

}  // namespace

AngularFunction scale_argument(const AngularFunction& f, Complex s) {
  AngularFunction out;
  out.m = f.m;
  out.terms.reserve(f.terms.size());
  const Complex s2 = s * s;
  for (const Term& t : f.terms) {
    Term nt;
    nt.coeff = t.coeff * ipow(s, t.power);
    nt.power = t.power;
    nt.factors.reserve(t.factors.size());
    for (const FactorPower& fp : t.factors) {
      nt.factors.push_back({fp.c * s2, fp.exponent});
    }
    out.terms.push_back(std::move(nt));
  }
  return out;
}

AngularFunction multiply_power(const AngularFunction& f, int k) {
  AngularFunction out = f;
  for (Term& t : out.terms) t.power += k;
  return out;
}

AngularFunction multiply_scalar(const AngularFunction& f, Complex z) {
  AngularFunction out = f;
  for (Term& t : out.terms) t.coeff *= z;
  return out;
}

AngularFunction add(const AngularFunction& f, const AngularFunction& g) {
  check_same_sector(f, g);
  AngularFunction out;
  out.m = f.is_zero() ? g.m : f.m;
  out.terms = f.terms;
  out.terms.insert(out.terms.end(), g.terms.begin(), g.terms.end());
  return out;
}

AngularFunction scale_operator(const AngularFunction& f, Generator g, double t,
                               const QParam& qp) {
  Complex s;
  Complex pref;
  switch (g) {
    case Generator::T1:
      s = qp.q_power(0.5 * t);
      pref = qp.q_power(-0.5 * t * f.m);
      break;
    case Generator::T2:
      s = qp.q_power(0.5 * t);
      pref = qp.q_power(0.5 * t * f.m);
      break;
    case Generator::SinThetaDTheta:
      s = qp.q_power(-t);
      pref = Complex{1.0, 0.0};
      break;
  }
  return multiply_scalar(scale_argument(f, s), pref);
}

AngularFunction apply_generator(const AngularFunction& f, Generator g) {
  // rho d_rho on one term: p * term + sum_j 2 c_j e_j rho^2 / (1+c_j rho^2) * term.
  AngularFunction deriv;
  deriv.m = f.m;
  for (const Term& t : f.terms) {
    if (t.power != 0) {
      Term nt = t;
      nt.coeff *= static_cast<double>(t.power);
      deriv.terms.push_back(std::move(nt));
    }
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      const FactorPower& fp = t.factors[j];
      if (fp.exponent == 0) continue;
      Term nt = t;
      nt.coeff *= 2.0 * fp.c * static_cast<double>(fp.exponent);
      nt.power += 2;
      nt.factors[j].exponent -= 1;
      deriv.terms.push_back(std::move(nt));
    }
  }
  switch (g) {
    case Generator::T1:
      return multiply_scalar(
          add(deriv, multiply_scalar(f, Complex{static_cast<double>(-f.m), 0.0})),
          Complex{0.5, 0.0});
    case Generator::T2:
      return multiply_scalar(
          add(deriv, multiply_scalar(f, Complex{static_cast<double>(f.m), 0.0})),
          Complex{0.5, 0.0});
    case Generator::SinThetaDTheta:
      return multiply_scalar(deriv, Complex{-1.0, 0.0});
  }
  return deriv;  // unreachable
}

AngularFunction bracket_generator(const AngularFunction& f, Generator g,
                                  const QParam& qp) {
  if (qp.w() == 0.0) return apply_generator(f, g);
  const Complex denom = qp.q_power(1.0) - qp.q_power(-1.0);
  AngularFunction num = add(scale_operator(f, g, 1.0, qp),
                            multiply_scalar(scale_operator(f, g, -1.0, qp),
                                            Complex{-1.0, 0.0}));
  return multiply_scalar(num, 1.0 / denom);
}

AngularFunction apply_j3(const AngularFunction& f) {
  return multiply_scalar(f, Complex{static_cast<double>(f.m), 0.0});
}

AngularFunction apply_jplus(const AngularFunction& f, const QParam& qp) {
  const int m = f.m;
  // tan(theta/2) [T1]_q q^{T2} f
  AngularFunction a = multiply_power(
      bracket_generator(scale_operator(f, Generator::T2, 1.0, qp),
                        Generator::T1, qp),
      -1);
  // cot(theta/2) q^{T1} [T2]_q f
  AngularFunction b = multiply_power(
      scale_operator(bracket_generator(f, Generator::T2, qp), Generator::T1,
                     1.0, qp),
      1);
  AngularFunction out = multiply_scalar(add(a, b), Complex{-1.0, 0.0});
  out.m = m + 1;
  return out;
}

AngularFunction apply_jminus(const AngularFunction& f, const QParam& qp) {
  const int m = f.m;
  AngularFunction a = multiply_power(
      bracket_generator(scale_operator(f, Generator::T2, 1.0, qp),
                        Generator::T1, qp),
      1);
  AngularFunction b = multiply_power(
      scale_operator(bracket_generator(f, Generator::T2, qp), Generator::T1,
                     1.0, qp),
      -1);
  AngularFunction out = add(a, b);
  out.m = m - 1;
  return out;
}

AngularFunction apply_casimir(const AngularFunction& f, CasimirKind kind,
                              const QParam& qp) {
  const int m = f.m;
  AngularFunction jj = apply_jplus(apply_jminus(f, qp), qp);
  double scalar = 0.0;
  if (kind == CasimirKind::Cq) {
    const double b = bracket(m - 0.5, qp);
    scalar = b * b - 0.25;
  } else {
    scalar = bracket(static_cast<double>(m), qp) *
             bracket(static_cast<double>(m - 1), qp);
  }
  return add(jj, multiply_scalar(f, Complex{scalar, 0.0}));
}

namespace {

// Synthetic division of the dense eta-coefficient sequence a by (1 + c eta).
// Ascending recurrence for |c| <= 1, descending otherwise (stability).
struct DivOut {
  std::vector<Complex> quot;
  double rem = 0.0;
};

DivOut divide_linear(const std::vector<Complex>& a, Complex c) {
  DivOut out;
  const int n = static_cast<int>(a.size());
  if (n == 0) return out;
  if (n == 1) {
    out.rem = std::abs(a[0]);
    return out;
  }
  out.quot.assign(n - 1, Complex{});
  if (std::abs(c) <= 1.0) {
    out.quot[0] = a[0];
    for (int j = 1; j < n - 1; ++j) out.quot[j] = a[j] - c * out.quot[j - 1];
    out.rem = std::abs(a[n - 1] - c * out.quot[n - 2]);
  } else {
    out.quot[n - 2] = a[n - 1] / c;
    for (int j = n - 2; j >= 1; --j) {
      out.quot[j - 1] = (a[j] - out.quot[j]) / c;
    }
    out.rem = std::abs(a[0] - out.quot[0]);
  }
  return out;
}

}  // namespace

AngularFunction simplified(const AngularFunction& f) {
  AngularFunction zero;
  zero.m = f.m;
  if (f.terms.empty()) return zero;

  // Classes of factor bases (1 + c rho^2), merged with a relative tolerance.
  std::vector<Complex> classes;
  auto class_of = [&classes](Complex c) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const double scale = std::max({std::abs(c), std::abs(classes[i]), 1.0});
      if (std::abs(c - classes[i]) <= 1e-13 * scale) return i;
    }
    classes.push_back(c);
    return classes.size() - 1;
  };

  struct TNorm {
    Complex coeff;
    int power;
    std::map<std::size_t, int> exps;
  };
  std::vector<TNorm> tnorms;
  tnorms.reserve(f.terms.size());
  for (const Term& t : f.terms) {
    TNorm tn{t.coeff, t.power, {}};
    for (const FactorPower& fp : t.factors) {
      if (fp.exponent != 0) tn.exps[class_of(fp.c)] += fp.exponent;
    }
    tnorms.push_back(std::move(tn));
  }

  // Common denominator prod_k (1 + c_k rho^2)^{D_k}.
  std::vector<int> denom(classes.size(), 0);
  for (const TNorm& tn : tnorms) {
    for (const auto& [k, e] : tn.exps) {
      denom[k] = std::max(denom[k], std::max(0, -e));
    }
  }

  // Expand every numerator term into one Laurent polynomial in rho. Track the
  // largest contribution before summation: exact cancellations leave rounding
  // dust that must be measured against the inputs, not against itself.
  std::map<int, Complex> poly;
  double input_scale = 0.0;
  for (const TNorm& tn : tnorms) {
    std::map<int, Complex> cur{{tn.power, tn.coeff}};
    for (std::size_t k = 0; k < classes.size(); ++k) {
      auto it = tn.exps.find(k);
      const int up = denom[k] + (it == tn.exps.end() ? 0 : it->second);
      for (int rep = 0; rep < up; ++rep) {
        std::map<int, Complex> next;
        for (const auto& [p, co] : cur) {
          next[p] += co;
          next[p + 2] += classes[k] * co;
        }
        cur = std::move(next);
      }
    }
    for (const auto& [p, co] : cur) {
      poly[p] += co;
      input_scale = std::max(input_scale, std::abs(co));
    }
  }

  if (input_scale == 0.0) return zero;
  for (auto it = poly.begin(); it != poly.end();) {
    it = std::abs(it->second) < 1e-12 * input_scale ? poly.erase(it)
                                                    : std::next(it);
  }
  if (poly.empty()) return zero;

  // Cancel denominator factors that divide the numerator exactly.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (denom[k] == 0) continue;
      // Split by rho-power parity; the factor acts within each class.
      std::vector<Complex> seq[2];
      int pmin[2] = {0, 0};
      bool have[2] = {false, false};
      for (const auto& [p, co] : poly) {
        const int par = ((p % 2) + 2) % 2;
        if (!have[par]) {
          pmin[par] = p;
          have[par] = true;
        }
      }
      for (int par = 0; par < 2; ++par) {
        if (!have[par]) continue;
        int pmax = pmin[par];
        for (const auto& [p, co] : poly) {
          if (((p % 2) + 2) % 2 == par) pmax = std::max(pmax, p);
        }
        seq[par].assign((pmax - pmin[par]) / 2 + 1, Complex{});
        for (const auto& [p, co] : poly) {
          if (((p % 2) + 2) % 2 == par) seq[par][(p - pmin[par]) / 2] = co;
        }
      }
      double maxa = 0.0;
      for (int par = 0; par < 2; ++par) {
        for (const Complex& co : seq[par]) maxa = std::max(maxa, std::abs(co));
      }
      DivOut div[2];
      bool ok = true;
      for (int par = 0; par < 2 && ok; ++par) {
        div[par] = divide_linear(seq[par], classes[k]);
        ok = div[par].rem <= 1e-10 * maxa;
      }
      if (!ok) continue;
      std::map<int, Complex> next;
      for (int par = 0; par < 2; ++par) {
        for (std::size_t j = 0; j < div[par].quot.size(); ++j) {
          const Complex co = div[par].quot[j];
          if (co != Complex{}) next[pmin[par] + 2 * static_cast<int>(j)] = co;
        }
      }
      poly = std::move(next);
      denom[k] -= 1;
      progress = true;
      if (poly.empty()) return zero;
    }
  }

  std::vector<FactorPower> shared;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (denom[k] > 0) shared.push_back({classes[k], -denom[k]});
  }
  AngularFunction out;
  out.m = f.m;
  for (const auto& [p, co] : poly) out.terms.push_back({co, p, shared});
  return out;
}

std::complex<long double> evaluate_rho(const AngularFunction& f,
                                       std::complex<long double> rho) {
  using LComplex = std::complex<long double>;
  const LComplex rho2 = rho * rho;
  LComplex sum{0.0L, 0.0L};
  for (const Term& t : f.terms) {
    LComplex v = LComplex{t.coeff.real(), t.coeff.imag()} * ipow(rho, t.power);
    for (const FactorPower& fp : t.factors) {
      const LComplex lc{fp.c.real(), fp.c.imag()};
      v *= ipow(LComplex{1.0L, 0.0L} + lc * rho2, fp.exponent);
    }
    sum += v;
  }
  return sum;
}

std::complex<double> evaluate_rho(const AngularFunction& f, Complex rho) {
  // Individual terms can exceed the final sum by ~1e10 before cancelling, so
  // accumulate in extended precision to keep the pointwise noise small.
  const std::complex<long double> sum =
      evaluate_rho(f, std::complex<long double>{rho.real(), rho.imag()});
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> evaluate(const AngularFunction& f, double theta,
                              double phi) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw DomainError("angular evaluation requires 0 < theta < pi");
  }
  const double rho = 1.0 / std::tan(0.5 * theta);
  const Complex val = evaluate_rho(f, Complex{rho, 0.0});
  if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
    throw DomainError("angular function diverges at this theta");
  }
  return val * Complex{std::cos(f.m * phi), std::sin(f.m * phi)};
}

std::string dump_json(const AngularFunction& f, int indent) {
  nlohmann::json j;
  j["m"] = f.m;
  j["terms"] = nlohmann::json::array();
  for (const Term& t : f.terms) {
    nlohmann::json jt;
    jt["coeff"] = {t.coeff.real(), t.coeff.imag()};
    jt["power"] = t.power;
    jt["factors"] = nlohmann::json::array();
    for (const FactorPower& fp : t.factors) {
      jt["factors"].push_back(
          {{"c", {fp.c.real(), fp.c.imag()}}, {"exponent", fp.exponent}});
    }
    j["terms"].push_back(std::move(jt));
  }
  return j.dump(indent);
}

AngularFunction harmonic_shape(int l, int m, const QParam& qp) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("harmonic labels require 0 <= |m| <= l");
  }
  std::vector<FactorPower> qfactors;
  qfactors.reserve(l);
  for (int k = 0; k < l; ++k) {
    qfactors.push_back({qp.q_power(2.0 * (k - l)), -1});
  }
  AngularFunction out;
  out.m = m;
  const double pref = q_factorial(l, qp) * q_factorial(l - m, qp);
  const int k_lo = std::max(0, -m);
  const int k_hi = std::min(l - m, l);
  for (int k = k_lo; k <= k_hi; ++k) {
    const double denom = q_factorial(k, qp) * q_factorial(l - m - k, qp) *
                         q_factorial(l - k, qp) * q_factorial(m + k, qp);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.terms.push_back({Complex{sign * pref / denom, 0.0}, m + 2 * k, qfactors});
  }
  return out;
}

double harmonic_norm_squared(int l, int m, const QParam& qp) {
  return bracket(2.0 * l + 1.0, qp) * q_factorial(l + m, qp) /
         (4.0 * std::numbers::pi * q_factorial(l - m, qp));
}

QSphericalHarmonic spherical_harmonic(int l, int m, const QParam& qp) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("harmonic labels require 0 <= |m| <= l");
  }
  if (qp.regime() == Regime::UnitCircle) {
    for (int j = 1; j <= 2 * l + 1; ++j) {
      if (bracket(static_cast<double>(j), qp) <= 0.0) {
        throw DomainError("harmonic undefined at this w: bracket [" +
                          std::to_string(j) + "] is not positive");
      }
    }
  }
  const double n2 = harmonic_norm_squared(l, m, qp);
  if (!(n2 > 0.0)) {
    throw DomainError("harmonic undefined at this w: negative norm square");
  }
  const double norm = (l % 2 == 0 ? 1.0 : -1.0) * std::sqrt(n2);
  QSphericalHarmonic y{l, m, qp, multiply_scalar(harmonic_shape(l, m, qp),
                                                 Complex{norm, 0.0}),
                       Complex{norm, 0.0}};
  return y;
}

namespace {

// (q - q^{-1}) / (4 ln q) with the removable w -> 0 limit handled by series.
double inner_product_prefactor(const QParam& qp) {
  const double w = std::abs(qp.w());
  const bool circle = qp.regime() == Regime::UnitCircle;
  if (w < 1e-6) {
    const double w2 = w * w;
    const double c2 = circle ? -1.0 / 6.0 : 1.0 / 6.0;
    return 0.5 * (1.0 + w2 * (c2 + w2 / 120.0));
  }
  return circle ? std::sin(w) / (2.0 * w) : std::sinh(w) / (2.0 * w);
}

InnerProductResult weighted_pairing(
    int lp, int mp, int l, int m, const QParam& qp,
    const std::function<Complex(Complex)>* insertion,
    const QuadratureOptions& opts) {
  if (mp != m) return {};
  const bool circle = qp.regime() == Regime::UnitCircle;
  const QParam qinv = qp.inverse();

  const Complex q_minus = qp.q_power(-1.0);
  const Complex q_plus = qp.q_power(1.0);
  const AngularFunction ket1 = multiply_scalar(
      scale_argument(spherical_harmonic(l, m, qp).f, q_minus), q_minus);
  const AngularFunction ket2 = multiply_scalar(
      scale_argument(spherical_harmonic(l, m, qinv).f, q_plus), q_plus);
  const AngularFunction bra1 = spherical_harmonic(lp, mp, circle ? qp : qinv).f;
  const AngularFunction bra2 = spherical_harmonic(lp, mp, circle ? qinv : qp).f;
  const Complex c1 = qp.q_power(-2.0);
  const Complex c2 = qp.q_power(2.0);

  // The integrand is evaluated in extended precision: near t -> 1 the two
  // branches reach magnitudes ~ q^{l(l+1) + lp(lp+1)} while their signed
  // contributions cancel, and the Gram tolerance lives below the double
  // sample noise of such values.
  using LComplex = std::complex<long double>;
  const LComplex lc1{c1.real(), c1.imag()};
  const LComplex lc2{c2.real(), c2.imag()};
  auto integrand = [&](double t) {
    const long double eta =
        static_cast<long double>(t) / (1.0L - static_cast<long double>(t));
    const LComplex rho{std::sqrt(eta), 0.0L};
    const LComplex one{1.0L, 0.0L};
    LComplex g1 = std::conj(evaluate_rho(bra1, rho)) *
                  ((one + eta) / (one + lc1 * eta)) * evaluate_rho(ket1, rho);
    LComplex g2 = std::conj(evaluate_rho(bra2, rho)) *
                  ((one + eta) / (one + lc2 * eta)) * evaluate_rho(ket2, rho);
    if (insertion != nullptr) {
      const Complex i1 = (*insertion)(c1 * static_cast<double>(eta));
      const Complex i2 = (*insertion)(c2 * static_cast<double>(eta));
      g1 *= LComplex{i1.real(), i1.imag()};
      g2 *= LComplex{i2.real(), i2.imag()};
    }
    return g1 + g2;
  };
  InnerProductResult out;
  out.quadrature = integrate(integrand, 0.0, 1.0, opts);
  out.value = inner_product_prefactor(qp) * 2.0 * std::numbers::pi * 2.0 *
              out.quadrature.value;
  return out;
}

}  // namespace

InnerProductResult deformed_inner_product_full(int lp, int mp, int l, int m,
                                               const QParam& qp,
                                               const QuadratureOptions& opts) {
  return weighted_pairing(lp, mp, l, m, qp, nullptr, opts);
}

std::complex<double> deformed_inner_product(int lp, int mp, int l, int m,
                                            const QParam& qp) {
  InnerProductResult r = deformed_inner_product_full(lp, mp, l, m, qp);
  require_converged(r.quadrature, "deformed inner product");
  return r.value;
}

InnerProductResult deformed_matrix_element(
    int lp, int mp, int l, int m, const QParam& qp,
    const std::function<Complex(Complex)>& g, const QuadratureOptions& opts) {
  return weighted_pairing(lp, mp, l, m, qp, &g, opts);
}

}  // namespace qosc
