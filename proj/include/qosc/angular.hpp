#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qosc/qparam.hpp"
#include "qosc/quadrature.hpp"

namespace qosc {

// One factor (1 + c rho^2)^exponent of a Term.
struct FactorPower {
  std::complex<double> c;
  int exponent;
};

// coeff * rho^power * prod_j (1 + c_j rho^2)^{e_j}, rho = cot(theta/2).
struct Term {
  std::complex<double> coeff;
  int power = 0;
  std::vector<FactorPower> factors;
};

// Angular function on the fixed azimuthal sector e^{i m phi}. An empty term
// list is the zero function. The class is closed under the deformed angular
// operators: argument scaling rho -> s rho maps terms to terms.
struct AngularFunction {
  int m = 0;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
};

enum class Generator { T1, T2, SinThetaDTheta };

// --- exact algebra on AngularFunction ---

// rho -> s * rho substitution; exact (no truncation).
AngularFunction scale_argument(const AngularFunction& f,
                               std::complex<double> s);
AngularFunction multiply_power(const AngularFunction& f, int k);
AngularFunction multiply_scalar(const AngularFunction& f,
                                std::complex<double> z);
AngularFunction add(const AngularFunction& f, const AngularFunction& g);

// q^{t G} f. On the fixed-m sector T1 = (rho d_rho - m)/2 and
// T2 = (rho d_rho + m)/2, so q^{t T} acts by scaling the argument by q^{t/2}
// with a q^{-/+ t m/2} prefactor; sin(theta) d_theta = -rho d_rho scales by
// q^{-t}.
AngularFunction scale_operator(const AngularFunction& f, Generator g, double t,
                               const QParam& qp);

// G f exactly (differential action); used for the w = 0 limit of brackets.
AngularFunction apply_generator(const AngularFunction& f, Generator g);

// [G]_q f = (q^G - q^{-G}) f / (q - q^{-1}); falls back to apply_generator at
// w = 0 where the ratio degenerates to G itself.
AngularFunction bracket_generator(const AngularFunction& f, Generator g,
                                  const QParam& qp);

AngularFunction apply_j3(const AngularFunction& f);
AngularFunction apply_jplus(const AngularFunction& f, const QParam& qp);
AngularFunction apply_jminus(const AngularFunction& f, const QParam& qp);
AngularFunction apply_casimir(const AngularFunction& f, CasimirKind kind,
                              const QParam& qp);

// Canonical form: common-denominator expansion, coefficient merging, exact
// division by redundant (1 + c rho^2) factors. Cancellations such as
// J+ acting on the highest-weight harmonic come out as exactly zero.
AngularFunction simplified(const AngularFunction& f);

std::complex<double> evaluate_rho(const AngularFunction& f,
                                  std::complex<double> rho);
// Extended-precision overload; terms can exceed the final sum by many orders
// of magnitude before cancelling, so inner-product integrands use this one.
std::complex<long double> evaluate_rho(const AngularFunction& f,
                                       std::complex<long double> rho);
std::complex<double> evaluate(const AngularFunction& f, double theta,
                              double phi);

// JSON dump of the exact term representation (used by --dump-harmonic).
std::string dump_json(const AngularFunction& f, int indent = 2);

// --- q-spherical harmonics ---

struct QSphericalHarmonic {
  int l = 0;
  int m = 0;
  QParam qp;
  AngularFunction f;  // normalized, includes the (-1)^l sign of N
  std::complex<double> norm_constant{0.0, 0.0};
};

// Unnormalized product Q_{lq} R^l_{m0q} rho^m; constructible even where the
// normalization square root is not real.
AngularFunction harmonic_shape(int l, int m, const QParam& qp);

// N^2 = [2l+1] [l+m]! / (4 pi [l-m]!).
double harmonic_norm_squared(int l, int m, const QParam& qp);

// Throws DomainError ("harmonic undefined at this w") when any bracket [j]
// with 1 <= j <= 2l+1 fails to be strictly positive on the unit circle.
QSphericalHarmonic spherical_harmonic(int l, int m, const QParam& qp);

// --- deformed scalar product ---

struct InnerProductResult {
  std::complex<double> value{0.0, 0.0};
  IntegrationResult quadrature;
};

// Deformed scalar product <Y_{l'm'}|Y_{lm}>_q: prefactor (q - q^{-1})/(4 ln q)
// times two weighted summands that pair conjugated harmonics at q^{+/-1} with
// shifted kets q^{+/-(sin(theta) d_theta - 1)} Y; the phi integral is the
// analytic 2 pi delta_{m',m}.
InnerProductResult deformed_inner_product_full(int lp, int mp, int l, int m,
                                               const QParam& qp,
                                               const QuadratureOptions& opts = {});
std::complex<double> deformed_inner_product(int lp, int mp, int l, int m,
                                            const QParam& qp);

// Same bilinear form with a multiplicative insertion g(eta), eta = cot^2(theta/2).
// The shift operators act on the product g*Y, so each summand evaluates g at
// the correspondingly scaled argument q^{-/+2} eta.
InnerProductResult deformed_matrix_element(
    int lp, int mp, int l, int m, const QParam& qp,
    const std::function<std::complex<double>(std::complex<double>)>& g,
    const QuadratureOptions& opts = {});

}  // namespace qosc
