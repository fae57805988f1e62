#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qosc/angular.hpp"
#include "qosc/observables.hpp"
#include "qosc/qnum.hpp"

using namespace qosc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFourPiThirds = 4.188790204786391;
}  // namespace

TEST_CASE("undeformed quadrupole moments") {
  CHECK(undeformed_quadrupole(0, 0) == 0.0);
  CHECK(undeformed_quadrupole(3, 0) == 0.0);
  CHECK(undeformed_quadrupole(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  // (2n + l + 3/2)(-2l/(2l+3)) at n = 1, l = 2: (11/2)(-4/7).
  CHECK(undeformed_quadrupole(1, 2) ==
        doctest::Approx(-22.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(undeformed_quadrupole(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(undeformed_quadrupole(0, -1), std::invalid_argument);
}

TEST_CASE("closed angular quadrupole factor: frozen values") {
  QParam w1 = QParam::real_positive(1.0);
  CHECK(quadrupole_angular_closed(w1) ==
        doctest::Approx(0.23307912640093749).epsilon(1e-14));
  // Circle reference sits at w = pi/3; evaluate just off the screened point.
  QParam qc = QParam::unit_circle(kPi / 3.0 + 1e-7);
  CHECK(quadrupole_angular_closed(qc) ==
        doctest::Approx(-0.34601331373462385).epsilon(1e-6));
}

TEST_CASE("angular factor is even in w") {
  for (double w : {0.3, 1.7}) {
    QParam qp = QParam::real_positive(w);
    CHECK(quadrupole_angular_closed(qp) ==
          quadrupole_angular_closed(qp.inverse()));
    QParam qc = QParam::unit_circle(w);
    CHECK(quadrupole_angular_closed(qc) ==
          quadrupole_angular_closed(qc.inverse()));
  }
}

TEST_CASE("angular factor small-w series joins the closed form") {
  // Leading behaviour is +-(4/15) w^2; the series kicks in below w = 1e-4.
  QParam just_above = QParam::real_positive(1.01e-4);
  CHECK(quadrupole_angular_closed(just_above) ==
        doctest::Approx(4.0 / 15.0 * 1.01e-4 * 1.01e-4).epsilon(1e-6));
  QParam below = QParam::real_positive(0.99e-4);
  CHECK(quadrupole_angular_closed(below) ==
        doctest::Approx(4.0 / 15.0 * 0.99e-4 * 0.99e-4).epsilon(1e-8));
  QParam circ = QParam::unit_circle(1e-5);
  CHECK(quadrupole_angular_closed(circ) ==
        doctest::Approx(-4.0 / 15.0 * 1e-10).epsilon(1e-8));
}

TEST_CASE("real-regime angular factor grows monotonically toward 2") {
  std::vector<double> ws{0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 30.0};
  double prev = -1.0;
  for (double w : ws) {
    const double v = quadrupole_angular_closed(QParam::real_positive(w));
    CHECK(v > prev);
    CHECK(v < 2.0);
    prev = v;
  }
  CHECK(2.0 - prev < 0.11);  // residual 3/(w tanh w) at w = 30
}

TEST_CASE("I_q closed form against quadrature, real regime") {
  for (double w : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    QParam qp = QParam::real_positive(w);
    const double closed = iq_integral(qp, IqMethod::Closed);
    const double quad = iq_integral(qp, IqMethod::Quadrature);
    CHECK(std::abs(closed - quad) <= 1e-8);
  }
  QParam half = QParam::real_positive(0.5);
  CHECK(iq_integral(half, IqMethod::Closed) ==
        doctest::Approx(4.277904432775966).epsilon(1e-14));
}

TEST_CASE("I_q closed form against quadrature, circle regime") {
  // Past w = pi/2 the quadrature route needs the pole-residue correction.
  const std::vector<std::pair<double, double>> frozen{
      {0.2, 4.1716082437},  {0.5, 4.0665553194},    {1.0, 3.4319349907},
      {1.7, -2.0101002895}, {2.0, -12.1139219716},  {2.356, -59.5902002060},
      {2.6, -215.6432583737}, {3.0, -13771.7652363550}};
  for (const auto& [w, reference] : frozen) {
    QParam qp = QParam::unit_circle(w);
    const double closed = iq_integral(qp, IqMethod::Closed);
    const double quad = iq_integral(qp, IqMethod::Quadrature);
    CHECK(closed == doctest::Approx(reference).epsilon(1e-9));
    CHECK(std::abs(closed - quad) <= 1e-7 * std::max(1.0, std::abs(closed)));
    // Both routes are even in w by construction.
    CHECK(iq_integral(qp.inverse(), IqMethod::Closed) == closed);
  }
}

TEST_CASE("I_q approaches 4*pi/3 in the undeformed limit") {
  QParam tiny = QParam::real_positive(1e-5);
  CHECK(iq_integral(tiny, IqMethod::Closed) ==
        doctest::Approx(kFourPiThirds).epsilon(1e-9));
  QParam tiny_c = QParam::unit_circle(1e-5);
  CHECK(iq_integral(tiny_c, IqMethod::Closed) ==
        doctest::Approx(kFourPiThirds).epsilon(1e-9));
}

TEST_CASE("angular factor equals the I_q + I_{1/q} combination") {
  auto via_iq = [](const QParam& qp, IqMethod method) {
    const double both = iq_integral(qp, method) +
                        iq_integral(qp.inverse(), method);
    const double w = qp.w();
    const double pre = qp.regime() == Regime::RealPositive
                           ? 3.0 * std::sinh(w) / (8.0 * kPi * w)
                           : 3.0 * std::sin(w) / (8.0 * kPi * w);
    return pre * both - 1.0;
  };
  for (double w : {0.25, 0.75}) {
    QParam qp = QParam::real_positive(w);
    CHECK(via_iq(qp, IqMethod::Closed) ==
          doctest::Approx(quadrupole_angular_closed(qp)).epsilon(1e-12));
    CHECK(via_iq(qp, IqMethod::Quadrature) ==
          doctest::Approx(quadrupole_angular_closed(qp)).epsilon(1e-8));
  }
  for (double w : {0.3, 1.2}) {
    QParam qp = QParam::unit_circle(w);
    CHECK(via_iq(qp, IqMethod::Closed) ==
          doctest::Approx(quadrupole_angular_closed(qp)).epsilon(1e-12));
    CHECK(via_iq(qp, IqMethod::Quadrature) ==
          doctest::Approx(quadrupole_angular_closed(qp)).epsilon(1e-8));
  }
}

TEST_CASE("angular factor from the deformed matrix element") {
  // <Y_00 | 3 cos^2(theta) - 1 | Y_00> in the deformed pairing; on the
  // eta = tan^2(theta/2) variable the insertion is 2(eta^2-4eta+1)/(eta+1)^2.
  auto insertion = [](std::complex<double> eta) {
    const std::complex<double> num =
        2.0 * (eta * eta - 4.0 * eta + 1.0);
    const std::complex<double> den = (eta + 1.0) * (eta + 1.0);
    return num / den;
  };
  QParam real = QParam::real_positive(0.5);
  const std::complex<double> me_real =
      deformed_matrix_element(0, 0, 0, 0, real, insertion).value;
  CHECK(std::abs(me_real.imag()) < 1e-10);
  CHECK(me_real.real() ==
        doctest::Approx(quadrupole_angular_closed(real)).epsilon(1e-8));
  QParam circ = QParam::unit_circle(0.7);
  const std::complex<double> me_circ =
      deformed_matrix_element(0, 0, 0, 0, circ, insertion).value;
  CHECK(std::abs(me_circ.imag()) < 1e-10);
  CHECK(me_circ.real() ==
        doctest::Approx(quadrupole_angular_closed(circ)).epsilon(1e-8));
}

TEST_CASE("full quadrupole moment: factorization and q = 1 limit") {
  QParam w1 = QParam::real_positive(1.0);
  for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
    const QuadrupoleResult r = quadrupole_moment(1, kind, RootBranch::Plus, w1);
    CHECK(r.value ==
          doctest::Approx(r.radial_part * r.angular_part).epsilon(1e-15));
    CHECK(r.angular_part ==
          doctest::Approx(quadrupole_angular_closed(w1)).epsilon(1e-15));
  }
  QParam q1 = QParam::real_positive(0.0);
  const QuadrupoleResult r0 = quadrupole_moment(0, CasimirKind::Cq,
                                                RootBranch::Plus, q1);
  CHECK(r0.value == 0.0);  // the s-state quadrupole vanishes at q = 1
}

TEST_CASE("quadrupole moment trends on both regimes") {
  // Real regime: positive and increasing with w for every branch and kind.
  std::vector<double> real_ws{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  for (int n : {0, 1}) {
    for (auto [kind, branch] :
         std::vector<std::pair<CasimirKind, RootBranch>>{
             {CasimirKind::Cq, RootBranch::Plus},
             {CasimirKind::Cq, RootBranch::Minus},
             {CasimirKind::CqPrime, RootBranch::Plus}}) {
      double prev = 0.0;
      for (double w : real_ws) {
        const QuadrupoleResult r =
            quadrupole_moment(n, kind, branch, QParam::real_positive(w));
        CHECK(r.value > prev);
        prev = r.value;
      }
    }
  }
  // Circle regime: negative and decreasing as w grows.
  std::vector<double> circ_ws{0.3, 0.8, 1.3, 1.8};
  for (int n : {0, 1}) {
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
      double prev = 0.0;
      for (double w : circ_ws) {
        const QuadrupoleResult r =
            quadrupole_moment(n, kind, RootBranch::Plus, QParam::unit_circle(w));
        CHECK(r.value < prev);
        prev = r.value;
      }
    }
  }
}

TEST_CASE("quadrupole moment rejects inadmissible branches") {
  QParam w1 = QParam::real_positive(1.0);
  CHECK_THROWS_AS(
      quadrupole_moment(0, CasimirKind::CqPrime, RootBranch::Minus, w1),
      DomainError);
  QParam q1 = QParam::real_positive(0.0);
  CHECK_THROWS_AS(quadrupole_moment(0, CasimirKind::Cq, RootBranch::Minus, q1),
                  DomainError);
}
