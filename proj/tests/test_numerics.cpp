#include <doctest.h>

#include <cmath>
#include <vector>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"
#include "levelwidth/special.hpp"

using namespace lw;
using numerics::pi;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int order : {4, 16, 20, 40}) {
    const int deg = 2 * order - 1;
    const double v = numerics::integrate_gauss([&](double x) { return std::pow(x, deg - 1) * (deg); }, 0.0, 1.0, order);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
  }
  const numerics::GaussRule& r = numerics::gauss_legendre(20);
  CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive quadrature handles an inverse square root endpoint") {
  const std::vector<double> edges{0.0, 1.0};
  const auto res = numerics::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, edges, 1e-12);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(2.0).epsilon(1e-10));
  const auto osc = numerics::integrate_adaptive([](double x) { return std::cos(50.0 * x); }, edges, 1e-12);
  CHECK(osc.value == doctest::Approx(std::sin(50.0) / 50.0).epsilon(1e-11));
}

TEST_CASE("find_root brackets and converges") {
  const double r = numerics::find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-15);
  CHECK(r == doctest::Approx(0.7390851332151607).epsilon(1e-14));
  CHECK_THROWS_AS(numerics::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), DomainError);
}

TEST_CASE("fit_line recovers an exact line") {
  Eigen::VectorXd x(5), y(5);
  for (int i = 0; i < 5; ++i) {
    x[i] = i;
    y[i] = 3.0 - 2.0 * i;
  }
  const auto f = numerics::fit_line(x, y);
  CHECK(f.slope == doctest::Approx(-2.0));
  CHECK(f.intercept == doctest::Approx(3.0));
  CHECK(f.rms_residual < 1e-12);
}

TEST_CASE("shortest formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    CHECK(numerics::parse_double(numerics::format_shortest(v)) == v);
  }
  CHECK(numerics::format_shortest(0.5) == "0.5");
  CHECK(numerics::parse_double("+2") == 2.0);
  CHECK_THROWS_AS(numerics::parse_double("2x"), DomainError);
}

TEST_CASE("log_gamma agrees with the real lgamma and the reflection formula") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 30.0, 170.5}) {
    CHECK(special::log_gamma({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  // |Gamma(1 + i y)|^2 = pi y / sinh(pi y)
  for (double y : {0.3, 2.0, 9.0, 40.0}) {
    const double lhs = 2.0 * special::log_gamma({1.0, y}).real();
    CHECK(lhs == doctest::Approx(std::log(pi * y / std::sinh(pi * y))).epsilon(1e-12));
  }
  // Gamma(z+1) = z Gamma(z) off the real axis
  const std::complex<double> z{-3.7, 1.3};
  const std::complex<double> ratio = std::exp(special::log_gamma(z + 1.0) - special::log_gamma(z));
  CHECK(std::abs(ratio - z) < 1e-12 * std::abs(z));
}

TEST_CASE("hurwitz_zeta matches direct sums and the Riemann zeta") {
  CHECK(special::hurwitz_zeta(3.0, 1.0) == doctest::Approx(std::riemann_zeta(3.0)).epsilon(1e-14));
  CHECK(special::hurwitz_zeta(2.0, 1.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
  double direct = 0.0;
  for (int k = 0; k < 200000; ++k) direct += std::pow(k + 0.3, -4.5);
  CHECK(special::hurwitz_zeta(4.5, 0.3) == doctest::Approx(direct).epsilon(1e-12));
  // zeta(s, a) - zeta(s, a + 1) = a^-s
  CHECK(special::hurwitz_zeta(7.0 / 3.0, 5.0) - special::hurwitz_zeta(7.0 / 3.0, 6.0) ==
        doctest::Approx(std::pow(5.0, -7.0 / 3.0)).epsilon(1e-12));
}
