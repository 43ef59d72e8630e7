#include <doctest.h>

#include <cmath>

#include "levelwidth/errors.hpp"
#include "levelwidth/potentials.hpp"

using namespace lw;

TEST_CASE("parse_potential round-trips through to_string") {
  for (const char* text : {"powerlaw:A=2,alpha=4", "powerlaw:A=-1,alpha=-0.5,wall", "box:L=1.5", "harmonic:omega=2",
                           "halfharmonic:omega=0.5", "coulomb:A=3,M=2,hbar=0.5"}) {
    const PotentialSpec p = parse_potential(text);
    const PotentialSpec q = parse_potential(to_string(p));
    CHECK(q.family == p.family);
    CHECK(q.A == p.A);
    CHECK(q.alpha == p.alpha);
    CHECK(q.L == p.L);
    CHECK(q.omega0 == p.omega0);
    CHECK(q.M == p.M);
    CHECK(q.hbar == p.hbar);
    CHECK(q.left_wall == p.left_wall);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(parse_potential("well:A=1"), DomainError);
  CHECK_THROWS_AS(parse_potential("box:L=1,L=2"), DomainError);
  CHECK_THROWS_AS(parse_potential("box:L=1,q=2"), DomainError);
  CHECK_THROWS_AS(parse_potential("box:L=-1"), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(1.0, -1.0, true), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(-1.0, -1.0, false), DomainError);
  CHECK_THROWS_AS(PotentialSpec::power_law(1.0, -2.5, true), DomainError);
}

TEST_CASE("turning points solve V(q) = E") {
  const PotentialSpec quartic = PotentialSpec::power_law(0.7, 4.0, false);
  const TurningPoints tp = turning_points(quartic, 3.0);
  CHECK(evaluate(quartic, tp.q2) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(tp.q1 == doctest::Approx(-tp.q2));
  CHECK_FALSE(tp.q1_is_wall);

  const PotentialSpec c = PotentialSpec::coulomb(2.0);
  const TurningPoints tc = turning_points(c, -0.5);
  CHECK(tc.q1 == 0.0);
  CHECK(tc.q1_is_wall);
  CHECK(evaluate(c, tc.q2) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(wall_count(c) == 1);
  CHECK(wall_count(PotentialSpec::box(1.0)) == 2);
  CHECK(wall_count(PotentialSpec::harmonic(1.0)) == 0);

  CHECK_FALSE(admits_bounded_motion(c, 0.1));
  CHECK_THROWS_AS(turning_points(c, 0.1), NoOrbitError);
}

TEST_CASE("derivative matches a finite difference") {
  const PotentialSpec p = PotentialSpec::power_law(-1.3, -0.7, true);
  for (double q : {0.2, 1.0, 3.5}) {
    const double h = 1e-6 * q;
    CHECK(derivative(p, q) == doctest::Approx((evaluate(p, q + h) - evaluate(p, q - h)) / (2 * h)).epsilon(1e-7));
  }
  CHECK(is_symmetric(PotentialSpec::harmonic(1.0)));
  CHECK_FALSE(is_symmetric(PotentialSpec::half_harmonic(1.0)));
}
