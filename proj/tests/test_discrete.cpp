#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "supra/discrete.hpp"
#include "supra/pareto.hpp"
#include "test_helpers.hpp"

using namespace supra;
using namespace supra::discrete;
using testutil::close;

TEST_CASE("ddist case analysis is exact", "[discrete]") {
  const DPoint z = DPoint::zero(), o = DPoint::one();
  REQUIRE(ddist(z, z) == 0.0);
  REQUIRE(ddist(DPoint::recip(7), DPoint::recip(7)) == 0.0);

  // The special {0, 1} pair.
  REQUIRE(ddist(z, o) == 0.2);
  REQUIRE(ddist(o, z) == 0.2);

  // Within {0} u {1/(2n)}: the exponential transform of the gap.
  REQUIRE(close(ddist(z, DPoint::recip(2)), 0.3934693402873666, 1e-15));
  REQUIRE(close(ddist(DPoint::recip(2), DPoint::recip(4)), 0.22119921692859512, 1e-15));

  // Any pair leaving that set (other than {0,1}) is pinned at 1/4.
  REQUIRE(ddist(o, DPoint::recip(2)) == 0.25);
  REQUIRE(ddist(DPoint::recip(2), DPoint::recip(3)) == 0.25);
  REQUIRE(ddist(DPoint::recip(3), DPoint::recip(5)) == 0.25);
  REQUIRE(ddist(z, DPoint::recip(3)) == 0.25);
}

TEST_CASE("ddist is symmetric and vanishes exactly on the diagonal", "[discrete]") {
  const auto ps = points_up_to(60);
  for (const auto& x : ps)
    for (const auto& y : ps) {
      REQUIRE(ddist(x, y) == ddist(y, x));
      if (x == y)
        REQUIRE(ddist(x, y) == 0.0);
      else
        REQUIRE(ddist(x, y) > 0.0);
    }
}

TEST_CASE("the slice enumerator is ordered and validated", "[discrete]") {
  const auto ps = points_up_to(5);
  REQUIRE(ps.size() == 6);
  REQUIRE(ps[0] == DPoint::zero());
  REQUIRE(ps[1] == DPoint::one());
  REQUIRE(ps[5] == DPoint::recip(5));
  REQUIRE_THROWS_AS(points_up_to(1), std::invalid_argument);
}

TEST_CASE("exhaustive check passes at (3/2, 7) on the N = 200 slice", "[discrete]") {
  const auto report = verify_inequality_exhaustive(200);
  REQUIRE(report.ok());
  REQUIRE(report.violations.empty());
  REQUIRE(report.worst_defect >= 0.0);
  REQUIRE(report.samples_checked == 201u * 201u * 201u);
}

TEST_CASE("the discrete distance is not a plain metric", "[discrete]") {
  // x = 1, y = 1/20 through z = 0: legs 0.2 + (1 - e^(-1/20)) < 1/4 = d(x,y).
  const double legs = 0.2 - std::expm1(-0.05);
  REQUIRE(close(legs, 0.248770575499286, 1e-15));
  REQUIRE(legs < 0.25);
  const auto report = verify_inequality_exhaustive(20, {1.0, 0.0});
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.worst_defect < 0.0);
}

TEST_CASE("ball around 1 of radius 9/40 is exactly {0, 1}", "[discrete]") {
  const auto members = ball(DPoint::one(), 9.0 / 40.0, 1000);
  REQUIRE(members.size() == 2);
  REQUIRE(members[0] == DPoint::zero());
  REQUIRE(members[1] == DPoint::one());
}

TEST_CASE("ball membership matches the case analysis", "[discrete]") {
  // Radius 0.3 around 0 excludes exactly 1/2 among the first six points.
  const auto members = ball(DPoint::zero(), 0.3, 6);
  REQUIRE(members.size() == 6);
  REQUIRE(members[0] == DPoint::zero());
  REQUIRE(members[1] == DPoint::recip(6));
  REQUIRE(members[2] == DPoint::recip(5));
  REQUIRE(members[3] == DPoint::recip(4));
  REQUIRE(members[4] == DPoint::recip(3));
  REQUIRE(members[5] == DPoint::one());

  REQUIRE_THROWS_AS(ball(DPoint::zero(), 0.0, 10), std::invalid_argument);
}

TEST_CASE("non_open_witness finds the smallest even-tail intruder", "[discrete]") {
  const auto w1 = non_open_witness(1.0, 200);
  REQUIRE(w1.has_value());
  REQUIRE(*w1 == DPoint::recip(2));

  const auto w01 = non_open_witness(0.1, 200);
  REQUIRE(w01.has_value());
  REQUIRE(*w01 == DPoint::recip(10));
  // Minimality: the previous even denominator is still outside.
  REQUIRE(ddist(DPoint::zero(), DPoint::recip(8)) >= 0.1);

  const auto w03 = non_open_witness(0.3, 200);
  REQUIRE(w03.has_value());
  REQUIRE(*w03 == DPoint::recip(4));

  // Too small for the slice: no witness.
  REQUIRE_FALSE(non_open_witness(1e-9, 10).has_value());
  REQUIRE_THROWS_AS(non_open_witness(0.0, 10), std::invalid_argument);
}

TEST_CASE("every witness stays 1/4 away from 1 while entering B(0, r)", "[discrete]") {
  for (int k = 0; k <= 24; ++k) {
    const double r = std::pow(10.0, -3.0 + 3.0 * k / 24.0);
    const long long enough =
        std::max<long long>(200, static_cast<long long>(1.0 / -std::log1p(-std::min(r, 0.5))) + 4);
    const auto w = non_open_witness(r, enough);
    REQUIRE(w.has_value());
    REQUIRE(w->in_even_tail());
    REQUIRE(ddist(DPoint::zero(), *w) < r);
    REQUIRE(ddist(DPoint::one(), *w) == 0.25);
  }
}

TEST_CASE("discontinuity probe pins the three limits apart", "[discrete]") {
  const auto probe = discontinuity_check(1000);
  REQUIRE(close(probe.near_zero, 0.0004998750208307294, 1e-15));
  REQUIRE(probe.near_one == 0.25);
  REQUIRE(probe.at_zero_one == 0.2);
  // d(1, 1/(2n)) stays at 1/4 while d(0, 1/(2n)) -> 0 != 1/5 = d(0, 1).
  REQUIRE(probe.near_zero < 1e-3);
  REQUIRE(probe.near_one != probe.at_zero_one);

  const auto coarse = discontinuity_check(1);
  REQUIRE(close(coarse.near_zero, 0.3934693402873666, 1e-15));
  REQUIRE_THROWS_AS(discontinuity_check(0), std::invalid_argument);
}

TEST_CASE("the six exponential inequalities hold at pinned points", "[discrete]") {
  // s = t = 1 makes (i) an equality; the tolerance absorbs it.
  REQUIRE(lemma_check(1.0, 1.0, 1.0).all());
  REQUIRE(lemma_check(2.0, 1.0, 1.0).all());
  REQUIRE(lemma_check(0.5, 3.0, 1.5).all());
}

TEST_CASE("the six exponential inequalities hold on a random sweep", "[discrete]") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(1e-12, 10.0);
  const double bs[] = {1.0, 1.5, 5.0};
  for (int i = 0; i < 20000; ++i) {
    const auto r = lemma_check(u(rng), u(rng), bs[i % 3]);
    REQUIRE(r.all());
  }
}

TEST_CASE("sampled minimal coefficients stay at or below (3/2, 7)", "[discrete]") {
  const DistanceFn d = ddist_fn();
  const auto ps = points_up_to(50);
  std::vector<TripleConstraint> cs;
  for (const auto& x : ps)
    for (const auto& y : ps)
      for (const auto& z : ps)
        cs.push_back(make_constraint(d, Point::discrete(x), Point::discrete(y), Point::discrete(z)));

  REQUIRE(feasible(cs, {1.5, 7.0}));
  const auto front = estimate_min_params(cs);
  REQUIRE_FALSE(front.empty());
  bool dominates = false;
  for (const auto& p : front)
    if (p.b <= 1.5 + 1e-12 && p.rho <= 7.0 + 1e-12) dominates = true;
  REQUIRE(dominates);
}
