#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "supra/axioms.hpp"
#include "supra/constructions.hpp"
#include "supra/pareto.hpp"
#include "supra/sampler.hpp"
#include "test_helpers.hpp"

using namespace supra;
using testutil::close;

namespace {

Point sc(double v) { return Point::scalar(v); }

AxiomReport check_declared(const Construction& c, const PointSampler& sample,
                           std::size_t n = 10000, std::uint64_t seed = 1) {
  REQUIRE(c.declared.has_value());
  return check_axioms(c.fn, SpaceClass::b_suprametric(*c.declared), sample, n, 1e-9, seed);
}

}  // namespace

TEST_CASE("construction kinds round-trip through their names", "[constructions]") {
  using K = ConstructionKind;
  for (K k : {K::quadratic, K::exp_square, K::exp, K::lp, K::grid_lp, K::compose_d12,
              K::compose_lp, K::compose_grid_lp, K::exp_square_compose}) {
    const auto back = construction_kind_from_string(to_string(k));
    REQUIRE(back.has_value());
    REQUIRE(*back == k);
  }
  REQUIRE_FALSE(construction_kind_from_string("no-such-kind").has_value());
  REQUIRE_FALSE(construction_kind_from_string("compose-other").has_value());
}

TEST_CASE("constructions validate their parameters", "[constructions]") {
  const BaseMetric m = abs_metric();
  REQUIRE_THROWS_AS(quadratic_supra(m, 0.0, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(quadratic_supra(m, 1.0, 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(exp_square_supra(m, 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(exp_supra(m, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(lp_distance(1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(lp_distance(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(Lp_distance(-0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(exp_square_of_supra(quadratic_supra(m, 1.0, 1.0)), std::invalid_argument);
}

TEST_CASE("quadratic distance values and declared coefficients", "[constructions]") {
  const auto c = quadratic_supra(abs_metric(), 1.0, 1.0);
  REQUIRE(c.fn(sc(0.0), sc(1.0)) == 2.0);
  REQUIRE(c.fn(sc(0.0), sc(2.0)) == 6.0);
  REQUIRE(c.fn(sc(3.0), sc(3.0)) == 0.0);
  REQUIRE(c.declared == SpaceParams{1.0, 2.0});

  const auto c2 = quadratic_supra(abs_metric(), 1.0, 2.0);
  REQUIRE(c2.fn(sc(0.0), sc(1.0)) == 3.0);
  REQUIRE(c2.declared == SpaceParams{1.0, 1.0});

  const auto c3 = quadratic_supra(abs_metric(), 2.0, 4.0);
  REQUIRE(c3.declared == SpaceParams{1.0, 1.0});
}

TEST_CASE("exp distance values and declared coefficients", "[constructions]") {
  const auto c1 = exp_supra(abs_metric(), 1.0);
  REQUIRE(close(c1.fn(sc(0.0), sc(1.0)), 1.718281828459045, 1e-15));
  const auto c2 = exp_supra(abs_metric(), 2.0);
  REQUIRE(close(c2.fn(sc(0.0), sc(1.0)), 3.43656365691809, 1e-14));
  REQUIRE(c2.declared == SpaceParams{1.0, 0.5});
}

TEST_CASE("exp-square distance values", "[constructions]") {
  const auto c = exp_square_supra(abs_metric(), 1.0);
  REQUIRE(close(c.fn(sc(0.0), sc(1.0)), 1.718281828459045, 1e-15));
  REQUIRE(c.fn(sc(2.0), sc(2.0)) == 0.0);
  REQUIRE(c.declared == SpaceParams{1.0, 1.0});
}

TEST_CASE("lp and grid-Lp values for p = 1/2 and 1/3", "[constructions]") {
  const auto half = lp_distance(0.5);
  REQUIRE(close(half.fn(Point::vector({1.0, 1.0}), Point::vector({0.0, 0.0})), 4.0, 1e-12));
  REQUIRE(close(half.declared->b, 4.0, 1e-12));
  REQUIRE(half.declared->rho == 0.0);

  const auto third = lp_distance(1.0 / 3.0);
  REQUIRE(close(third.fn(Point::vector({1.0, 1.0}), Point::vector({0.0, 0.0})), 8.0, 1e-12));
  REQUIRE(close(third.declared->b, 8.0, 1e-11));

  const auto Lhalf = Lp_distance(0.5);
  REQUIRE(close(Lhalf.fn(Point::grid_fn({1.0, 1.0}), Point::grid_fn({0.0, 0.0})), 1.0, 1e-12));

  REQUIRE_THROWS_AS(half.fn(Point::vector({1.0}), Point::vector({1.0, 2.0})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(Lhalf.fn(Point::grid_fn({1.0}), Point::grid_fn({1.0, 2.0})),
                    std::invalid_argument);
}

TEST_CASE("composed distances and their declared coefficients", "[constructions]") {
  const auto d12 = make_construction(ConstructionKind::compose_d12, {});
  // Inner d0(0,1) = 1*(1+2) = 3, outer 3*(3+1) = 12.
  REQUIRE(d12.fn(sc(0.0), sc(1.0)) == 12.0);
  REQUIRE(d12.declared == SpaceParams{1.0, 1.0});

  ConstructionParams p;
  p.p = 0.5;
  const auto clp = make_construction(ConstructionKind::compose_lp, p);
  REQUIRE(close(clp.declared->b, 16.0, 1e-11));
  REQUIRE(close(clp.declared->rho, 64.0, 1e-10));
  // d0 = 4 on the unit pair, so the composite is 4*5 = 20.
  REQUIRE(close(clp.fn(Point::vector({1.0, 1.0}), Point::vector({0.0, 0.0})), 20.0, 1e-11));

  const auto cgl = make_construction(ConstructionKind::compose_grid_lp, p);
  REQUIRE(close(cgl.fn(Point::grid_fn({1.0, 1.0}), Point::grid_fn({0.0, 0.0})), 2.0, 1e-12));

  // Composition over any other inner quadratic carries no declaration.
  const auto other = compose_quadratic(quadratic_supra(abs_metric(), 2.0, 1.0));
  REQUIRE(other.kind == ConstructionKind::compose_other);
  REQUIRE_FALSE(other.declared.has_value());
  REQUIRE_THROWS_AS(make_construction(ConstructionKind::compose_other, {}),
                    std::invalid_argument);
}

TEST_CASE("exp-square composition value is pinned", "[constructions]") {
  const auto c = make_construction(ConstructionKind::exp_square_compose, {});
  // Inner d0(0,1) = e - 1; outer exp((e-1)^2) - 1.
  REQUIRE(close(c.fn(sc(0.0), sc(1.0)), 18.153633604974537, 1e-12));
  REQUIRE(c.declared == SpaceParams{1.0, 1.0});
}

TEST_CASE("composed distance dominates its inner distance", "[constructions]") {
  const auto inner = quadratic_supra(abs_metric(), 1.0, 2.0);
  const auto outer = compose_quadratic(inner);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const Point x = sc(u(rng)), y = sc(u(rng));
    REQUIRE(outer.fn(x, y) >= inner.fn(x, y));
  }
}

TEST_CASE("declared coefficients verify on the families where they hold", "[constructions]") {
  ConstructionParams p;

  REQUIRE(check_declared(make_construction(ConstructionKind::quadratic, p),
                         uniform_scalar(-10.0, 10.0))
              .ok());

  p.gamma = 2.0;
  REQUIRE(check_declared(make_construction(ConstructionKind::exp, p), uniform_scalar(-3.0, 3.0))
              .ok());

  p.p = 0.5;
  p.dim = 3;
  REQUIRE(check_declared(make_construction(ConstructionKind::lp, p), uniform_vector(3, -5.0, 5.0))
              .ok());

  p.p = 1.0 / 3.0;
  REQUIRE(check_declared(make_construction(ConstructionKind::lp, p), uniform_vector(3, -5.0, 5.0))
              .ok());

  p.p = 0.5;
  p.grid = 8;
  REQUIRE(check_declared(make_construction(ConstructionKind::grid_lp, p),
                         uniform_grid_fn(8, -5.0, 5.0))
              .ok());

  REQUIRE(check_declared(make_construction(ConstructionKind::compose_lp, p),
                         uniform_vector(3, -2.0, 2.0))
              .ok());

  REQUIRE(check_declared(make_construction(ConstructionKind::compose_grid_lp, p),
                         uniform_grid_fn(8, -2.0, 2.0))
              .ok());
}

TEST_CASE("exp-square refutes its conventional (1, 1) on scalars", "[constructions]") {
  const auto c = make_construction(ConstructionKind::exp_square, {});
  // Explicit witness: x = 0, y = 1 through z = 1/2.
  const double defect = triple_defect(c.fn, {1.0, 1.0}, sc(0.0), sc(1.0), sc(0.5));
  REQUIRE(close(defect, -1.069560557758917, 1e-12));

  const auto report = check_declared(c, uniform_scalar(-2.0, 2.0));
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.worst_defect < -1.0);

  // The sampled minimal-coefficient front confirms rho = 1 is not enough
  // at b = 1.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<TripleConstraint> cs;
  for (int i = 0; i < 5000; ++i)
    cs.push_back(make_constraint(c.fn, sc(u(rng)), sc(u(rng)), sc(u(rng))));
  REQUIRE_FALSE(feasible(cs, {1.0, 1.0}));
}

TEST_CASE("composed quadratic refutes (1, 1) but satisfies (1, 3)", "[constructions]") {
  const auto c = make_construction(ConstructionKind::compose_d12, {});
  const double at11 = triple_defect(c.fn, {1.0, 1.0}, sc(0.0), sc(0.2), sc(0.1));
  REQUIRE(close(at11, -0.06083319000000009, 1e-12));
  const double at13 = triple_defect(c.fn, {1.0, 3.0}, sc(0.0), sc(0.2), sc(0.1));
  REQUIRE(close(at13, 0.06830042999999997, 1e-12));

  REQUIRE_FALSE(check_declared(c, uniform_scalar(-2.0, 2.0)).ok());
  REQUIRE(check_axioms(c.fn, SpaceClass::b_suprametric(1.0, 3.0), uniform_scalar(-2.0, 2.0),
                       10000, 1e-9, 1)
              .ok());
}

TEST_CASE("exp-square composition inherits the refutation", "[constructions]") {
  const auto c = make_construction(ConstructionKind::exp_square_compose, {});
  REQUIRE(triple_defect(c.fn, {1.0, 1.0}, sc(0.0), sc(1.0), sc(0.5)) < 0.0);
  REQUIRE_FALSE(check_declared(c, uniform_scalar(-0.9, 0.9)).ok());
}

TEST_CASE("estimate_min_params recovers coefficients near the declaration", "[constructions]") {
  // The binding constraints of the quadratic distance come from short triples
  // with a near-midpoint witness (required rho tends to 2 as they shrink), so
  // sample densely on a small box.
  const auto c = make_construction(ConstructionKind::quadratic, {});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<TripleConstraint> cs;
  for (int i = 0; i < 20000; ++i)
    cs.push_back(make_constraint(c.fn, sc(u(rng)), sc(u(rng)), sc(u(rng))));
  const auto front = estimate_min_params(cs);
  REQUIRE(feasible(cs, *c.declared));
  REQUIRE(front.front().b == 1.0);
  REQUIRE(front.front().rho <= 2.0 + 1e-12);
  REQUIRE(front.front().rho >= 1.5);
}

TEST_CASE("exponential constructions overflow loudly far from the diagonal", "[constructions]") {
  const auto c = make_construction(ConstructionKind::exp_square, {});
  REQUIRE_THROWS_AS(c.fn(sc(0.0), sc(30.0)), std::overflow_error);
  const auto e = make_construction(ConstructionKind::exp, {});
  REQUIRE_THROWS_AS(e.fn(sc(0.0), sc(720.0)), std::overflow_error);
}
