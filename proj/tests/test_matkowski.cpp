#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "supra/matkowski.hpp"
#include "test_helpers.hpp"

using namespace supra;
using testutil::close;

TEST_CASE("iterate composes the comparison function exactly n times", "[matkowski]") {
  const auto half = psi_linear(0.5);
  REQUIRE(iterate(half, 0, 8.0) == 8.0);
  REQUIRE(iterate(half, 1, 8.0) == 4.0);
  REQUIRE(iterate(half, 3, 8.0) == 1.0);

  const auto rat = psi_rational();
  REQUIRE(close(iterate(rat, 4, 1.0), 0.2, 1e-15));

  const auto sq = psi_sqrt1p();
  REQUIRE(close(iterate(sq, 3, 8.0), 0.3160740129524925, 1e-15));
  // One application is sqrt(1 + t) - 1 in its cancellation-free form.
  REQUIRE(close(sq.evaluator(3.0), 1.0, 1e-15));

  REQUIRE_THROWS_AS(iterate(half, -1, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(iterate(half, 2, -1.0), std::invalid_argument);
}

TEST_CASE("iteration obeys the composition law exactly", "[matkowski]") {
  for (const auto& psi : {psi_linear(0.7), psi_rational(), psi_sqrt1p()}) {
    for (double t : {1e-3, 1.0, 50.0}) {
      for (long long n : {0LL, 1LL, 5LL, 17LL}) {
        for (long long m : {0LL, 3LL, 11LL}) {
          // Both sides perform the same operation sequence, so equality is
          // bitwise, not approximate.
          REQUIRE(iterate(psi, m + n, t) == iterate(psi, m, iterate(psi, n, t)));
        }
      }
    }
  }
}

TEST_CASE("closed-form iterates match composition", "[matkowski]") {
  const double grid[] = {1e-3, 1.0, 100.0};

  // Linear: c^n * t, checked at every n while values stay in normal range.
  for (double c : {0.3, 0.9}) {
    const auto psi = psi_linear(c);
    for (double t : grid) {
      double x = t;
      for (long long n = 1; n <= 200; ++n) {
        x = psi.evaluator(x);
        const double cf = (*psi.closed_form_iterate)(n, t);
        REQUIRE(close(x, cf, 1e-12 * std::max(x, 1.0)));
      }
    }
  }

  // Rational: t / (1 + n t), the certificate family of the solver.
  {
    const auto psi = psi_rational();
    for (double t : grid) {
      double x = t;
      for (long long n = 1; n <= 10000; ++n) {
        x = psi.evaluator(x);
        const double cf = (*psi.closed_form_iterate)(n, t);
        REQUIRE(close(x, cf, 1e-12 * std::max(x, 1.0)));
        REQUIRE(std::abs(x - cf) <= 1e-12);
      }
    }
  }

  // sqrt1p: (1 + t)^(2^-n) - 1; iterates halve, so stop well above the
  // denormal floor where relative comparison loses meaning.
  {
    const auto psi = psi_sqrt1p();
    for (double t : grid) {
      double x = t;
      for (long long n = 1; n <= 900; ++n) {
        x = psi.evaluator(x);
        const double cf = (*psi.closed_form_iterate)(n, t);
        REQUIRE(close(x, cf, 1e-12 * std::max(x, 1e-290)));
      }
    }
  }
}

TEST_CASE("check_M classifies the three stock comparison functions", "[matkowski]") {
  const auto lin = check_M(psi_linear(0.5));
  REQUIRE(lin.in_M);
  REQUIRE(lin.is_monotone);
  REQUIRE(lin.iterates_vanish);
  REQUIRE(lin.psi_below_identity);
  REQUIRE(lin.psi_zero_fixed);
  REQUIRE(lin.ratio_limsup_estimate == 0.5);

  const auto rat = check_M(psi_rational());
  REQUIRE(rat.in_M);
  REQUIRE(rat.ratio_limsup_estimate < 1.0);
  REQUIRE(rat.ratio_limsup_estimate > 0.99);

  const auto sq = check_M(psi_sqrt1p());
  REQUIRE(sq.in_M);
  REQUIRE(close(sq.ratio_limsup_estimate, 0.5, 1e-9));
}

TEST_CASE("check_M rejects functions outside the comparison class", "[matkowski]") {
  // The identity never vanishes and is not strictly below itself.
  const ComparisonFunction ident{[](double t) { return t; }, "identity", std::nullopt};
  const auto ri = check_M(ident);
  REQUIRE_FALSE(ri.in_M);
  REQUIRE_FALSE(ri.psi_below_identity);

  // An expanding map fails the same gates.
  const ComparisonFunction twice{[](double t) { return 2.0 * t; }, "twice", std::nullopt};
  REQUIRE_FALSE(check_M(twice).in_M);

  // A non-monotone map is rejected on structure alone.
  const ComparisonFunction wavy{[](double t) { return 0.5 * t * (1.0 + 0.9 * std::sin(8.0 * t)); },
                                "wavy", std::nullopt};
  REQUIRE_FALSE(check_M(wavy).is_monotone);
  REQUIRE_FALSE(check_M(wavy).in_M);
}

TEST_CASE("check_Mb separates linear rates across the 1/b threshold", "[matkowski]") {
  const auto yes = check_Mb(psi_linear(0.4), 2.0);
  REQUIRE(yes.in_M);
  REQUIRE(yes.in_Mb.has_value());
  REQUIRE(*yes.in_Mb);
  REQUIRE_FALSE(yes.inconclusive);
  REQUIRE(yes.b.has_value());
  REQUIRE(*yes.b == 2.0);

  const auto no = check_Mb(psi_linear(0.6), 2.0);
  REQUIRE(no.in_M);
  REQUIRE_FALSE(*no.in_Mb);
  REQUIRE_FALSE(no.inconclusive);

  // Exactly at the threshold the margin forces an honest "cannot tell".
  const auto edge = check_Mb(psi_linear(0.5), 2.0);
  REQUIRE_FALSE(*edge.in_Mb);
  REQUIRE(edge.inconclusive);
}

TEST_CASE("the rational function is in M but never in M_b", "[matkowski]") {
  // Its iterate ratio tends to 1 from below, so no b >= 1 admits it; at
  // b = 1 the estimate lands inside the margin band and the verdict is
  // "false, inconclusive" rather than a spurious pass.
  const auto at1 = check_Mb(psi_rational(), 1.0);
  REQUIRE(at1.in_M);
  REQUIRE_FALSE(*at1.in_Mb);
  REQUIRE(at1.inconclusive);
  REQUIRE(at1.ratio_limsup_estimate < 1.0);
  REQUIRE(at1.ratio_limsup_estimate > 1.0 - 1e-5);

  for (double b : {1.5, 2.0, 4.0}) {
    const auto r = check_Mb(psi_rational(), b);
    REQUIRE(r.in_M);
    REQUIRE_FALSE(*r.in_Mb);
    REQUIRE_FALSE(r.inconclusive);  // estimate ~1 is far above 1/b
  }
}

TEST_CASE("sqrt1p joins M_b for moderate b", "[matkowski]") {
  const auto r1 = check_Mb(psi_sqrt1p(), 1.0);
  REQUIRE(*r1.in_Mb);
  REQUIRE_FALSE(r1.inconclusive);

  const auto r15 = check_Mb(psi_sqrt1p(), 1.5);
  REQUIRE(*r15.in_Mb);

  // Its ratio limit is exactly 1/2, so b = 2 sits on the boundary.
  const auto r2 = check_Mb(psi_sqrt1p(), 2.0);
  REQUIRE(r2.inconclusive);
}

TEST_CASE("membership checks validate their inputs", "[matkowski]") {
  REQUIRE_THROWS_AS(check_Mb(psi_linear(0.5), 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(check_M(psi_linear(0.5), {}), std::invalid_argument);
  REQUIRE_THROWS_AS(check_M(psi_linear(0.5), {-1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(check_M(psi_linear(0.5), {2.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(psi_linear(-0.1), std::invalid_argument);
}

TEST_CASE("reports carry the label, grid, and trace bookkeeping", "[matkowski]") {
  const auto r = check_M(psi_linear(0.25));
  REQUIRE(r.psi_label == "linear:" + std::to_string(0.25));
  REQUIRE(r.grid == default_psi_grid());
  REQUIRE(r.traces.size() == r.grid.size());
  for (const auto& tr : r.traces) {
    REQUIRE(tr.steps_run >= 1);
    REQUIRE_FALSE(tr.non_finite);
    REQUIRE(tr.head.size() <= 32);
  }
}
