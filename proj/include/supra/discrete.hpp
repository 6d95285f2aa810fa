#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "supra/axioms.hpp"
#include "supra/point.hpp"
#include "supra/space.hpp"

namespace supra::discrete {

// Distance on {0, 1, 1/2, 1/3, 1/4, ...}:
//   0                 if x = y,
//   1/5               if {x, y} = {0, 1},
//   1 - e^-|x - y|    if x != y and both lie in {0} u {1/(2n)},
//   1/4               otherwise.
// The case split keys on exact integer parity of the stored denominators;
// only the exponential branch touches floating point.  It satisfies the
// relaxed triangle inequality with (b, rho) = (3/2, 7) but is neither
// continuous nor open-ball friendly -- see the probes below.
inline double ddist(DPoint x, DPoint y) {
  if (x == y) return 0.0;
  if ((x.is_zero() && y.is_one()) || (x.is_one() && y.is_zero())) return 0.2;
  if (x.in_even_tail() && y.in_even_tail())
    return -std::expm1(-std::abs(x.value() - y.value()));
  return 0.25;
}

inline DistanceFn ddist_fn() {
  return {[](const Point& x, const Point& y) { return ddist(x.as_discrete(), y.as_discrete()); },
          "discrete"};
}

// The finite slice {0, 1, 1/2, ..., 1/N}, ascending by denominator code.
inline std::vector<DPoint> points_up_to(long long N) {
  if (N < 2) throw std::invalid_argument("points_up_to: need N >= 2");
  std::vector<DPoint> ps{DPoint::zero(), DPoint::one()};
  for (long long n = 2; n <= N; ++n) ps.push_back(DPoint::recip(n));
  return ps;
}

// Exhaustive relaxed-triangle check over every ordered triple of the finite
// slice.  Identity and symmetry are exact by construction, so the report's
// violations can only come from triangle defects below -tolerance.
inline AxiomReport verify_inequality_exhaustive(long long N,
                                                SpaceParams params = {1.5, 7.0},
                                                double tolerance = 1e-12) {
  params.validate();
  const auto ps = points_up_to(N);
  const std::size_t n = ps.size();

  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = ddist(ps[i], ps[j]);

  AxiomReport report;
  report.label = "discrete";
  report.cls = SpaceClass::b_suprametric(params);
  report.params = params;
  report.samples_checked = n * n * n;
  report.tolerance = tolerance;
  report.seed = 0;

  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const double defect =
            params.b * (m[i * n + k] + m[k * n + j]) + params.rho * m[i * n + k] * m[k * n + j] -
            m[i * n + j];
        worst = std::min(worst, defect);
        if (defect < -tolerance)
          report.violations.push_back(
              {Point::discrete(ps[i]), Point::discrete(ps[j]), Point::discrete(ps[k]), defect});
      }
  report.worst_defect = worst;

  std::sort(report.violations.begin(), report.violations.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) {
              if (a.defect != b.defect) return a.defect < b.defect;
              return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
            });
  return report;
}

// Members of {x : ddist(center, x) < radius} among the finite slice,
// ascending by value.
inline std::vector<DPoint> ball(DPoint center, double radius, long long N) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball: need radius > 0");
  std::vector<DPoint> members;
  for (const auto& p : points_up_to(N))
    if (ddist(center, p) < radius) members.push_back(p);
  std::sort(members.begin(), members.end());
  return members;
}

// A point of the even tail lying within r of 0 while staying at distance 1/4
// from 1: witnesses that no ball around 0 fits inside the ball of radius 9/40
// around 1.  Returns the smallest qualifying even denominator <= N, or
// nothing when the slice is too short for this r.
inline std::optional<DPoint> non_open_witness(double r, long long N) {
  if (!(r > 0.0)) throw std::invalid_argument("non_open_witness: need r > 0");
  if (N < 2) return std::nullopt;
  long long m = 2;
  if (r < 1.0) {
    // Need 1 - e^(-1/m) < r, i.e. m > 1 / (-log(1 - r)); jump near the
    // threshold and let the scan below settle rounding at the boundary.
    const double lower = 1.0 / -std::log1p(-r);
    if (lower >= static_cast<double>(N)) return std::nullopt;
    m = static_cast<long long>(lower) + 1;
    m += m % 2;  // first even candidate
    if (m < 2) m = 2;
  }
  for (; m <= N; m += 2)
    if (ddist(DPoint::zero(), DPoint::recip(m)) < r) return DPoint::recip(m);
  return std::nullopt;
}

// The three numbers that exhibit the discontinuity at the tail: the distance
// from 0 to 1/(2N) (vanishing), from 1 to 1/(2N) (pinned at 1/4), and from 1
// to 0 (1/5 -- not the tail limit).
struct DiscontinuityProbe {
  double near_zero = 0.0;
  double near_one = 0.0;
  double at_zero_one = 0.0;
};

inline DiscontinuityProbe discontinuity_check(long long N) {
  if (N < 1) throw std::invalid_argument("discontinuity_check: need N >= 1");
  const DPoint tail = DPoint::recip(2 * N);
  return {ddist(DPoint::zero(), tail), ddist(DPoint::one(), tail),
          ddist(DPoint::one(), DPoint::zero())};
}

// The six exponential inequalities behind the (3/2, 7) verification, each
// evaluated with slack `tolerance`.  All six hold for every s, t > 0, b >= 1.
struct LemmaCheck {
  bool i = false, ii = false, iii = false;
  bool i_scaled = false, ii_scaled = false, iii_scaled = false;
  bool all() const { return i && ii && iii && i_scaled && ii_scaled && iii_scaled; }
};

inline LemmaCheck lemma_check(double s, double t, double b, double tolerance = 1e-12) {
  if (!(s > 0.0) || !(t > 0.0)) throw std::invalid_argument("lemma_check: need s, t > 0");
  if (!(b >= 1.0)) throw std::invalid_argument("lemma_check: need b >= 1");
  const double es = std::exp(-s);
  const double et = std::exp(-t);
  const double ets = std::exp(-(t + s));
  const double east = std::exp(-std::abs(s - t));
  LemmaCheck c;
  c.i = east - 1.0 <= es - et + tolerance;
  c.ii = es + ets <= et + 1.0 + tolerance;
  c.iii = es + et <= east + 1.0 + tolerance;
  c.i_scaled = b * (2.0 - et - east) >= 1.0 - es - tolerance;
  c.ii_scaled = b * (2.0 - es - ets) >= 1.0 - et - tolerance;
  c.iii_scaled = b * (2.0 - et - es) >= 1.0 - east - tolerance;
  return c;
}

}  // namespace supra::discrete
