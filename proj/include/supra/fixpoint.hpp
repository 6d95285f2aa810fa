#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "supra/errors.hpp"
#include "supra/matkowski.hpp"
#include "supra/point.hpp"
#include "supra/sampler.hpp"
#include "supra/space.hpp"

namespace supra {

// A self-map together with the space it contracts on, the comparison function
// witnessing d(fx, fy) <= psi(d(x, y)), and a starting point.
struct ContractionProblem {
  DistanceFn distance;
  SpaceParams params;
  std::function<Point(const Point&)> map;
  ComparisonFunction psi;
  Point x0;
};

struct IterationTrace {
  std::vector<Point> points;           // x0, x1 = f x0, ...
  std::vector<double> step_distances;  // d(x_i, x_{i+1})
};

struct FixedPointResult {
  Point x_star;
  long long iterations = 0;
  double residual = std::numeric_limits<double>::quiet_NaN();  // d(x*, f x*)
  IterationTrace trace;
  bool converged = false;
};

// Proof-derived constants witnessing that the orbit is Cauchy: q iterations
// of psi push epsilon below the threshold eps/(b + sqrt(b^2 + rho*eps)), and
// c_q bounds the combinatorial growth of the chained inequality.
struct CauchyCertificate {
  double epsilon = 0.0;
  long long q = 0;
  double c_q = 0.0;
  double threshold = 0.0;
  double esp_slack = 0.0;  // threshold - psi^q(epsilon): slack the chained expansion consumes
  std::optional<double> series_tail;
};

namespace detail {

// x^n by repeated multiplication, with the convention x^0 = 1 even at x = 0
// (the rho^0 terms of the certificate formulas keep their b-metric meaning
// when rho vanishes).
inline double ipow(double x, long long n) {
  double r = 1.0;
  for (long long i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace detail

inline double cauchy_threshold(const SpaceParams& p, double epsilon) {
  return epsilon / (p.b + std::sqrt(p.b * p.b + p.rho * epsilon));
}

// max over i = 1..q-1 of C(q, i) * b^(q-i) * rho^(i-1).
inline double c_q_constant(const SpaceParams& params, long long q) {
  params.validate();
  if (q < 2) throw std::invalid_argument("c_q_constant: need q >= 2");
  double best = -std::numeric_limits<double>::infinity();
  double binom = 1.0;
  for (long long i = 1; i <= q - 1; ++i) {
    binom = binom * static_cast<double>(q - i + 1) / static_cast<double>(i);  // C(q, i)
    best = std::max(best, binom * detail::ipow(params.b, q - i) * detail::ipow(params.rho, i - 1));
  }
  return best;
}

// Elementary symmetric polynomial e_i(xs) over all size-i index subsets.
inline double esp(std::size_t i, const std::vector<double>& xs) {
  if (i < 1 || i > xs.size()) throw std::domain_error("esp: index out of range");
  std::vector<double> e(i + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t m = 0; m < xs.size(); ++m)
    for (std::size_t j = std::min(i, m + 1); j >= 1; --j) e[j] += xs[m] * e[j - 1];
  return e[i];
}

// Right-fold of the relaxed triangle inequality along a chain with
// consecutive distances ds: T(d1) = d1, T(d1..dk) = b*(d1 + T(d2..dk)) +
// rho*d1*T(d2..dk).
inline double chain_bound(const SpaceParams& params, const std::vector<double>& ds) {
  params.validate();
  if (ds.empty()) throw std::invalid_argument("chain_bound: ds must be nonempty");
  for (double d : ds)
    if (!(d >= 0.0)) throw std::invalid_argument("chain_bound: distances must be nonnegative");
  double t = ds.back();
  for (auto it = ds.rbegin() + 1; it != ds.rend(); ++it)
    t = params.b * (*it + t) + params.rho * (*it) * t;
  return t;
}

// Closed-form majorant of the same chain: sum_{i=1..k} b^(k-i) rho^(i-1)
// e_i(ds).  Dominates chain_bound for every b >= 1, with equality at b = 1.
inline double esp_bound(const SpaceParams& params, const std::vector<double>& ds) {
  params.validate();
  if (ds.empty()) throw std::invalid_argument("esp_bound: ds must be nonempty");
  for (double d : ds)
    if (!(d >= 0.0)) throw std::invalid_argument("esp_bound: distances must be nonnegative");
  const std::size_t k = ds.size();
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t j = std::min(k, m + 1); j >= 1; --j) e[j] += ds[m] * e[j - 1];
  double total = 0.0;
  for (std::size_t i = 1; i <= k; ++i)
    total += detail::ipow(params.b, static_cast<long long>(k - i)) *
             detail::ipow(params.rho, static_cast<long long>(i - 1)) * e[i];
  return total;
}

// Partial sum (finite q) or certified tail majorant (q omitted = infinite) of
//   sum_{i=p}^{q-1} b * psi^i(d0) * prod_{j=0}^{i-1} (b + rho * psi^j(d0)).
// The infinite form runs the series' own ratio test: it stops once terms are
// negligible against the accumulated sum AND the term ratio has stayed below
// 1 - 1e-9 for ten consecutive terms, then adds the geometric majorant
// term/(1 - ratio) built from the worst recent ratio.  A ratio at or above
// 1 - 1e-9 persisting for 1000 terms -- or failure to settle within the term
// cap -- raises divergence_error: the series cannot be certified convergent.
inline double series_bound(const SpaceParams& params, const ComparisonFunction& psi, double d0,
                           long long p, std::optional<long long> q = std::nullopt,
                           long long term_cap = 10'000'000) {
  params.validate();
  if (!(d0 >= 0.0)) throw std::invalid_argument("series_bound: need d0 >= 0");
  if (p < 0) throw std::invalid_argument("series_bound: need p >= 0");
  if (q && *q < p) throw std::invalid_argument("series_bound: need p <= q");

  constexpr double kRatioEdge = 1.0 - 1e-9;
  constexpr int kSettleRun = 10;
  constexpr int kDivergeRun = 1000;

  double s = d0;        // psi^i(d0)
  double prefix = 1.0;  // prod_{j<i} (b + rho * psi^j(d0))
  double acc = 0.0;
  double prev_term = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> recent;  // ratios of the last few accumulated terms
  int settle = 0, diverge = 0;

  for (long long i = 0; !q || i < *q; ++i) {
    if (!std::isfinite(s) || !std::isfinite(prefix))
      throw divergence_error("series_bound: non-finite term at i=" + std::to_string(i));
    if (i >= p) {
      const double term = params.b * s * prefix;
      if (term == 0.0) return acc;  // series terminates exactly
      acc += term;
      if (!std::isnan(prev_term)) {
        const double ratio = term / prev_term;
        if (!q) {
          recent.push_back(ratio);
          if (recent.size() > static_cast<std::size_t>(kSettleRun)) recent.erase(recent.begin());
          if (ratio < kRatioEdge) {
            ++settle;
            diverge = 0;
          } else {
            settle = 0;
            ++diverge;
            if (diverge >= kDivergeRun)
              throw divergence_error(
                  "series_bound: term ratio stayed at or above 1 - 1e-9 for " +
                  std::to_string(kDivergeRun) + " consecutive terms (ratio test fails)");
          }
          if (settle >= kSettleRun && term < 1e-16 * acc) {
            const double r = *std::max_element(recent.begin(), recent.end());
            return acc + term / (1.0 - r);
          }
        }
      }
      prev_term = term;
      if (!q && i - p >= term_cap)
        throw divergence_error("series_bound: no certified convergence within term cap");
    }
    prefix *= params.b + params.rho * s;
    s = psi.evaluator(s);
  }
  return acc;
}

// The proof's exact four-point expansion of the chained inequality.
inline double four_point_expansion(const SpaceParams& params, double u1, double u2, double u3,
                                   double u4) {
  params.validate();
  for (double u : {u1, u2, u3, u4})
    if (!(u >= 0.0)) throw std::invalid_argument("four_point_expansion: need u >= 0");
  const double b = params.b, r = params.rho;
  return (u3 + u4) * b * b * b + u2 * b * b +
         (u3 * u4 + u2 * (u3 + u4) + u1 * (u3 + u4)) * r * b * b +
         (u2 * u3 * u4 + u1 * (u3 * u4 + u2 * (u3 + u4))) * b * r * r + u1 * u2 * b * r +
         b * u1 + r * r * r * u1 * u2 * u3 * u4;
}

// Closed-form majorant of the expansion when every u_i < epsilon:
// eps*(eps^3 + eps^2 + eps + 1) * max{rho^3, 4 b rho^2, 6 b^2 rho, 4 b^3}.
inline double four_point_simplified(const SpaceParams& params, double epsilon) {
  params.validate();
  if (!(epsilon >= 0.0)) throw std::invalid_argument("four_point_simplified: need epsilon >= 0");
  const double b = params.b, r = params.rho;
  const double coeff = std::max({r * r * r, 4.0 * b * r * r, 6.0 * b * b * r, 4.0 * b * b * b});
  return epsilon * (epsilon * epsilon * epsilon + epsilon * epsilon + epsilon + 1.0) * coeff;
}

// ---------------------------------------------------------------------------
// Empirical contraction verification.

struct ContractionViolation {
  Point x, y;
  double dxy = 0.0;
  double dfxfy = 0.0;
  double bound = 0.0;  // psi(dxy)
};

struct ContractionReport {
  std::size_t samples_checked = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<ContractionViolation> violations;
  double worst_excess = -std::numeric_limits<double>::infinity();  // max d(fx,fy) - psi(d(x,y))
  bool ok() const { return violations.empty(); }
};

// Samples n_pairs (x, y) and checks d(fx, fy) <= psi(d(x, y)) + tol.
inline ContractionReport verify_contraction(const ContractionProblem& problem,
                                            const PointSampler& sample, std::size_t n_pairs,
                                            double tol, std::uint64_t seed = 0) {
  if (n_pairs < 1) throw std::invalid_argument("verify_contraction: need n_pairs >= 1");
  std::mt19937_64 rng(seed);
  ContractionReport report;
  report.samples_checked = n_pairs;
  report.tol = tol;
  report.seed = seed;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const Point x = sample(rng);
    const Point y = sample(rng);
    const double dxy = problem.distance.eval(x, y);
    const double dfxfy = problem.distance.eval(problem.map(x), problem.map(y));
    const double bound = problem.psi.evaluator(dxy);
    if (!std::isfinite(dxy) || !std::isfinite(dfxfy) || !std::isfinite(bound)) {
      report.violations.push_back({x, y, dxy, dfxfy, bound});
      report.worst_excess = std::numeric_limits<double>::infinity();
      continue;
    }
    report.worst_excess = std::max(report.worst_excess, dfxfy - bound);
    if (dfxfy > bound + tol) report.violations.push_back({x, y, dxy, dfxfy, bound});
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const ContractionViolation& a, const ContractionViolation& b) {
              const double ea = a.dfxfy - a.bound, eb = b.dfxfy - b.bound;
              if (ea != eb) return ea > eb;
              return std::tie(a.x, a.y) < std::tie(b.x, b.y);
            });
  return report;
}

// ---------------------------------------------------------------------------
// Picard iteration.

// Iterates x_{n+1} = f(x_n) until the step distance d(x_n, x_{n+1}) drops
// below step_tol (converged) or max_iter is reached.  A non-finite or
// absurdly growing step aborts with divergence_error: the map is not a
// contraction along this orbit.
inline FixedPointResult picard(const ContractionProblem& problem, long long max_iter = 100000,
                               double step_tol = 1e-12) {
  if (max_iter < 1) throw std::invalid_argument("picard: need max_iter >= 1");
  if (!(step_tol > 0.0)) throw std::invalid_argument("picard: need step_tol > 0");
  FixedPointResult res;
  Point x = problem.x0;
  res.trace.points.push_back(x);
  long long n = 0;
  bool converged = false;
  while (n < max_iter) {
    Point next = problem.map(x);
    const double step = problem.distance.eval(x, next);
    ++n;
    if (!std::isfinite(step))
      throw divergence_error("picard: non-finite step distance at iteration " + std::to_string(n));
    if (step > 1e12)
      throw divergence_error("picard: step distance exceeded 1e12 at iteration " +
                             std::to_string(n));
    res.trace.points.push_back(next);
    res.trace.step_distances.push_back(step);
    x = std::move(next);
    if (step < step_tol) {
      converged = true;
      break;
    }
  }
  res.x_star = x;
  res.iterations = n;
  res.converged = converged;
  const double residual = problem.distance.eval(x, problem.map(x));
  if (!std::isfinite(residual)) throw divergence_error("picard: non-finite residual at x_star");
  res.residual = residual;
  return res;
}

// Smallest q >= 2 with psi^q(epsilon) strictly below the Cauchy threshold.
inline CauchyCertificate q_threshold(const ComparisonFunction& psi, const SpaceParams& params,
                                     double epsilon, long long q_cap = 256) {
  params.validate();
  if (!(epsilon > 0.0)) throw std::invalid_argument("q_threshold: need epsilon > 0");
  if (q_cap < 2) throw std::invalid_argument("q_threshold: need q_cap >= 2");
  const double threshold = cauchy_threshold(params, epsilon);
  double it = psi.evaluator(psi.evaluator(epsilon));  // psi^2(eps)
  long long q = 2;
  while (!(std::isfinite(it) && it < threshold)) {
    if (q == q_cap)
      throw cap_exceeded_error("q_threshold: no q <= " + std::to_string(q_cap) +
                               " with psi^q(epsilon) below threshold " +
                               std::to_string(threshold));
    it = psi.evaluator(it);
    ++q;
  }
  CauchyCertificate cert;
  cert.epsilon = epsilon;
  cert.q = q;
  cert.c_q = c_q_constant(params, q);
  cert.threshold = threshold;
  cert.esp_slack = threshold - it;
  return cert;
}

// ---------------------------------------------------------------------------
// Invariant-ball and uniqueness probes.

struct BallEscape {
  Point z;
  double dist_before = 0.0;  // d(x_center, z), < epsilon by construction
  double dist_after = 0.0;   // d(f^q z, x_center)
};

struct InvariantBallReport {
  bool refused = false;  // contraction precheck failed; nothing else was run
  std::string refusal_reason;
  double epsilon = 0.0;
  long long q = 0;
  double threshold = 0.0;
  long long p = -1;             // first index with d(x_{(m+1)q}, x_{mq}) < threshold onward
  long long center_index = -1;  // p*q
  std::size_t samples_checked = 0;
  std::uint64_t seed = 0;
  std::vector<BallEscape> escapes;
  bool ok() const { return !refused && escapes.empty(); }
};

namespace detail {

// Gaussian jiggle of each coordinate; discrete points admit no continuous
// perturbation and are returned unchanged.
inline Point perturb(const Point& x, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, scale);
  switch (x.kind()) {
    case PointKind::scalar:
      return Point::scalar(x.as_scalar() + g(rng));
    case PointKind::vector: {
      auto v = x.as_vector();
      for (double& c : v) c += g(rng);
      return Point::vector(std::move(v));
    }
    case PointKind::grid_fn: {
      auto v = x.as_grid_fn();
      for (double& c : v) c += g(rng);
      return Point::grid_fn(std::move(v));
    }
    case PointKind::discrete:
      return x;
  }
  throw std::logic_error("perturb: unreachable");
}

}  // namespace detail

// Empirical check of the proof's invariant-ball step: once the q-strided
// orbit steps stay below the Cauchy threshold (from index p on), the ball
// B(x_{pq}, epsilon) should be mapped into itself by f^q.  Samples the ball
// with orbit points and radial perturbations of the center and reports any
// escape.  Refuses to run when a quick contraction spot-check near the orbit
// fails (the theorem's hypothesis is then violated and escapes would be
// meaningless).
inline InvariantBallReport invariant_ball_check(const ContractionProblem& problem, double epsilon,
                                                long long max_m = 200,
                                                std::size_t n_samples = 1000,
                                                std::uint64_t seed = 0, long long q_cap = 256) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("invariant_ball_check: need epsilon > 0");
  if (max_m < 1) throw std::invalid_argument("invariant_ball_check: need max_m >= 1");
  InvariantBallReport report;
  report.epsilon = epsilon;
  report.seed = seed;

  const CauchyCertificate cert = q_threshold(problem.psi, problem.params, epsilon, q_cap);
  report.q = cert.q;
  report.threshold = cert.threshold;

  // Orbit x_0 .. x_{(max_m+1)q}.
  const long long top = (max_m + 1) * cert.q;
  std::vector<Point> orbit;
  orbit.reserve(static_cast<std::size_t>(top) + 1);
  orbit.push_back(problem.x0);
  for (long long i = 0; i < top; ++i) {
    Point next = problem.map(orbit.back());
    const double step = problem.distance.eval(orbit.back(), next);
    if (!std::isfinite(step) || step > 1e12)
      throw divergence_error("invariant_ball_check: orbit diverges at step " + std::to_string(i));
    orbit.push_back(std::move(next));
  }

  std::mt19937_64 rng(seed);

  // Contraction spot-check on perturbed orbit pairs; catches maps (identity,
  // expansions) that lack the hypothesis entirely.
  for (int i = 0; i < 64; ++i) {
    const Point& base = orbit[static_cast<std::size_t>(rng() % orbit.size())];
    const Point z1 = detail::perturb(base, epsilon, rng);
    const Point z2 = detail::perturb(base, epsilon, rng);
    const double dz = problem.distance.eval(z1, z2);
    const double dfz = problem.distance.eval(problem.map(z1), problem.map(z2));
    const double bound = problem.psi.evaluator(dz);
    if (!(dfz <= bound + 1e-9)) {
      report.refused = true;
      report.refusal_reason = "contraction check failed near orbit: d(fz1,fz2)=" +
                              std::to_string(dfz) + " > psi(d(z1,z2))=" + std::to_string(bound);
      return report;
    }
  }

  // First p with d(x_{(m+1)q}, x_{mq}) < threshold for all observed m >= p.
  long long p = 0;
  for (long long m = max_m; m >= 0; --m) {
    const double dm = problem.distance.eval(orbit[static_cast<std::size_t>((m + 1) * cert.q)],
                                            orbit[static_cast<std::size_t>(m * cert.q)]);
    if (!(dm < cert.threshold)) {
      p = m + 1;
      break;
    }
  }
  if (p > max_m)
    throw cap_exceeded_error(
        "invariant_ball_check: no stable index p <= max_m with q-strided steps below threshold");
  report.p = p;
  report.center_index = p * cert.q;
  const Point& center = orbit[static_cast<std::size_t>(report.center_index)];

  // Sample the ball: orbit members first, then perturbations of the center
  // at mixed scales, keeping only points genuinely inside B(center, epsilon).
  std::vector<std::pair<Point, double>> zs;
  for (const Point& pt : orbit) {
    if (zs.size() >= n_samples / 2) break;
    const double d = problem.distance.eval(center, pt);
    if (d < epsilon) zs.emplace_back(pt, d);
  }
  std::uniform_real_distribution<double> logscale(-3.0, 0.0);
  std::size_t attempts = 0;
  while (zs.size() < n_samples && attempts < 50 * n_samples) {
    ++attempts;
    const Point z = detail::perturb(center, epsilon * std::pow(10.0, logscale(rng)), rng);
    const double d = problem.distance.eval(center, z);
    if (std::isfinite(d) && d < epsilon) zs.emplace_back(z, d);
  }

  for (const auto& [z, dist_before] : zs) {
    Point w = z;
    for (long long j = 0; j < cert.q; ++j) w = problem.map(w);
    const double after = problem.distance.eval(w, center);
    if (!(after < epsilon)) report.escapes.push_back({z, dist_before, after});
  }
  report.samples_checked = zs.size();
  return report;
}

struct UniquenessReport {
  std::vector<FixedPointResult> results;
  double max_pairwise = std::numeric_limits<double>::quiet_NaN();
  double tol = 0.0;
  bool all_converged = false;
  bool consistent = false;    // every pairwise distance below tol
  bool inconclusive = false;  // some start failed to converge
  bool ok() const { return all_converged && consistent; }
};

// Runs picard from every start and checks all limits agree within tol.
inline UniquenessReport uniqueness_check(const ContractionProblem& problem,
                                         const std::vector<Point>& starts, double tol,
                                         long long max_iter = 100000, double step_tol = 1e-12) {
  if (starts.size() < 2) throw std::invalid_argument("uniqueness_check: need at least 2 starts");
  UniquenessReport report;
  report.tol = tol;
  for (const Point& s : starts) {
    ContractionProblem sub = problem;
    sub.x0 = s;
    report.results.push_back(picard(sub, max_iter, step_tol));
  }
  report.all_converged = std::all_of(report.results.begin(), report.results.end(),
                                     [](const FixedPointResult& r) { return r.converged; });
  report.inconclusive = !report.all_converged;
  double mx = 0.0;
  for (std::size_t i = 0; i < report.results.size(); ++i)
    for (std::size_t j = i + 1; j < report.results.size(); ++j)
      mx = std::max(mx, problem.distance.eval(report.results[i].x_star,
                                              report.results[j].x_star));
  report.max_pairwise = mx;
  report.consistent = mx < tol;
  return report;
}

}  // namespace supra
