#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supra {

// A comparison function psi: [0, inf) -> [0, inf), optionally carrying an
// independent closed form for its n-th iterate (used to cross-check the
// numeric composition and to recover ratios once iterates underflow).
struct ComparisonFunction {
  std::function<double(double)> evaluator;
  std::string label;
  std::optional<std::function<double(long long, double)>> closed_form_iterate;

  double operator()(double t) const { return evaluator(t); }
};

inline ComparisonFunction psi_linear(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("psi_linear: need c >= 0");
  return {[c](double t) { return c * t; },
          "linear:" + std::to_string(c),
          [c](long long n, double t) { return std::pow(c, static_cast<double>(n)) * t; }};
}

inline ComparisonFunction psi_rational() {
  return {[](double t) { return t / (1.0 + t); },
          "rational",
          [](long long n, double t) { return t / (1.0 + static_cast<double>(n) * t); }};
}

// psi(t) = sqrt(1 + t) - 1, whose n-th iterate is (1 + t)^(2^-n) - 1.
// Evaluated as t / (sqrt(1 + t) + 1): the direct form cancels catastrophically
// for small t and would poison long iterate chains.
inline ComparisonFunction psi_sqrt1p() {
  return {[](double t) { return t / (std::sqrt(1.0 + t) + 1.0); },
          "sqrt1p",
          [](long long n, double t) {
            return std::expm1(std::exp2(static_cast<double>(-n)) * std::log1p(t));
          }};
}

// n-fold composition psi^n(t); n = 0 returns t unchanged.  No finiteness
// guard: callers inspect the result (membership checks treat non-finite
// iterates as disqualifying).
inline double iterate(const ComparisonFunction& psi, long long n, double t) {
  if (n < 0) throw std::invalid_argument("iterate: need n >= 0");
  if (!(t >= 0.0)) throw std::invalid_argument("iterate: need t >= 0");
  double s = t;
  for (long long i = 0; i < n; ++i) s = psi.evaluator(s);
  return s;
}

// Per-grid-point iteration summary kept in membership reports.  `head` holds
// the first few iterates verbatim; the rest is summarized because windows run
// to millions of steps.
struct IterateTrace {
  double t = 0.0;
  std::vector<double> head;
  double final_value = 0.0;
  long long steps_run = 0;
  bool underflowed = false;       // iterates reached exact zero early
  bool non_finite = false;        // an iterate left [0, inf)
  double max_window_ratio = std::numeric_limits<double>::quiet_NaN();
  long long healthy_ratios = 0;   // ratios with positive finite num and den
};

struct MembershipReport {
  std::string psi_label;
  bool is_monotone = false;
  bool iterates_vanish = false;
  double ratio_limsup_estimate = std::numeric_limits<double>::quiet_NaN();
  bool in_M = false;
  std::optional<bool> in_Mb;
  std::optional<double> b;
  bool inconclusive = false;
  // Consequence checks: members satisfy psi(t) < t for t > 0 and psi(0) = 0.
  bool psi_below_identity = false;
  bool psi_zero_fixed = false;
  std::vector<double> grid;
  std::vector<IterateTrace> traces;
  double vanish_tol = 0.0;
  double margin = 0.0;
  long long n_steps = 0;
  std::string note;
};

// t in {1e-3, ..., 1e2}: spans the scales the solver feeds through psi.
inline std::vector<double> default_psi_grid() {
  return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2};
}

namespace detail {

inline void validate_psi_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("psi grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("psi grid must be positive");
    if (i > 0 && !(grid[i - 1] < grid[i]))
      throw std::invalid_argument("psi grid must be strictly ascending");
  }
}

// Grid-level structural checks shared by both membership tests.
inline void structural_checks(const ComparisonFunction& psi, const std::vector<double>& grid,
                              MembershipReport& r) {
  r.is_monotone = true;
  r.psi_below_identity = true;
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = psi.evaluator(grid[i]);
    if (!std::isfinite(v) || v < 0.0) {
      r.is_monotone = false;
      r.psi_below_identity = false;
      r.note += "non-finite or negative value at grid point; ";
      return;
    }
    if (i > 0) {
      const double wiggle =
          4.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(prev), v});
      if (prev > v + wiggle) r.is_monotone = false;
    }
    if (!(v < grid[i])) r.psi_below_identity = false;
    prev = v;
  }
  const double at_zero = psi.evaluator(0.0);
  r.psi_zero_fixed = std::isfinite(at_zero) && std::abs(at_zero) <= 1e-15;
}

}  // namespace detail

// Numeric test of class-M membership: monotone across the grid and
// psi^n_max(t) below vanish_tol on every grid point.  Heuristic by nature --
// a finite run cannot certify a limit -- which is why the report also carries
// the raw traces.
inline MembershipReport check_M(const ComparisonFunction& psi,
                                std::vector<double> t_grid = default_psi_grid(),
                                long long n_max = (1LL << 21), double vanish_tol = 1e-6) {
  detail::validate_psi_grid(t_grid);
  if (n_max < 1) throw std::invalid_argument("check_M: need n_max >= 1");
  MembershipReport r;
  r.psi_label = psi.label;
  r.grid = t_grid;
  r.vanish_tol = vanish_tol;
  r.n_steps = n_max;
  detail::structural_checks(psi, t_grid, r);

  r.iterates_vanish = true;
  for (double t : t_grid) {
    IterateTrace tr;
    tr.t = t;
    double s = t;
    long long n = 0;
    for (; n < n_max; ++n) {
      if (tr.head.size() < 32) tr.head.push_back(s);
      if (s == 0.0) {
        tr.underflowed = true;
        break;
      }
      const double next = psi.evaluator(s);
      if (!std::isfinite(next) || next < 0.0) {
        tr.non_finite = true;
        break;
      }
      s = next;
    }
    tr.final_value = s;
    tr.steps_run = n;
    if (tr.non_finite || !(s < vanish_tol)) r.iterates_vanish = false;
    r.traces.push_back(std::move(tr));
  }
  r.in_M = r.is_monotone && r.iterates_vanish;
  return r;
}

// Numeric test of class-M_b membership.  The limsup of psi^{n+1}(t)/psi^n(t)
// is estimated by the max ratio over the last n_window/2 steps (per grid t,
// then max over the grid).  When iterates underflow to exact zero first, the
// last healthy ratios stand in for the window -- for every builtin family the
// tail ratios have already stabilized by then -- and the closed-form iterate
// is consulted only when no healthy ratio exists at all.  Verdicts within
// `margin` of the 1/b boundary are flagged inconclusive rather than trusted.
inline MembershipReport check_Mb(const ComparisonFunction& psi, double b,
                                 std::vector<double> t_grid = default_psi_grid(),
                                 long long n_window = (1LL << 21), double margin = 1e-6,
                                 double vanish_tol = 1e-6) {
  detail::validate_psi_grid(t_grid);
  if (!(b >= 1.0)) throw std::invalid_argument("check_Mb: need b >= 1");
  if (n_window < 2) throw std::invalid_argument("check_Mb: need n_window >= 2");
  MembershipReport r;
  r.psi_label = psi.label;
  r.grid = t_grid;
  r.vanish_tol = vanish_tol;
  r.margin = margin;
  r.n_steps = n_window;
  r.b = b;
  detail::structural_checks(psi, t_grid, r);

  const long long window = n_window / 2;
  std::vector<double> ring(static_cast<std::size_t>(window));

  r.iterates_vanish = true;
  double estimate = -std::numeric_limits<double>::infinity();
  bool any_ratio = false;
  for (double t : t_grid) {
    IterateTrace tr;
    tr.t = t;
    double s = t;
    long long n = 0;
    long long ratios = 0;
    for (; n < n_window; ++n) {
      if (tr.head.size() < 32) tr.head.push_back(s);
      if (s == 0.0) {
        tr.underflowed = true;
        break;
      }
      const double next = psi.evaluator(s);
      if (!std::isfinite(next) || next < 0.0) {
        tr.non_finite = true;
        break;
      }
      if (next > 0.0) {
        ring[static_cast<std::size_t>(ratios % window)] = next / s;
        ++ratios;
      }
      s = next;
    }
    tr.final_value = s;
    tr.steps_run = n;
    tr.healthy_ratios = ratios;
    if (tr.non_finite || !(s < vanish_tol)) r.iterates_vanish = false;

    if (ratios == 0 && psi.closed_form_iterate) {
      // No usable numeric ratio: fall back to the closed form over the window.
      const auto& cf = *psi.closed_form_iterate;
      for (long long n2 = window; n2 + 1 <= n_window; ++n2) {
        const double a = cf(n2, t);
        const double c = cf(n2 + 1, t);
        if (a > 0.0 && std::isfinite(a) && c >= 0.0 && std::isfinite(c)) {
          ring[static_cast<std::size_t>(ratios % window)] = c / a;
          ++ratios;
        }
      }
      if (ratios > 0) r.note += "closed-form ratios used for t=" + std::to_string(t) + "; ";
      tr.healthy_ratios = ratios;
    }

    if (ratios > 0) {
      const long long kept = std::min(ratios, window);
      double mx = -std::numeric_limits<double>::infinity();
      for (long long i = 0; i < kept; ++i) mx = std::max(mx, ring[static_cast<std::size_t>(i)]);
      tr.max_window_ratio = mx;
      estimate = std::max(estimate, mx);
      any_ratio = true;
      if (tr.underflowed)
        r.note += "underflow at t=" + std::to_string(t) + "; tail ratios used; ";
    }
    r.traces.push_back(std::move(tr));
  }
  r.in_M = r.is_monotone && r.iterates_vanish;

  if (!any_ratio) {
    // Every grid orbit collapsed to exact zero with no positive step: the
    // map annihilates the grid, so the ratio condition is vacuous.
    estimate = 0.0;
    r.note += "no ratio observable (orbits hit zero immediately); ";
  }
  r.ratio_limsup_estimate = estimate;
  r.in_Mb = r.in_M && estimate < 1.0 / b - margin;
  r.inconclusive = std::abs(estimate - 1.0 / b) <= margin;
  return r;
}

}  // namespace supra
