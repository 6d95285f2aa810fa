#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "supra/errors.hpp"
#include "supra/space.hpp"

namespace supra {

// One triple's worth of evidence about feasible (b, rho) pairs:
//   b*S + rho*P >= D   with  S = d(x,z)+d(z,y),  P = d(x,z)*d(z,y),  D = d(x,y).
struct TripleConstraint {
  double S = 0.0;
  double P = 0.0;
  double D = 0.0;
};

inline TripleConstraint make_constraint(const DistanceFn& d, const Point& x, const Point& y,
                                        const Point& z) {
  const double dxz = distance(d, x, z);
  const double dzy = distance(d, z, y);
  return {dxz + dzy, dxz * dzy, distance(d, x, y)};
}

// Exact lower-left boundary of the feasible region
//   { (b, rho) : b >= 1, rho >= 0, b*S_i + rho*P_i >= D_i for all i }.
//
// Every constraint has nonnegative coefficients, so the region is convex and
// upward closed; its Pareto-minimal frontier is the graph of the
// piecewise-linear convex function rho*(b) = max(0, max_i (D_i - b*S_i)/P_i)
// clipped to b >= max(1, hardest vertical bound).  The vertices of that
// polyline are returned sorted by ascending b.  This is a direct 2-D
// half-plane intersection; no iterative solver is involved.
//
// Numerical policy: constraints already satisfied at (1, 0) within 1e-12
// relative slack are dropped (rounding noise from a genuine metric must not
// fabricate vertices), and constraints whose product coefficient is tiny
// relative to the demand are treated as vertical bounds b >= D/S.
//
// Throws infeasible_error when some triple has S = P = 0 but D > 0: both legs
// through z are zero while the endpoints stay apart, so no (b, rho) helps.
inline std::vector<SpaceParams> estimate_min_params(const std::vector<TripleConstraint>& cs) {
  struct Line {
    double S, P, D;  // slanted constraint, P > 0
    double at(double b) const { return (D - b * S) / P; }
    double root() const { return D / S; }  // b where the line crosses rho = 0
  };

  double b_min = 1.0;
  std::vector<Line> lines;
  for (const auto& c : cs) {
    if (!(std::isfinite(c.S) && std::isfinite(c.P) && std::isfinite(c.D)) || c.S < 0.0 ||
        c.P < 0.0 || c.D < 0.0)
      throw std::invalid_argument("estimate_min_params: malformed constraint");
    if (c.S == 0.0 && c.P == 0.0) {
      if (c.D > 0.0)
        throw infeasible_error("estimate_min_params: zero legs with positive span");
      continue;
    }
    // Satisfied everywhere on the domain already.
    if (c.D <= c.S * (1.0 + 1e-12) + 1e-300) continue;
    if (c.P <= 1e-14 * std::max(1.0, c.D)) {
      b_min = std::max(b_min, c.D / c.S);
      continue;
    }
    lines.push_back({c.S, c.P, c.D});
  }

  // Drop lines lying at or below another line on the whole domain b >= b_min:
  // rho-demand (D - b*S)/P is dominated when the other line starts no lower at
  // b_min and falls no faster.  Cheap O(n^2) pass; after the trivial-constraint
  // prune above the interesting line sets are small.
  {
    std::vector<Line> kept;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < lines.size() && !dominated; ++j) {
        if (i == j) continue;
        const double slope_i = lines[i].S / lines[i].P, slope_j = lines[j].S / lines[j].P;
        const double v_i = lines[i].at(b_min), v_j = lines[j].at(b_min);
        const bool below = slope_i >= slope_j && v_i <= v_j;
        const bool duplicate = slope_i == slope_j && v_i == v_j;
        dominated = below && !(duplicate && i < j);
      }
      if (!dominated) kept.push_back(lines[i]);
    }
    lines.swap(kept);
  }

  // Slanted lines that are already nonpositive at b_min never bind.
  std::erase_if(lines, [&](const Line& l) { return l.root() <= b_min; });

  if (lines.empty()) return {SpaceParams{b_min, 0.0}};

  double b_flat = b_min;
  for (const auto& l : lines) b_flat = std::max(b_flat, l.root());

  const auto rho_star = [&](double b) {
    double r = 0.0;
    for (const auto& l : lines) r = std::max(r, l.at(b));
    return r;
  };

  // Candidate breakpoints: domain ends plus pairwise intersections.
  std::vector<double> bs{b_min, b_flat};
  for (const auto& l : lines) {
    const double r = l.root();
    if (r > b_min && r < b_flat) bs.push_back(r);
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double den = lines[i].S / lines[i].P - lines[j].S / lines[j].P;
      if (den == 0.0) continue;
      const double b = (lines[i].D / lines[i].P - lines[j].D / lines[j].P) / den;
      if (std::isfinite(b) && b > b_min && b < b_flat) bs.push_back(b);
    }
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end(),
                       [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }),
           bs.end());

  std::vector<SpaceParams> front;
  for (double b : bs) front.push_back({b, std::max(0.0, rho_star(b))});
  if (!front.empty()) front.back().rho = 0.0;  // exact flat end

  // Remove interior points that sit on a straight segment of the envelope.
  std::vector<SpaceParams> vertices;
  for (const auto& p : front) {
    while (vertices.size() >= 2) {
      const auto& a = vertices[vertices.size() - 2];
      const auto& m = vertices[vertices.size() - 1];
      const double cross = (m.b - a.b) * (p.rho - a.rho) - (p.b - a.b) * (m.rho - a.rho);
      const double scale = std::max({1.0, std::abs(p.b - a.b) * std::abs(p.rho) + 1.0,
                                     std::abs(p.rho - a.rho) * std::abs(p.b) + 1.0});
      if (std::abs(cross) <= 1e-10 * scale)
        vertices.pop_back();
      else
        break;
    }
    vertices.push_back(p);
  }
  return vertices;
}

// Convenience wrapper: build the constraints from ordered point triples.
inline std::vector<SpaceParams> estimate_min_params(
    const DistanceFn& d, const std::vector<std::tuple<Point, Point, Point>>& triples) {
  std::vector<TripleConstraint> cs;
  cs.reserve(triples.size());
  for (const auto& [x, y, z] : triples) cs.push_back(make_constraint(d, x, y, z));
  return estimate_min_params(cs);
}

// True when (b, rho) satisfies every constraint within `slack`.
inline bool feasible(const std::vector<TripleConstraint>& cs, SpaceParams p, double slack = 1e-9) {
  p.validate();
  for (const auto& c : cs)
    if (p.b * c.S + p.rho * c.P < c.D - slack) return false;
  return true;
}

}  // namespace supra
