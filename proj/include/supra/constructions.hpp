#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "supra/space.hpp"

namespace supra {

// An ordinary metric used as the raw material of the constructions below.
// The evaluator is expected to satisfy the plain triangle inequality.
struct BaseMetric {
  std::function<double(const Point&, const Point&)> eval;
  std::string label;

  // View as a plain distance, e.g. for axiom checks of the metric itself.
  DistanceFn as_distance() const { return {eval, label}; }
};

inline BaseMetric abs_metric() {
  return {[](const Point& x, const Point& y) { return std::abs(x.as_scalar() - y.as_scalar()); },
          "abs"};
}

// Euclidean distance on vectors and grid functions; |x - y| on scalars.
inline BaseMetric euclidean_metric() {
  return {[](const Point& x, const Point& y) {
            if (x.kind() == PointKind::scalar) return std::abs(x.as_scalar() - y.as_scalar());
            const auto& xs = x.kind() == PointKind::vector ? x.as_vector() : x.as_grid_fn();
            const auto& ys = y.kind() == PointKind::vector ? y.as_vector() : y.as_grid_fn();
            if (x.kind() != y.kind() || xs.size() != ys.size())
              throw std::invalid_argument("euclidean: mismatched points");
            double s = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) s += (xs[i] - ys[i]) * (xs[i] - ys[i]);
            return std::sqrt(s);
          },
          "euclid"};
}

enum class ConstructionKind {
  quadratic,          // dm*(a*dm + scale)
  exp_square,         // exp(beta*dm^2) - 1
  exp,                // gamma*(exp(dm) - 1)
  lp,                 // (sum |x_i-y_i|^p)^(1/p), 0 < p < 1
  grid_lp,            // ((1/m) sum |x_i-y_i|^p)^(1/p) on grid functions
  compose_d12,        // d0*(d0+1) with d0 = quadratic(a=1, scale=2)
  compose_lp,         // d0*(d0+1) with d0 = lp(p)
  compose_grid_lp,    // d0*(d0+1) with d0 = grid_lp(p)
  exp_square_compose, // exp(d0^2) - 1 with d0 = exp_square(beta=1)
  compose_other,      // d0*(d0+1) over an arbitrary inner distance
};

inline const char* to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::quadratic: return "quadratic";
    case ConstructionKind::exp_square: return "exp-square";
    case ConstructionKind::exp: return "exp";
    case ConstructionKind::lp: return "lp";
    case ConstructionKind::grid_lp: return "grid-lp";
    case ConstructionKind::compose_d12: return "compose-d12";
    case ConstructionKind::compose_lp: return "compose-lp";
    case ConstructionKind::compose_grid_lp: return "compose-grid-lp";
    case ConstructionKind::exp_square_compose: return "exp-square-compose";
    case ConstructionKind::compose_other: return "compose-other";
  }
  return "?";
}

// Union of the knobs any construction can take; each kind reads its own
// subset.  dim/grid only parameterize the samplers a caller pairs with the
// space, the evaluators accept any consistent size.
struct ConstructionParams {
  double a = 1.0;
  double scale = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double p = 0.5;
  std::size_t dim = 2;
  std::size_t grid = 8;
};

// A distance together with the coefficients it is conventionally declared to
// satisfy.  `declared` is absent when no convention is attached (generic
// composition over an arbitrary inner distance).  Note that a declaration is
// a claim, not a certificate: check_axioms is the arbiter, and two of the
// conventional claims (exp_square and compose_d12, both (1,1)) are refuted
// by it on scalar carriers; estimate_min_params recovers feasible pairs.
struct Construction {
  DistanceFn fn;
  std::optional<SpaceParams> declared;
  ConstructionKind kind = ConstructionKind::compose_other;
  ConstructionParams params;
};

namespace detail {
inline double checked_exp_m1(double t, const char* who) {
  const double v = std::expm1(t);
  if (!std::isfinite(v)) throw std::overflow_error(std::string(who) + ": exp overflow");
  return v;
}
}  // namespace detail

// d = dm*(a*dm + scale).  Conventional coefficients (1, 2a/scale); the
// product term absorbs the cross term of the squared triangle inequality,
// which needs scale >= 1.
inline Construction quadratic_supra(const BaseMetric& dm, double a, double scale) {
  if (!(a > 0.0)) throw std::invalid_argument("quadratic_supra: need a > 0");
  if (!(scale >= 1.0)) throw std::invalid_argument("quadratic_supra: need scale >= 1");
  std::ostringstream label;
  label << "quad(a=" << a << ",scale=" << scale << ")|" << dm.label;
  Construction c;
  c.fn = {[eval = dm.eval, a, scale](const Point& x, const Point& y) {
            const double m = eval(x, y);
            return m * (a * m + scale);
          },
          label.str()};
  c.declared = SpaceParams{1.0, 2.0 * a / scale};
  c.kind = ConstructionKind::quadratic;
  c.params.a = a;
  c.params.scale = scale;
  return c;
}

// d = exp(beta*dm^2) - 1.  The exponent is kept positive so the distance is
// nonnegative and vanishes only on the diagonal.  Conventional coefficients
// (1, 1) -- see the struct note above.
inline Construction exp_square_supra(const BaseMetric& dm, double beta) {
  if (!(beta >= 1.0)) throw std::invalid_argument("exp_square_supra: need beta >= 1");
  std::ostringstream label;
  label << "exp2(beta=" << beta << ")|" << dm.label;
  Construction c;
  c.fn = {[eval = dm.eval, beta](const Point& x, const Point& y) {
            const double m = eval(x, y);
            return detail::checked_exp_m1(beta * m * m, "exp_square_supra");
          },
          label.str()};
  c.declared = SpaceParams{1.0, 1.0};
  c.kind = ConstructionKind::exp_square;
  c.params.beta = beta;
  return c;
}

// d = gamma*(exp(dm) - 1).  Coefficients (1, 1/gamma) hold exactly: the map
// t -> e^t - 1 turns sums into the sum-plus-product combination.
inline Construction exp_supra(const BaseMetric& dm, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("exp_supra: need gamma > 0");
  std::ostringstream label;
  label << "exp(gamma=" << gamma << ")|" << dm.label;
  Construction c;
  c.fn = {[eval = dm.eval, gamma](const Point& x, const Point& y) {
            return gamma * detail::checked_exp_m1(eval(x, y), "exp_supra");
          },
          label.str()};
  c.declared = SpaceParams{1.0, 1.0 / gamma};
  c.kind = ConstructionKind::exp;
  c.params.gamma = gamma;
  return c;
}

// d(x, y) = (sum_i |x_i - y_i|^p)^(1/p) with 0 < p < 1: a b-relaxed metric
// with b = 2^(1/p) and no product term.
inline Construction lp_distance(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("lp_distance: need 0 < p < 1");
  std::ostringstream label;
  label << "l_" << p;
  Construction c;
  c.fn = {[p](const Point& x, const Point& y) {
            const auto& xs = x.as_vector();
            const auto& ys = y.as_vector();
            if (xs.size() != ys.size())
              throw std::invalid_argument("lp_distance: mismatched dimensions");
            double s = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) s += std::pow(std::abs(xs[i] - ys[i]), p);
            return std::pow(s, 1.0 / p);
          },
          label.str()};
  c.declared = SpaceParams{std::pow(2.0, 1.0 / p), 0.0};
  c.kind = ConstructionKind::lp;
  c.params.p = p;
  return c;
}

// Midpoint-quadrature analogue of lp_distance on functions sampled at m
// uniform points of [0,1]:  d = ((1/m) sum_i |x_i - y_i|^p)^(1/p).
inline Construction Lp_distance(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("Lp_distance: need 0 < p < 1");
  std::ostringstream label;
  label << "L_" << p;
  Construction c;
  c.fn = {[p](const Point& x, const Point& y) {
            const auto& xs = x.as_grid_fn();
            const auto& ys = y.as_grid_fn();
            if (xs.size() != ys.size())
              throw std::invalid_argument("Lp_distance: mismatched grids");
            double s = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) s += std::pow(std::abs(xs[i] - ys[i]), p);
            return std::pow(s / static_cast<double>(xs.size()), 1.0 / p);
          },
          label.str()};
  c.declared = SpaceParams{std::pow(2.0, 1.0 / p), 0.0};
  c.kind = ConstructionKind::grid_lp;
  c.params.p = p;
  return c;
}

// d = d0*(d0 + 1) over an existing distance d0.  Conventional coefficients:
// over lp/grid_lp the pair (4^(1/p), 8^(1/p)); over quadratic(a=1, scale=2)
// the pair (1, 1) (refuted empirically, kept as the convention); otherwise
// no declaration is made and estimate_min_params is the tool of choice.
inline Construction compose_quadratic(const Construction& inner) {
  Construction c;
  c.fn = {[eval = inner.fn.eval](const Point& x, const Point& y) {
            const double d0 = eval(x, y);
            return d0 * (d0 + 1.0);
          },
          "quadcomp|" + inner.fn.label};
  c.params = inner.params;
  switch (inner.kind) {
    case ConstructionKind::lp:
      c.kind = ConstructionKind::compose_lp;
      c.declared = SpaceParams{std::pow(4.0, 1.0 / inner.params.p),
                               std::pow(8.0, 1.0 / inner.params.p)};
      break;
    case ConstructionKind::grid_lp:
      c.kind = ConstructionKind::compose_grid_lp;
      c.declared = SpaceParams{std::pow(4.0, 1.0 / inner.params.p),
                               std::pow(8.0, 1.0 / inner.params.p)};
      break;
    case ConstructionKind::quadratic:
      if (inner.params.a == 1.0 && inner.params.scale == 2.0) {
        c.kind = ConstructionKind::compose_d12;
        c.declared = SpaceParams{1.0, 1.0};
      } else {
        c.kind = ConstructionKind::compose_other;
      }
      break;
    default:
      c.kind = ConstructionKind::compose_other;
      break;
  }
  return c;
}

// d = exp(d0^2) - 1 where d0 must be the exp_square distance with beta = 1.
// Conventional coefficients (1, 1) (inherits the exp_square refutation).
inline Construction exp_square_of_supra(const Construction& inner) {
  if (inner.kind != ConstructionKind::exp_square || inner.params.beta != 1.0)
    throw std::invalid_argument(
        "exp_square_of_supra: inner distance must be exp_square with beta = 1");
  Construction c;
  c.fn = {[eval = inner.fn.eval](const Point& x, const Point& y) {
            const double d0 = eval(x, y);
            return detail::checked_exp_m1(d0 * d0, "exp_square_of_supra");
          },
          "exp2comp|" + inner.fn.label};
  c.declared = SpaceParams{1.0, 1.0};
  c.kind = ConstructionKind::exp_square_compose;
  c.params = inner.params;
  return c;
}

// Assemble a construction from its descriptor.  Scalar families run over
// |.| on scalars; lp families over vectors / grid functions.
inline Construction make_construction(ConstructionKind kind, const ConstructionParams& p) {
  switch (kind) {
    case ConstructionKind::quadratic: return quadratic_supra(abs_metric(), p.a, p.scale);
    case ConstructionKind::exp_square: return exp_square_supra(abs_metric(), p.beta);
    case ConstructionKind::exp: return exp_supra(abs_metric(), p.gamma);
    case ConstructionKind::lp: {
      auto c = lp_distance(p.p);
      c.params.dim = p.dim;
      return c;
    }
    case ConstructionKind::grid_lp: {
      auto c = Lp_distance(p.p);
      c.params.grid = p.grid;
      return c;
    }
    case ConstructionKind::compose_d12:
      return compose_quadratic(quadratic_supra(abs_metric(), 1.0, 2.0));
    case ConstructionKind::compose_lp: {
      auto c = compose_quadratic(lp_distance(p.p));
      c.params.dim = p.dim;
      return c;
    }
    case ConstructionKind::compose_grid_lp: {
      auto c = compose_quadratic(Lp_distance(p.p));
      c.params.grid = p.grid;
      return c;
    }
    case ConstructionKind::exp_square_compose:
      return exp_square_of_supra(exp_square_supra(abs_metric(), 1.0));
    case ConstructionKind::compose_other:
      throw std::invalid_argument("make_construction: compose-other has no free-standing form");
  }
  throw std::invalid_argument("make_construction: unknown kind");
}

inline std::optional<ConstructionKind> construction_kind_from_string(const std::string& s) {
  using K = ConstructionKind;
  for (K k : {K::quadratic, K::exp_square, K::exp, K::lp, K::grid_lp, K::compose_d12,
              K::compose_lp, K::compose_grid_lp, K::exp_square_compose})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

}  // namespace supra
