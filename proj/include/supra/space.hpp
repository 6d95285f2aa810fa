#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "supra/errors.hpp"
#include "supra/point.hpp"

namespace supra {

// Coefficients of the relaxed triangle inequality
//   d(x,y) <= b*(d(x,z) + d(z,y)) + rho*d(x,z)*d(z,y),  b >= 1, rho >= 0.
struct SpaceParams {
  double b = 1.0;
  double rho = 0.0;

  void validate() const {
    if (!(b >= 1.0) || !std::isfinite(b))
      throw std::invalid_argument("SpaceParams: b must be finite and >= 1");
    if (!(rho >= 0.0) || !std::isfinite(rho))
      throw std::invalid_argument("SpaceParams: rho must be finite and >= 0");
  }

  friend bool operator==(const SpaceParams& l, const SpaceParams& r) {
    return l.b == r.b && l.rho == r.rho;
  }
};

// The axiom families a space can be checked against.  The plain-metric-like
// classes are special cases of the general one: a b-relaxed metric is
// (b, 0), a product-relaxed metric is (1, rho), and a semimetric carries no
// triangle axiom at all.
class SpaceClass {
 public:
  enum class Kind { semimetric, b_metric, suprametric, b_suprametric };

  static SpaceClass semimetric() { return SpaceClass(Kind::semimetric, {1.0, 0.0}); }
  static SpaceClass b_metric(double b) { return SpaceClass(Kind::b_metric, {b, 0.0}); }
  static SpaceClass suprametric(double rho) { return SpaceClass(Kind::suprametric, {1.0, rho}); }
  static SpaceClass b_suprametric(double b, double rho) {
    return SpaceClass(Kind::b_suprametric, {b, rho});
  }
  static SpaceClass b_suprametric(SpaceParams p) {
    return SpaceClass(Kind::b_suprametric, p);
  }

  Kind kind() const { return kind_; }
  bool has_triangle() const { return kind_ != Kind::semimetric; }

  // Lossless view of the class as general coefficients.
  SpaceParams params() const { return params_; }

  const char* name() const {
    switch (kind_) {
      case Kind::semimetric: return "semimetric";
      case Kind::b_metric: return "b-metric";
      case Kind::suprametric: return "suprametric";
      case Kind::b_suprametric: return "b-suprametric";
    }
    return "?";
  }

 private:
  SpaceClass(Kind k, SpaceParams p) : kind_(k), params_(p) { params_.validate(); }
  Kind kind_;
  SpaceParams params_;
};

// A symmetric distance evaluator together with a human-readable label.
// Evaluators throw std::invalid_argument on mismatched point kinds and
// std::overflow_error when a value exceeds double range.
struct DistanceFn {
  std::function<double(const Point&, const Point&)> eval;
  std::string label;

  double operator()(const Point& x, const Point& y) const { return eval(x, y); }
};

// Checked evaluation: guarantees a finite, nonnegative result or throws.
inline double distance(const DistanceFn& d, const Point& x, const Point& y) {
  const double v = d.eval(x, y);
  if (!std::isfinite(v))
    throw std::overflow_error("distance '" + d.label + "': non-finite value");
  if (v < 0.0)
    throw std::domain_error("distance '" + d.label + "': negative value");
  return v;
}

// Signed margin of the relaxed triangle inequality on one ordered triple:
//   defect = b*(d(x,z) + d(z,y)) + rho*d(x,z)*d(z,y) - d(x,y).
// Negative values witness a violation.  Degenerate z = x reduces exactly to
// (b - 1)*d(x,y) up to rounding.
inline double triple_defect(const DistanceFn& d, SpaceParams params, const Point& x,
                            const Point& y, const Point& z) {
  params.validate();
  const double dxz = distance(d, x, z);
  const double dzy = distance(d, z, y);
  const double dxy = distance(d, x, y);
  return params.b * (dxz + dzy) + params.rho * dxz * dzy - dxy;
}

}  // namespace supra
