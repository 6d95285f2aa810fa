#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace supra {

// Element of the countable set {0, 1, 1/2, 1/3, 1/4, ...}.
//
// The representation keeps the integer denominator so case analysis on the
// distance below can dispatch on exact integer parity instead of comparing
// floating-point reciprocals.  Encoding: 0 -> the point 0, 1 -> the point 1,
// n >= 2 -> the point 1/n.
class DPoint {
 public:
  static DPoint zero() { return DPoint(0); }
  static DPoint one() { return DPoint(1); }
  static DPoint recip(long long n) {
    if (n < 2) throw std::invalid_argument("DPoint::recip: denominator must be >= 2");
    return DPoint(n);
  }

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  bool is_recip() const { return code_ >= 2; }
  long long denom() const { return code_; }

  // Numeric value: 0, 1, or 1/n.
  double value() const { return code_ == 0 ? 0.0 : 1.0 / static_cast<double>(code_); }

  // Membership in {0} u {1/(2n) : n >= 1}, decided by exact parity.
  bool in_even_tail() const { return code_ == 0 || (code_ >= 2 && code_ % 2 == 0); }

  std::string str() const {
    if (code_ == 0) return "0";
    if (code_ == 1) return "1";
    return "1/" + std::to_string(code_);
  }

  friend bool operator==(DPoint a, DPoint b) { return a.code_ == b.code_; }
  friend bool operator!=(DPoint a, DPoint b) { return a.code_ != b.code_; }
  friend bool operator<(DPoint a, DPoint b) { return a.value() < b.value(); }

 private:
  explicit DPoint(long long code) : code_(code) {}
  long long code_;
};

enum class PointKind { scalar, vector, grid_fn, discrete };

inline const char* to_string(PointKind k) {
  switch (k) {
    case PointKind::scalar: return "scalar";
    case PointKind::vector: return "vector";
    case PointKind::grid_fn: return "grid_fn";
    case PointKind::discrete: return "discrete";
  }
  return "?";
}

// A point of whichever carrier set a distance is defined on: a real scalar,
// a finite-dimensional real vector, a function sampled on a uniform grid over
// [0,1] (only the samples matter; quadrature weights are supplied by the
// distance), or an element of the discrete reciprocal set above.
class Point {
 public:
  static Point scalar(double v) {
    require_finite(v);
    return Point(Storage(std::in_place_index<0>, v));
  }
  static Point vector(std::vector<double> vs) {
    require_entries(vs, "Point::vector");
    return Point(Storage(std::in_place_index<1>, std::move(vs)));
  }
  static Point grid_fn(std::vector<double> vs) {
    require_entries(vs, "Point::grid_fn");
    return Point(Storage(std::in_place_index<2>, std::move(vs)));
  }
  static Point discrete(DPoint p) { return Point(Storage(std::in_place_index<3>, p)); }

  PointKind kind() const { return static_cast<PointKind>(v_.index()); }

  double as_scalar() const {
    require_kind(PointKind::scalar);
    return std::get<0>(v_);
  }
  const std::vector<double>& as_vector() const {
    require_kind(PointKind::vector);
    return std::get<1>(v_);
  }
  const std::vector<double>& as_grid_fn() const {
    require_kind(PointKind::grid_fn);
    return std::get<2>(v_);
  }
  DPoint as_discrete() const {
    require_kind(PointKind::discrete);
    return std::get<3>(v_);
  }

  // Exact representation equality (no tolerance).
  friend bool operator==(const Point& a, const Point& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a.v_ == b.v_); }

  // Arbitrary-but-total order used to canonicalize report output.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    switch (a.kind()) {
      case PointKind::scalar: return a.as_scalar() < b.as_scalar();
      case PointKind::vector: return a.as_vector() < b.as_vector();
      case PointKind::grid_fn: return a.as_grid_fn() < b.as_grid_fn();
      case PointKind::discrete: return a.as_discrete().denom() < b.as_discrete().denom();
    }
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind()) {
      case PointKind::scalar:
        os << as_scalar();
        break;
      case PointKind::vector:
      case PointKind::grid_fn: {
        const auto& vs = kind() == PointKind::vector ? as_vector() : as_grid_fn();
        os << (kind() == PointKind::vector ? "[" : "{");
        for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs[i];
        os << (kind() == PointKind::vector ? "]" : "}");
        break;
      }
      case PointKind::discrete:
        os << as_discrete().str();
        break;
    }
    return os.str();
  }

 private:
  using Storage = std::variant<double, std::vector<double>, std::vector<double>, DPoint>;
  explicit Point(Storage v) : v_(std::move(v)) {}

  static void require_finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("Point: non-finite coordinate");
  }
  static void require_entries(const std::vector<double>& vs, const char* who) {
    if (vs.empty()) throw std::invalid_argument(std::string(who) + ": empty payload");
    for (double v : vs) require_finite(v);
  }
  void require_kind(PointKind k) const {
    if (kind() != k)
      throw std::invalid_argument(std::string("Point: expected ") + to_string(k) + ", have " +
                                  to_string(kind()));
  }

  Storage v_;
};

}  // namespace supra
