#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "supra/point.hpp"

namespace supra {

// Deterministic point generator: same engine state, same point.  All
// randomized checks in the library are driven through one seeded engine so a
// run is reproducible from its seed alone.
using PointSampler = std::function<Point(std::mt19937_64&)>;

inline PointSampler uniform_scalar(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("uniform_scalar: need lo < hi");
  return [lo, hi](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    return Point::scalar(u(rng));
  };
}

inline PointSampler uniform_vector(std::size_t dim, double lo, double hi) {
  if (dim == 0) throw std::invalid_argument("uniform_vector: need dim >= 1");
  if (!(lo < hi)) throw std::invalid_argument("uniform_vector: need lo < hi");
  return [dim, lo, hi](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> vs(dim);
    for (auto& v : vs) v = u(rng);
    return Point::vector(std::move(vs));
  };
}

inline PointSampler uniform_grid_fn(std::size_t m, double lo, double hi) {
  if (m == 0) throw std::invalid_argument("uniform_grid_fn: need m >= 1");
  if (!(lo < hi)) throw std::invalid_argument("uniform_grid_fn: need lo < hi");
  return [m, lo, hi](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> vs(m);
    for (auto& v : vs) v = u(rng);
    return Point::grid_fn(std::move(vs));
  };
}

// Uniform over the first max_index + 1 elements of {0, 1, 1/2, 1/3, ...}.
inline PointSampler uniform_discrete(long long max_index) {
  if (max_index < 1) throw std::invalid_argument("uniform_discrete: need max_index >= 1");
  return [max_index](std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> u(0, max_index);
    const long long code = u(rng);
    if (code == 0) return Point::discrete(DPoint::zero());
    if (code == 1) return Point::discrete(DPoint::one());
    return Point::discrete(DPoint::recip(code));
  };
}

}  // namespace supra
