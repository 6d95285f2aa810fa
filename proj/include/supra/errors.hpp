#pragma once

#include <stdexcept>
#include <string>

namespace supra {

// Thrown when an iteration or series is observed to diverge (non-finite
// distance, runaway step, or a term ratio that never drops below 1).
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search bound (iteration cap, exponent cap, index cap) is
// exhausted before the sought object is found.
class cap_exceeded_error : public std::runtime_error {
 public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a constraint system admits no feasible parameter pair.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace supra
