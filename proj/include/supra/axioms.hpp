#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "supra/sampler.hpp"
#include "supra/space.hpp"

namespace supra {

// One recorded axiom failure.  `defect` is the signed margin that fell below
// -tolerance: for the relaxed triangle it is triple_defect(x, y, z); for
// symmetry it is -|d(x,y) - d(y,x)| (recorded with z = y); for the diagonal
// it is -d(x,x) (recorded with y = z = x).  A zero distance between distinct
// sampled points is a hard identity failure, recorded with the most negative
// representable defect.
struct AxiomViolation {
  Point x, y, z;
  double defect;
};

struct AxiomReport {
  std::string label;
  SpaceClass cls = SpaceClass::semimetric();
  SpaceParams params;
  std::size_t samples_checked = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::vector<AxiomViolation> violations;
  // Smallest relaxed-triangle margin seen across all sampled triples,
  // violating or not.  NaN when the class carries no triangle axiom.
  double worst_defect = std::numeric_limits<double>::quiet_NaN();

  bool ok() const { return violations.empty(); }
};

// Randomized axiom check.  Per sample a triple (x, y, z) is drawn and tested
// against the class: identity of indiscernibles on the diagonal and on the
// pair (x, y), symmetry on (x, y), and, unless the class is a semimetric,
// the relaxed triangle inequality on (x, y, z).  Violations are the checks
// whose margin falls below -tolerance, reported in a canonical order
// (ascending margin, then lexicographic points) so equal configurations
// yield byte-identical reports.
inline AxiomReport check_axioms(const DistanceFn& d, SpaceClass cls, const PointSampler& sample,
                                std::size_t n_samples, double tolerance, std::uint64_t seed) {
  if (n_samples == 0) throw std::invalid_argument("check_axioms: need n_samples >= 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("check_axioms: tolerance must be >= 0");

  AxiomReport report;
  report.label = d.label;
  report.cls = cls;
  report.params = cls.params();
  report.samples_checked = n_samples;
  report.tolerance = tolerance;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  bool any_triangle = false;

  for (std::size_t i = 0; i < n_samples; ++i) {
    const Point x = sample(rng);
    const Point y = sample(rng);
    const Point z = sample(rng);

    // Identity: d(x,x) = 0.
    const double dxx = d.eval(x, x);
    if (!(dxx <= tolerance))
      report.violations.push_back({x, x, x, -dxx});

    // Identity: d(x,y) = 0 only when x = y;  nonnegativity and symmetry.
    const double dxy = d.eval(x, y);
    const double dyx = d.eval(y, x);
    if (x != y && !(dxy > 0.0))
      report.violations.push_back({x, y, y, -std::numeric_limits<double>::max()});
    const double asym = -std::abs(dxy - dyx);
    if (asym < -tolerance) report.violations.push_back({x, y, y, asym});

    if (cls.has_triangle()) {
      any_triangle = true;
      const double defect = triple_defect(d, cls.params(), x, y, z);
      worst = std::min(worst, defect);
      if (defect < -tolerance) report.violations.push_back({x, y, z, defect});
    }
  }

  if (any_triangle) report.worst_defect = worst;

  std::sort(report.violations.begin(), report.violations.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) {
              if (a.defect != b.defect) return a.defect < b.defect;
              return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
            });
  return report;
}

}  // namespace supra
