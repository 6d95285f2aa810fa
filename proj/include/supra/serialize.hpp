#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>

#include <json.hpp>

#include "supra/axioms.hpp"
#include "supra/constructions.hpp"
#include "supra/fixpoint.hpp"
#include "supra/matkowski.hpp"
#include "supra/pareto.hpp"
#include "supra/point.hpp"
#include "supra/space.hpp"

namespace supra {

// Reports keep their field order stable so identical runs serialize to
// identical bytes; nlohmann's ordered_json preserves insertion order.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "supra-fixpoint/1";

// Current wall-clock time as ISO-8601 UTC.  The single nondeterministic
// field of any report; reproducibility comparisons strip it.
inline std::string iso8601_utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

// NaN/inf have no JSON encoding; nlohmann would emit literal null anyway,
// this makes the substitution explicit.
inline json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

inline json to_json(const Point& p) {
  switch (p.kind()) {
    case PointKind::scalar: return p.as_scalar();
    case PointKind::vector: return p.as_vector();
    case PointKind::grid_fn: return json{{"grid", p.as_grid_fn()}};
    case PointKind::discrete: return json{{"discrete", p.as_discrete().str()}};
  }
  return nullptr;
}

inline json to_json(const SpaceParams& p) { return json{{"b", p.b}, {"rho", p.rho}}; }

inline json to_json(const AxiomViolation& v) {
  return json{{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}, {"defect", v.defect}};
}

inline json to_json(const AxiomReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return json{{"label", r.label},
              {"class", r.cls.name()},
              {"params", to_json(r.params)},
              {"samples", r.samples_checked},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"violations", vs},
              {"worst_defect", finite_or_null(r.worst_defect)}};
}

inline json to_json(const Construction& c) {
  json params = json::object();
  switch (c.kind) {
    case ConstructionKind::quadratic:
    case ConstructionKind::compose_d12:
      params["a"] = c.params.a;
      params["scale"] = c.params.scale;
      break;
    case ConstructionKind::exp_square:
    case ConstructionKind::exp_square_compose:
      params["beta"] = c.params.beta;
      break;
    case ConstructionKind::exp:
      params["gamma"] = c.params.gamma;
      break;
    case ConstructionKind::lp:
    case ConstructionKind::compose_lp:
      params["p"] = c.params.p;
      params["dim"] = c.params.dim;
      break;
    case ConstructionKind::grid_lp:
    case ConstructionKind::compose_grid_lp:
      params["p"] = c.params.p;
      params["grid"] = c.params.grid;
      break;
    case ConstructionKind::compose_other:
      break;
  }
  json j{{"kind", to_string(c.kind)}, {"params", params}};
  if (c.declared)
    j["declared"] = to_json(*c.declared);
  else
    j["declared"] = nullptr;
  return j;
}

inline json to_json(const IterateTrace& t) {
  return json{{"t", t.t},
              {"head", t.head},
              {"final_value", t.final_value},
              {"steps_run", t.steps_run},
              {"underflowed", t.underflowed},
              {"non_finite", t.non_finite},
              {"max_window_ratio", finite_or_null(t.max_window_ratio)},
              {"healthy_ratios", t.healthy_ratios}};
}

inline json to_json(const MembershipReport& r) {
  json traces = json::array();
  for (const auto& t : r.traces) traces.push_back(to_json(t));
  json j{{"psi", r.psi_label},
         {"is_monotone", r.is_monotone},
         {"iterates_vanish", r.iterates_vanish},
         {"ratio_limsup_estimate", finite_or_null(r.ratio_limsup_estimate)},
         {"in_M", r.in_M}};
  if (r.b) {
    j["b"] = *r.b;
    j["in_Mb"] = r.in_Mb ? json(*r.in_Mb) : json(nullptr);
  } else {
    j["b"] = nullptr;
    j["in_Mb"] = nullptr;
  }
  j["inconclusive"] = r.inconclusive;
  j["psi_below_identity"] = r.psi_below_identity;
  j["psi_zero_fixed"] = r.psi_zero_fixed;
  j["grid"] = r.grid;
  j["n_steps"] = r.n_steps;
  j["vanish_tol"] = r.vanish_tol;
  j["margin"] = r.margin;
  j["traces"] = traces;
  j["note"] = r.note;
  return j;
}

inline json to_json(const CauchyCertificate& c) {
  return json{{"epsilon", c.epsilon},
              {"q", c.q},
              {"c_q", c.c_q},
              {"threshold", c.threshold},
              {"esp_slack", c.esp_slack},
              {"series_tail", c.series_tail ? json(*c.series_tail) : json(nullptr)}};
}

inline json to_json(const FixedPointResult& r, bool with_trace = false) {
  json j{{"x_star", to_json(r.x_star)},
         {"iterations", r.iterations},
         {"residual", r.residual},
         {"converged", r.converged}};
  if (with_trace) {
    json pts = json::array();
    for (const auto& p : r.trace.points) pts.push_back(to_json(p));
    j["trace"] = json{{"points", pts}, {"step_distances", r.trace.step_distances}};
  }
  return j;
}

inline json to_json(const ContractionViolation& v) {
  return json{{"x", to_json(v.x)},
              {"y", to_json(v.y)},
              {"dxy", v.dxy},
              {"dfxfy", v.dfxfy},
              {"bound", finite_or_null(v.bound)}};
}

inline json to_json(const ContractionReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return json{{"samples", r.samples_checked},
              {"tol", r.tol},
              {"seed", r.seed},
              {"worst_excess", finite_or_null(r.worst_excess)},
              {"violations", vs}};
}

inline json to_json(const InvariantBallReport& r) {
  json es = json::array();
  for (const auto& e : r.escapes)
    es.push_back(json{{"z", to_json(e.z)},
                      {"dist_before", e.dist_before},
                      {"dist_after", e.dist_after}});
  return json{{"refused", r.refused},
              {"refusal_reason", r.refusal_reason},
              {"epsilon", r.epsilon},
              {"q", r.q},
              {"threshold", r.threshold},
              {"p", r.p},
              {"center_index", r.center_index},
              {"samples", r.samples_checked},
              {"seed", r.seed},
              {"escapes", es}};
}

inline json to_json(const UniquenessReport& r) {
  json rs = json::array();
  for (const auto& fr : r.results) rs.push_back(to_json(fr));
  return json{{"tol", r.tol},
              {"all_converged", r.all_converged},
              {"consistent", r.consistent},
              {"inconclusive", r.inconclusive},
              {"max_pairwise", finite_or_null(r.max_pairwise)},
              {"results", rs}};
}

inline json to_json(const std::vector<SpaceParams>& front) {
  json j = json::array();
  for (const auto& p : front) j.push_back(to_json(p));
  return j;
}

}  // namespace supra
