// suprafix: command-line front end for the b-suprametric toolkit.
//
// Exit codes: 0 = success / no violations; 1 = violations, non-convergence,
// or a failed certificate; 2 = usage or configuration error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supra/axioms.hpp"
#include "supra/constructions.hpp"
#include "supra/discrete.hpp"
#include "supra/errors.hpp"
#include "supra/expr.hpp"
#include "supra/fixpoint.hpp"
#include "supra/matkowski.hpp"
#include "supra/pareto.hpp"
#include "supra/sampler.hpp"
#include "supra/serialize.hpp"
#include "supra/space.hpp"

namespace {

using supra::json;

// Flags shared by every subcommand; their defaults are echoed into every
// report's "config" object.
struct CommonOpts {
  std::string out;
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  double tol = 1e-9;
  double step_tol = 1e-12;
  long long max_iter = 100000;
  long long N = 200;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--out", c.out, "Write the JSON report to this path (default: stdout)");
  cmd->add_option("--seed", c.seed, "PRNG seed (default 0)");
  cmd->add_option("--samples", c.samples, "Number of random samples (default 100000)");
  cmd->add_option("--tol", c.tol, "Violation tolerance on defects (default 1e-9)");
  cmd->add_option("--step-tol", c.step_tol, "Picard stopping step distance (default 1e-12)");
  cmd->add_option("--max-iter", c.max_iter, "Picard iteration cap (default 100000)");
  cmd->add_option("--N", c.N, "Discrete-space enumeration bound (default 200)");
}

json base_report(const std::string& command, const CommonOpts& c) {
  json j;
  j["schema"] = supra::kSchemaVersion;
  j["timestamp"] = supra::iso8601_utc_now();
  j["config"] = json{{"command", command}, {"samples", c.samples},   {"seed", c.seed},
                     {"tol", c.tol},       {"step_tol", c.step_tol}, {"max_iter", c.max_iter},
                     {"N", c.N}};
  return j;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out + "'");
  f << text;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string item = s.substr(pos, comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number '" + item + "' in list '" + s + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("malformed number '" + item + "' in list '" + s + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

// Builtin comparison functions by descriptor, else an expression over x.
supra::ComparisonFunction parse_psi(const std::string& s) {
  if (s.rfind("linear:", 0) == 0) {
    const std::string num = s.substr(7);
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(num, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("psi: malformed linear coefficient '" + num + "'");
    }
    if (used != num.size())
      throw std::invalid_argument("psi: malformed linear coefficient '" + num + "'");
    return supra::psi_linear(c);
  }
  if (s == "rational") return supra::psi_rational();
  if (s == "sqrt1p") return supra::psi_sqrt1p();
  auto e = supra::expr::parse(s);  // parse_error -> exit 2
  return {std::function<double(double)>(e), s, std::nullopt};
}

// ---------------------------------------------------------------------------
// verify-space

struct VerifyOpts {
  std::string kind;
  double a = 1.0, scale = 1.0, beta = 1.0, gamma = 1.0, p = 0.5;
  std::size_t dim = 2, grid = 8;
  std::string cls = "declared";
  double b = 1.0, rho = 0.0;
  double lo = -0.9, hi = 0.9;
};

supra::Construction build_construction(const VerifyOpts& o) {
  const auto kind = supra::construction_kind_from_string(o.kind);
  if (!kind) throw std::invalid_argument("unknown construction kind '" + o.kind + "'");
  supra::ConstructionParams cp;
  cp.a = o.a;
  cp.scale = o.scale;
  cp.beta = o.beta;
  cp.gamma = o.gamma;
  cp.p = o.p;
  cp.dim = o.dim;
  cp.grid = o.grid;
  return supra::make_construction(*kind, cp);
}

supra::PointSampler sampler_for(const supra::Construction& con, double lo, double hi) {
  switch (con.kind) {
    case supra::ConstructionKind::lp:
    case supra::ConstructionKind::compose_lp:
      return supra::uniform_vector(con.params.dim, lo, hi);
    case supra::ConstructionKind::grid_lp:
    case supra::ConstructionKind::compose_grid_lp:
      return supra::uniform_grid_fn(con.params.grid, lo, hi);
    default:
      return supra::uniform_scalar(lo, hi);
  }
}

supra::SpaceClass resolve_class(const VerifyOpts& o, const supra::Construction& con) {
  if (o.cls == "declared") {
    if (!con.declared)
      throw std::invalid_argument("construction carries no declared params; pass --class");
    return supra::SpaceClass::b_suprametric(*con.declared);
  }
  if (o.cls == "semimetric") return supra::SpaceClass::semimetric();
  if (o.cls == "b-metric") return supra::SpaceClass::b_metric(o.b);
  if (o.cls == "suprametric") return supra::SpaceClass::suprametric(o.rho);
  if (o.cls == "b-suprametric") return supra::SpaceClass::b_suprametric(o.b, o.rho);
  throw std::invalid_argument("unknown space class '" + o.cls + "'");
}

int run_verify(const VerifyOpts& o, const CommonOpts& c) {
  const auto con = build_construction(o);
  const auto cls = resolve_class(o, con);
  const auto report =
      supra::check_axioms(con.fn, cls, sampler_for(con, o.lo, o.hi), c.samples, c.tol, c.seed);
  json j = base_report("verify-space", c);
  j["config"]["kind"] = o.kind;
  j["config"]["class"] = cls.name();
  j["config"]["lo"] = o.lo;
  j["config"]["hi"] = o.hi;
  j["space"] = supra::to_json(con);
  j["report"] = supra::to_json(report);
  emit(j, c.out);
  return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOpts {
  VerifyOpts space;  // reuses the construction flags
  std::string map;
  std::string psi;
  double x0 = 0.0;
  double epsilon = 1.0;
  long long q_cap = 256;
  std::size_t verify_samples = 10000;
  double lo = -10.0, hi = 10.0;
  bool trace = false;
};

int run_solve(const SolveOpts& o, const CommonOpts& c) {
  const auto con = build_construction(o.space);
  switch (con.kind) {
    case supra::ConstructionKind::lp:
    case supra::ConstructionKind::compose_lp:
    case supra::ConstructionKind::grid_lp:
    case supra::ConstructionKind::compose_grid_lp:
      throw std::invalid_argument("solve supports scalar spaces only");
    default:
      break;
  }
  if (!con.declared)
    throw std::invalid_argument("solve: construction carries no declared params");
  const auto fexpr = supra::expr::parse(o.map);
  const auto psi = parse_psi(o.psi);

  supra::ContractionProblem problem{
      con.fn, *con.declared,
      [fexpr](const supra::Point& x) { return supra::Point::scalar(fexpr(x.as_scalar())); }, psi,
      supra::Point::scalar(o.x0)};

  json j = base_report("solve", c);
  j["config"]["kind"] = o.space.kind;
  j["config"]["map"] = o.map;
  j["config"]["psi"] = psi.label;
  j["config"]["x0"] = o.x0;
  j["config"]["epsilon"] = o.epsilon;
  j["config"]["verify_samples"] = o.verify_samples;
  j["config"]["lo"] = o.lo;
  j["config"]["hi"] = o.hi;
  j["space"] = supra::to_json(con);

  const auto contraction = supra::verify_contraction(
      problem, supra::uniform_scalar(o.lo, o.hi), o.verify_samples, c.tol, c.seed);
  j["contraction"] = supra::to_json(contraction);

  const auto result = supra::picard(problem, c.max_iter, c.step_tol);
  j["result"] = supra::to_json(result, o.trace);

  supra::CauchyCertificate cert;
  try {
    cert = supra::q_threshold(psi, *con.declared, o.epsilon, o.q_cap);
    const double d0 =
        result.trace.step_distances.empty() ? 0.0 : result.trace.step_distances.front();
    try {
      cert.series_tail = supra::series_bound(*con.declared, psi, d0, 0);
    } catch (const supra::divergence_error& e) {
      j["series_tail_error"] = e.what();
    }
    j["result"]["certificate"] = supra::to_json(cert);
  } catch (const supra::cap_exceeded_error& e) {
    j["result"]["certificate"] = nullptr;
    j["certificate_error"] = e.what();
  }

  emit(j, c.out);
  return (result.converged && contraction.ok()) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
  std::string psi;
  double b = 1.0, rho = 0.0;
  double epsilon = 1.0;
  long long q_cap = 256;
  double d0 = -1.0;  // < 0: no series tail requested
  long long p_start = 0;
};

int run_certify(const CertifyOpts& o, const CommonOpts& c) {
  const auto psi = parse_psi(o.psi);
  const supra::SpaceParams params{o.b, o.rho};
  json j = base_report("certify", c);
  j["config"]["psi"] = psi.label;
  j["config"]["b"] = o.b;
  j["config"]["rho"] = o.rho;
  j["config"]["epsilon"] = o.epsilon;
  j["config"]["q_cap"] = o.q_cap;
  j["params"] = supra::to_json(params);

  auto cert = supra::q_threshold(psi, params, o.epsilon, o.q_cap);  // cap_exceeded -> exit 1
  int code = 0;
  if (o.d0 >= 0.0) {
    j["config"]["d0"] = o.d0;
    j["config"]["p"] = o.p_start;
    try {
      cert.series_tail = supra::series_bound(params, psi, o.d0, o.p_start);
    } catch (const supra::divergence_error& e) {
      j["series_error"] = e.what();
      code = 1;
    }
  }
  j["certificate"] = supra::to_json(cert);
  emit(j, c.out);
  return code;
}

// ---------------------------------------------------------------------------
// psi-check

struct PsiCheckOpts {
  std::string psi;
  double b = 0.0;  // 0: class M only
  long long n_window = 1LL << 21;
  double margin = 1e-6;
  double vanish_tol = 1e-6;
  std::string grid;
};

int run_psi_check(const PsiCheckOpts& o, const CommonOpts& c) {
  const auto psi = parse_psi(o.psi);
  const auto grid = o.grid.empty() ? supra::default_psi_grid() : parse_list(o.grid);
  json j = base_report("psi-check", c);
  j["config"]["psi"] = psi.label;
  j["config"]["n_window"] = o.n_window;
  j["config"]["margin"] = o.margin;
  j["config"]["vanish_tol"] = o.vanish_tol;

  supra::MembershipReport report;
  if (o.b > 0.0) {
    j["config"]["b"] = o.b;
    report = supra::check_Mb(psi, o.b, grid, o.n_window, o.margin, o.vanish_tol);
  } else {
    report = supra::check_M(psi, grid, o.n_window, o.vanish_tol);
  }
  j["report"] = supra::to_json(report);
  emit(j, c.out);
  const bool pass = o.b > 0.0 ? report.in_Mb.value_or(false) : report.in_M;
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// demo-discrete

struct DemoOpts {
  long long ball_N = 1000;
  std::size_t lemma_samples = 100000;
};

int run_demo(const DemoOpts& o, const CommonOpts& c) {
  namespace dd = supra::discrete;
  json j = base_report("demo-discrete", c);
  j["config"]["ball_N"] = o.ball_N;
  j["config"]["lemma_samples"] = o.lemma_samples;
  bool all_good = true;

  // Exhaustive relaxed-triangle verification at (3/2, 7).
  const auto exhaustive = dd::verify_inequality_exhaustive(c.N);
  json ex = supra::to_json(exhaustive);
  j["exhaustive"] = json{{"N", c.N},
                         {"params", supra::to_json(exhaustive.params)},
                         {"violations", ex["violations"]},
                         {"worst_defect", ex["worst_defect"]}};
  all_good = all_good && exhaustive.ok();

  // The ball of radius 9/40 around 1 contains exactly {0, 1}.
  const double radius = 9.0 / 40.0;
  const auto members = dd::ball(supra::DPoint::one(), radius, o.ball_N);
  json ms = json::array();
  for (const auto& m : members) ms.push_back(m.str());
  j["ball"] = json{{"center", "1"}, {"radius", radius}, {"N", o.ball_N}, {"members", ms}};
  all_good = all_good && members.size() == 2 && members[0] == supra::DPoint::zero() &&
             members[1] == supra::DPoint::one();

  // For every r on a log grid, some tail point lies within r of 0 yet stays
  // 1/4 away from 1: no ball around 0 fits inside B(1, 9/40).
  json witnesses = json::array();
  for (int k = 0; k <= 24; ++k) {
    const double r = std::pow(10.0, -6.0 + 6.0 * k / 24.0);
    // 1 - e^(-1/m) < r needs m > 1/(-log1p(-r)): bound the enumeration just past it.
    const long long enough =
        r < 1.0 ? static_cast<long long>(1.0 / -std::log1p(-r)) + 3 : 2;
    const auto w = dd::non_open_witness(r, std::max<long long>(enough, c.N));
    witnesses.push_back(json{{"r", r}, {"witness", w ? json(w->str()) : json(nullptr)}});
    all_good = all_good && w.has_value();
  }
  j["non_open"] = witnesses;

  // d(0, 1/2n) vanishes as n grows while d(1, 1/2n) is pinned at 1/4, yet
  // d(1, 0) = 1/5: the distance is not continuous.
  const auto probe = dd::discontinuity_check(c.N);
  j["discontinuity"] = json{{"N", c.N},
                            {"near_zero", probe.near_zero},
                            {"near_one", probe.near_one},
                            {"at_zero_one", probe.at_zero_one}};
  all_good = all_good && probe.near_zero < 1e-2 && probe.near_one == 0.25 &&
             probe.at_zero_one == 0.2;

  // The six exponential inequalities, sampled over (s, t) in (0, 10]^2 and
  // b in {1, 3/2, 5}.
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(1e-12, 10.0);
  const double bs[] = {1.0, 1.5, 5.0};
  std::size_t failures = 0;
  for (std::size_t i = 0; i < o.lemma_samples; ++i) {
    const double s = u(rng), t = u(rng);
    if (!dd::lemma_check(s, t, bs[i % 3]).all()) ++failures;
  }
  j["lemma"] = json{{"samples", o.lemma_samples}, {"failures", failures}};
  all_good = all_good && failures == 0;

  emit(j, c.out);
  return all_good ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOpts {
  double b = 1.0, rho = 0.0;
  std::string ds;
  std::string psi;
  double d0 = 1.0;
  long long p_start = 0;
  std::string q = "inf";
  std::string four_point;
  double epsilon = 1.0;
};

int run_bounds(const BoundsOpts& o, const CommonOpts& c) {
  const supra::SpaceParams params{o.b, o.rho};
  params.validate();
  json j = base_report("bounds", c);
  j["config"]["b"] = o.b;
  j["config"]["rho"] = o.rho;
  j["params"] = supra::to_json(params);
  int code = 0;
  bool any = false;

  if (!o.ds.empty()) {
    any = true;
    const auto ds = parse_list(o.ds);
    j["chain"] = json{{"ds", ds},
                      {"chain_bound", supra::chain_bound(params, ds)},
                      {"esp_bound", supra::esp_bound(params, ds)}};
  }
  if (!o.psi.empty()) {
    any = true;
    const auto psi = parse_psi(o.psi);
    std::optional<long long> q;
    if (o.q != "inf") {
      try {
        q = std::stoll(o.q);
      } catch (const std::exception&) {
        throw std::invalid_argument("bounds: --q must be an integer or 'inf'");
      }
    }
    json s{{"psi", psi.label}, {"d0", o.d0}, {"p", o.p_start}, {"q", q ? json(*q) : json("inf")}};
    try {
      s["value"] = supra::series_bound(params, psi, o.d0, o.p_start, q);
    } catch (const supra::divergence_error& e) {
      s["value"] = nullptr;
      s["error"] = e.what();
      code = 1;
    }
    j["series"] = s;
  }
  if (!o.four_point.empty()) {
    any = true;
    const auto us = parse_list(o.four_point);
    if (us.size() != 4)
      throw std::invalid_argument("bounds: --four-point needs exactly four values");
    j["four_point"] = json{
        {"u", us},
        {"expansion", supra::four_point_expansion(params, us[0], us[1], us[2], us[3])},
        {"epsilon", o.epsilon},
        {"simplified", supra::four_point_simplified(params, o.epsilon)}};
  }
  if (!any)
    throw std::invalid_argument("bounds: nothing requested; pass --ds, --psi, or --four-point");
  emit(j, c.out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "suprafix: b-suprametric spaces, comparison functions, and a Picard\n"
      "fixed-point solver with proof-derived convergence certificates.\n"
      "Defaults echoed in every report: samples=100000, seed=0,\n"
      "step-tol=1e-12, N=200.  Exit codes: 0 ok, 1 findings, 2 usage."};
  app.require_subcommand(1);

  CommonOpts common;

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify-space", "Randomized axiom check of a construction");
  add_common(verify, common);
  verify->add_option("--kind", vo.kind, "Construction kind: quadratic, exp-square, exp, lp, grid-lp, compose-d12, compose-lp, compose-grid-lp, exp-square-compose")->required();
  verify->add_option("--a", vo.a, "Quadratic coefficient a > 0 (default 1)");
  verify->add_option("--scale", vo.scale, "Quadratic linear coefficient >= 1 (default 1)");
  verify->add_option("--beta", vo.beta, "exp-square exponent coefficient >= 1 (default 1)");
  verify->add_option("--gamma", vo.gamma, "exp scale > 0 (default 1)");
  verify->add_option("--p", vo.p, "lp exponent in (0,1) (default 0.5)");
  verify->add_option("--dim", vo.dim, "Vector dimension for lp (default 2)");
  verify->add_option("--grid-n", vo.grid, "Grid size for grid-lp (default 8)");
  verify->add_option("--class", vo.cls, "Axiom class: declared (default), semimetric, b-metric, suprametric, b-suprametric");
  verify->add_option("--b", vo.b, "b coefficient for explicit --class (default 1)");
  verify->add_option("--rho", vo.rho, "rho coefficient for explicit --class (default 0)");
  verify->add_option("--lo", vo.lo, "Sampling box lower bound (default -0.9, safe for every kind)");
  verify->add_option("--hi", vo.hi, "Sampling box upper bound (default 0.9)");

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "Picard iteration with a convergence certificate");
  add_common(solve, common);
  solve->add_option("--kind", so.space.kind, "Scalar construction kind (default quadratic)")
      ->default_val("quadratic");
  solve->add_option("--a", so.space.a, "Quadratic coefficient a (default 1)");
  solve->add_option("--scale", so.space.scale, "Quadratic linear coefficient (default 1)");
  solve->add_option("--beta", so.space.beta, "exp-square coefficient (default 1)");
  solve->add_option("--gamma", so.space.gamma, "exp scale (default 1)");
  solve->add_option("--map", so.map, "Self-map as an expression over x, e.g. \"x/2+1\"")
      ->required();
  solve->add_option("--psi", so.psi, "Comparison function: linear:c, rational, sqrt1p, or an expression over x")->required();
  solve->add_option("--x0", so.x0, "Starting point (default 0)");
  solve->add_option("--epsilon", so.epsilon, "Certificate epsilon (default 1)");
  solve->add_option("--q-cap", so.q_cap, "Certificate q search cap (default 256)");
  solve->add_option("--verify-samples", so.verify_samples, "Contraction spot-check pairs (default 10000)");
  solve->add_option("--lo", so.lo, "Contraction sampling box lower bound (default -10)");
  solve->add_option("--hi", so.hi, "Contraction sampling box upper bound (default 10)");
  solve->add_flag("--trace", so.trace, "Embed the full iterate trace in the report");

  CertifyOpts co;
  auto* certify = app.add_subcommand("certify", "Cauchy certificate for (psi, b, rho, epsilon)");
  add_common(certify, common);
  certify->add_option("--psi", co.psi, "Comparison function descriptor")->required();
  certify->add_option("--b", co.b, "Space coefficient b >= 1 (default 1)");
  certify->add_option("--rho", co.rho, "Space coefficient rho >= 0 (default 0)");
  certify->add_option("--epsilon", co.epsilon, "Target epsilon (default 1)");
  certify->add_option("--q-cap", co.q_cap, "q search cap (default 256)");
  certify->add_option("--d0", co.d0, "Initial step distance: adds the infinite series tail");
  certify->add_option("--p-start", co.p_start, "Series start index (default 0)");

  PsiCheckOpts po;
  auto* psicheck = app.add_subcommand("psi-check", "Matkowski class membership (M, and M_b with --b)");
  add_common(psicheck, common);
  psicheck->add_option("--psi", po.psi, "Comparison function descriptor")->required();
  psicheck->add_option("--b", po.b, "Check membership in M_b for this b >= 1");
  psicheck->add_option("--n-window", po.n_window, "Iteration window (default 2^21)");
  psicheck->add_option("--margin", po.margin, "Inconclusive margin around 1/b (default 1e-6)");
  psicheck->add_option("--vanish-tol", po.vanish_tol, "Iterate vanishing tolerance (default 1e-6)");
  psicheck->add_option("--grid", po.grid, "Comma-separated t grid (default 1e-3..1e2)");

  DemoOpts dopts;
  auto* demo = app.add_subcommand("demo-discrete", "Pathology report for the discrete example space");
  add_common(demo, common);
  demo->add_option("--ball-N", dopts.ball_N, "Enumeration bound for the ball check (default 1000)");
  demo->add_option("--lemma-samples", dopts.lemma_samples, "Samples for the lemma sweep (default 100000)");

  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "Chain, symmetric-polynomial, series, and four-point bounds");
  add_common(bounds, common);
  bounds->add_option("--b", bo.b, "Space coefficient b >= 1 (default 1)");
  bounds->add_option("--rho", bo.rho, "Space coefficient rho >= 0 (default 0)");
  bounds->add_option("--ds", bo.ds, "Comma-separated chain distances");
  bounds->add_option("--psi", bo.psi, "Comparison function for the series bound");
  bounds->add_option("--d0", bo.d0, "Series initial distance (default 1)");
  bounds->add_option("--p-start", bo.p_start, "Series start index (default 0)");
  bounds->add_option("--q", bo.q, "Series end index or 'inf' (default inf)");
  bounds->add_option("--four-point", bo.four_point, "Four comma-separated u values");
  bounds->add_option("--epsilon", bo.epsilon, "Four-point epsilon (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
  }

  try {
    if (verify->parsed()) return run_verify(vo, common);
    if (solve->parsed()) return run_solve(so, common);
    if (certify->parsed()) return run_certify(co, common);
    if (psicheck->parsed()) return run_psi_check(po, common);
    if (demo->parsed()) return run_demo(dopts, common);
    if (bounds->parsed()) return run_bounds(bo, common);
  } catch (const supra::expr::parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const supra::divergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const supra::cap_exceeded_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const supra::infeasible_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::overflow_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
