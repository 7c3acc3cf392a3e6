#include "heatlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "heatlab/acceptance.hpp"
#include "heatlab/corpus.hpp"
#include "heatlab/estimates.hpp"
#include "heatlab/kernelbounds.hpp"
#include "heatlab/liouville.hpp"
#include "heatlab/proofcheck.hpp"
#include "json.hpp"

namespace heatlab::cli {

namespace {

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw ConstructionError("expected a comma-separated list of numbers");
  return out;
}

ParabolicCube parse_cube(const std::string& csv) {
  const auto v = parse_list(csv);
  if (v.size() != 4)
    throw ConstructionError("--cube expects x_lo,x_hi,t_lo,t_hi");
  return ParabolicCube::from_corners(v[0], v[1], v[2], v[3]);
}

// Solution spec grammar: kind[:key=value[,key=value...]], e.g.
// "traveling-wave:a=2", "gaussian:n=3", "constant:c=5", "linear",
// "hyperbolic3", "affine:slope=1,intercept=0", "decaying-sine:amp=0.1".
struct SolutionSpec {
  std::string kind;
  std::map<std::string, double> params;
};

SolutionSpec parse_solution_spec(const std::string& s) {
  SolutionSpec spec;
  const auto colon = s.find(':');
  spec.kind = s.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ConstructionError("solution parameter must look like key=value: " + item);
      spec.params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  return spec;
}

double param_or(const SolutionSpec& s, const std::string& key, double fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : it->second;
}

HeatSolution build_solution(const SolutionSpec& spec, const Rect& domain) {
  SolutionParams p;
  p.domain = domain;
  if (spec.kind == "traveling-wave" || spec.kind == "traveling_wave") {
    p.a = param_or(spec, "a", 1.0);
    return make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
  }
  if (spec.kind == "gaussian") {
    const int n = static_cast<int>(param_or(spec, "n", 1));
    if (n >= 2) p.domain.x_lo = std::max(p.domain.x_lo, 0.0);
    return make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(n), p);
  }
  if (spec.kind == "constant") {
    p.c = param_or(spec, "c", 1.0);
    return make_closed_form(ClosedFormKind::Constant, ModelManifold::euclidean(1), p);
  }
  if (spec.kind == "linear")
    return make_closed_form(ClosedFormKind::Linear, ModelManifold::euclidean(1), p);
  if (spec.kind == "hyperbolic3") {
    p.domain.x_lo = std::max(p.domain.x_lo, kPoleRadius);
    return make_closed_form(ClosedFormKind::Hyperbolic3Kernel,
                            ModelManifold::hyperbolic(3, -1.0), p);
  }
  if (spec.kind == "torus-wave") return make_torus_wave(domain);
  if (spec.kind == "affine")
    return make_eternal_affine(param_or(spec, "slope", 1.0),
                               param_or(spec, "intercept", 0.0), domain);
  if (spec.kind == "decaying-sine")
    return make_decaying_sine(param_or(spec, "amp", 0.1),
                              param_or(spec, "tref", domain.t_lo), domain);
  throw ConstructionError("unknown solution kind: " + spec.kind);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    io::write_text_atomic(out_path, content);
}

// --------------------------------------------------------------------------

struct Options {
  // estimate
  std::string id, solution, cube, out, format = "json";
  double constant = 1.0;
  double k = -1.0;  // -1: take the model's bound
  double c2 = 1.0;
  int nx = 101, nt = 101;
  // sweeps
  std::string a_list = "1,2,4,8,16,32";
  // proof
  std::string fixture;
  int points = 121;
  double cutoff_a = 0.5;
  int cutoff_p = 4;
  // cutoff
  double R = 1.0, T = 1.0;
  // kernel
  std::string model = "euclidean:n=1";
  double delta = 2.0;
  double xi_max = 100.0;
  std::string t_grid;
  std::string sweep_out;
  // liouville
  std::string part = "a";
  std::string radii = "4,16,64";
  double x0 = 0.0, t0 = 0.0;
  std::string time_depth = "literal";
  // shared
  unsigned seed = 0;
};

int cmd_estimate(const Options& o) {
  const ParabolicCube cube = parse_cube(o.cube);
  const SolutionSpec spec = parse_solution_spec(o.solution);
  Rect domain{cube.x_lo(), cube.x_hi(), cube.t_lo(), cube.t_hi()};
  // The instantaneous form compares u at t and 2t.
  if (parse_estimate_id(o.id) == EstimateId::SZ_1_5) domain.t_hi = 2.0 * cube.t_hi();
  const HeatSolution u = build_solution(spec, domain);
  const double k = o.k >= 0.0 ? o.k : u.manifold().ricci_bound();
  const EstimateReport rep =
      report(parse_estimate_id(o.id), u, cube, k, o.constant, {o.nx, o.nt});
  if (o.format == "json")
    emit(o.out, rep.to_json());
  else if (o.format == "csv")
    emit(o.out, rep.to_csv().str());
  else
    throw ConstructionError("--format must be json or csv");
  return kExitOk;
}

int cmd_sharpness(const Options& o) {
  const auto rows = sharpness_scan(parse_list(o.a_list));
  validate_sharpness(rows);
  emit(o.out, sharpness_csv(rows).str());
  return kExitOk;
}

int cmd_hamilton(const Options& o) {
  const auto rows = hamilton_failure_scan(parse_list(o.a_list));
  validate_hamilton_failure(rows);
  emit(o.out, hamilton_failure_csv(rows).str());
  return kExitOk;
}

int cmd_proof(const Options& o) {
  const CorpusEntry e = corpus_fixture(o.fixture);
  const double log_M = e.u.log_sup(e.cube);
  const auto pts = interior_points(e.u, e.cube.half(), o.points, o.seed);

  const double feq = check_f_equation(e.u, log_M, pts);
  const double grad = check_gradient_consistency(e.u, log_M, pts);
  double wid = 0.0;
  for (const auto& [x, t] : pts) wid = std::max(wid, check_w_identity(e.u, log_M, x, t));
  const double key = check_key_inequality(e.u, log_M, e.k, pts);

  const CutoffProfile psi = build_cutoff(e.cube.R, e.cube.T, o.cutoff_a, o.cutoff_p,
                                         e.cube.x0, e.cube.t0);
  CutoffTermTable table = verify_cutoff_terms(e.u, log_M, e.k, psi, 1.0);
  table = verify_cutoff_terms(e.u, log_M, e.k, psi, table.calibrated_c);

  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["fixture"] = e.u.name();
  j["points"] = static_cast<int>(pts.size());
  j["f_equation_max"] = feq;
  j["gradient_consistency_max"] = grad;
  j["w_identity_max"] = wid;
  j["key_inequality_min"] = key;
  j["calibrated_c"] = table.c_used;
  j["final_ratio"] = final_conclusion_ratio(e.u, log_M, e.k, e.cube);
  std::cout << j.dump(2) << "\n";
  if (!o.out.empty()) io::write_text_atomic(o.out, table.csv().str());

  const bool analytic_ok = feq <= 1e-8 && grad <= 1e-8 && wid <= 1e-8 && key >= -1e-8;
  bool slacks_ok = true;
  for (const auto& row : table.rows) slacks_ok = slacks_ok && row.slack >= -1e-8;
  return analytic_ok && slacks_ok ? kExitOk : kExitCheckFailed;
}

int cmd_cutoff(const Options& o) {
  const CutoffProfile psi = build_cutoff(o.R, o.T, o.cutoff_a, o.cutoff_p);
  const auto c1 = psi.measure(201, 201);
  const auto c2 = psi.measure(401, 401);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["R"] = o.R;
  j["T"] = o.T;
  j["a"] = o.cutoff_a;
  j["p"] = o.cutoff_p;
  j["sup_R_dpsi_over_psia"] = c1.r1;
  j["sup_R2_ddpsi_over_psia"] = c1.r2;
  j["sup_T_dtpsi_over_sqrtpsi"] = c1.t1;
  j["sup_R2_gradsq_over_psi32"] = c1.grad_sq;
  j["refined_sup_R_dpsi_over_psia"] = c2.r1;
  j["refined_sup_R2_ddpsi_over_psia"] = c2.r2;
  j["refined_sup_T_dtpsi_over_sqrtpsi"] = c2.t1;
  j["refined_sup_R2_gradsq_over_psi32"] = c2.grad_sq;
  emit(o.out, j.dump(2) + "\n");
  return kExitOk;
}

HeatKernel parse_kernel_model(const std::string& s) {
  const SolutionSpec spec = parse_solution_spec(s);
  if (spec.kind == "euclidean")
    return HeatKernel::euclidean(static_cast<int>(param_or(spec, "n", 1)));
  if (spec.kind == "hyperbolic3") return HeatKernel::hyperbolic3();
  throw ConstructionError("unknown kernel model: " + s);
}

int cmd_kernel(const Options& o) {
  const HeatKernel K = parse_kernel_model(o.model);
  const auto grid = default_xi_grid(o.xi_max);
  std::vector<double> ts;
  if (!o.t_grid.empty())
    ts = parse_list(o.t_grid);
  else if (!K.self_similar())
    ts = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  const auto rep = li_yau_constants(K, o.delta, grid, ts);
  emit(o.out, rep.to_json());
  if (!o.sweep_out.empty())
    io::write_text_atomic(o.sweep_out, kernel_gradient_sweep_csv(K, grid, ts).str());
  return kExitOk;
}

int cmd_liouville(const Options& o) {
  const auto radii = parse_list(o.radii);
  const double r_max = *std::max_element(radii.begin(), radii.end());
  const SolutionSpec spec = parse_solution_spec(o.solution);
  // Domain generous enough for the largest requested window.
  const double depth = std::max(4.0 * r_max * r_max, std::sqrt(2.0 * r_max)) + 1.0;
  Rect domain{o.x0 - 2.0 * r_max - 1.0, o.x0 + 2.0 * r_max + 1.0, o.t0 - depth,
              o.t0 + depth};
  const HeatSolution u = build_solution(spec, domain);

  LiouvilleSweep sweep;
  if (o.part == "a") {
    sweep = gradient_decay_sweep_a(u, o.x0, o.t0, radii, o.constant);
  } else if (o.part == "b") {
    const TimeDepthB td = o.time_depth == "parabolic" ? TimeDepthB::Parabolic
                                                      : TimeDepthB::LiteralSqrt;
    sweep = gradient_decay_sweep_b(u, o.x0, o.t0, radii, o.constant, td);
    if (sweep.max_log_sandwich > std::log(3.0) + 1e-9) {
      std::cerr << "sandwich bound ln(M_U/U) exceeded ln 3\n";
      return kExitCheckFailed;
    }
  } else {
    throw ConstructionError("--part must be a or b");
  }
  emit(o.out, sweep.csv().str());
  return kExitOk;
}

int cmd_accept(const Options& o) {
  const auto results = acceptance::run_all();
  acceptance::print_table(std::cout, results);
  if (!o.out.empty()) io::write_text_atomic(o.out, acceptance::to_json(results));
  return acceptance::all_passed(results) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"heatlab: numerical laboratory for heat-equation gradient estimates"};
  app.require_subcommand(1);
  Options o;

  auto* est = app.add_subcommand("estimate", "evaluate one estimate on one solution");
  est->add_option("--id", o.id, "estimate id (cy11, ly12, ham13, sz14, sz15)")
      ->required();
  est->add_option("--solution", o.solution, "solution spec, e.g. traveling-wave:a=1")
      ->required();
  est->add_option("--cube", o.cube, "x_lo,x_hi,t_lo,t_hi")->required();
  est->add_option("--c", o.constant, "constant in the right-hand side");
  est->add_option("--c2", o.c2, "additive constant of the instantaneous form");
  est->add_option("--k", o.k, "Ricci lower bound (default: the model's)");
  est->add_option("--nx", o.nx, "lattice density in space")->check(CLI::PositiveNumber);
  est->add_option("--nt", o.nt, "lattice density in time")->check(CLI::PositiveNumber);
  est->add_option("--format", o.format, "json or csv");
  est->add_option("--out", o.out, "output path (default stdout)");

  auto* sharp = app.add_subcommand("sharpness", "traveling-wave sharpness sweep");
  sharp->add_option("--a", o.a_list, "comma-separated slopes");
  sharp->add_option("--out", o.out, "output CSV path");

  auto* ham = app.add_subcommand("hamilton-failure",
                                 "bounded-solution estimate failure sweep");
  ham->add_option("--a", o.a_list, "comma-separated slopes");
  ham->add_option("--out", o.out, "output CSV path");

  auto* proof = app.add_subcommand("proof", "identity chain and cutoff term table");
  proof->add_option("--fixture", o.fixture, "corpus fixture spec")->required();
  proof->add_option("--points", o.points, "number of sample points")
      ->check(CLI::PositiveNumber);
  proof->add_option("--seed", o.seed, "sample sequence offset");
  proof->add_option("--out", o.out, "term table CSV path");

  auto* cut = app.add_subcommand("cutoff", "cutoff construction and constants");
  cut->add_option("--R", o.R, "spatial radius")->check(CLI::PositiveNumber);
  cut->add_option("--T", o.T, "time depth")->check(CLI::PositiveNumber);
  cut->add_option("--a", o.cutoff_a, "power-ratio exponent");
  cut->add_option("--p", o.cutoff_p, "polynomial power");
  cut->add_option("--out", o.out, "output JSON path");

  auto* ker = app.add_subcommand("kernel", "two-sided kernel bounds and gradient sup");
  ker->add_option("--model", o.model, "euclidean:n=<dim> or hyperbolic3");
  ker->add_option("--delta", o.delta, "exponent split in (0, 4)");
  ker->add_option("--xi-max", o.xi_max, "largest d^2/t")->check(CLI::PositiveNumber);
  ker->add_option("--t-grid", o.t_grid, "comma-separated times (non-self-similar models)");
  ker->add_option("--out", o.out, "report JSON path");
  ker->add_option("--sweep-out", o.sweep_out, "sweep CSV path");

  auto* liou = app.add_subcommand("liouville", "growth sweeps for eternal solutions");
  liou->add_option("--part", o.part, "a (exponential envelope) or b (sublinear)");
  liou->add_option("--solution", o.solution, "solution spec")->required();
  liou->add_option("--x0", o.x0, "base point");
  liou->add_option("--t0", o.t0, "base time");
  liou->add_option("--radii", o.radii, "comma-separated radii");
  liou->add_option("--c", o.constant, "estimate constant");
  liou->add_option("--time-depth", o.time_depth, "literal or parabolic (part b)");
  liou->add_option("--out", o.out, "output CSV path");

  auto* acc = app.add_subcommand("accept", "run the acceptance suite");
  acc->add_option("--out", o.out, "results JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (est->parsed()) return cmd_estimate(o);
    if (sharp->parsed()) return cmd_sharpness(o);
    if (ham->parsed()) return cmd_hamilton(o);
    if (proof->parsed()) return cmd_proof(o);
    if (cut->parsed()) return cmd_cutoff(o);
    if (ker->parsed()) return cmd_kernel(o);
    if (liou->parsed()) return cmd_liouville(o);
    if (acc->parsed()) return cmd_accept(o);
  } catch (const ConstructionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace heatlab::cli
