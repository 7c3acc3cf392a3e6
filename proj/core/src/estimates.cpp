#include "heatlab/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace heatlab {

namespace {

constexpr double kTimeIndependenceTol = 1e-8;

void check_consistent_M(double log_u, double log_M) {
  if (log_u > log_M + 1e-12 * std::max(1.0, std::abs(log_M)))
    throw DataError("supplied M is smaller than u on the cube");
}

}  // namespace

std::string to_string(EstimateId id) {
  switch (id) {
    case EstimateId::CY_1_1: return "CY_1_1";
    case EstimateId::LY_1_2: return "LY_1_2";
    case EstimateId::HAM_1_3: return "HAM_1_3";
    case EstimateId::SZ_1_4: return "SZ_1_4";
    case EstimateId::SZ_1_5: return "SZ_1_5";
  }
  return "?";
}

EstimateId parse_estimate_id(const std::string& s) {
  std::string k;
  for (char c : s)
    if (c != '_' && c != '-' && c != '.') k += static_cast<char>(std::tolower(c));
  if (k == "cy11") return EstimateId::CY_1_1;
  if (k == "ly12") return EstimateId::LY_1_2;
  if (k == "ham13") return EstimateId::HAM_1_3;
  if (k == "sz14") return EstimateId::SZ_1_4;
  if (k == "sz15") return EstimateId::SZ_1_5;
  throw ConstructionError("unknown estimate id: " + s);
}

double evaluate_lhs(EstimateId id, const HeatSolution& u, double x, double t) {
  const Jet f = u.log_jet(x, t);
  switch (id) {
    case EstimateId::CY_1_1:
      if (std::abs(f.dt) > kTimeIndependenceTol)
        throw MisuseError("CY_1_1 applies to time-independent solutions only");
      return std::abs(f.dr);
    case EstimateId::LY_1_2:
      return f.dr * f.dr - f.dt;
    case EstimateId::HAM_1_3:
      return f.dr * f.dr;
    case EstimateId::SZ_1_4:
    case EstimateId::SZ_1_5:
      return std::abs(f.dr);
  }
  return 0.0;
}

double evaluate_rhs_with_log_sup(EstimateId id, const HeatSolution& u,
                                 const ParabolicCube& cube, double k, double constant,
                                 double x, double t, double log_M, double c2) {
  switch (id) {
    case EstimateId::CY_1_1:
      return constant * (1.0 / cube.R + std::sqrt(k));
    case EstimateId::LY_1_2:
      return constant * (1.0 / (cube.R * cube.R) + 1.0 / cube.T + k);
    case EstimateId::HAM_1_3: {
      if (t <= 0.0) throw DomainError("HAM_1_3 needs absolute time t > 0");
      const double log_u = u.log_value(x, t);
      check_consistent_M(log_u, log_M);
      return constant * (1.0 / t + 2.0 * k) * (log_M - log_u);
    }
    case EstimateId::SZ_1_4: {
      const double log_u = u.log_value(x, t);
      check_consistent_M(log_u, log_M);
      return constant * (1.0 / cube.R + 1.0 / std::sqrt(cube.T) + std::sqrt(k)) *
             (1.0 + log_M - log_u);
    }
    case EstimateId::SZ_1_5: {
      if (k != 0.0)
        throw MisuseError("SZ_1_5 requires a nonnegative-Ricci model (k = 0)");
      if (t <= 0.0) throw DomainError("SZ_1_5 needs absolute time t > 0");
      if (!u.domain().contains(x, 2.0 * t))
        throw DomainError("SZ_1_5 needs u defined at (x, 2t)");
      const double growth = u.log_value(x, 2.0 * t) - u.log_value(x, t);
      return constant / std::sqrt(t) * (c2 + growth);
    }
  }
  return 0.0;
}

double evaluate_rhs(EstimateId id, const HeatSolution& u, const ParabolicCube& cube,
                    double k, double constant, double x, double t, double c2) {
  const double log_M =
      (id == EstimateId::CY_1_1 || id == EstimateId::LY_1_2 || id == EstimateId::SZ_1_5)
          ? 0.0  // these right-hand sides do not involve M
          : u.log_sup(cube);
  return evaluate_rhs_with_log_sup(id, u, cube, k, constant, x, t, log_M, c2);
}

EstimateReport report(EstimateId id, const HeatSolution& u, const ParabolicCube& cube,
                      double k, double constant, const LatticeSpec& lattice) {
  const double log_M = u.log_sup(cube);

  Rect box = cube_box(u, cube.half());
  if (u.radial()) box.x_lo = std::max(box.x_lo, kPoleRadius);

  if (id == EstimateId::CY_1_1) {
    // Spot-check time independence across the region, not just pointwise.
    for (const auto& [px, pt] : interior_points(u, cube.half(), 9))
      (void)evaluate_lhs(EstimateId::CY_1_1, u, px, pt);
  }

  EstimateReport rep;
  rep.id = id;
  rep.cube = cube;
  rep.k = k;
  rep.constant_used = constant;
  rep.log_M = log_M;
  rep.M_used = std::exp(log_M);

  double best_ratio = -1.0, best_lhs = 0.0;
  for (int m = 0; m < lattice.nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (lattice.nt - 1);
    for (int i = 0; i < lattice.nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (lattice.nx - 1);
      const double lhs = evaluate_lhs(id, u, x, t);
      const double rhs =
          evaluate_rhs_with_log_sup(id, u, cube, k, constant, x, t, log_M);
      if (!(rhs > 0.0))
        throw DataError(to_string(id) + ": right-hand side not positive at a lattice point");
      best_lhs = std::max(best_lhs, lhs);
      const double ratio = lhs / rhs;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        rep.argmax_x = x;
        rep.argmax_t = t;
        rep.rhs = rhs;
      }
    }
  }
  rep.lhs_sup = best_lhs;
  rep.ratio = best_ratio;
  return rep;
}

io::Csv EstimateReport::to_csv() const {
  io::Csv csv;
  csv.header = {"estimate_id", "R", "T", "k", "constant", "lhs_sup", "rhs",
                "ratio", "argmax_r", "argmax_t", "M"};
  csv.add_row({to_string(id), io::fmt(cube.R), io::fmt(cube.T), io::fmt(k),
               io::fmt(constant_used), io::fmt(lhs_sup), io::fmt(rhs), io::fmt(ratio),
               io::fmt(argmax_x), io::fmt(argmax_t), io::fmt(M_used)});
  return csv;
}

std::string EstimateReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["estimate_id"] = to_string(id);
  j["R"] = cube.R;
  j["T"] = cube.T;
  j["k"] = k;
  j["constant"] = constant_used;
  j["lhs_sup"] = lhs_sup;
  j["rhs"] = rhs;
  j["ratio"] = ratio;
  j["argmax_r"] = argmax_x;
  j["argmax_t"] = argmax_t;
  j["M"] = M_used;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Traveling-wave sweeps
// ---------------------------------------------------------------------------

namespace {

HeatSolution sweep_wave(double a) {
  SolutionParams p;
  p.a = a;
  p.domain = Rect{1.0, 3.0, 1.0, 2.0};
  return make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
}

const ParabolicCube kSweepCube = ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0);

void check_increasing(std::span<const double> a) {
  if (a.empty()) throw PreconditionError("sweep needs at least one value");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0.0) throw PreconditionError("sweep values must be positive");
    if (i && a[i] <= a[i - 1]) throw PreconditionError("sweep values must increase");
  }
}

}  // namespace

std::vector<SharpnessRow> sharpness_scan(std::span<const double> a_values) {
  check_increasing(a_values);
  std::vector<SharpnessRow> rows;
  rows.reserve(a_values.size());
  for (double a : a_values) {
    const HeatSolution u = sweep_wave(a);
    SharpnessRow row;
    row.a = a;
    row.lhs = evaluate_lhs(EstimateId::SZ_1_4, u, 2.0, 2.0);
    row.rhs_at_c1 = evaluate_rhs(EstimateId::SZ_1_4, u, kSweepCube, 0.0, 1.0, 2.0, 2.0);
    row.ratio = row.lhs / row.rhs_at_c1;
    rows.push_back(row);
  }
  return rows;
}

void validate_sharpness(const std::vector<SharpnessRow>& rows) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].ratio >= 0.5)
      throw Error("sharpness ratio must stay below its limit 1/2");
    if (i && rows[i].ratio <= rows[i - 1].ratio)
      throw Error("sharpness ratios must increase strictly");
  }
}

io::Csv sharpness_csv(const std::vector<SharpnessRow>& rows) {
  io::Csv csv;
  csv.header = {"a", "lhs", "rhs_at_c1", "ratio"};
  for (const auto& r : rows)
    csv.add_row({io::fmt(r.a), io::fmt(r.lhs), io::fmt(r.rhs_at_c1), io::fmt(r.ratio)});
  return csv;
}

std::vector<HamiltonFailureRow> hamilton_failure_scan(std::span<const double> a_values) {
  check_increasing(a_values);
  std::vector<HamiltonFailureRow> rows;
  rows.reserve(a_values.size());
  for (double a : a_values) {
    const HeatSolution u = sweep_wave(a);
    HamiltonFailureRow row;
    row.a = a;
    const double lhs = evaluate_lhs(EstimateId::HAM_1_3, u, 2.0, 2.0);
    row.lhs_sq = lhs;
    row.ham_rhs = evaluate_rhs(EstimateId::HAM_1_3, u, kSweepCube, 0.0, 1.0, 2.0, 2.0);
    row.ratio = row.lhs_sq / row.ham_rhs;
    rows.push_back(row);
  }
  return rows;
}

void validate_hamilton_failure(const std::vector<HamiltonFailureRow>& rows) {
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].ratio <= rows[i - 1].ratio)
      throw Error("bounded-solution failure ratios must grow strictly");
}

io::Csv hamilton_failure_csv(const std::vector<HamiltonFailureRow>& rows) {
  io::Csv csv;
  csv.header = {"a", "lhs2", "ham_rhs", "ratio"};
  for (const auto& r : rows)
    csv.add_row({io::fmt(r.a), io::fmt(r.lhs_sq), io::fmt(r.ham_rhs), io::fmt(r.ratio)});
  return csv;
}

// ---------------------------------------------------------------------------
// Elliptic-type Harnack comparison
// ---------------------------------------------------------------------------

HarnackResult harnack_theta(const HeatSolution& u, const ParabolicCube& cube, double x,
                            double y, double t, double constant) {
  if (u.manifold().ricci_bound() != 0.0)
    throw MisuseError("harnack_theta requires a nonnegative-Ricci model");
  const double d = std::abs(y - x);
  if (d > std::sqrt(cube.T))
    throw PreconditionError("harnack_theta requires d(x, y) <= sqrt(T)");

  HarnackResult res;
  res.theta = std::exp(-constant * (1.0 / cube.R + 1.0 / std::sqrt(cube.T)) * d);
  res.c = std::exp(res.theta - 1.0);

  const double log_M = u.log_sup(cube);
  const double log_lhs = log_M - u.log_value(y, t);
  const double log_rhs = (res.theta - 1.0) + res.theta * (log_M - u.log_value(x, t));
  res.lhs = std::exp(log_lhs);
  res.rhs = std::exp(log_rhs);
  res.holds = log_lhs >= log_rhs - 1e-9;
  return res;
}

}  // namespace heatlab
