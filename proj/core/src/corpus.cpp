#include "heatlab/corpus.hpp"

#include <cmath>

namespace heatlab {

namespace {

CorpusEntry constant_entry(double c) {
  SolutionParams p;
  p.c = c;
  p.domain = Rect{1.0, 3.0, 1.0, 2.0};
  return {make_closed_form(ClosedFormKind::Constant, ModelManifold::euclidean(1), p),
          ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0), 0.0};
}

CorpusEntry wave_entry(double a) {
  SolutionParams p;
  p.a = a;
  p.domain = Rect{1.0, 3.0, 1.0, 2.0};
  return {make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p),
          ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0), 0.0};
}

CorpusEntry gaussian_entry(int n) {
  SolutionParams p;
  p.domain = n == 1 ? Rect{-1.0, 1.0, 0.25, 2.0} : Rect{0.0, 1.0, 0.25, 2.0};
  return {make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(n), p),
          ParabolicCube(0.0, 1.0, 1.0, 0.5), 0.0};
}

CorpusEntry hyperbolic_entry() {
  SolutionParams p;
  p.domain = Rect{0.4, 3.6, 0.5, 4.0};
  const ModelManifold M = ModelManifold::hyperbolic(3, -1.0);
  return {make_closed_form(ClosedFormKind::Hyperbolic3Kernel, M, p),
          ParabolicCube(2.0, 1.5, 2.0, 1.0), M.ricci_bound()};
}

}  // namespace

std::vector<CorpusEntry> analytic_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back(constant_entry(5.0));
  out.push_back(wave_entry(1.0));
  out.push_back(wave_entry(2.0));
  out.push_back(gaussian_entry(1));
  out.push_back(gaussian_entry(2));
  out.push_back(gaussian_entry(3));
  return out;
}

std::vector<CorpusEntry> ratio_corpus() {
  std::vector<CorpusEntry> out = analytic_corpus();
  out.push_back(hyperbolic_entry());
  return out;
}

CorpusEntry corpus_fixture(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  double param = 0.0;
  bool have_param = false;
  if (colon != std::string::npos) {
    const auto eq = spec.find('=', colon);
    if (eq == std::string::npos)
      throw ConstructionError("fixture parameter must look like key=value: " + spec);
    param = std::stod(spec.substr(eq + 1));
    have_param = true;
  }

  if (kind == "constant") return constant_entry(have_param ? param : 5.0);
  if (kind == "traveling-wave" || kind == "traveling_wave")
    return wave_entry(have_param ? param : 1.0);
  if (kind == "gaussian")
    return gaussian_entry(have_param ? static_cast<int>(param) : 1);
  if (kind == "hyperbolic3") return hyperbolic_entry();
  throw ConstructionError("unknown fixture: " + spec);
}

}  // namespace heatlab
