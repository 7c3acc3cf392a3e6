#pragma once

#include <string>
#include <vector>

#include "heatlab/solutions.hpp"

namespace heatlab {

/// A named solution with the cube and curvature bound it is checked on.
struct CorpusEntry {
  HeatSolution u;
  ParabolicCube cube;
  double k = 0.0;
};

/// The analytic check corpus: constant(5), traveling waves a = 1, 2 on
/// [1,3] x [1,2], and the Gaussian kernel in dimensions 1..3 on B(0,1) x
/// [1/2, 1].
std::vector<CorpusEntry> analytic_corpus();

/// analytic_corpus() plus the H^3 kernel fixture (k = 2); the set over which
/// the empirical localized-estimate constant is calibrated.
std::vector<CorpusEntry> ratio_corpus();

/// Lookup by the names used on the command line ("constant", "traveling-wave:a=2",
/// "gaussian:n=3", "hyperbolic3").
CorpusEntry corpus_fixture(const std::string& spec);

}  // namespace heatlab
