#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "agmb/elliptic.hpp"
#include "agmb/means.hpp"

namespace agmb {

enum class GridKind { RatioLog, ModulusUniform, ModulusEndpointWeighted };

// Evaluation grid, either over pair ratios b/a or over the modulus r.
//   RatioLog                 ratios log-spaced in [lo, hi], lo > 1
//   ModulusUniform           r equispaced in [lo, hi], 0 < lo < hi < 1
//   ModulusEndpointWeighted  r log-concentrated toward both lo and hi
struct GridSpec {
  GridKind kind;
  std::size_t count = 0;  // >= 2
  double lo = 0.0;
  double hi = 0.0;
};

// "kind:count:lo:hi" with kind one of ratio-log, modulus-uniform,
// modulus-endpoint-weighted, e.g. "ratio-log:10000:1.000001:1e6".
GridSpec parseGridSpec(const std::string& text);
std::string describeGrid(const GridSpec& g);

// Moduli enumerated by a modulus-kind grid; rejects RatioLog.
std::vector<double> makeModuli(const GridSpec& g);

// The pair (a, 1) whose Q/C substitution modulus is r: a = (1 + 2 r r')/(1 - 2 r^2).
PositivePair referencePair(const Modulus& m);

// Pairs enumerated by the grid: (ratio, 1) for RatioLog, referencePair(r)
// for the modulus kinds.
std::vector<PositivePair> makePairs(const GridSpec& g);

}  // namespace agmb
