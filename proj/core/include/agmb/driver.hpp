#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agmb/elliptic.hpp"
#include "agmb/grid.hpp"
#include "agmb/report.hpp"

namespace agmb {

// Overrides for the theorem suites' bound parameters and the seed for the
// means suite's randomized pairs; the other suites ignore all three.
struct SuiteParams {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::uint64_t seed = 20260816;
};

// Registered suite ids in canonical run order:
//   T31 T32 T33 T34 envelopes c28 lemmas prior identities means
const std::vector<std::string>& suiteRegistry();

// Runs one suite over the grid.  Pair-domain suites (T31-T34, prior) read
// ratio grids directly and derive reference pairs from modulus grids;
// modulus-domain suites (envelopes, c28, lemmas, identities) map pair grids
// through the r-substitution, so either grid kind drives every suite.  The
// means suite draws seeded random pairs and uses the grid only for its count.
// Throws std::invalid_argument for unknown ids or grids a suite cannot use.
SuiteResult runSuite(const std::string& id, const GridSpec& grid, const SuiteParams& params);

// Expands "all", rejects unknown ids, drops duplicates, and runs the suites
// on up to max_threads workers (0 means the hardware count).  Results come
// back in request order.
std::vector<SuiteResult> runSuites(const std::vector<std::string>& ids, const GridSpec& grid,
                                   const SuiteParams& params, unsigned max_threads = 0);

// Envelope margins assembled from the stable theorem-margin forms: equal to
// subtracting kEnvelope/eEnvelope values from K and E, but relative-accurate
// at any r in (0, sqrt(2)/2), where the direct difference loses the sign
// below r ~ 1e-3.
struct EnvelopeMargins {
  double k_lower;  // K - (pi/2) m
  double k_upper;  // (pi/2) M - K
  double e_lower;  // E - pi/(2 M)
  double e_upper;  // pi/(2 sqrt(r') m) - E
};

EnvelopeMargins stableEnvelopeMargins(const Modulus& m);

}  // namespace agmb
