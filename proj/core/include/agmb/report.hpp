#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "agmb/bounds.hpp"

namespace agmb {

// One suite's outcome, merged over its constituent reports: violations
// concatenate, min_margin is the minimum across them, and n_points is the
// largest per-report point count (reports of one suite share a grid).
struct SuiteResult {
  std::string suite;
  std::string grid;
  std::map<std::string, double> params;
  double min_margin = 0.0;
  std::size_t n_points = 0;
  std::vector<ViolationPoint> violations;
  double runtime_ms = 0.0;
};

SuiteResult mergeSuite(std::string suite, std::string grid, std::map<std::string, double> params,
                       const std::vector<VerificationReport>& reports, double runtime_ms);

// JSON array of {suite, grid, params, min_margin, n_points,
// violations:[{a,b,r,margin}], runtime_ms}.  Doubles are written with 17
// significant digits, so parsing the text back reproduces every value
// bit-exactly.  Throws std::invalid_argument on non-finite values (toJson)
// or malformed text (fromJson).
std::string toJson(const std::vector<SuiteResult>& results);
std::vector<SuiteResult> fromJson(const std::string& text);

// suite,grid,min_margin,n_points,n_violations,runtime_ms -- plain RFC 4180,
// no field needs quoting.
std::string toCsv(const std::vector<SuiteResult>& results);

// Aligned human-readable summary, one line per suite plus the first few
// violation points of any suite that failed.
std::string toPlain(const std::vector<SuiteResult>& results);

}  // namespace agmb
