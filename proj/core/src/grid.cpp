#include "agmb/grid.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace agmb {
namespace {

void requireShape(const GridSpec& g) {
  if (g.count < 2) throw std::invalid_argument("GridSpec: count must be at least 2");
  if (!(g.lo < g.hi)) throw std::invalid_argument("GridSpec: lo must be below hi");
  if (g.kind == GridKind::RatioLog) {
    if (!(g.lo > 1.0)) throw std::invalid_argument("GridSpec: ratios must exceed 1");
  } else {
    if (!(g.lo > 0.0 && g.hi < 1.0))
      throw std::invalid_argument("GridSpec: moduli must lie inside (0, 1)");
  }
}

const char* kindToken(GridKind k) {
  switch (k) {
    case GridKind::RatioLog: return "ratio-log";
    case GridKind::ModulusUniform: return "modulus-uniform";
    case GridKind::ModulusEndpointWeighted: return "modulus-endpoint-weighted";
  }
  throw std::invalid_argument("GridSpec: unknown kind");
}

}  // namespace

GridSpec parseGridSpec(const std::string& text) {
  std::size_t p1 = text.find(':');
  std::size_t p2 = p1 == std::string::npos ? p1 : text.find(':', p1 + 1);
  std::size_t p3 = p2 == std::string::npos ? p2 : text.find(':', p2 + 1);
  if (p3 == std::string::npos || text.find(':', p3 + 1) != std::string::npos)
    throw std::invalid_argument("grid spec must be kind:count:lo:hi");

  GridSpec g;
  const std::string kind = text.substr(0, p1);
  if (kind == "ratio-log") g.kind = GridKind::RatioLog;
  else if (kind == "modulus-uniform") g.kind = GridKind::ModulusUniform;
  else if (kind == "modulus-endpoint-weighted") g.kind = GridKind::ModulusEndpointWeighted;
  else throw std::invalid_argument("unknown grid kind: " + kind);

  try {
    std::size_t used = 0;
    const std::string count = text.substr(p1 + 1, p2 - p1 - 1);
    const long long n = std::stoll(count, &used);
    if (used != count.size() || n < 0) throw std::invalid_argument(count);
    g.count = static_cast<std::size_t>(n);
    const std::string lo = text.substr(p2 + 1, p3 - p2 - 1);
    g.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const std::string hi = text.substr(p3 + 1);
    g.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec must be kind:count:lo:hi with numeric fields");
  }
  requireShape(g);
  return g;
}

std::string describeGrid(const GridSpec& g) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s:%zu:%.17g:%.17g", kindToken(g.kind), g.count, g.lo, g.hi);
  return buf;
}

std::vector<double> makeModuli(const GridSpec& g) {
  requireShape(g);
  if (g.kind == GridKind::RatioLog)
    throw std::invalid_argument("makeModuli: ratio grids enumerate pairs, not moduli");

  std::vector<double> rs;
  rs.reserve(g.count);
  if (g.kind == GridKind::ModulusUniform) {
    const double step = (g.hi - g.lo) / static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i + 1 < g.count; ++i) rs.push_back(g.lo + step * static_cast<double>(i));
    rs.push_back(g.hi);
    return rs;
  }

  // Log-spaced halves growing away from each endpoint; the right half walks
  // distances hi - r down to a 1e-9 fraction of the span.
  const std::size_t n_left = g.count / 2;
  const std::size_t n_right = g.count - n_left;
  const double mid = 0.5 * (g.lo + g.hi);
  const double lratio = std::log(mid / g.lo);
  for (std::size_t i = 0; i < n_left; ++i)
    rs.push_back(g.lo * std::exp(lratio * static_cast<double>(i) / static_cast<double>(n_left)));
  const double d_max = g.hi - mid;
  const double d_min = 1e-9 * (g.hi - g.lo);
  const double dratio = std::log(d_min / d_max);
  for (std::size_t j = 0; j < n_right; ++j) {
    const double t = n_right == 1 ? 1.0
                                  : static_cast<double>(j) / static_cast<double>(n_right - 1);
    rs.push_back(g.hi - d_max * std::exp(dratio * t));
  }
  return rs;
}

PositivePair referencePair(const Modulus& m) {
  const double denom = 1.0 - 2.0 * m.r * m.r;
  if (denom <= 0.0)
    throw std::domain_error("referencePair: modulus must lie below sqrt(2)/2");
  return PositivePair((1.0 + 2.0 * m.r * m.r_prime) / denom, 1.0);
}

std::vector<PositivePair> makePairs(const GridSpec& g) {
  requireShape(g);
  std::vector<PositivePair> out;
  out.reserve(g.count);
  if (g.kind == GridKind::RatioLog) {
    const double llo = std::log(g.lo);
    const double step = (std::log(g.hi) - llo) / static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i + 1 < g.count; ++i)
      out.emplace_back(std::exp(llo + step * static_cast<double>(i)), 1.0);
    out.emplace_back(g.hi, 1.0);
    return out;
  }
  for (double r : makeModuli(g)) out.push_back(referencePair(Modulus(r)));
  return out;
}

}  // namespace agmb
