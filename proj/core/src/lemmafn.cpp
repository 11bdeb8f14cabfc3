#include "agmb/lemmafn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "agmb/bounds.hpp"

namespace agmb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoot2Over2 = std::numbers::sqrt2 / 2.0;
constexpr double kLimitRadius = 1e-6;
constexpr double kSeriesRadius = 5e-3;
// eta divides by r^4, so the direct form loses digits out to a larger radius.
constexpr double kEtaSeriesRadius = 5e-2;

void requireInterval(const Modulus& m) {
  if (!(m.r > 0.0) || !(m.r < kRoot2Over2))
    throw std::domain_error("lemma function: r must lie in (0, sqrt(2)/2)");
}

}  // namespace

double fLemma(const Modulus& m) {
  requireInterval(m);
  const double r2 = m.r * m.r;
  if (m.r < kLimitRadius) return 0.5;
  if (m.r < kSeriesRadius) return 0.5 + r2 / 32.0 + r2 * r2 / 64.0;
  const double num = 1.0 - kPi / (2.0 * ellK(m));
  const double den = r2 / (1.0 + m.r_prime);  // 1 - r' without cancellation
  return num / den;
}

double gLemma(const Modulus& m) {
  requireInterval(m);
  const double r2 = m.r * m.r;
  if (m.r < kLimitRadius) return 0.5;
  if (m.r < kSeriesRadius) return 0.5 - r2 / 32.0 - r2 * r2 / 64.0;
  const double k = ellK(m);
  const double num = std::log1p((kPi - 2.0 * k) / (2.0 * k));  // log(pi/(2K))
  const double den = 0.5 * std::log1p(-r2);                    // log(r')
  return num / den;
}

double hLemma(const Modulus& m) {
  requireInterval(m);
  const double r2 = m.r * m.r;
  if (m.r < kLimitRadius) return 0.5;
  if (m.r < kSeriesRadius) return 0.5 + 3.0 * r2 / 32.0 + 3.0 * r2 * r2 / 64.0;
  // (2 r' K/pi - 1)/(r' - 1) = (pi - 2 r' K)(1 + r')/(pi r^2)
  return (kPi - 2.0 * m.r_prime * ellK(m)) * (1.0 + m.r_prime) / (kPi * r2);
}

double muLemma(const Modulus& m) {
  if (!(m.r > 0.0)) throw std::domain_error("muLemma: r must lie in (0, 1)");
  const double r2 = m.r * m.r;
  if (m.r < kLimitRadius) return 0.25;
  if (m.r < kSeriesRadius) return 0.25 + 9.0 * r2 / 64.0 + 25.0 * r2 * r2 / 256.0;
  return (2.0 * ellK(m) - kPi) / (kPi * r2);
}

double etaLemma(const Modulus& m) {
  requireInterval(m);
  const double r2 = m.r * m.r;
  if (m.r < kLimitRadius) return -5.0 / 64.0;
  if (m.r < kEtaSeriesRadius)
    return -5.0 / 64.0 - 11.0 * r2 / 256.0 - 469.0 * r2 * r2 / 16384.0 -
           1379.0 * r2 * r2 * r2 / 65536.0;
  return (kPi / (2.0 * ellK(m)) - (1.0 - 0.25 * r2)) / (r2 * r2);
}

double xiFunction(const Modulus& m) {
  requireInterval(m);
  const double rp2 = m.r_prime * m.r_prime;
  return 2.0 * ellE(m) - 3.0 * rp2 * ellK(m);
}

double phi(double lambda, const Modulus& m) {
  if (!(lambda > 0.0) || !(lambda <= 2.0))
    throw std::invalid_argument("phi: lambda must lie in (0, 2]");
  if (!(m.r > 0.0) || !(m.r <= kRoot2Over2))
    throw std::domain_error("phi: r must lie in (0, sqrt(2)/2]");
  // x <= 1 analytically; rounding can overshoot by an ulp at the corner.
  const double x = std::min(lambda * m.r * m.r_prime, 1.0);
  return 2.0 * m.r_prime / (std::sqrt(1.0 + x) + std::sqrt(1.0 - x));
}

double nuPoly(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("nuPoly: r must lie in [0, 1]");
  const double d4 = sharpConstants().delta4;
  const double r2 = r * r;
  const double quartic = (((r2 - 16.0) * r2 + 96.0) * r2 - 256.0) * r2 + 256.0;
  return d4 * d4 * quartic - 64.0 * r2 - 512.0;
}

namespace {

double evalLemma(LemmaFn fn, double r) {
  switch (fn) {
    case LemmaFn::F: return fLemma(Modulus(r));
    case LemmaFn::G: return gLemma(Modulus(r));
    case LemmaFn::H: return hLemma(Modulus(r));
    case LemmaFn::Mu: return muLemma(Modulus(r));
    case LemmaFn::Eta: return etaLemma(Modulus(r));
    case LemmaFn::Xi: return xiFunction(Modulus(r));
  }
  throw std::invalid_argument("monotoneProbe: unknown function id");
}

Direction lemmaDirection(LemmaFn fn) {
  switch (fn) {
    case LemmaFn::F:
    case LemmaFn::H:
    case LemmaFn::Mu:
    case LemmaFn::Xi:
      return Direction::Increasing;
    case LemmaFn::G:
    case LemmaFn::Eta:
      return Direction::Decreasing;
  }
  throw std::invalid_argument("monotoneProbe: unknown function id");
}

}  // namespace

MonotoneReport monotoneProbe(LemmaFn fn, double lo, double hi, std::size_t n) {
  if (n < 16) throw std::invalid_argument("monotoneProbe: need at least 16 samples");
  if (!(lo < hi)) throw std::invalid_argument("monotoneProbe: interval must be nonempty");

  std::vector<double> samples(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i + 1 == n) ? hi : lo + step * static_cast<double>(i);
    samples[i] = evalLemma(fn, r);
  }

  MonotoneReport rep;
  rep.direction = lemmaDirection(fn);
  rep.grid_size = n;
  rep.endpoint_low = samples.front();
  rep.endpoint_high = samples.back();
  rep.worst_adjacent_delta = std::numeric_limits<double>::infinity();
  const double sign = rep.direction == Direction::Increasing ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double delta = sign * (samples[i + 1] - samples[i]);
    rep.worst_adjacent_delta = std::min(rep.worst_adjacent_delta, delta);
    if (!(delta > 0.0)) rep.violations.push_back(i);
  }
  return rep;
}

}  // namespace agmb
