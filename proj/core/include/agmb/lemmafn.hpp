#pragma once

#include <cstddef>
#include <vector>

#include "agmb/elliptic.hpp"

namespace agmb {

// Auxiliary quotients of K and E on (0, sqrt(2)/2) (muLemma on (0,1)). Each is
// strictly monotone with finite endpoint limits, but the raw expressions are
// 0/0 at r=0: below r=5e-3 (eta: 5e-2) a truncated series replaces the direct
// form, and below r=1e-6 the limit itself is returned.

double fLemma(const Modulus& m);    // (1 - pi/(2K))/(1 - r'), increasing onto (1/2, delta1)
double gLemma(const Modulus& m);    // log(pi/(2K))/log(r'), decreasing onto (delta2, 1/2)
double hLemma(const Modulus& m);    // (2 r' K/pi - 1)/(r' - 1), increasing onto (1/2, delta3)
double muLemma(const Modulus& m);   // (2K/pi - 1)/r^2, increasing, mu(0+) = 1/4
double etaLemma(const Modulus& m);  // (pi/(2K) + r^2/4 - 1)/r^4, decreasing onto (*, -5/64)
double xiFunction(const Modulus& m);  // 3[E - r'^2 K] - E, increasing from -pi/2, negative throughout

// Phi_lambda(r) = [sqrt(1 + lambda r r') - sqrt(1 - lambda r r')]/(lambda r),
// computed as 2r'/(sqrt(1 + lambda r r') + sqrt(1 - lambda r r')).
double phi(double lambda, const Modulus& m);

// nu(r) = d4^2 (r^8 - 16 r^6 + 96 r^4 - 256 r^2 + 256) - 64 r^2 - 512 with d4 = delta4.
double nuPoly(double r);

enum class LemmaFn { F, G, H, Mu, Eta, Xi };
enum class Direction { Increasing, Decreasing };

struct MonotoneReport {
  Direction direction;  // the function's known direction, which the samples are held to
  std::size_t grid_size;
  double worst_adjacent_delta;  // least signed progress per step; > 0 iff violations empty
  double endpoint_low;
  double endpoint_high;
  std::vector<std::size_t> violations;  // left index of each adjacent pair that fails strictly
};

// Samples fn on a uniform grid over [lo, hi] and checks strict monotonicity.
MonotoneReport monotoneProbe(LemmaFn fn, double lo, double hi, std::size_t n);

}  // namespace agmb
