#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "agmb/means.hpp"

namespace agmb {

// Elliptic modulus r in [0,1) with its complement r' = sqrt(1-r^2).
struct Modulus {
  double r;
  double r_prime;

  explicit Modulus(double r_) : r(r_) {
    if (!(r >= 0.0 && r < 1.0))
      throw std::invalid_argument("Modulus: requires 0 <= r < 1");
    r_prime = std::sqrt((1.0 - r) * (1.0 + r));
  }

  // Modulus whose complement sqrt(1-r^2) equals the given value exactly.
  // Rounding r' through r and back loses ~eps/r'^2 of relative precision,
  // so identities that supply the complement must construct it this way.
  static Modulus fromComplement(double r_prime_) {
    if (!(r_prime_ > 0.0 && r_prime_ <= 1.0))
      throw std::invalid_argument("Modulus::fromComplement: requires 0 < r' <= 1");
    Modulus m(std::sqrt((1.0 - r_prime_) * (1.0 + r_prime_)));
    m.r_prime = r_prime_;
    return m;
  }
};

struct AgmTrace {
  int iterations = 0;
  double final_a = 0.0;
  double final_b = 0.0;
  std::vector<double> gap_history;  // |a_n - b_n| from n=0 through the final iterate
};

struct AgmResult {
  double value;
  AgmTrace trace;
};

inline constexpr double kAgmDefaultTol = 4.0 * std::numeric_limits<double>::epsilon();
inline constexpr int kAgmIterationCap = 64;

// Gauss iteration (a,b) <- ((a+b)/2, sqrt(ab)) until |a-b| <= tol*max(a,b).
AgmResult agm(const PositivePair& p, double tol = kAgmDefaultTol);

double ellK(const Modulus& m);  // pi / (2 agm(1, r'))
double ellE(const Modulus& m);  // AGM companion sum: E = K (1 - sum 2^{n-1} c_n^2)

double dK(const Modulus& m);  // (E - r'^2 K)/(r r'^2), r > 0
double dE(const Modulus& m);  // (E - K)/r, r > 0

double landenK(const Modulus& m);  // K(2 sqrt(r)/(1+r))
double landenE(const Modulus& m);  // E(2 sqrt(r)/(1+r))

}  // namespace agmb
