#include "agmb/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace agmb {

AgmResult agm(const PositivePair& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("agm: tol must be positive");
  double a = std::max(p.a, p.b), b = std::min(p.a, p.b);
  AgmTrace trace;
  trace.gap_history.push_back(a - b);
  while (a - b > tol * a) {
    if (trace.iterations >= kAgmIterationCap)
      throw std::runtime_error("agm: iteration cap exceeded");
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    if (b > a) std::swap(a, b);  // sqrt rounding can cross the midpoint at convergence
    ++trace.iterations;
    trace.gap_history.push_back(a - b);
  }
  trace.final_a = a;
  trace.final_b = b;
  return {0.5 * (a + b), trace};
}

double ellK(const Modulus& m) {
  return std::numbers::pi / (2.0 * agm(PositivePair(1.0, m.r_prime)).value);
}

double ellE(const Modulus& m) {
  double a = 1.0, b = m.r_prime;
  double sum = 0.5 * m.r * m.r;  // 2^{-1} c_0^2, c_0 = r
  double weight = 0.5;
  while (a - b > kAgmDefaultTol * a) {
    double c = 0.5 * (a - b);
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  double k = std::numbers::pi / (a + b);
  return k * (1.0 - sum);
}

double dK(const Modulus& m) {
  if (m.r == 0.0) throw std::invalid_argument("dK: requires r > 0");
  double rp2 = m.r_prime * m.r_prime;
  return (ellE(m) - rp2 * ellK(m)) / (m.r * rp2);
}

double dE(const Modulus& m) {
  if (m.r == 0.0) throw std::invalid_argument("dE: requires r > 0");
  return (ellE(m) - ellK(m)) / m.r;
}

namespace {

// s = 2 sqrt(r)/(1+r) with its complement via the exact form (1-r)/(1+r);
// recovering s' from rounded s instead would lose ~eps/s'^2 near r -> 1.
Modulus landenModulus(double r) {
  Modulus m(2.0 * std::sqrt(r) / (1.0 + r));
  m.r_prime = (1.0 - r) / (1.0 + r);
  return m;
}

}  // namespace

double landenK(const Modulus& m) { return ellK(landenModulus(m.r)); }

double landenE(const Modulus& m) { return ellE(landenModulus(m.r)); }

}  // namespace agmb
