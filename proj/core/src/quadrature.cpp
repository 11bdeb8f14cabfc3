#include "agmb/quadrature.hpp"

#include <numbers>

namespace agmb {
namespace {

constexpr double kOracleTol = 1e-13;
constexpr int kOracleMaxDepth = 40;
constexpr double kOracleMaxR = 0.999;

void checkOracleRange(const Modulus& m) {
  if (m.r > kOracleMaxR)
    throw std::domain_error("quadrature oracle: r must lie in [0, 0.999]");
}

}  // namespace

double quadK(const Modulus& m) {
  checkOracleRange(m);
  double r2 = m.r * m.r;
  auto f = [r2](double t) {
    double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - r2 * s * s);
  };
  return adaptiveSimpson(f, 0.0, std::numbers::pi / 2.0, kOracleTol, kOracleMaxDepth);
}

double quadE(const Modulus& m) {
  checkOracleRange(m);
  double r2 = m.r * m.r;
  auto f = [r2](double t) {
    double s = std::sin(t);
    return std::sqrt(1.0 - r2 * s * s);
  };
  return adaptiveSimpson(f, 0.0, std::numbers::pi / 2.0, kOracleTol, kOracleMaxDepth);
}

}  // namespace agmb
