#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "agmb/bounds.hpp"
#include "agmb/lemmafn.hpp"
#include "doctest.h"

namespace {

using namespace agmb;

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = std::numbers::sqrt2 / 2.0;

// mpmath, 25 digits
constexpr double kDelta1 = 0.521647158049544668148768;
constexpr double kDelta2 = 0.4784064473238385562554693;
constexpr double kDelta3 = 0.5646192800088524501934913;
constexpr double kEtaHalf = -0.1111476608240836535740035;
constexpr double kXiHalf = -0.07982425385670687261042605;
constexpr double kNu3350 = 5.958864340492822225676268;
constexpr double kF03 = 0.5029471745940755616532590;
constexpr double kG05 = 0.4910147734875250179384771;
constexpr double kH04 = 0.5163398097273783010663586;
constexpr double kMu05 = 0.2927280285974575002113668;
constexpr double kEta05 = -0.0910657340408276611544878;
constexpr double kXi03 = -1.320305802563801864168869;
constexpr double kPhiD405 = 0.9667534157587362610149585;
constexpr double kPhiRt205 = 0.9152717300515845540200643;

double relDiff(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

TEST_CASE("lemma quotients match frozen mid-interval values") {
  CHECK(relDiff(fLemma(Modulus(0.3)), kF03) <= 1e-13);
  CHECK(relDiff(gLemma(Modulus(0.5)), kG05) <= 1e-13);
  CHECK(relDiff(hLemma(Modulus(0.4)), kH04) <= 1e-13);
  CHECK(relDiff(muLemma(Modulus(0.5)), kMu05) <= 1e-13);
  CHECK(relDiff(etaLemma(Modulus(0.5)), kEta05) <= 1e-13);
  CHECK(relDiff(xiFunction(Modulus(0.3)), kXi03) <= 1e-13);
}

TEST_CASE("series-protected zone joins the direct quotients") {
  // Recompute each quotient naively from K on both sides of the series switch;
  // the naive forms carry the cancellation noise, so tolerances are absolute.
  for (double r : {4e-3, 4.99e-3, 5.01e-3, 7e-3, 1e-2}) {
    const Modulus m(r);
    const double k = ellK(m);
    const double rp = m.r_prime;
    const double naiveF = (1.0 - kPi / (2.0 * k)) / (1.0 - rp);
    const double naiveG = std::log(kPi / (2.0 * k)) / std::log(rp);
    const double naiveH = (2.0 * rp * k / kPi - 1.0) / (rp - 1.0);
    const double naiveMu = (2.0 * k / kPi - 1.0) / (r * r);
    CHECK(std::abs(fLemma(m) - naiveF) <= 1e-9);
    CHECK(std::abs(gLemma(m) - naiveG) <= 1e-9);
    CHECK(std::abs(hLemma(m) - naiveH) <= 1e-9);
    CHECK(std::abs(muLemma(m) - naiveMu) <= 1e-9);
  }
  for (double r : {0.02, 0.049, 0.051, 0.08}) {
    const Modulus m(r);
    const double naiveEta = (kPi / (2.0 * ellK(m)) + r * r / 4.0 - 1.0) / (r * r * r * r);
    CHECK(std::abs(etaLemma(m) - naiveEta) <= 1e-8);
  }
}

TEST_CASE("limits at the interval ends") {
  CHECK(fLemma(Modulus(1e-9)) == 0.5);
  CHECK(gLemma(Modulus(1e-9)) == 0.5);
  CHECK(hLemma(Modulus(1e-9)) == 0.5);
  CHECK(muLemma(Modulus(1e-9)) == 0.25);
  CHECK(etaLemma(Modulus(1e-9)) == -5.0 / 64.0);
  CHECK(std::abs(xiFunction(Modulus(1e-9)) - (-kPi / 2.0)) <= 1e-12);

  CHECK(std::abs(fLemma(Modulus(kHalf - 1e-9)) - kDelta1) <= 1e-8);
  CHECK(std::abs(gLemma(Modulus(kHalf - 1e-9)) - kDelta2) <= 1e-8);
  CHECK(std::abs(hLemma(Modulus(kHalf - 1e-9)) - kDelta3) <= 1e-8);
  CHECK(std::abs(etaLemma(Modulus(kHalf - 1e-9)) - kEtaHalf) <= 1e-8);
  CHECK(std::abs(xiFunction(Modulus(kHalf - 1e-12)) - kXiHalf) <= 1e-10);
}

TEST_CASE("sampled ranges stay inside the stated intervals") {
  const int n = 256;
  for (int i = 0; i < n; ++i) {
    const double r = 1e-4 + (kHalf - 1e-6 - 1e-4) * i / (n - 1.0);
    const Modulus m(r);
    CHECK(fLemma(m) > 0.5 - 1e-9);
    CHECK(fLemma(m) < kDelta1 + 1e-9);
    CHECK(gLemma(m) > kDelta2 - 1e-9);
    CHECK(gLemma(m) < 0.5 + 1e-9);
    CHECK(hLemma(m) > 0.5 - 1e-9);
    CHECK(hLemma(m) < kDelta3 + 1e-9);
    CHECK(etaLemma(m) > kEtaHalf - 1e-9);
    CHECK(etaLemma(m) < -5.0 / 64.0 + 1e-9);
    CHECK(xiFunction(m) < 0.0);
  }
}

TEST_CASE("monotone probes run clean over the default grids") {
  const MonotoneReport f = monotoneProbe(LemmaFn::F, 1e-4, kHalf - 1e-4, 4096);
  CHECK(f.direction == Direction::Increasing);
  CHECK(f.violations.empty());
  CHECK(f.worst_adjacent_delta > 0.0);
  CHECK(std::abs(f.endpoint_low - 0.5) <= 1e-8);
  CHECK(f.endpoint_high > 0.5215);
  CHECK(f.endpoint_high < kDelta1);

  const MonotoneReport g = monotoneProbe(LemmaFn::G, 1e-4, kHalf - 1e-4, 4096);
  CHECK(g.direction == Direction::Decreasing);
  CHECK(g.violations.empty());
  CHECK(std::abs(g.endpoint_low - 0.5) <= 1e-8);
  CHECK(g.endpoint_high > kDelta2);
  CHECK(g.endpoint_high < 0.4785);

  const MonotoneReport h = monotoneProbe(LemmaFn::H, 1e-4, kHalf - 1e-4, 4096);
  CHECK(h.direction == Direction::Increasing);
  CHECK(h.violations.empty());
  CHECK(h.endpoint_high > 0.5645);
  CHECK(h.endpoint_high < kDelta3);

  const MonotoneReport mu = monotoneProbe(LemmaFn::Mu, 1e-4, 1.0 - 1e-4, 4096);
  CHECK(mu.direction == Direction::Increasing);
  CHECK(mu.violations.empty());
  CHECK(std::abs(mu.endpoint_low - 0.25) <= 1e-8);

  const MonotoneReport eta = monotoneProbe(LemmaFn::Eta, 1e-4, kHalf - 1e-4, 4096);
  CHECK(eta.direction == Direction::Decreasing);
  CHECK(eta.violations.empty());
  CHECK(std::abs(eta.endpoint_low - (-5.0 / 64.0)) <= 1e-8);

  const MonotoneReport xi = monotoneProbe(LemmaFn::Xi, 1e-4, kHalf - 1e-4, 1024);
  CHECK(xi.direction == Direction::Increasing);
  CHECK(xi.violations.empty());
  CHECK(std::abs(xi.endpoint_low - (-kPi / 2.0)) <= 1e-6);

  CHECK_THROWS_AS(monotoneProbe(LemmaFn::F, 0.1, 0.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(monotoneProbe(LemmaFn::F, 0.5, 0.1, 64), std::invalid_argument);
}

TEST_CASE("phi values and parameter gates") {
  CHECK(std::abs(phi(2.0, Modulus(kHalf)) - 1.0) <= 5e-16);
  for (double lambda : {0.5, std::numbers::sqrt2, 2.0})
    CHECK(std::abs(phi(lambda, Modulus(1e-9)) - 1.0) <= 1e-15);
  CHECK(relDiff(phi(sharpConstants().delta4, Modulus(0.5)), kPhiD405) <= 1e-14);
  CHECK(relDiff(phi(std::numbers::sqrt2, Modulus(0.5)), kPhiRt205) <= 1e-14);

  // Increasing in lambda at fixed r.
  double prev = 0.0;
  for (double lambda = 0.2; lambda <= 2.0; lambda += 0.2) {
    const double v = phi(lambda, Modulus(0.5));
    CHECK(v > prev);
    prev = v;
  }

  CHECK_THROWS_AS(phi(0.0, Modulus(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(phi(-1.0, Modulus(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(phi(2.0 + 1e-9, Modulus(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(phi(1.0, Modulus(0.0)), std::domain_error);
  CHECK_THROWS_AS(phi(1.0, Modulus(0.72)), std::domain_error);
}

TEST_CASE("phi with the delta4 weight dominates the quadratic cap below 33/50") {
  const double d4 = sharpConstants().delta4;
  const int n = 512;
  for (int i = 0; i < n; ++i) {
    const double r = 1e-6 + (0.66 - 2e-6) * i / (n - 1.0);
    CHECK(phi(d4, Modulus(r)) > 1.0 - r * r / 4.0);
  }
}

TEST_CASE("nuPoly values, sign, and derivative") {
  const double d4 = sharpConstants().delta4;
  CHECK(nuPoly(0.0) == 256.0 * d4 * d4 - 512.0);
  CHECK(nuPoly(0.0) > 0.0);
  CHECK(std::abs(nuPoly(0.66) - kNu3350) <= 1e-9);
  CHECK(nuPoly(1.0) < 0.0);

  double prev = nuPoly(0.0);
  for (int i = 1; i < 512; ++i) {
    const double v = nuPoly(i / 511.0);
    CHECK(v < prev);
    prev = v;
  }

  // d(nu)/dr = -8r [d4^2 (4 - r^2)^3 + 16] against central differences.
  const double h = 1e-5;
  for (double r : {0.2, 0.5, 0.8}) {
    const double numeric = (nuPoly(r + h) - nuPoly(r - h)) / (2.0 * h);
    const double closed = -8.0 * r * (d4 * d4 * std::pow(4.0 - r * r, 3.0) + 16.0);
    CHECK(relDiff(numeric, closed) <= 1e-8);
  }

  CHECK_THROWS_AS(nuPoly(-0.1), std::domain_error);
  CHECK_THROWS_AS(nuPoly(1.1), std::domain_error);
}

TEST_CASE("quotients of E and K are monotone across (0,1)") {
  const int n = 512;
  double q1p = 0.0, q2p = 1e9, q3p = 1e9, q4p = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = 1e-3 + (1.0 - 2e-3) * i / (n - 1.0);
    const Modulus m(r);
    const double k = ellK(m), e = ellE(m);
    const double rp2 = m.r_prime * m.r_prime;
    const double q1 = (e - rp2 * k) / (r * r);      // increasing, pi/4 -> 1
    const double q2 = std::sqrt(m.r_prime) * k;     // decreasing from pi/2
    const double q3 = (e - rp2 * k) / (r * r * k);  // decreasing
    const double q4 = (k - e) / (r * r);            // increasing
    CHECK(q1 > q1p);
    CHECK(q2 < q2p);
    CHECK(q3 < q3p);
    CHECK(q4 > q4p);
    q1p = q1;
    q2p = q2;
    q3p = q3;
    q4p = q4;
    if (i == 0) {
      CHECK(std::abs(q1 - kPi / 4.0) <= 1e-5);
      CHECK(std::abs(q2 - kPi / 2.0) <= 1e-5);
    }
  }
  CHECK(q1p < 1.0);
  CHECK(q1p > 0.98);
  CHECK(std::sqrt(Modulus(0.0).r_prime) * ellK(Modulus(0.0)) == kPi / 2.0);
}

TEST_CASE("E stays above its quartic cap on the left half-interval") {
  const int n = 512;
  for (int i = 0; i < n; ++i) {
    const double r = 1e-3 + (kHalf - 1e-6 - 1e-3) * i / (n - 1.0);
    CHECK(2.0 * ellE(Modulus(r)) / kPi > 1.0 - r * r / 4.0 - std::pow(r, 4.0) / 8.0);
  }
}

TEST_CASE("K-related ratios fall on both flanks of 33/50") {
  // K/sqrt(r) strictly decreasing across the whole interval.
  double prev = 1e300;
  for (int i = 0; i < 512; ++i) {
    const double r = 1e-3 + (kHalf - 1e-6 - 1e-3) * i / 511.0;
    const double v = ellK(Modulus(r)) / std::sqrt(r);
    CHECK(v < prev);
    prev = v;
  }
  // sqrt(r) * phi_d4 strictly decreasing on the right flank.
  const double d4 = sharpConstants().delta4;
  prev = 1e300;
  for (int i = 0; i < 256; ++i) {
    const double r = 0.66 + (kHalf - 1e-9 - 0.66) * i / 255.0;
    const double v = std::sqrt(r) * phi(d4, Modulus(r));
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("domain gates reject out-of-interval moduli") {
  CHECK_THROWS_AS(fLemma(Modulus(0.0)), std::domain_error);
  CHECK_THROWS_AS(fLemma(Modulus(0.71)), std::domain_error);
  CHECK_THROWS_AS(gLemma(Modulus(0.71)), std::domain_error);
  CHECK_THROWS_AS(hLemma(Modulus(0.71)), std::domain_error);
  CHECK_THROWS_AS(etaLemma(Modulus(0.71)), std::domain_error);
  CHECK_THROWS_AS(xiFunction(Modulus(0.9)), std::domain_error);
  CHECK_THROWS_AS(muLemma(Modulus(0.0)), std::domain_error);
  CHECK(muLemma(Modulus(0.9)) > muLemma(Modulus(0.5)));
  CHECK(muLemma(Modulus(0.5)) > 0.25);
}

}  // namespace
