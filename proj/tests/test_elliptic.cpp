#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "agmb/elliptic.hpp"
#include "agmb/quadrature.hpp"

using namespace agmb;

namespace {

constexpr double kPi = std::numbers::pi;

// mpmath (dps=40): K(r), E(r) on the working grid
struct KE {
  double r, k, e;
};
const std::vector<KE> kFrozenKE = {
    {0.10, 1.574745561517355952669, 1.566861942021668291220},
    {0.20, 1.586867847454166237308, 1.554968546242529283474},
    {0.30, 1.608048619930512801267, 1.534833464923249041645},
    {0.50, 1.685750354812596042871, 1.467462209339427155460},
    {0.60, 1.750753802915752528975, 1.418083394448724231568},
    {0.80, 1.995302777664729387686, 1.276349943169906423309},
    {0.90, 2.280549138422770204614, 1.171697052781614141186},
    {0.95, 2.590011230874501219195, 1.102721648254163597709},
    {0.99, 3.356600523361192376033, 1.028475809028804000984},
};

constexpr double kKHalfRoot2 = 1.854074677301371918434;  // K(sqrt(2)/2)
constexpr double kEHalfRoot2 = 1.350643881047675502520;  // E(sqrt(2)/2)

}  // namespace

TEST_CASE("adaptive Simpson: textbook integrals and failure signal") {
  CHECK(adaptiveSimpson([](double x) { return std::sin(x); }, 0.0, kPi, 1e-13, 40) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(adaptiveSimpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13, 40) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(adaptiveSimpson([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-13, 40) ==
        doctest::Approx(kPi / 4.0).epsilon(1e-13));
  CHECK_THROWS_AS(adaptiveSimpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-15, 3),
                  std::runtime_error);
}

TEST_CASE("quadrature oracle hits the frozen K/E table") {
  CHECK(quadK(Modulus(0)) == doctest::Approx(kPi / 2).epsilon(1e-13));
  CHECK(quadE(Modulus(0)) == doctest::Approx(kPi / 2).epsilon(1e-13));
  for (const KE& row : kFrozenKE) {
    CHECK(std::abs(quadK(Modulus(row.r)) - row.k) < 3e-13);
    CHECK(std::abs(quadE(Modulus(row.r)) - row.e) < 3e-13);
  }
  CHECK(std::abs(quadK(Modulus(std::sqrt(0.5))) - kKHalfRoot2) < 3e-13);
  CHECK(std::abs(quadE(Modulus(std::sqrt(0.5))) - kEHalfRoot2) < 3e-13);
}

TEST_CASE("agm: fixed points, frozen values, scaling laws") {
  auto [v1, t1] = agm({1, 1});
  CHECK(v1 == 1.0);
  CHECK(t1.iterations == 0);
  for (double t : {0.5, 2.0, 10.0}) CHECK(agm({t, t}).value == t);

  CHECK(agm({1, 0.5}).value == doctest::Approx(0.7283955155234534345932).epsilon(1e-15));
  CHECK(agm({1, 0.1}).value == doctest::Approx(0.4250407094932274861728).epsilon(1e-15));
  CHECK(agm({2, 8}).value == doctest::Approx(4.486057160575205140256).epsilon(1e-15));
  CHECK(agm({1, 4}).value == doctest::Approx(2.243028580287602570128).epsilon(1e-15));

  CHECK(agm({8, 2}).value == agm({2, 8}).value);  // symmetric
  CHECK(agm({3, 12}).value == doctest::Approx(3.0 * agm({1, 4}).value).epsilon(1e-15));

  // Gauss: AG(1,1/2) = pi / (2 * integral_0^{pi/2} dt/sqrt(cos^2 t + sin^2 t / 4))
  double oracle = kPi / (2.0 * quadK(Modulus(std::sqrt(0.75))));
  CHECK(std::abs(agm({1, 0.5}).value - oracle) < 1e-12);

  CHECK_THROWS_AS(agm({1, 2}, -1.0), std::invalid_argument);
}

TEST_CASE("agm trace: convergence contract") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{
           {1e6, 1.0}, {1.0, 1e-3}, {5.0, 4.99}, {1.0, 0.999999}, {7.3, 2.2}}) {
    auto [value, trace] = agm({a, b}, 1e-15);
    double hi = std::max(a, b), lo = std::min(a, b);

    CHECK(trace.iterations <= 10);
    CHECK(trace.final_a - trace.final_b <= 1e-15 * trace.final_a);
    CHECK(value <= hi);
    CHECK(value >= lo);

    for (size_t i = 1; i < trace.gap_history.size(); ++i) {
      CHECK(trace.gap_history[i] < trace.gap_history[i - 1]);
      // quadratic contraction, with an ulp floor for the last rounded steps
      CHECK(trace.gap_history[i] <=
            trace.gap_history[i - 1] * trace.gap_history[i - 1] / (8.0 * lo) + 1e-15 * hi);
    }
  }
}

TEST_CASE("ellK/ellE: endpoints, special values, frozen table") {
  CHECK(ellK(Modulus(0)) == kPi / 2);
  CHECK(ellE(Modulus(0)) == kPi / 2);
  CHECK(ellK(Modulus(std::sqrt(0.5))) == doctest::Approx(kKHalfRoot2).epsilon(1e-14));
  CHECK(ellE(Modulus(std::sqrt(0.5))) == doctest::Approx(kEHalfRoot2).epsilon(1e-14));
  for (const KE& row : kFrozenKE) {
    CHECK(ellK(Modulus(row.r)) == doctest::Approx(row.k).epsilon(1e-14));
    CHECK(ellE(Modulus(row.r)) == doctest::Approx(row.e).epsilon(1e-14));
  }
}

TEST_CASE("AGM route vs quadrature oracle across the centi-grid") {
  for (int i = 1; i <= 99; ++i) {
    Modulus m(i / 100.0);
    CHECK(std::abs(ellK(m) - quadK(m)) < 1e-10);
    CHECK(std::abs(ellE(m) - quadE(m)) < 1e-10);
  }
}

TEST_CASE("Gauss identity: agm(1,r) * K(r') = pi/2") {
  const int n = 60;
  double lo = std::log(1e-4), hi = std::log(1.0 - 1e-4);
  for (int i = 0; i <= n; ++i) {
    double r = std::exp(lo + (hi - lo) * i / n);
    Modulus complement = Modulus::fromComplement(r);  // K's argument sqrt(1-r^2), paired to r
    CHECK(std::abs(agm({1.0, r}).value * ellK(complement) - kPi / 2) < 1e-13);
  }
}

TEST_CASE("ellK increasing, ellE decreasing") {
  double prevK = ellK(Modulus(0)), prevE = ellE(Modulus(0));
  for (int i = 1; i <= 150; ++i) {
    Modulus m(0.995 * i / 150.0);
    double k = ellK(m), e = ellE(m);
    CHECK(k > prevK);
    CHECK(e < prevE);
    prevK = k;
    prevE = e;
  }
}

TEST_CASE("Landen transform identities") {
  Modulus m02(0.2);
  double s = 2.0 * std::sqrt(0.2) / 1.2;
  CHECK(s == doctest::Approx(0.7453559924999298988031).epsilon(1e-15));
  CHECK(landenK(m02) == doctest::Approx(1.90424141694499948477).epsilon(1e-13));
  CHECK(landenE(m02) == doctest::Approx(1.322119965774215815944).epsilon(1e-13));
  CHECK(std::abs(landenK(m02) - 1.2 * ellK(m02)) < 1e-12);
  CHECK(std::abs(landenE(m02) - (2.0 * ellE(m02) - 0.96 * ellK(m02)) / 1.2) < 1e-12);

  CHECK(std::abs(landenK(Modulus(1e-8)) - kPi / 2) < 1e-7);

  for (int i = 1; i <= 50; ++i) {
    Modulus m(0.99 * i / 50.0);
    double rp2 = m.r_prime * m.r_prime;
    CHECK(std::abs(landenK(m) - (1.0 + m.r) * ellK(m)) < 1e-12);
    CHECK(std::abs(landenE(m) - (2.0 * ellE(m) - rp2 * ellK(m)) / (1.0 + m.r)) < 1e-12);
  }
}

TEST_CASE("derivative formulas vs central differences") {
  CHECK(dK(Modulus(0.5)) == doctest::Approx(0.541731848613280328817).epsilon(1e-13));
  CHECK(dE(Modulus(0.5)) == doctest::Approx(-0.4365762909463377748228).epsilon(1e-13));

  const double h = 1e-5;
  for (int i = 1; i <= 9; ++i) {
    double r = i / 10.0;
    Modulus m(r);
    double fdK = (ellK(Modulus(r + h)) - ellK(Modulus(r - h))) / (2 * h);
    double fdE = (ellE(Modulus(r + h)) - ellE(Modulus(r - h))) / (2 * h);
    CHECK(std::abs(dK(m) - fdK) / std::abs(fdK) < 1e-6);
    CHECK(std::abs(dE(m) - fdE) / std::abs(fdE) < 1e-6);
    CHECK(dE(m) < 0.0);

    auto comb1 = [](double x) {  // E - r'^2 K, derivative r K
      Modulus mm(x);
      return ellE(mm) - mm.r_prime * mm.r_prime * ellK(mm);
    };
    auto comb2 = [](double x) {  // K - E, derivative r E / r'^2
      Modulus mm(x);
      return ellK(mm) - ellE(mm);
    };
    double d1 = (comb1(r + h) - comb1(r - h)) / (2 * h);
    double d2 = (comb2(r + h) - comb2(r - h)) / (2 * h);
    CHECK(std::abs(d1 - r * ellK(m)) / (r * ellK(m)) < 1e-6);
    double want2 = r * ellE(m) / (m.r_prime * m.r_prime);
    CHECK(std::abs(d2 - want2) / want2 < 1e-6);
  }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(Modulus(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(quadK(Modulus(0.9995)), std::domain_error);
  CHECK_THROWS_AS(quadE(Modulus(0.9995)), std::domain_error);
  CHECK_THROWS_AS(dK(Modulus(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(dE(Modulus(0.0)), std::invalid_argument);

  for (double r : {0.1, 0.3, std::sqrt(0.5), 0.77, 0.999}) {
    Modulus m(r);
    CHECK(std::abs(m.r * m.r + m.r_prime * m.r_prime - 1.0) <= 4e-16);
  }
}
