#include <cmath>
#include <stdexcept>

#include "agmb/composite.hpp"
#include "agmb/grid.hpp"
#include "doctest.h"

using namespace agmb;

TEST_CASE("grid specs parse and print") {
  const GridSpec g = parseGridSpec("ratio-log:10000:1.000001:1e6");
  CHECK(g.kind == GridKind::RatioLog);
  CHECK(g.count == 10000);
  CHECK(g.lo == doctest::Approx(1.000001).epsilon(1e-15));
  CHECK(g.hi == 1e6);

  const GridSpec round = parseGridSpec(describeGrid(g));
  CHECK(round.kind == g.kind);
  CHECK(round.count == g.count);
  CHECK(round.lo == g.lo);
  CHECK(round.hi == g.hi);

  CHECK(parseGridSpec("modulus-uniform:99:0.01:0.99").kind == GridKind::ModulusUniform);
  CHECK(parseGridSpec("modulus-endpoint-weighted:64:1e-3:0.7").kind ==
        GridKind::ModulusEndpointWeighted);

  CHECK_THROWS_AS(parseGridSpec("ratio-log:100:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("ratio-log:100:1.5:10:3"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("lattice:100:1.5:10"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("ratio-log:100:ten:20"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("ratio-log:1:1.5:10"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("ratio-log:100:10:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("ratio-log:100:0.5:10"), std::invalid_argument);
  CHECK_THROWS_AS(parseGridSpec("modulus-uniform:100:0.1:1.5"), std::invalid_argument);
}

TEST_CASE("ratio grids enumerate log-spaced pairs with exact ends") {
  const GridSpec g{GridKind::RatioLog, 101, 1.000001, 1e6};
  const auto pairs = makePairs(g);
  REQUIRE(pairs.size() == 101);
  CHECK(pairs.front().a == doctest::Approx(1.000001).epsilon(1e-15));
  CHECK(pairs.back().a == 1e6);
  for (const auto& p : pairs) CHECK(p.b == 1.0);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const double step = pairs[i].a / pairs[i - 1].a;
    CHECK(step > 1.0);
    // log-uniform: constant successive ratio
    if (i > 1) CHECK(step == doctest::Approx(pairs[1].a / pairs[0].a).epsilon(1e-9));
  }
  CHECK_THROWS_AS(makeModuli(g), std::invalid_argument);
}

TEST_CASE("modulus grids cover both kinds") {
  const GridSpec uni{GridKind::ModulusUniform, 11, 0.1, 0.6};
  const auto rs = makeModuli(uni);
  REQUIRE(rs.size() == 11);
  CHECK(rs.front() == 0.1);
  CHECK(rs.back() == 0.6);
  CHECK(rs[5] == doctest::Approx(0.35).epsilon(1e-15));

  const GridSpec wt{GridKind::ModulusEndpointWeighted, 64, 1e-3, 0.7};
  const auto ws = makeModuli(wt);
  REQUIRE(ws.size() == 64);
  CHECK(ws.front() == 1e-3);
  CHECK(ws.back() == doctest::Approx(0.7).epsilon(1e-9));
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i] > ws[i - 1]);
  // Concentration: the first and last gaps are far below the uniform spacing.
  const double uniform_gap = (0.7 - 1e-3) / 63.0;
  CHECK(ws[1] - ws[0] < 0.1 * uniform_gap);
  CHECK(ws[63] - ws[62] < 1e-3 * uniform_gap);
}

TEST_CASE("reference pair recovers its modulus") {
  CHECK(referencePair(Modulus(0.6)).a == doctest::Approx(7.0).epsilon(1e-15));
  for (double r : {1e-6, 1e-3, 0.1, 0.3, 0.5, 0.65, 0.7, 0.707}) {
    const PositivePair p = referencePair(Modulus(r));
    CHECK(p.b == 1.0);
    const Substitution sub = rSubstitution(p);
    CHECK(sub.modulus.r == doctest::Approx(r).epsilon(1e-12));
  }
  CHECK_THROWS_AS(referencePair(Modulus(0.71)), std::domain_error);

  const auto pairs = makePairs(GridSpec{GridKind::ModulusEndpointWeighted, 32, 0.01, 0.7});
  REQUIRE(pairs.size() == 32);
  for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i].a > pairs[i - 1].a);
}
