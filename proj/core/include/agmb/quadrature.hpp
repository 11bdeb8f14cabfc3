#pragma once

#include <cmath>
#include <stdexcept>

#include "agmb/elliptic.hpp"

namespace agmb {

// Adaptive Simpson with interval bisection: a panel is accepted when the
// Richardson estimate |S2-S1|/15 fits its share of absTol. S2-S1 is formed
// from the five-point stencil in one expression; comparing against a sum
// inherited from the parent panel would carry a width-rounding offset that
// does not shrink with the panel and stalls the recursion.
// Throws std::runtime_error if maxDepth splits cannot reach the target.
template <class F>
double adaptiveSimpson(F f, double a, double b, double absTol, int maxDepth) {
  struct Rec {
    F& f;
    int maxDepth;
    double run(double a, double m, double b, double fa, double fm, double fb, double tol,
               int depth) {
      double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      double flm = f(lm), frm = f(rm);
      double h12 = (b - a) / 12.0;
      double fine = h12 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb);
      double delta = h12 * (4.0 * (flm + frm) - (fa + 6.0 * fm + fb));
      if (std::abs(delta) <= 15.0 * tol) return fine + delta / 15.0;
      if (depth >= maxDepth) throw std::runtime_error("adaptiveSimpson: subdivision limit hit");
      return run(a, lm, m, fa, flm, fm, 0.5 * tol, depth + 1) +
             run(m, rm, b, fm, frm, fb, 0.5 * tol, depth + 1);
    }
  };
  double m = 0.5 * (a + b);
  Rec rec{f, maxDepth};
  return rec.run(a, m, b, f(a), f(m), f(b), absTol, 0);
}

// Defining-integral evaluations of K and E; the independent oracle for the
// AGM route. Deliberately shares no evaluation code with ellK/ellE.
double quadK(const Modulus& m);
double quadE(const Modulus& m);

}  // namespace agmb
