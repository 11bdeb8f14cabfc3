#pragma once

#include <cmath>
#include <stdexcept>

namespace agmb {

// Ordered pair of strictly positive finite reals; the argument of every mean.
struct PositivePair {
  double a;
  double b;

  PositivePair(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0))
      throw std::invalid_argument("PositivePair: requires finite a > 0, b > 0");
  }
};

double arithmetic(const PositivePair& p);      // (a+b)/2
double geometric(const PositivePair& p);       // sqrt(ab)
double quadratic(const PositivePair& p);       // sqrt((a^2+b^2)/2)
double contraharmonic(const PositivePair& p);  // (a^2+b^2)/(a+b)
double logarithmic(const PositivePair& p);     // (b-a)/(log b - log a)
double identric(const PositivePair& p);        // (b^b/a^a)^{1/(b-a)}/e

// L_p(a,b) = [(b^{p+1}-a^{p+1})/((p+1)(b-a))]^{1/p}; L_{-1}=logarithmic,
// L_0=identric, L_1=arithmetic (limit branches taken near the singular p).
double genlog(double p_exp, const PositivePair& pair);

// Gini mean S_p = [(a^{p-1}+b^{p-1})/(a+b)]^{1/(p-2)} for p != 2;
// S_2 = (a^a b^b)^{1/(a+b)} by its own formula (exact parameter match).
double gini(double p_exp, const PositivePair& pair);

// Stolarsky mean S_{p,q} = [q(a^p-b^p)/(p(a^q-b^q))]^{1/(p-q)} with limit
// branches at p=q, p=0, q=0 and on the diagonal.
double stolarsky(double p_exp, double q_exp, const PositivePair& pair);

}  // namespace agmb
