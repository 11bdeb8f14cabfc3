#pragma once

#include "agmb/elliptic.hpp"
#include "agmb/means.hpp"

namespace agmb {

// Tagged reference to one mean from the catalog, with parameters where the
// family needs them.
struct MeanSelector {
  enum class Tag {
    Arithmetic,
    Geometric,
    Quadratic,
    Contraharmonic,
    Logarithmic,
    Identric,
    GenLog,
    Gini,
    Stolarsky
  };

  Tag tag;
  double p = 0.0;
  double q = 0.0;

  static MeanSelector arithmeticMean() { return {Tag::Arithmetic}; }
  static MeanSelector geometricMean() { return {Tag::Geometric}; }
  static MeanSelector quadraticMean() { return {Tag::Quadratic}; }
  static MeanSelector contraharmonicMean() { return {Tag::Contraharmonic}; }
  static MeanSelector logarithmicMean() { return {Tag::Logarithmic}; }
  static MeanSelector identricMean() { return {Tag::Identric}; }
  static MeanSelector genLogMean(double p) { return {Tag::GenLog, p}; }
  static MeanSelector giniMean(double p) { return {Tag::Gini, p}; }
  static MeanSelector stolarskyMean(double p, double q) { return {Tag::Stolarsky, p, q}; }
};

double evalMean(const MeanSelector& sel, const PositivePair& pair);

// AG_{X,Y}(a,b) = agm(X(a,b), Y(a,b)).
double agComposite(const MeanSelector& x, const MeanSelector& y, const PositivePair& p);

// r = (a-b)/sqrt(2(a^2+b^2)) in [0, sqrt(2)/2), arguments ordered internally.
struct Substitution {
  Modulus modulus;
  bool degenerate;  // a == b; modulus.r is 0
};

Substitution rSubstitution(const PositivePair& p);

// AG_{Q,C}(a,b) = pi C(a,b) / (2 K(r)); returns a directly on the diagonal.
double agQCClosedForm(const PositivePair& p);

}  // namespace agmb
