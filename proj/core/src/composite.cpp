#include "agmb/composite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace agmb {

double evalMean(const MeanSelector& sel, const PositivePair& pair) {
  switch (sel.tag) {
    case MeanSelector::Tag::Arithmetic:
      return arithmetic(pair);
    case MeanSelector::Tag::Geometric:
      return geometric(pair);
    case MeanSelector::Tag::Quadratic:
      return quadratic(pair);
    case MeanSelector::Tag::Contraharmonic:
      return contraharmonic(pair);
    case MeanSelector::Tag::Logarithmic:
      return logarithmic(pair);
    case MeanSelector::Tag::Identric:
      return identric(pair);
    case MeanSelector::Tag::GenLog:
      return genlog(sel.p, pair);
    case MeanSelector::Tag::Gini:
      return gini(sel.p, pair);
    case MeanSelector::Tag::Stolarsky:
      return stolarsky(sel.p, sel.q, pair);
  }
  throw std::invalid_argument("evalMean: unknown selector tag");
}

double agComposite(const MeanSelector& x, const MeanSelector& y, const PositivePair& p) {
  return agm(PositivePair(evalMean(x, p), evalMean(y, p))).value;
}

Substitution rSubstitution(const PositivePair& p) {
  const double hi = std::max(p.a, p.b);
  const double lo = std::min(p.a, p.b);
  if (hi == lo) return {Modulus(0.0), true};
  const double r = (hi - lo) / std::sqrt(2.0 * (hi * hi + lo * lo));
  return {Modulus(r), false};
}

double agQCClosedForm(const PositivePair& p) {
  if (p.a == p.b) return p.a;
  const Substitution sub = rSubstitution(p);
  return std::numbers::pi * contraharmonic(p) / (2.0 * ellK(sub.modulus));
}

}  // namespace agmb
