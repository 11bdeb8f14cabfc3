#include "agmb/means.hpp"

#include <algorithm>

namespace agmb {
namespace {

constexpr double kParamTol = 1e-9;  // limit branch inside this distance of a singular parameter
constexpr double kDiagTol = 1e-9;   // |a-b|/max below this: cancellation-prone means return A

bool nearDiagonal(double lo, double hi) { return hi - lo < kDiagTol * hi; }

// log(hi/lo) without cancellation for hi close to lo.
double logRatio(double lo, double hi) { return std::log1p((hi - lo) / lo); }

}  // namespace

double arithmetic(const PositivePair& p) { return (p.a + p.b) / 2.0; }

double geometric(const PositivePair& p) { return std::sqrt(p.a * p.b); }

double quadratic(const PositivePair& p) { return std::sqrt((p.a * p.a + p.b * p.b) / 2.0); }

double contraharmonic(const PositivePair& p) { return (p.a * p.a + p.b * p.b) / (p.a + p.b); }

double logarithmic(const PositivePair& p) {
  double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  if (nearDiagonal(lo, hi)) return (lo + hi) / 2.0;
  return (hi - lo) / logRatio(lo, hi);
}

double identric(const PositivePair& p) {
  double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  if (nearDiagonal(lo, hi)) return (lo + hi) / 2.0;
  // log I = (hi log hi - lo log lo)/(hi-lo) - 1 = log hi - 1 + lo*log1p(d/lo)/d
  double d = hi - lo;
  return std::exp(std::log(hi) - 1.0 + lo * logRatio(lo, hi) / d);
}

double genlog(double p_exp, const PositivePair& pair) {
  if (std::abs(p_exp + 1.0) <= kParamTol) return logarithmic(pair);
  if (std::abs(p_exp) <= kParamTol) return identric(pair);
  double lo = std::min(pair.a, pair.b), hi = std::max(pair.a, pair.b);
  if (nearDiagonal(lo, hi)) return (lo + hi) / 2.0;
  // (hi^{p+1}-lo^{p+1})/((p+1)(hi-lo)) = lo^{p+1} expm1((p+1) log(hi/lo)) / ((p+1)(hi-lo))
  double p1 = p_exp + 1.0;
  double base = std::pow(lo, p1) * std::expm1(p1 * logRatio(lo, hi)) / (p1 * (hi - lo));
  return std::pow(base, 1.0 / p_exp);
}

double gini(double p_exp, const PositivePair& pair) {
  double a = pair.a, b = pair.b;
  if (p_exp == 2.0)
    return std::exp((a * std::log(a) + b * std::log(b)) / (a + b));
  double base = (std::pow(a, p_exp - 1.0) + std::pow(b, p_exp - 1.0)) / (a + b);
  return std::pow(base, 1.0 / (p_exp - 2.0));
}

double stolarsky(double p_exp, double q_exp, const PositivePair& pair) {
  double lo = std::min(pair.a, pair.b), hi = std::max(pair.a, pair.b);
  if (nearDiagonal(lo, hi)) return (lo + hi) / 2.0;
  double ell = logRatio(lo, hi);

  bool p0 = std::abs(p_exp) <= kParamTol;
  bool q0 = std::abs(q_exp) <= kParamTol;
  if (p0 && q0) return std::sqrt(lo * hi);
  if (p0) std::swap(p_exp, q_exp), std::swap(p0, q0);
  if (q0) {
    // S_{p,0} = [(hi^p-lo^p)/(p log(hi/lo))]^{1/p}
    double base = std::pow(lo, p_exp) * std::expm1(p_exp * ell) / (p_exp * ell);
    return std::pow(base, 1.0 / p_exp);
  }
  if (std::abs(p_exp - q_exp) <= kParamTol) {
    // S_{p,p} = exp(log hi - 1/p + log(hi/lo)/expm1(p log(hi/lo)))
    double pm = (p_exp + q_exp) / 2.0;
    return std::exp(std::log(hi) - 1.0 / pm + ell / std::expm1(pm * ell));
  }
  // S_{p,q} = lo * [(q expm1(p ell))/(p expm1(q ell))]^{1/(p-q)}
  double ratio = (q_exp * std::expm1(p_exp * ell)) / (p_exp * std::expm1(q_exp * ell));
  return lo * std::pow(ratio, 1.0 / (p_exp - q_exp));
}

}  // namespace agmb
