#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agmb/elliptic.hpp"
#include "agmb/grid.hpp"
#include "agmb/means.hpp"

namespace agmb {

// The sharp endpoint constants of the four bound families, all pinned by the
// value of K at sqrt(2)/2.
struct SharpConstants {
  double k_half;        // K(sqrt(2)/2)
  double e_half;        // E(sqrt(2)/2)
  double delta1;        // (2+sqrt(2)) (1 - pi/(2 k_half))
  double delta2;        // 2 log(2 k_half/pi) / log 2
  double delta3;        // (sqrt(2)+1) (sqrt(2) - 2 k_half/pi)
  double delta4;        // root of Phi_lambda(sqrt(2)/2) = pi/(2 k_half)
  double alpha4_lower;  // (sqrt(2)+2)/4
  double beta4_upper;   // (delta4+2)/4
};

const SharpConstants& sharpConstants();

// One member of a two-sided bound family for AG_{Q,C}:
//   ConvexQC(t)    t Q + (1-t) C                         t in [0, 1]
//   GeometricQC(t) Q^t C^(1-t)                           t in [0, 1]
//   HarmonicQC(t)  Q C / (t Q + (1-t) C)                 t in [0, 1]
//   ContraMix(p)   C(sqrt(p a^2 + (1-p) b^2),
//                    sqrt((1-p) a^2 + p b^2))            p in [1/2, 1]
struct BoundFamily {
  enum class Shape { ConvexQC, GeometricQC, HarmonicQC, ContraMix };

  Shape shape;
  double parameter;
};

double evalBound(const BoundFamily& f, const PositivePair& pair);

enum class BoundSide { Lower, Upper };

struct ViolationPoint {
  double a, b, r, margin;
};

// Margins are oriented so that positive means the inequality holds at that
// point: target - bound on the Lower side, bound - target on the Upper side.
// min_margin > 0 exactly when violations is empty (a violation is margin <= 0).
struct VerificationReport {
  std::string name;
  std::optional<BoundFamily> family;  // set for the four AG_{Q,C} families
  BoundSide side;
  std::string grid;
  std::vector<double> margins;
  double min_margin;
  std::vector<ViolationPoint> violations;
};

// The four sharp two-sided theorems, one per bound family shape (in the
// order ConvexQC, GeometricQC, HarmonicQC, ContraMix).
enum class TheoremId { T31, T32, T33, T34 };

// Signed margin of the bound at modulus r, normalized by C(a,b).  Exact
// rearrangements keep the sharp-parameter margins strictly positive down to
// ratios as small as 1 + 1e-6, where direct subtraction would lose every
// significant digit.
double theoremMargin(TheoremId id, BoundSide side, double parameter, const Modulus& m);

// Checks lower/upper bounds with the given parameters against agQCClosedForm
// on the grid; margins are stored in value units (normalized margin times C).
std::pair<VerificationReport, VerificationReport> verifyTheorem(TheoremId id,
                                                                double param_lower,
                                                                double param_upper,
                                                                const GridSpec& grid);

// For ContraMix parameters strictly between the two sharp endpoints, the
// family member is neither a lower nor an upper bound; the probe confirms a
// sign change (bound above AG at small r, below it near sqrt(2)/2).
struct SharpnessProbe {
  bool violates_lower_near_zero;
  bool violates_upper_near_half;
};

SharpnessProbe sharpnessProbeT34(double p_mid);

// Multiplier envelope (pi/2) m(r) < K(r) < (pi/2) M(r) on (0, sqrt(2)/2):
// m is the max of the four sharp lower-family multipliers, M the min of the
// four upper ones.
struct KEnvelope {
  double m_of_r;
  double M_of_r;
};

KEnvelope kEnvelope(const Modulus& m);

// E envelope implied by the K one: pi/(2 M) < E < pi/(2 sqrt(r') m).
struct EEnvelope {
  double lower;
  double upper;
};

EEnvelope eEnvelope(const Modulus& m);

// Quartic sandwich of pi/(2K) and the quartic floor of K itself.  The floor
// holds on all of (0, 1) and the upper quartic on all of (0, sqrt(2)/2).
// The lower quartic's -7/64 coefficient overshoots eta's endpoint limit
// -7/2 + 2 pi / K(sqrt2/2) = -0.11114766... and so holds only below
// r = 0.6946825489861425, where eta crosses -7/64; coefficient -1/8 gives
// the floor that is valid on the whole interval.
struct KPolynomialBounds {
  double c28_lower;  // 1 - r^2/4 - 7 r^4/64   <= pi/(2K) for r < 0.69468...
  double c28_upper;  // 1 - r^2/4 - 5 r^4/64   >= pi/(2K)
  double l26_lower;  // (pi/2)(1 + r^2/4)      <= K
};

KPolynomialBounds kPolynomialBounds(const Modulus& m);

// Stable signed margins of the pi/(2K) quartic sandwich.  The upper margin is
// positive on (0, sqrt(2)/2); the lower margin flips sign once, at the
// crossing noted above, because eta is strictly decreasing.  Near r = 0 the
// upper margin is 11 r^6/256, far below what subtracting kPolynomialBounds
// values from pi/(2K) can resolve.
struct C28Margins {
  double lower_margin;  // pi/(2K) - c28_lower = r^4 (eta + 7/64)
  double upper_margin;  // c28_upper - pi/(2K) = -r^4 (eta + 5/64)
};

C28Margins c28Margins(const Modulus& m);

// Classical two-sided AG bounds checked on the grid: log-mean pair bounds,
// the AG(1,r) logarithm forms with the Kuhnau and Qiu-Vamanamurthy
// refinements, the sharp harmonic log/arithmetic combination, Gini and
// Stolarsky endpoints, and the Ding-Zhao generalized-log upper bound.
std::vector<VerificationReport> priorBoundsSuite(const GridSpec& grid);

}  // namespace agmb
