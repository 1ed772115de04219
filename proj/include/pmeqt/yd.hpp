#ifndef PMEQT_YD_HPP
#define PMEQT_YD_HPP

#include <vector>

#include "pmeqt/core.hpp"

namespace pmeqt {

// Three-state learning model: |1> untrained, |2> poorly trained, |3> well
// trained. Arousal k scales the 1->2 rate (a = a1 k) and the 3->2 rate
// (f = f1 k); d (2->3) and e (3->1) do not depend on arousal.
class YDParams {
 public:
  YDParams(double a1, double f1, double d, double e);

  double a1() const { return a1_; }
  double f1() const { return f1_; }
  double d() const { return d_; }
  double e() const { return e_; }

 private:
  double a1_;
  double f1_;
  double d_;
  double e_;
};

struct YDCurve {
  std::vector<double> k_grid;
  std::vector<double> rho1;
  std::vector<double> rho2;
  std::vector<double> rho3;
};

struct YDConsistency {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double omega_at_kopt = 0.0;
};

// (a, b, c, d, e, f) = (a1 k, 0, 0, d, e, f1 k).
RateMatrix yd_rates(const YDParams& params, double k);

// Closed-form stationary state; DegenerateDenominator when de + a(d+e+f) = 0.
ProbabilityVector yd_stationary(const YDParams& params, double k);

// Well-trained stationary probability a1 d k / (de + a1(d+e)k + a1 f1 k^2).
double yd_rho3(const YDParams& params, double k);

// `steps` evenly spaced arousal levels in [k_min, k_max], OpenMP over points.
YDCurve yd_curve(const YDParams& params, double k_min, double k_max, int steps);
YDCurve yd_curve_serial(const YDParams& params, double k_min, double k_max, int steps);

// sqrt(de / (a1 f1)); ZeroRateProduct when a1 f1 = 0.
double yd_optimal_arousal(const YDParams& params);

YDConsistency yd_consistency(const YDParams& params);

}  // namespace pmeqt

#endif
