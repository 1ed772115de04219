#include "pmeqt/yd.hpp"

#include <cmath>

namespace pmeqt {

namespace {

constexpr double kConsistencyTol = 1e-9;

double denominator(const YDParams& p, double k) {
  const double a = p.a1() * k;
  const double f = p.f1() * k;
  return p.d() * p.e() + a * (p.d() + p.e() + f);
}

void check_curve_args(double k_min, double k_max, int steps) {
  if (!(k_min >= 0.0) || !(k_max > k_min) || !std::isfinite(k_max) || steps < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "yd curve needs 0 <= k_min < k_max and steps >= 2");
  }
}

double grid_point(double k_min, double k_max, int steps, int i) {
  if (i == steps - 1) return k_max;
  return k_min + (k_max - k_min) * static_cast<double>(i) / (steps - 1);
}

void fill_point(const YDParams& params, YDCurve& curve, int i) {
  const double k = curve.k_grid[i];
  const ProbabilityVector rho = yd_stationary(params, k);
  curve.rho1[i] = rho[0];
  curve.rho2[i] = rho[1];
  curve.rho3[i] = yd_rho3(params, k);
}

YDCurve make_curve(double k_min, double k_max, int steps) {
  YDCurve curve;
  curve.k_grid.resize(steps);
  for (int i = 0; i < steps; ++i) curve.k_grid[i] = grid_point(k_min, k_max, steps, i);
  curve.rho1.resize(steps);
  curve.rho2.resize(steps);
  curve.rho3.resize(steps);
  return curve;
}

}  // namespace

YDParams::YDParams(double a1, double f1, double d, double e)
    : a1_(a1), f1_(f1), d_(d), e_(e) {
  for (double v : {a1, f1, d, e}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument,
                  "learning-model rates must be finite and nonnegative");
    }
  }
}

RateMatrix yd_rates(const YDParams& params, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::InvalidArgument, "arousal k must be nonnegative");
  }
  return RateMatrix::from_abcdef(params.a1() * k, 0.0, 0.0, params.d(), params.e(),
                                 params.f1() * k);
}

ProbabilityVector yd_stationary(const YDParams& params, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::InvalidArgument, "arousal k must be nonnegative");
  }
  const double den = denominator(params, k);
  if (!(den > 0.0)) {
    throw Error(ErrorKind::DegenerateDenominator,
                "stationary state is not unique: de + a(d+e+f) = 0");
  }
  const double a = params.a1() * k;
  const double f = params.f1() * k;
  const double d = params.d();
  const double e = params.e();
  Vector rho(3);
  rho << d * e / den, a * (e + f) / den, a * d / den;
  return ProbabilityVector(std::move(rho));
}

double yd_rho3(const YDParams& params, double k) {
  const double den = params.d() * params.e() +
                     params.a1() * (params.d() + params.e()) * k +
                     params.a1() * params.f1() * k * k;
  if (!(den > 0.0)) {
    throw Error(ErrorKind::DegenerateDenominator,
                "stationary state is not unique: de + a(d+e+f) = 0");
  }
  return params.a1() * params.d() * k / den;
}

YDCurve yd_curve(const YDParams& params, double k_min, double k_max, int steps) {
  check_curve_args(k_min, k_max, steps);
  YDCurve curve = make_curve(k_min, k_max, steps);
  // Errors cannot cross the parallel region; probe the grid ends first. The
  // denominator is nondecreasing in k, so k_min decides degeneracy.
  yd_stationary(params, k_min);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < steps; ++i) fill_point(params, curve, i);
  return curve;
}

YDCurve yd_curve_serial(const YDParams& params, double k_min, double k_max, int steps) {
  check_curve_args(k_min, k_max, steps);
  YDCurve curve = make_curve(k_min, k_max, steps);
  for (int i = 0; i < steps; ++i) fill_point(params, curve, i);
  return curve;
}

double yd_optimal_arousal(const YDParams& params) {
  const double prod = params.a1() * params.f1();
  if (!(prod > 0.0)) {
    throw Error(ErrorKind::ZeroRateProduct,
                "a1 * f1 = 0: the well-trained share has no interior maximum");
  }
  return std::sqrt(params.d() * params.e() / prod);
}

YDConsistency yd_consistency(const YDParams& params) {
  const double de = params.d() * params.e();
  const double af = params.a1() * params.f1();
  if (!(de > 0.0) || !(af > 0.0)) {
    throw Error(ErrorKind::DomainError, "consistency check needs d*e > 0 and a1*f1 > 0");
  }
  YDConsistency out;
  out.lhs = (params.d() + params.e()) / std::sqrt(de);
  out.rhs = (params.f1() - params.a1()) / std::sqrt(af);
  const double k_opt = yd_optimal_arousal(params);
  out.omega_at_kopt =
      (params.a1() * k_opt + params.d() + params.e()) - params.f1() * k_opt;
  out.satisfied = std::abs(out.lhs - out.rhs) <= kConsistencyTol * std::max(1.0, out.lhs);
  return out;
}

}  // namespace pmeqt
