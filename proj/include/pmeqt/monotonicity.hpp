#ifndef PMEQT_MONOTONICITY_HPP
#define PMEQT_MONOTONICITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pmeqt/core.hpp"

namespace pmeqt {

// D = xi^2 - 4 q for the nonzero eigenvalue pair of a three-state generator.
// D < -tol is a complex pair (Oscillatory), D > tol two real roots
// (Monotonic). The default tol is 1e-9 * max(1, xi^2).
RelaxationClass discriminant(const RateMatrix& w, std::optional<double> tol = std::nullopt);

UVWCoordinates uvw(const RateMatrix& w);

// 3u^2 + v^2 + 4 omega u + omega^2; identical to the discriminant.
double ellipse_value(const UVWCoordinates& coords);

enum class RateName { a, b, c, d, e, f };

RateName parse_rate_name(const std::string& name);
const char* to_string(RateName name);

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  // `steps` evenly spaced points; a single point when lo == hi.
  std::vector<double> grid() const;
};

struct RegionMap {
  RateName axis1 = RateName::a;
  RateName axis2 = RateName::b;
  std::vector<double> grid1;
  std::vector<double> grid2;
  std::vector<RelaxationClass> classes;  // row-major, axis1 outer
  double fraction_oscillatory = 0.0;

  const RelaxationClass& at(std::size_t i, std::size_t j) const {
    return classes[i * grid2.size() + j];
  }
};

// OpenMP over grid cells; output order is row-major regardless of schedule.
RegionMap sweep(const RateMatrix& tmpl, RateName axis1, RateName axis2,
                const AxisRange& range1, const AxisRange& range2);

// Single-threaded reference for sweep.
RegionMap sweep_serial(const RateMatrix& tmpl, RateName axis1, RateName axis2,
                       const AxisRange& range1, const AxisRange& range2);

}  // namespace pmeqt

#endif
