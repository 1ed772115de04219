#ifndef PMEQT_INTEGRATE_HPP
#define PMEQT_INTEGRATE_HPP

#include <optional>
#include <vector>

#include "pmeqt/core.hpp"

namespace pmeqt {

enum class Method { Exact, RK4 };

// Row t of `states` is p(times[t]). Sum drift is reported, never repaired.
struct Trajectory {
  std::vector<double> times;
  Matrix states;
  Method method = Method::Exact;

  int size() const { return static_cast<int>(times.size()); }
  int n() const { return static_cast<int>(states.cols()); }
  Vector state(int t) const { return states.row(t).transpose(); }
  double max_sum_drift() const;
};

struct MonitorSeries {
  std::vector<double> h_vals;
  std::vector<double> s_vals;  // empty without a decomposition
  std::vector<double> s_bs_vals;
};

// Exact mode uses the eigendecomposition of g and throws DefectiveGenerator
// when the eigenvector matrix has condition number above 1e12.
Trajectory integrate(const Generator& g, const ProbabilityVector& p0, double t_end,
                     int steps, Method method);

MonitorSeries monitor(const Trajectory& traj, const QTDecomposition* qt = nullptr);

double boltzmann_shannon_entropy(const Vector& p);

// Counts direction reversals of states[.][component]. A reversal is counted
// only once the series has moved more than `tol` away from the last turning
// point; the default tol is 1e-9 * max|p|.
int extrema_count(const Trajectory& traj, int component,
                  std::optional<double> tol = std::nullopt);

}  // namespace pmeqt

#endif
