#include "pmeqt/integrate.hpp"

#include <cmath>
#include <limits>

namespace pmeqt {

namespace {

constexpr double kMaxEigenvectorCondition = 1e12;

std::vector<double> time_grid(double t_end, int steps) {
  std::vector<double> t(steps + 1);
  for (int i = 0; i <= steps; ++i) t[i] = t_end * i / steps;
  t[steps] = t_end;
  return t;
}

void integrate_exact(const Matrix& g, const Vector& p0, Trajectory& traj) {
  Eigen::EigenSolver<Matrix> solver(g, true);
  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  const Eigen::VectorXcd vals = solver.eigenvalues();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
  const auto& s = svd.singularValues();
  const double cond = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1)
                                            : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxEigenvectorCondition)) {
    throw Error(ErrorKind::DefectiveGenerator,
                "eigenvector matrix is numerically singular; use rk4", -1, -1, cond);
  }
  const Eigen::VectorXcd coeff = vecs.partialPivLu().solve(p0.cast<std::complex<double>>());
  for (std::size_t t = 0; t < traj.times.size(); ++t) {
    const Eigen::VectorXcd scaled =
        (vals * traj.times[t]).array().exp() * coeff.array();
    traj.states.row(t) = (vecs * scaled).real().transpose();
  }
  traj.states.row(0) = p0.transpose();
}

void integrate_rk4(const Matrix& g, const Vector& p0, Trajectory& traj, int steps) {
  const double h = traj.times.back() / steps;
  Vector p = p0;
  traj.states.row(0) = p.transpose();
  for (int i = 1; i <= steps; ++i) {
    const Vector k1 = g * p;
    const Vector k2 = g * (p + 0.5 * h * k1);
    const Vector k3 = g * (p + 0.5 * h * k2);
    const Vector k4 = g * (p + h * k3);
    p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.states.row(i) = p.transpose();
  }
}

}  // namespace

double Trajectory::max_sum_drift() const {
  double drift = 0.0;
  for (Eigen::Index t = 0; t < states.rows(); ++t) {
    drift = std::max(drift, std::abs(states.row(t).sum() - 1.0));
  }
  return drift;
}

Trajectory integrate(const Generator& g, const ProbabilityVector& p0, double t_end,
                     int steps, Method method) {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "steps must be >= 1");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::InvalidArgument, "t_end must be positive");
  }
  if (p0.n() != g.n()) {
    throw Error(ErrorKind::BadShape, "initial state and generator differ in size");
  }
  Trajectory traj;
  traj.times = time_grid(t_end, steps);
  traj.states = Matrix(steps + 1, g.n());
  traj.method = method;
  if (method == Method::Exact) {
    integrate_exact(g.m(), p0.entries(), traj);
  } else {
    integrate_rk4(g.m(), p0.entries(), traj, steps);
  }
  return traj;
}

double boltzmann_shannon_entropy(const Vector& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    // 0 ln 0 := 0; drift below zero is treated the same way.
    if (p(i) > 0.0) s -= p(i) * std::log(p(i));
  }
  return s;
}

MonitorSeries monitor(const Trajectory& traj, const QTDecomposition* qt) {
  if (qt != nullptr && qt->n != traj.n()) {
    throw Error(ErrorKind::BadShape, "decomposition and trajectory differ in size");
  }
  MonitorSeries out;
  const int T = traj.size();
  out.h_vals.reserve(T);
  out.s_bs_vals.reserve(T);
  if (qt != nullptr) out.s_vals.reserve(T);
  for (int t = 0; t < T; ++t) {
    const Vector p = traj.state(t);
    out.h_vals.push_back(p.sum());
    out.s_bs_vals.push_back(boltzmann_shannon_entropy(p));
    if (qt != nullptr) out.s_vals.push_back(qt->entropy.value(p));
  }
  return out;
}

int extrema_count(const Trajectory& traj, int component, std::optional<double> tol) {
  if (traj.size() < 3) {
    throw Error(ErrorKind::InvalidArgument, "extrema_count needs at least 3 points");
  }
  if (component < 0 || component >= traj.n()) {
    throw Error(ErrorKind::InvalidArgument, "component out of range");
  }
  const auto x = traj.states.col(component);
  const double threshold = tol.value_or(1e-9 * traj.states.cwiseAbs().maxCoeff());

  // direction: +1 rising, -1 falling, 0 not yet established.
  int direction = 0;
  int reversals = 0;
  double pivot = x(0);  // last turning point, or the start
  double extreme = x(0);
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    const double v = x(i);
    if (direction == 0) {
      if (v - pivot > threshold) {
        direction = 1;
        extreme = v;
      } else if (pivot - v > threshold) {
        direction = -1;
        extreme = v;
      }
    } else if (direction > 0) {
      if (v > extreme) {
        extreme = v;
      } else if (extreme - v > threshold) {
        ++reversals;
        direction = -1;
        extreme = v;
      }
    } else {
      if (v < extreme) {
        extreme = v;
      } else if (v - extreme > threshold) {
        ++reversals;
        direction = 1;
        extreme = v;
      }
    }
  }
  return reversals;
}

}  // namespace pmeqt
