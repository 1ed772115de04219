#include "pmeqt/pme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmeqt {

namespace {

constexpr double kStructureTol = 1e-12;
constexpr double kRankTol = 1e-10;

bool close_rel(double x, double y, double scale) {
  return std::abs(x - y) <= kStructureTol * std::max(1.0, scale);
}

}  // namespace

int null_dimension(const Generator& g) {
  Eigen::JacobiSVD<Matrix> svd(g.m());
  const Vector& s = svd.singularValues();
  const double scale = std::max(1.0, s(0));
  int dim = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= kRankTol * scale) ++dim;
  }
  return dim;
}

ProbabilityVector stationary_distribution(const Generator& g) {
  const int n = g.n();
  const int dim = null_dimension(g);
  if (dim != 1) {
    throw Error(ErrorKind::NonUniqueStationary,
                "stationary state is not unique: null space dimension " +
                    std::to_string(dim),
                -1, -1, 0.0, dim);
  }
  Matrix aug(n + 1, n);
  aug.topRows(n) = g.m();
  aug.row(n).setOnes();
  Vector rhs = Vector::Zero(n + 1);
  rhs(n) = 1.0;
  Vector p = aug.colPivHouseholderQr().solve(rhs);
  return ProbabilityVector(std::move(p));
}

SpectralInfo spectrum(const Generator& g) {
  Eigen::EigenSolver<Matrix> solver(g.m(), false);
  const auto& ev = solver.eigenvalues();
  SpectralInfo info;
  info.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(info.eigenvalues.begin(), info.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() > y.real();
              return x.imag() < y.imag();
            });
  int zero = 0;
  for (std::size_t i = 1; i < info.eigenvalues.size(); ++i) {
    if (std::abs(info.eigenvalues[i]) < std::abs(info.eigenvalues[zero])) {
      zero = static_cast<int>(i);
    }
  }
  info.zero_index = zero;
  double max_re = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < info.eigenvalues.size(); ++i) {
    if (static_cast<int>(i) == zero) continue;
    max_re = std::max(max_re, info.eigenvalues[i].real());
  }
  info.gap = std::isfinite(max_re) ? -max_re : 0.0;
  info.null_dim = null_dimension(g);
  return info;
}

double principal_minor_sum(const Generator& g) {
  const Matrix& m = g.m();
  double q = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.rows(); ++j) {
      q += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    }
  }
  return q;
}

StructureReport classify_structure(const RateMatrix& w) {
  const Matrix& W = w.w();
  const auto n = W.rows();
  const double scale = W.cwiseAbs().maxCoeff();
  const Generator g = generator_from_rates(w);
  ProbabilityVector p0 = stationary_distribution(g);

  bool symmetric = true;
  bool detailed = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      symmetric = symmetric && close_rel(W(i, j), W(j, i), scale);
      // Flux j -> i against flux i -> j.
      detailed = detailed && close_rel(W(i, j) * p0[j], W(j, i) * p0[i], scale);
    }
  }
  bool doubly = true;
  for (Eigen::Index m = 0; m < n; ++m) {
    const double out = W.col(m).sum();
    const double in = W.row(m).sum();
    doubly = doubly && close_rel(out, in, scale * n);
  }
  return StructureReport{symmetric, doubly, detailed, std::move(p0), 1};
}

}  // namespace pmeqt
