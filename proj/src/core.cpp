#include "pmeqt/core.hpp"

#include <cmath>
#include <sstream>

namespace pmeqt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonFiniteRate: return "NonFiniteRate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonUniqueStationary: return "NonUniqueStationary";
    case ErrorKind::DefectiveGenerator: return "DefectiveGenerator";
    case ErrorKind::SolveFailed: return "SolveFailed";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadAxis: return "BadAxis";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ZeroRateProduct: return "ZeroRateProduct";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

const char* to_code(Relaxation cls) {
  switch (cls) {
    case Relaxation::Monotonic: return "M";
    case Relaxation::Oscillatory: return "O";
    case Relaxation::Boundary: return "B";
  }
  return "?";
}

ProbabilityVector::ProbabilityVector(Vector entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw Error(ErrorKind::BadShape, "probability vector needs at least 2 entries");
  }
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_(i)) || entries_(i) < -kProbabilityTol) {
      std::ostringstream msg;
      msg << "probability entry " << i + 1 << " is " << entries_(i);
      throw Error(ErrorKind::InvalidArgument, msg.str(), static_cast<int>(i) + 1);
    }
  }
  const double drift = std::abs(entries_.sum() - 1.0);
  if (drift > kSumTol) {
    std::ostringstream msg;
    msg << "probabilities sum to " << entries_.sum();
    throw Error(ErrorKind::InvalidArgument, msg.str(), -1, -1, drift);
  }
}

double RateMatrix::at3(int dest, int src) const {
  if (n() != 3) {
    throw Error(ErrorKind::BadShape, "named rates a..f exist only for 3 states");
  }
  return w_(dest, src);
}

RateMatrix RateMatrix::from_abcdef(double a, double b, double c, double d, double e,
                                   double f) {
  Matrix w(3, 3);
  // clang-format off
  w << 0, c, e,
       a, 0, f,
       b, d, 0;
  // clang-format on
  return validate_rates(w);
}

RateMatrix validate_rates(const Matrix& raw) {
  if (raw.rows() != raw.cols() || raw.rows() < 2) {
    throw Error(ErrorKind::BadShape, "rate matrix must be square with n >= 2");
  }
  const auto n = raw.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = raw(i, j);
      const int row = static_cast<int>(i) + 1;
      const int col = static_cast<int>(j) + 1;
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "rate (" << row << "," << col << ") is not finite";
        throw Error(ErrorKind::NonFiniteRate, msg.str(), row, col);
      }
      if (i == j && v != 0.0) {
        std::ostringstream msg;
        msg << "diagonal rate (" << row << "," << row << ") must be 0, got " << v;
        throw Error(ErrorKind::NonzeroDiagonal, msg.str(), row, row, v);
      }
      if (v < 0.0) {
        std::ostringstream msg;
        msg << "rate (" << row << "," << col << ") is negative: " << v;
        throw Error(ErrorKind::NegativeRate, msg.str(), row, col, v);
      }
    }
  }
  return RateMatrix(raw);
}

RateMatrix validate_rates(const std::vector<std::vector<double>>& raw) {
  const auto n = raw.size();
  if (n < 2) {
    throw Error(ErrorKind::BadShape, "rate matrix must be square with n >= 2");
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorKind::BadShape, "rate matrix row " + std::to_string(i + 1) +
                                           " has " + std::to_string(raw[i].size()) +
                                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = raw[i][j];
  }
  return validate_rates(m);
}

RateMatrix validate_rates(std::initializer_list<std::initializer_list<double>> raw) {
  std::vector<std::vector<double>> rows;
  for (const auto& row : raw) rows.emplace_back(row);
  return validate_rates(rows);
}

Generator generator_from_rates(const RateMatrix& w) {
  Matrix m = w.w();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double out = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j) out += m(i, j);
    }
    m(j, j) = -out;
  }
  return Generator(std::move(m));
}

QuadraticEntropy QuadraticEntropy::gauge_fixed() const {
  const auto n = sigma.rows();
  QuadraticEntropy out{sigma};
  const double shift = sigma(n - 2, n - 1);
  out.sigma.array() -= shift;
  out.sigma(n - 2, n - 1) = 0.0;
  out.sigma(n - 1, n - 2) = 0.0;
  return out;
}

Matrix ones_complement_projector(int n) {
  return Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / n);
}

Matrix unit_hamiltonian_3state() {
  Matrix k(3, 3);
  // clang-format off
  k <<  0,  1, -1,
       -1,  0,  1,
        1, -1,  0;
  // clang-format on
  return k;
}

Matrix QTDecomposition::operator_matrix() const {
  return static_cast<double>(n) * ones_complement_projector(n) + k_mat;
}

}  // namespace pmeqt
