#ifndef PMEQT_CORE_HPP
#define PMEQT_CORE_HPP

#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pmeqt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kProbabilityTol = 1e-12;
inline constexpr double kSumTol = 1e-9;

enum class ErrorKind {
  BadShape,
  NegativeRate,
  NonzeroDiagonal,
  NonFiniteRate,
  InvalidArgument,
  NonUniqueStationary,
  DefectiveGenerator,
  SolveFailed,
  NoConvergence,
  BadAxis,
  DegenerateDenominator,
  ZeroRateProduct,
  DomainError,
};

const char* to_string(ErrorKind kind);

// Every failure of the library surfaces as this exception. `row`/`col` are
// 1-based and only meaningful for per-entry rate errors; `value` carries a
// diagnostic number (null dimension, residual, condition number).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int row = -1, int col = -1,
        double value = 0.0, int count = -1)
      : std::runtime_error(message),
        kind_(kind),
        row_(row),
        col_(col),
        value_(value),
        count_(count) {}

  ErrorKind kind() const { return kind_; }
  int row() const { return row_; }
  int col() const { return col_; }
  double value() const { return value_; }
  int count() const { return count_; }

 private:
  ErrorKind kind_;
  int row_;
  int col_;
  double value_;
  int count_;
};

class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const Vector& entries() const { return entries_; }
  double operator[](int i) const { return entries_(i); }

 private:
  Vector entries_;
};

// Transition rates with w(dest, src) = W_{dest,src}: the rate of the jump
// src -> dest. Construct through validate_rates.
class RateMatrix {
 public:
  int n() const { return static_cast<int>(w_.rows()); }
  const Matrix& w() const { return w_; }
  double operator()(int dest, int src) const { return w_(dest, src); }

  // Named three-state rates.
  double a() const { return at3(1, 0); }
  double b() const { return at3(2, 0); }
  double c() const { return at3(0, 1); }
  double d() const { return at3(2, 1); }
  double e() const { return at3(0, 2); }
  double f() const { return at3(1, 2); }

  static RateMatrix from_abcdef(double a, double b, double c, double d, double e,
                                double f);

 private:
  friend RateMatrix validate_rates(const Matrix& raw);
  explicit RateMatrix(Matrix w) : w_(std::move(w)) {}
  double at3(int dest, int src) const;

  Matrix w_;
};

RateMatrix validate_rates(const Matrix& raw);
RateMatrix validate_rates(const std::vector<std::vector<double>>& raw);
RateMatrix validate_rates(std::initializer_list<std::initializer_list<double>> raw);

class Generator {
 public:
  int n() const { return static_cast<int>(m_.rows()); }
  const Matrix& m() const { return m_; }

 private:
  friend Generator generator_from_rates(const RateMatrix& w);
  explicit Generator(Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

Generator generator_from_rates(const RateMatrix& w);

// S(p) = 1/2 p^T sigma p.
struct QuadraticEntropy {
  Matrix sigma;

  int n() const { return static_cast<int>(sigma.rows()); }
  double value(const Vector& p) const { return 0.5 * p.dot(sigma * p); }
  Vector gradient(const Vector& p) const { return sigma * p; }

  // Shifts sigma by a multiple of the all-ones matrix so that the
  // (n-2, n-1) entry vanishes.
  QuadraticEntropy gauge_fixed() const;
};

// dp/dt = (n P + k_mat) grad S(p), P = I - J/n.
struct QTDecomposition {
  int n = 0;
  QuadraticEntropy entropy;
  Matrix k_mat;
  std::optional<double> r;
  double residual = 0.0;
  std::string warning;

  Matrix operator_matrix() const;
};

// Projector onto the complement of the all-ones direction.
Matrix ones_complement_projector(int n);

// The three-state unit hamiltonian matrix, K = r * this.
Matrix unit_hamiltonian_3state();

struct SpectralInfo {
  std::vector<std::complex<double>> eigenvalues;
  int zero_index = 0;
  double gap = 0.0;
  int null_dim = 0;
};

enum class Relaxation { Monotonic, Oscillatory, Boundary };

const char* to_code(Relaxation cls);

struct RelaxationClass {
  Relaxation cls = Relaxation::Boundary;
  double discriminant = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  double q = 0.0;
};

struct UVWCoordinates {
  double k_c = 0.0;
  double l = 0.0;
  double m_c = 0.0;
  double omega = 0.0;
  double u = 0.0;
  double v = 0.0;
};

}  // namespace pmeqt

#endif
