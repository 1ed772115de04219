// Shared generators and independent oracles for the test binaries. Nothing
// here calls into the solver paths it is used to check.
#ifndef PMEQT_TESTS_SUPPORT_HPP
#define PMEQT_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pmeqt/core.hpp"

namespace pmeqt::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix random_rate_array(Rng& rng, int n) {
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w(i, j) = uniform(rng);
    }
  }
  return w;
}

inline RateMatrix random_rates(Rng& rng, int n) {
  return validate_rates(random_rate_array(rng, n));
}

inline RateMatrix random_symmetric_rates(Rng& rng, int n) {
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = uniform(rng);
  }
  return validate_rates(w);
}

// Symmetric part plus circulations along cyclic shifts: in-rate equals
// out-rate for every state.
inline RateMatrix random_doubly_stochastic_rates(Rng& rng, int n) {
  Matrix w = random_symmetric_rates(rng, n).w();
  for (int shift = 1; shift < n; ++shift) {
    const double amp = uniform(rng);
    for (int j = 0; j < n; ++j) w((j + shift) % n, j) += amp;
  }
  return validate_rates(w);
}

inline Vector random_probability(Rng& rng, int n) {
  Vector p(n);
  for (int i = 0; i < n; ++i) p(i) = -std::log(uniform(rng, 1e-12, 1.0));
  return p / p.sum();
}

// Generator written out entry by entry from (a..f).
inline Matrix generator_by_hand(double a, double b, double c, double d, double e,
                                double f) {
  Matrix g(3, 3);
  // clang-format off
  g << -(a + b),        c,        e,
             a, -(c + d),        f,
             b,        d, -(e + f);
  // clang-format on
  return g;
}

// Coefficients of det(lambda I - g) = lambda^3 + c2 lambda^2 + c1 lambda + c0,
// expanded by cofactors.
inline std::array<double, 3> char_poly_3(const Matrix& g) {
  const double c2 = -g.trace();
  double c1 = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) c1 += g(i, i) * g(j, j) - g(i, j) * g(j, i);
  }
  const double c0 = -g.determinant();
  return {c2, c1, c0};
}

// Roots of lambda^2 + p lambda + q by the quadratic formula.
inline std::array<std::complex<double>, 2> quadratic_roots(double p, double q) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(p * p - 4.0 * q));
  return {(-p + disc) / 2.0, (-p - disc) / 2.0};
}

// Null vector of g by brute-force Gaussian elimination on the system with the
// last equation replaced by normalization.
inline Vector null_space_oracle(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  Matrix a = g;
  a.row(n - 1).setOnes();
  Vector rhs = Vector::Zero(n);
  rhs(n - 1) = 1.0;
  return a.fullPivLu().solve(rhs);
}

// Antisymmetric K that vanishes on the ones vector, obtained from the linear
// condition B C + C B^T = n (B - B^T) with B the generator in an orthonormal
// basis of the ones complement. Vectorised with Kronecker products.
inline Matrix hamiltonian_by_linear_reduction(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  // Gram-Schmidt on e_1 - e_k gives a basis of the ones complement.
  Matrix q(n, n - 1);
  for (int k = 1; k < n; ++k) {
    Vector v = Vector::Zero(n);
    v(0) = 1.0;
    v(k) = -1.0;
    for (int j = 0; j < k - 1; ++j) v -= q.col(j).dot(v) * q.col(j);
    q.col(k - 1) = v.normalized();
  }
  const int m = n - 1;
  const Matrix b = q.transpose() * g * q;
  // vec(B C) = (I kron B) vec C, vec(C B^T) = (B kron I) vec C.
  Matrix op = Matrix::Zero(m * m, m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        op(i + k * m, j + k * m) += b(i, j);  // I kron B
        op(k + i * m, k + j * m) += b(i, j);  // B kron I
      }
    }
  }
  // Restrict to antisymmetric C = sum_{a<b} c_ab (E_ab - E_ba).
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int bb = a + 1; bb < m; ++bb) pairs.emplace_back(a, bb);
  }
  Matrix basis(m * m, static_cast<Eigen::Index>(pairs.size()));
  basis.setZero();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    basis(pairs[p].first + pairs[p].second * m, p) = 1.0;
    basis(pairs[p].second + pairs[p].first * m, p) = -1.0;
  }
  const Matrix rhs_m = static_cast<double>(n) * (b - b.transpose());
  const Vector rhs = Eigen::Map<const Vector>(rhs_m.data(), m * m);
  const Vector coeff = (op * basis).colPivHouseholderQr().solve(rhs);
  Matrix c = Matrix::Zero(m, m);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    c(pairs[p].first, pairs[p].second) = coeff(p);
    c(pairs[p].second, pairs[p].first) = -coeff(p);
  }
  return q * c * q.transpose();
}

// Symmetric sigma with sigma(n-2, n-1) = 0 solving (n P + K) sigma = G in the
// least-squares sense, P = I - J / n. Columns are built entry by entry.
inline Matrix sigma_by_matching(const Matrix& g, const Matrix& k) {
  const int n = static_cast<int>(g.rows());
  const Matrix op = static_cast<double>(n) * Matrix::Identity(n, n) - Matrix::Ones(n, n) + k;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (!(i == n - 2 && j == n - 1)) slots.emplace_back(i, j);
    }
  }
  Matrix jac(n * n, static_cast<Eigen::Index>(slots.size()));
  for (std::size_t c = 0; c < slots.size(); ++c) {
    Matrix e = Matrix::Zero(n, n);
    e(slots[c].first, slots[c].second) = e(slots[c].second, slots[c].first) = 1.0;
    const Matrix col = op * e;
    jac.col(static_cast<Eigen::Index>(c)) = Eigen::Map<const Vector>(col.data(), n * n);
  }
  const Vector theta = jac.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                           .solve(Eigen::Map<const Vector>(g.data(), n * n));
  Matrix sigma = Matrix::Zero(n, n);
  for (std::size_t c = 0; c < slots.size(); ++c) {
    sigma(slots[c].first, slots[c].second) = sigma(slots[c].second, slots[c].first) = theta(static_cast<Eigen::Index>(c));
  }
  return sigma;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace pmeqt::testing

#endif
