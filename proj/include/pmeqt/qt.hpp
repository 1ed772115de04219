#ifndef PMEQT_QT_HPP
#define PMEQT_QT_HPP

#include <vector>

#include "pmeqt/core.hpp"

namespace pmeqt {

// Returns (n P + K) sigma p.
Vector qt_vector_field(const QTDecomposition& qt, const Vector& p);

// Frobenius norm of (n P + K) sigma - g.
double reconstruction_residual(const QTDecomposition& qt, const Generator& g);

// Sigma = diag(-W21, -W12), K = 0.
QTDecomposition decompose_2state(const RateMatrix& w);

// Closed form: r = omega / xi with omega = (a+d+e) - (b+c+f); sigma entries
// are rational in the rates with denominator 3 + r^2, gauge sigma_23 = 0. All-zero rates return a zero
// decomposition carrying a DegenerateXi warning.
QTDecomposition decompose_3state(const RateMatrix& w);

struct NStateOptions {
  int max_alternating = 25;
  int max_newton = 200;
  double accept_residual = 1e-8;
};

// Numeric solve of the bilinear system (n P + K) sigma = g for a gauge-fixed
// symmetric sigma and an antisymmetric K with K 1 = 0. Throws NoConvergence
// (value = residual, count = iterations) when the residual stays above
// options.accept_residual.
QTDecomposition decompose_nstate(const RateMatrix& w, const NStateOptions& options = {});

// Orthonormal basis of the complement of the all-ones vector, n x (n-1).
Matrix ones_complement_basis(int n);

// Basis q_a q_b^T - q_b q_a^T (a < b) of antisymmetric matrices that vanish
// on the all-ones vector.
std::vector<Matrix> hamiltonian_basis(int n);

struct ParameterCount {
  int entropy = 0;      // n(n+1)/2 - 1 after the gauge fix
  int hamiltonian = 0;  // (n-1)(n-2)/2
  int rates = 0;        // n(n-1)
  int total() const { return entropy + hamiltonian; }
};

ParameterCount parameter_count(int n);

// Coefficient of K along the unit three-state hamiltonian matrix.
double hamiltonian_coefficient_3state(const Matrix& k_mat);

}  // namespace pmeqt

#endif
