#ifndef PMEQT_PME_HPP
#define PMEQT_PME_HPP

#include "pmeqt/core.hpp"

namespace pmeqt {

struct StructureReport {
  bool symmetric = false;
  bool doubly_stochastic = false;
  bool detailed_balance = false;
  ProbabilityVector stationary;
  int null_dim = 0;
};

// Dimension of the generator's null space (numerical rank deficiency).
int null_dimension(const Generator& g);

// Throws NonUniqueStationary when the null space is degenerate.
ProbabilityVector stationary_distribution(const Generator& g);

// Eigenvalues sorted by descending real part, then ascending imaginary part.
SpectralInfo spectrum(const Generator& g);

// Sum of the principal 2x2 minors. For n = 3 the nonzero eigenvalues solve
// lambda^2 + xi lambda + q = 0 with xi = -trace(g).
double principal_minor_sum(const Generator& g);

StructureReport classify_structure(const RateMatrix& w);

}  // namespace pmeqt

#endif
