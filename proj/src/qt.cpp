#include "pmeqt/qt.hpp"

#include <cmath>
#include <utility>

namespace pmeqt {

namespace {

struct SigmaIndex {
  int i;
  int j;
};

// Upper-triangle entries of sigma minus the gauge-fixed (n-2, n-1) slot.
std::vector<SigmaIndex> sigma_parameters(int n) {
  std::vector<SigmaIndex> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i == n - 2 && j == n - 1) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

Matrix sigma_from(const std::vector<SigmaIndex>& idx, const Vector& theta, int n) {
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    s(idx[k].i, idx[k].j) = theta(k);
    s(idx[k].j, idx[k].i) = theta(k);
  }
  return s;
}

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

// Columns d(L sigma)/d theta_k = L E_k.
Matrix sigma_jacobian(const Matrix& op, const std::vector<SigmaIndex>& idx) {
  const auto n = op.rows();
  Matrix jac(n * n, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Matrix e = Matrix::Zero(n, n);
    e(idx[k].i, idx[k].j) = 1.0;
    e(idx[k].j, idx[k].i) = 1.0;
    jac.col(k) = flatten(op * e);
  }
  return jac;
}

Matrix hamiltonian_jacobian(const std::vector<Matrix>& basis, const Matrix& sigma) {
  const auto n = sigma.rows();
  Matrix jac(n * n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) jac.col(b) = flatten(basis[b] * sigma);
  return jac;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coeff, int n) {
  Matrix k = Matrix::Zero(n, n);
  for (std::size_t b = 0; b < basis.size(); ++b) k += coeff(b) * basis[b];
  return k;
}

// Least-squares sigma for a fixed operator n P + K.
Vector solve_sigma(const Matrix& op, const Matrix& g, const std::vector<SigmaIndex>& idx) {
  const Matrix jac = sigma_jacobian(op, idx);
  return jac.colPivHouseholderQr().solve(flatten(g));
}

}  // namespace

Vector qt_vector_field(const QTDecomposition& qt, const Vector& p) {
  if (p.size() != qt.n) throw Error(ErrorKind::BadShape, "state size mismatch");
  return qt.operator_matrix() * (qt.entropy.sigma * p);
}

double reconstruction_residual(const QTDecomposition& qt, const Generator& g) {
  if (g.n() != qt.n) throw Error(ErrorKind::BadShape, "generator size mismatch");
  return (qt.operator_matrix() * qt.entropy.sigma - g.m()).norm();
}

Matrix ones_complement_basis(int n) {
  Matrix seed = Matrix::Identity(n, n);
  seed.col(0).setOnes();
  Eigen::HouseholderQR<Matrix> qr(seed);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - 1);
}

std::vector<Matrix> hamiltonian_basis(int n) {
  const Matrix q = ones_complement_basis(n);
  std::vector<Matrix> out;
  for (int a = 0; a < n - 1; ++a) {
    for (int b = a + 1; b < n - 1; ++b) {
      out.push_back(q.col(a) * q.col(b).transpose() - q.col(b) * q.col(a).transpose());
    }
  }
  return out;
}

ParameterCount parameter_count(int n) {
  return ParameterCount{n * (n + 1) / 2 - 1, (n - 1) * (n - 2) / 2, n * (n - 1)};
}

double hamiltonian_coefficient_3state(const Matrix& k_mat) {
  const Matrix k0 = unit_hamiltonian_3state();
  return k_mat.cwiseProduct(k0).sum() / k0.squaredNorm();
}

QTDecomposition decompose_2state(const RateMatrix& w) {
  if (w.n() != 2) throw Error(ErrorKind::BadShape, "decompose_2state needs n = 2");
  QTDecomposition qt;
  qt.n = 2;
  qt.entropy.sigma = Matrix::Zero(2, 2);
  qt.entropy.sigma(0, 0) = -w(1, 0);
  qt.entropy.sigma(1, 1) = -w(0, 1);
  qt.k_mat = Matrix::Zero(2, 2);
  qt.residual = reconstruction_residual(qt, generator_from_rates(w));
  return qt;
}

QTDecomposition decompose_3state(const RateMatrix& w) {
  if (w.n() != 3) throw Error(ErrorKind::BadShape, "decompose_3state needs n = 3");
  const double xi = w.a() + w.b() + w.c() + w.d() + w.e() + w.f();
  QTDecomposition qt;
  qt.n = 3;
  if (xi == 0.0) {
    qt.entropy.sigma = Matrix::Zero(3, 3);
    qt.k_mat = Matrix::Zero(3, 3);
    qt.r = 0.0;
    qt.residual = 0.0;
    qt.warning = "DegenerateXi: all rates are zero";
    return qt;
  }
  const double omega = (w.a() + w.d() + w.e()) - (w.b() + w.c() + w.f());
  const double r = omega / xi;
  qt.r = r;
  qt.k_mat = r * unit_hamiltonian_3state();

  // Entries of sigma with the gauge sigma_23 = 0.
  const double den = 3.0 + r * r;
  const double a = w.a(), b = w.b(), c = w.c(), d = w.d(), e = w.e(), f = w.f();
  Matrix& s = qt.entropy.sigma;
  s = Matrix::Zero(3, 3);
  s(0, 0) = (-2 * a - (1 - r) * b + (1 + r) * c - (1 - r) * d) / den;
  s(0, 1) = s(1, 0) = ((1 + r) * c - (1 - r) * d) / den;
  s(0, 2) = s(2, 0) = ((1 - r) * e - (1 + r) * f) / den;
  s(1, 1) = (-2 * d - (1 - r) * c) / den;
  s(2, 2) = (-2 * f - (1 + r) * e) / den;
  qt.residual = reconstruction_residual(qt, generator_from_rates(w));
  return qt;
}

QTDecomposition decompose_nstate(const RateMatrix& w, const NStateOptions& options) {
  const int n = w.n();
  const ParameterCount count = parameter_count(n);
  if (count.total() != count.rates) {
    throw Error(ErrorKind::SolveFailed, "unknown count does not match rate count");
  }
  const Generator g = generator_from_rates(w);
  const Matrix& target = g.m();
  const auto idx = sigma_parameters(n);
  const auto basis = hamiltonian_basis(n);
  const Matrix sym = static_cast<double>(n) * ones_complement_projector(n);
  const auto ns = static_cast<Eigen::Index>(idx.size());
  const auto nk = static_cast<Eigen::Index>(basis.size());
  const double scale = std::max(1.0, target.norm());
  const double stop = 1e-14 * scale;

  Vector theta = solve_sigma(sym, target, idx);
  Vector coeff = Vector::Zero(nk);
  Matrix sigma = sigma_from(idx, theta, n);
  Matrix k = Matrix::Zero(n, n);
  auto residual_of = [&](const Matrix& s, const Matrix& kk) {
    return ((sym + kk) * s - target).norm();
  };
  double res = residual_of(sigma, k);
  int iterations = 0;

  // Alternating linear solves: K given sigma, then sigma given K.
  for (int it = 0; it < options.max_alternating && nk > 0 && res > stop; ++it) {
    ++iterations;
    const Matrix jac_k = hamiltonian_jacobian(basis, sigma);
    coeff = jac_k.colPivHouseholderQr().solve(flatten(target - sym * sigma));
    k = combine(basis, coeff, n);
    theta = solve_sigma(sym + k, target, idx);
    sigma = sigma_from(idx, theta, n);
    res = residual_of(sigma, k);
  }

  // Damped Gauss-Newton on the joint bilinear system.
  double mu = 1e-6;
  for (int it = 0; it < options.max_newton && nk > 0 && res > stop; ++it) {
    ++iterations;
    Matrix jac(n * n, ns + nk);
    jac.leftCols(ns) = sigma_jacobian(sym + k, idx);
    jac.rightCols(nk) = hamiltonian_jacobian(basis, sigma);
    const Vector rvec = flatten((sym + k) * sigma - target);
    const Matrix normal = jac.transpose() * jac;
    const Vector grad = jac.transpose() * rvec;
    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      Matrix damped = normal;
      damped.diagonal().array() += mu * (1.0 + normal.diagonal().array());
      const Vector step = damped.ldlt().solve(-grad);
      const Vector theta_try = theta + step.head(ns);
      const Vector coeff_try = coeff + step.tail(nk);
      const Matrix sigma_try = sigma_from(idx, theta_try, n);
      const Matrix k_try = combine(basis, coeff_try, n);
      const double res_try = residual_of(sigma_try, k_try);
      if (res_try < res) {
        theta = theta_try;
        coeff = coeff_try;
        sigma = sigma_try;
        k = k_try;
        res = res_try;
        mu = std::max(mu * 0.1, 1e-15);
        improved = true;
        break;
      }
      mu *= 10.0;
    }
    if (!improved) break;
  }

  if (!(res <= options.accept_residual)) {
    throw Error(ErrorKind::NoConvergence,
                "bilinear solve stalled at residual " + std::to_string(res), -1, -1,
                res, iterations);
  }
  QTDecomposition qt;
  qt.n = n;
  qt.entropy.sigma = sigma;
  qt.k_mat = k;
  if (n == 3) qt.r = hamiltonian_coefficient_3state(k);
  qt.residual = res;
  return qt;
}

}  // namespace pmeqt
