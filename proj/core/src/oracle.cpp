#include "statemap/oracle.hpp"

#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "statemap/errors.hpp"

namespace statemap {

DenseMatrix dense_expm(const DenseMatrix& m) {
  const Eigen::MatrixXcd col_major = m.values();
  DenseMatrix::Storage result = col_major.exp();
  return DenseMatrix(std::move(result));
}

DenseMatrix orthonormal_completion(const StateVector& v) {
  detail::require_nonzero(v, "orthonormal_completion");
  const std::size_t n = v.dimension();
  std::vector<std::vector<Complex>> basis;
  basis.reserve(n);

  auto try_add = [&](std::vector<Complex> w) {
    double original = 0.0;
    for (const Complex& z : w) original += std::norm(z);
    original = std::sqrt(original);

    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * w[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= proj * q[i];
      }
    }
    double residual = 0.0;
    for (const Complex& z : w) residual += std::norm(z);
    residual = std::sqrt(residual);
    if (residual <= kSeedDependenceTolerance * original) return;
    for (Complex& z : w) z /= residual;
    basis.push_back(std::move(w));
  };

  try_add(std::vector<Complex>(v.amplitudes().begin(), v.amplitudes().end()));
  for (std::size_t k = 0; k < n && basis.size() < n; ++k) {
    std::vector<Complex> e(n);
    e[k] = 1.0;
    try_add(std::move(e));
  }
  if (basis.size() != n) {
    throw std::logic_error("orthonormal_completion: standard basis failed to complete");
  }

  DenseMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = basis[j][i];
  }
  return out;
}

DenseMatrix gram_schmidt_unitary(const StateVector& a, const StateVector& b) {
  detail::require_same_dimension(a, b, "gram_schmidt_unitary");
  detail::require_nonzero(a, "gram_schmidt_unitary(a)");
  detail::require_nonzero(b, "gram_schmidt_unitary(b)");
  const DenseMatrix psi = orthonormal_completion(a);
  const DenseMatrix phi = orthonormal_completion(b);
  DenseMatrix::Storage u = phi.values() * psi.values().adjoint();
  return DenseMatrix(std::move(u));
}

} // namespace statemap
