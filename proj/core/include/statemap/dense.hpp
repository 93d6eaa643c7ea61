#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "statemap/hilbert.hpp"

namespace statemap {

// Square complex matrix in row-major storage. Used by the brute-force oracle
// and for exporting closed-form operators; never on the matrix-free path.
class DenseMatrix {
public:
  using Storage = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit DenseMatrix(std::size_t dimension);
  // Throws InputError unless `values` is square with finite entries.
  explicit DenseMatrix(Storage values);

  static DenseMatrix identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(values_.rows()); }

  Complex operator()(std::size_t row, std::size_t col) const { return values_(row, col); }
  Complex& operator()(std::size_t row, std::size_t col) { return values_(row, col); }

  const Storage& values() const noexcept { return values_; }

  DenseMatrix adjoint() const;
  DenseMatrix scaled(Complex alpha) const;

  // Column k replaced by `column`.
  void set_column(std::size_t k, const StateVector& column);

private:
  Storage values_;
};

StateVector matrix_apply(const DenseMatrix& m, const StateVector& c);
DenseMatrix matrix_multiply(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix matrix_add(const DenseMatrix& x, const DenseMatrix& y);
double frobenius_norm(const DenseMatrix& m) noexcept;
double frobenius_distance(const DenseMatrix& x, const DenseMatrix& y);

// ||M^dagger M - I||_F.
double unitarity_defect(const DenseMatrix& m);

} // namespace statemap
