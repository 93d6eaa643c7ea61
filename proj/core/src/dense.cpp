#include "statemap/dense.hpp"

#include <cmath>
#include <string>

#include "statemap/errors.hpp"

namespace statemap {

namespace {

void require_conforming(const DenseMatrix& x, const DenseMatrix& y, const char* what) {
  if (x.dimension() != y.dimension()) {
    throw InputError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(x.dimension()) + " vs " +
                     std::to_string(y.dimension()) + ")");
  }
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t dimension)
    : values_(Storage::Zero(static_cast<Eigen::Index>(dimension),
                            static_cast<Eigen::Index>(dimension))) {
  if (dimension == 0) throw InputError("dense matrix: dimension must be at least 1");
}

DenseMatrix::DenseMatrix(Storage values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols()) {
    throw InputError("dense matrix: not square");
  }
  if (values_.rows() == 0) throw InputError("dense matrix: dimension must be at least 1");
  if (!values_.allFinite()) throw InputError("dense matrix: non-finite entry");
}

DenseMatrix DenseMatrix::identity(std::size_t dimension) {
  DenseMatrix m(dimension);
  m.values_.setIdentity();
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(dimension());
  m.values_ = values_.adjoint();
  return m;
}

DenseMatrix DenseMatrix::scaled(Complex alpha) const {
  DenseMatrix m(dimension());
  m.values_ = alpha * values_;
  return m;
}

void DenseMatrix::set_column(std::size_t k, const StateVector& column) {
  if (column.dimension() != dimension() || k >= dimension()) {
    throw InputError("dense matrix: set_column out of range");
  }
  for (std::size_t i = 0; i < dimension(); ++i) {
    values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = column[i];
  }
}

StateVector matrix_apply(const DenseMatrix& m, const StateVector& c) {
  if (m.dimension() != c.dimension()) {
    throw InputError("matrix_apply: dimension mismatch (" + std::to_string(m.dimension()) +
                     " vs " + std::to_string(c.dimension()) + ")");
  }
  const auto n = static_cast<Eigen::Index>(c.dimension());
  Eigen::Map<const Eigen::VectorXcd> in(c.amplitudes().data(), n);
  std::vector<Complex> out(c.dimension());
  Eigen::Map<Eigen::VectorXcd>(out.data(), n).noalias() = m.values() * in;
  return StateVector::from_trusted(std::move(out));
}

DenseMatrix matrix_multiply(const DenseMatrix& x, const DenseMatrix& y) {
  require_conforming(x, y, "matrix_multiply");
  DenseMatrix::Storage product = x.values() * y.values();
  return DenseMatrix(std::move(product));
}

DenseMatrix matrix_add(const DenseMatrix& x, const DenseMatrix& y) {
  require_conforming(x, y, "matrix_add");
  DenseMatrix::Storage sum = x.values() + y.values();
  return DenseMatrix(std::move(sum));
}

double frobenius_norm(const DenseMatrix& m) noexcept { return m.values().norm(); }

double frobenius_distance(const DenseMatrix& x, const DenseMatrix& y) {
  require_conforming(x, y, "frobenius_distance");
  return (x.values() - y.values()).norm();
}

double unitarity_defect(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  return (m.values().adjoint() * m.values() - DenseMatrix::Storage::Identity(n, n)).norm();
}

} // namespace statemap
