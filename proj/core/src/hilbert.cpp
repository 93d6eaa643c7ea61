#include "statemap/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "statemap/errors.hpp"

namespace statemap {

namespace detail {

void require_same_dimension(const StateVector& x, const StateVector& y,
                            const char* what) {
  if (x.dimension() != y.dimension()) {
    throw InputError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(x.dimension()) + " vs " +
                     std::to_string(y.dimension()) + ")");
  }
}

void require_nonzero(const StateVector& x, const char* what) {
  if (x.is_zero()) {
    throw InputError(std::string(what) + ": zero input vector");
  }
}

} // namespace detail

namespace {

void check_amplitudes(const std::vector<Complex>& amplitudes) {
  if (amplitudes.empty()) {
    throw InputError("state vector: dimension must be at least 1");
  }
  for (const Complex& z : amplitudes) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InputError("state vector: non-finite amplitude");
    }
  }
}

// Written out on real parts so the hot loops avoid the NaN-recovery path of
// std::complex multiplication.
Complex raw_inner(std::span<const Complex> x, std::span<const Complex> y) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

} // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  check_amplitudes(amplitudes_);
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::vector<Complex>(amplitudes)) {}

StateVector StateVector::zeros(std::size_t dimension) {
  if (dimension == 0) {
    throw InputError("state vector: dimension must be at least 1");
  }
  return StateVector(std::vector<Complex>(dimension), Trusted{});
}

StateVector StateVector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) {
    throw InputError("basis vector index out of range");
  }
  std::vector<Complex> v(dimension);
  v[index] = 1.0;
  return StateVector(std::move(v), Trusted{});
}

StateVector StateVector::from_trusted(std::vector<Complex> amplitudes) {
  return StateVector(std::move(amplitudes), Trusted{});
}

bool StateVector::is_zero() const noexcept {
  return std::all_of(amplitudes_.begin(), amplitudes_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

Complex inner_product(const StateVector& x, const StateVector& y) {
  detail::require_same_dimension(x, y, "inner_product");
  return raw_inner(x.amplitudes(), y.amplitudes());
}

double norm_squared(const StateVector& x) noexcept {
  double s = 0.0;
  for (const Complex& z : x.amplitudes()) {
    s += z.real() * z.real() + z.imag() * z.imag();
  }
  return s;
}

double vec_norm(const StateVector& x) noexcept { return std::sqrt(norm_squared(x)); }

StateVector vec_combine(Complex alpha, const StateVector& x, Complex beta,
                        const StateVector& y) {
  detail::require_same_dimension(x, y, "vec_combine");
  std::vector<Complex> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = alpha * x[i] + beta * y[i];
  }
  return StateVector::from_trusted(std::move(out));
}

StateVector vec_add(const StateVector& x, const StateVector& y) {
  detail::require_same_dimension(x, y, "vec_add");
  std::vector<Complex> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
  return StateVector::from_trusted(std::move(out));
}

StateVector vec_sub(const StateVector& x, const StateVector& y) {
  detail::require_same_dimension(x, y, "vec_sub");
  std::vector<Complex> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
  return StateVector::from_trusted(std::move(out));
}

StateVector vec_scale(Complex alpha, const StateVector& x) {
  std::vector<Complex> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * x[i];
  return StateVector::from_trusted(std::move(out));
}

namespace detail {

PairDecomposition decompose_pair(const StateVector& a, const StateVector& b) {
  require_same_dimension(a, b, "invariants");
  require_nonzero(a, "invariants(a)");
  require_nonzero(b, "invariants(b)");

  PairDecomposition out;
  out.aa = norm_squared(a);
  out.bb = norm_squared(b);
  out.ab = raw_inner(a.amplitudes(), b.amplitudes());
  const Complex ba = std::conj(out.ab);
  // +0.0 folds a negative zero into +0.
  out.inv.g = ba.real() + 0.0;
  out.inv.sigma = ba.imag() + 0.0;

  // Component of b orthogonal to a, refined once against rounding drift.
  out.b_perp.assign(b.amplitudes().begin(), b.amplitudes().end());
  Complex mu = out.ab / out.aa;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < out.b_perp.size(); ++i) out.b_perp[i] -= mu * a[i];
    mu = raw_inner(a.amplitudes(), out.b_perp) / out.aa;
  }
  double perp_sq = 0.0;
  for (const Complex& z : out.b_perp) perp_sq += std::norm(z);

  double gram = out.aa * perp_sq;
  if (gram < 0.0) {
    // Unreachable with the projection form; kept as the explicit contract.
    if (-gram > kGramClampTolerance * out.aa * out.bb) {
      throw std::logic_error("invariants: negative Gram determinant");
    }
    gram = 0.0;
  }
  out.inv.G_sq = gram;
  out.inv.Gamma = std::sqrt(gram + out.inv.sigma * out.inv.sigma);
  return out;
}

} // namespace detail

InvariantSet invariants(const StateVector& a, const StateVector& b) {
  return detail::decompose_pair(a, b).inv;
}

} // namespace statemap
