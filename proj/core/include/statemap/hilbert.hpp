#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace statemap {

using Complex = std::complex<double>;

// A finite list of complex amplitudes. Need not be normalized; may be zero
// (zero vectors are legal values, but rejected wherever a pure state is
// required).
class StateVector {
public:
  explicit StateVector(std::vector<Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  static StateVector zeros(std::size_t dimension);
  static StateVector basis(std::size_t dimension, std::size_t index);

  // Skips the finiteness scan. For library internals whose output is a
  // finite combination of finite vectors.
  static StateVector from_trusted(std::vector<Complex> amplitudes);

  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  bool is_zero() const noexcept;

  friend bool operator==(const StateVector&, const StateVector&) = default;

private:
  struct Trusted {};
  StateVector(std::vector<Complex> amplitudes, Trusted) noexcept
      : amplitudes_(std::move(amplitudes)) {}

  std::vector<Complex> amplitudes_;
};

// <x, y>, conjugate-linear in x and linear in y.
Complex inner_product(const StateVector& x, const StateVector& y);

double norm_squared(const StateVector& x) noexcept;
double vec_norm(const StateVector& x) noexcept;

StateVector vec_add(const StateVector& x, const StateVector& y);
StateVector vec_sub(const StateVector& x, const StateVector& y);
StateVector vec_scale(Complex alpha, const StateVector& x);
// alpha*x + beta*y in one pass.
StateVector vec_combine(Complex alpha, const StateVector& x, Complex beta,
                        const StateVector& y);

inline StateVector operator+(const StateVector& x, const StateVector& y) { return vec_add(x, y); }
inline StateVector operator-(const StateVector& x, const StateVector& y) { return vec_sub(x, y); }
inline StateVector operator*(Complex alpha, const StateVector& x) { return vec_scale(alpha, x); }

// Real scalars characterizing a state pair (a, b):
//   <b,a> = g + i*sigma
//   G_sq  = <a,a><b,b> - |<a,b>|^2   (Gram determinant, >= 0)
//   Gamma = sqrt(G_sq + sigma^2)
struct InvariantSet {
  double g = 0.0;
  double sigma = 0.0;
  double G_sq = 0.0;
  double Gamma = 0.0;
};

// Relative band within which a negative Gram determinant is treated as zero.
inline constexpr double kGramClampTolerance = 1e-12;

// Throws InputError for a zero vector or a dimension mismatch.
//
// G_sq is evaluated as <a,a> * ||b - P_a b||^2 with one re-projection pass,
// which is nonnegative by construction and keeps relative accuracy for nearly
// collinear pairs, where the textbook difference <a,a><b,b> - |<a,b>|^2
// cancels to rounding noise.
InvariantSet invariants(const StateVector& a, const StateVector& b);

namespace detail {
// b = mu*a + b_perp with <a, b_perp> = 0 to rounding.
struct PairDecomposition {
  InvariantSet inv;
  double aa = 0.0;
  double bb = 0.0;
  Complex ab;
  std::vector<Complex> b_perp;
};
PairDecomposition decompose_pair(const StateVector& a, const StateVector& b);

void require_same_dimension(const StateVector& x, const StateVector& y,
                            const char* what);
void require_nonzero(const StateVector& x, const char* what);
} // namespace detail

} // namespace statemap
