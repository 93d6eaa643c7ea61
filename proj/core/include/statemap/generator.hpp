#pragma once

#include <cstddef>
#include <string_view>

#include "statemap/dense.hpp"
#include "statemap/hilbert.hpp"

namespace statemap {

// Which closed forms apply to T[a,b].
enum class CaseTag {
  GenericPair,    // G != 0: cubic minimal polynomial, three eigenprojectors
  PhaseCollinear, // G == 0, b = alpha*a with alpha not real: two eigenprojectors
  RealCollinear,  // b = k*a with k real: T[a,b] is the zero map
};

std::string_view to_string(CaseTag tag) noexcept;

// Relative threshold on the squared quantities G_sq and sigma^2 (roughly a
// 1e-10 amplitude difference).
inline constexpr double kDefaultClassificationEpsilon = 1e-20;

// `scale` is <a,a><b,b>.
CaseTag classify(const InvariantSet& inv, double scale,
                 double epsilon = kDefaultClassificationEpsilon) noexcept;

// The anti-Hermitian map T[a,b](c) = <a,c> b - <b,c> a.
//
// Immutable. Construction splits b = mu*a + b_perp once; applications use
// the equivalent form
//   T(c) = <a,c> b_perp - (<b_perp,c> + 2i sigma <a,c> / <a,a>) a,
// whose rounding error scales with Gamma rather than with ||a|| ||b||, so
// nearly collinear pairs keep full relative accuracy. Each application costs
// two inner products and one fused combination.
class Generator {
public:
  // Throws InputError on a zero vector or a dimension mismatch.
  Generator(StateVector a, StateVector b,
            double epsilon = kDefaultClassificationEpsilon);

  const StateVector& a() const noexcept { return a_; }
  const StateVector& b() const noexcept { return b_; }
  std::size_t dimension() const noexcept { return a_.dimension(); }

  const InvariantSet& invariants() const noexcept { return inv_; }
  CaseTag case_tag() const noexcept { return tag_; }

  double aa() const noexcept { return aa_; }
  double bb() const noexcept { return bb_; }
  Complex ab() const noexcept { return ab_; }
  Complex ba() const noexcept { return std::conj(ab_); }
  // b minus its projection onto a, and its squared norm.
  const StateVector& b_perp() const noexcept { return b_perp_; }
  double perp_sq() const noexcept { return perp_sq_; }

  StateVector apply(const StateVector& c) const;

  // (k0 + k1*T + k2*T^2)(c). T^2(c) stays inside span{a, b_perp}, so its
  // coordinates follow from the cached products and the whole polynomial
  // costs the same two inner products as a single application.
  StateVector apply_quadratic(Complex k0, Complex k1, Complex k2,
                              const StateVector& c) const;

private:
  Generator(StateVector a, StateVector b, detail::PairDecomposition parts, double epsilon);

  StateVector a_;
  StateVector b_;
  StateVector b_perp_;
  double aa_;
  double bb_;
  double perp_sq_;
  Complex ab_;
  InvariantSet inv_;
  CaseTag tag_;
};

Generator make_generator(StateVector a, StateVector b,
                         double epsilon = kDefaultClassificationEpsilon);

StateVector apply_generator(const Generator& gen, const StateVector& c);

// T[a,b](c) straight from the definition. Unlike Generator this accepts zero
// vectors, which the commutator identity produces as intermediate arguments.
StateVector generator_action(const StateVector& a, const StateVector& b,
                             const StateVector& c);

// Dense b a^dagger - a b^dagger.
DenseMatrix generator_matrix(const Generator& gen);

// ||([p,q] - T[p(c), d] - T[c, p(d)])(v)|| where q = T[c, d]. Zero in exact
// arithmetic; unnormalized.
double commutator_residual(const Generator& p, const Generator& q,
                           const StateVector& v);

} // namespace statemap
