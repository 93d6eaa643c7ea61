#include "statemap/generator.hpp"

#include "statemap/errors.hpp"

namespace statemap {

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
  case CaseTag::GenericPair:
    return "generic";
  case CaseTag::PhaseCollinear:
    return "phase_collinear";
  case CaseTag::RealCollinear:
    return "real_collinear";
  }
  return "unknown";
}

CaseTag classify(const InvariantSet& inv, double scale, double epsilon) noexcept {
  if (inv.G_sq > epsilon * scale) return CaseTag::GenericPair;
  if (inv.sigma * inv.sigma > epsilon * scale) return CaseTag::PhaseCollinear;
  return CaseTag::RealCollinear;
}

Generator::Generator(StateVector a, StateVector b, double epsilon)
    : Generator(a, b, detail::decompose_pair(a, b), epsilon) {}

Generator::Generator(StateVector a, StateVector b, detail::PairDecomposition parts,
                     double epsilon)
    : a_(std::move(a)),
      b_(std::move(b)),
      b_perp_(StateVector::from_trusted(std::move(parts.b_perp))),
      aa_(parts.aa),
      bb_(parts.bb),
      perp_sq_(norm_squared(b_perp_)),
      ab_(parts.ab),
      inv_(parts.inv),
      tag_(classify(parts.inv, parts.aa * parts.bb, epsilon)) {}

StateVector Generator::apply(const StateVector& c) const {
  return apply_quadratic(0.0, 1.0, 0.0, c);
}

StateVector Generator::apply_quadratic(Complex k0, Complex k1, Complex k2,
                                       const StateVector& c) const {
  detail::require_same_dimension(a_, c, "generator apply");
  // In the orthogonal frame {b_perp, a}, with w = -2i sigma / <a,a>:
  //   T(x_b b_perp + x_a a) = (<a,a> x_a) b_perp + (-<b_perp,b_perp> x_b + w <a,a> x_a) a
  // and T(c) = <a,c> b_perp + (-<b_perp,c> + w <a,c>) a.
  const Complex w{0.0, -2.0 * inv_.sigma / aa_};
  const Complex p = inner_product(a_, c);
  const Complex r = inner_product(b_perp_, c);
  const Complex t1_perp = p;
  const Complex t1_a = -r + w * p;
  const Complex t2_perp = aa_ * t1_a;
  const Complex t2_a = -perp_sq_ * t1_perp + w * aa_ * t1_a;
  const Complex coeff_perp = k1 * t1_perp + k2 * t2_perp;
  const Complex coeff_a = k1 * t1_a + k2 * t2_a;

  std::vector<Complex> out(c.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = k0 * c[i] + coeff_a * a_[i] + coeff_perp * b_perp_[i];
  }
  return StateVector::from_trusted(std::move(out));
}

Generator make_generator(StateVector a, StateVector b, double epsilon) {
  return Generator(std::move(a), std::move(b), epsilon);
}

StateVector apply_generator(const Generator& gen, const StateVector& c) {
  return gen.apply(c);
}

StateVector generator_action(const StateVector& a, const StateVector& b,
                             const StateVector& c) {
  detail::require_same_dimension(a, b, "generator_action");
  detail::require_same_dimension(a, c, "generator_action");
  return vec_combine(inner_product(a, c), b, -inner_product(b, c), a);
}

DenseMatrix generator_matrix(const Generator& gen) {
  const std::size_t n = gen.dimension();
  DenseMatrix m(n);
  const auto& a = gen.a();
  const auto& b = gen.b();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = b[i] * std::conj(a[j]) - a[i] * std::conj(b[j]);
    }
  }
  return m;
}

double commutator_residual(const Generator& p, const Generator& q,
                           const StateVector& v) {
  detail::require_same_dimension(p.a(), q.a(), "commutator_residual");
  detail::require_same_dimension(p.a(), v, "commutator_residual");
  const StateVector& c = q.a();
  const StateVector& d = q.b();

  const StateVector lhs = p.apply(q.apply(v)) - q.apply(p.apply(v));
  const StateVector rhs = generator_action(p.apply(c), d, v) +
                          generator_action(c, p.apply(d), v);
  return vec_norm(lhs - rhs);
}

} // namespace statemap
