#include "statemap/exponential.hpp"

#include <cmath>
#include <numbers>

namespace statemap {

namespace {

constexpr Complex kI{0.0, 1.0};

double sinc(double y) noexcept {
  if (std::abs(y) < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
  }
  return std::sin(y) / y;
}

// (e^{iy} - 1) / (iy) = sinc(y) + i (y/2) sinc^2(y/2), free of cancellation.
Complex phi1_imaginary(double y) noexcept {
  const double half = sinc(0.5 * y);
  return {sinc(y), 0.5 * y * half * half};
}

} // namespace

std::string_view to_string(Branch branch) noexcept {
  return branch == Branch::ShortWay ? "short" : "long";
}

std::optional<double> exponent_normalizer(const Generator& gen) noexcept {
  switch (gen.case_tag()) {
  case CaseTag::GenericPair:
    return gen.invariants().Gamma;
  case CaseTag::PhaseCollinear:
    return gen.invariants().sigma;
  case CaseTag::RealCollinear:
    break;
  }
  return std::nullopt;
}

namespace detail {

ExponentialCoefficients closed_form_coefficients(const InvariantSet& inv, double theta) {
  const double s = inv.sigma;
  const double gm = inv.Gamma;
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);
  const Complex phase = std::exp(-kI * (theta * s / gm));

  const Complex linear =
      (2.0 * kI * s + phase * ((gm + s * s / gm) * sin_t - 2.0 * kI * s * cos_t)) / inv.G_sq;
  const Complex quadratic = (1.0 - phase * (cos_t + kI * (s / gm) * sin_t)) / inv.G_sq;
  return {linear, quadratic};
}

ExponentialCoefficients interpolating_coefficients(const InvariantSet& inv, double theta) {
  // lambda_1 = -i m1, lambda_2 = i m2 with m1 m2 = G^2 and m1 + m2 = 2 Gamma.
  double m1 = 0.0;
  double m2 = 0.0;
  if (inv.sigma >= 0.0) {
    m1 = inv.Gamma + inv.sigma;
    m2 = inv.G_sq / m1;
  } else {
    m2 = inv.Gamma - inv.sigma;
    m1 = inv.G_sq / m2;
  }
  const Complex l1 = -kI * m1;
  const double rate = theta / inv.Gamma;

  // Divided differences of x -> exp(rate * x).
  const Complex d01 = rate * phi1_imaginary(-rate * m1);
  const Complex d02 = rate * phi1_imaginary(rate * m2);
  const Complex d012 = (d02 - d01) / (kI * (m1 + m2));
  return {d01 - l1 * d012, d012};
}

ExponentialCoefficients phase_coefficients(const InvariantSet& inv, double theta) {
  return {std::exp(-kI * theta) * std::sin(theta) / inv.sigma, 0.0};
}

ExponentialCoefficients rodrigues_coefficients(const InvariantSet& inv, double theta) {
  const double gm = inv.Gamma;
  return {std::sin(theta) / gm, (1.0 - std::cos(theta)) / (gm * gm)};
}

} // namespace detail

ExponentialCoefficients exponential_coefficients(const Generator& gen, double theta) {
  const InvariantSet& inv = gen.invariants();
  switch (gen.case_tag()) {
  case CaseTag::GenericPair:
    if (inv.G_sq >= kClosedFormGramRatio * inv.Gamma * inv.Gamma) {
      return detail::closed_form_coefficients(inv, theta);
    }
    return detail::interpolating_coefficients(inv, theta);
  case CaseTag::PhaseCollinear:
    return detail::phase_coefficients(inv, theta);
  case CaseTag::RealCollinear:
    break;
  }
  return {0.0, 0.0};
}

StateVector exp_apply(const Generator& gen, double theta, const StateVector& c) {
  detail::require_same_dimension(gen.a(), c, "exp_apply");
  if (gen.case_tag() == CaseTag::RealCollinear) return c;
  const auto [linear, quadratic] = exponential_coefficients(gen, theta);
  return gen.apply_quadratic(1.0, linear, quadratic, c);
}

DenseMatrix exp_matrix(const Generator& gen, double theta) {
  const std::size_t n = gen.dimension();
  DenseMatrix m(n);
  if (gen.case_tag() == CaseTag::RealCollinear) return DenseMatrix::identity(n);
  const auto [linear, quadratic] = exponential_coefficients(gen, theta);
  for (std::size_t k = 0; k < n; ++k) {
    m.set_column(k, gen.apply_quadratic(1.0, linear, quadratic, StateVector::basis(n, k)));
  }
  return m;
}

double solve_angle(const Generator& gen, Branch branch) {
  using std::numbers::pi;
  const InvariantSet& inv = gen.invariants();
  const double turn = branch == Branch::LongWay ? pi : 0.0;

  switch (gen.case_tag()) {
  case CaseTag::GenericPair:
    // arccot(g / Gamma) on (0, pi); Gamma > 0.
    return std::atan2(inv.Gamma, inv.g) + turn;
  case CaseTag::PhaseCollinear: {
    const double principal = inv.g != 0.0 ? 0.5 * std::atan(inv.sigma / inv.g)
                                          : std::copysign(pi / 4.0, inv.sigma);
    // tan(2 theta) = sigma / g is pi/2-periodic in theta; keep the root
    // whose scale is real and positive.
    double best = principal;
    double best_re = -1.0;
    for (const double shift : {0.0, -pi / 2.0, pi / 2.0}) {
      const double candidate = principal + shift;
      if (candidate <= -pi / 2.0 || candidate > pi / 2.0) continue;
      const double re = predicted_scale(gen, candidate).real();
      if (re > best_re) {
        best_re = re;
        best = candidate;
      }
    }
    return best + turn;
  }
  case CaseTag::RealCollinear:
    break;
  }
  return 0.0;
}

Complex predicted_scale(const Generator& gen, double theta) {
  const InvariantSet& inv = gen.invariants();
  switch (gen.case_tag()) {
  case CaseTag::GenericPair: {
    const double magnitude = std::sqrt(gen.aa() / gen.bb());
    const double sign = std::sin(theta) < 0.0 ? -1.0 : 1.0;
    return sign * magnitude * std::exp(-kI * (theta * inv.sigma / inv.Gamma));
  }
  case CaseTag::PhaseCollinear:
    return gen.ba() / gen.bb() * std::exp(-2.0 * kI * theta);
  case CaseTag::RealCollinear:
    break;
  }
  return gen.ba() / gen.bb();
}

UnitaryApplicator::UnitaryApplicator(std::shared_ptr<const Generator> gen, double theta)
    : gen_(std::move(gen)), theta_(theta) {
  identity_ = gen_->case_tag() == CaseTag::RealCollinear;
  if (!identity_) coeffs_ = exponential_coefficients(*gen_, theta_);
}

StateVector UnitaryApplicator::operator()(const StateVector& c) const {
  detail::require_same_dimension(gen_->a(), c, "unitary applicator");
  if (identity_) return c;
  return gen_->apply_quadratic(1.0, coeffs_.linear, coeffs_.quadratic, c);
}

Mapping map_state(const StateVector& a, const StateVector& b, Branch branch,
                  double epsilon) {
  auto gen = std::make_shared<const Generator>(a, b, epsilon);
  MappingResult result;
  result.case_tag = gen->case_tag();
  result.branch = branch;
  result.theta_prime = solve_angle(*gen, branch);
  result.scale = predicted_scale(*gen, result.theta_prime);
  result.exponent_normalizer = exponent_normalizer(*gen);
  return Mapping{result, UnitaryApplicator(std::move(gen), result.theta_prime)};
}

} // namespace statemap
