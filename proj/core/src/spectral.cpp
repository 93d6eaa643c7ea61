#include "statemap/spectral.hpp"

#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "statemap/errors.hpp"

namespace statemap {

namespace {

constexpr Complex kI{0.0, 1.0};

// |lambda_1| = Gamma + sigma and |lambda_2| = Gamma - sigma; whichever is the
// small one is recovered from (Gamma + sigma)(Gamma - sigma) = G^2.
std::pair<double, double> eigenvalue_magnitudes(const InvariantSet& inv) {
  if (inv.sigma >= 0.0) {
    const double big = inv.Gamma + inv.sigma;
    return {big, inv.G_sq / big};
  }
  const double big = inv.Gamma - inv.sigma;
  return {inv.G_sq / big, big};
}

} // namespace

SpectralData spectral_data(const Generator& gen) {
  const InvariantSet& inv = gen.invariants();
  SpectralData data;
  switch (gen.case_tag()) {
  case CaseTag::RealCollinear:
    throw UnsupportedCaseError("spectral_data: T[a,b] is the zero map (b is a real multiple of a)");
  case CaseTag::GenericPair: {
    const auto [m1, m2] = eigenvalue_magnitudes(inv);
    if (std::min(m1, m2) > kEigenvalueMergeTolerance * inv.Gamma) {
      data.case_tag = CaseTag::GenericPair;
      data.eigenvalues = {Complex{}, -kI * m1, kI * m2};
      data.projector_count = 3;
      return data;
    }
    data.merged = true;
    [[fallthrough]];
  }
  case CaseTag::PhaseCollinear:
    data.case_tag = CaseTag::PhaseCollinear;
    data.eigenvalues = {Complex{}, -2.0 * kI * inv.sigma};
    data.projector_count = 2;
    return data;
  }
  return data;
}

std::array<Complex, 3> projector_coefficients(const SpectralData& data, std::size_t k) {
  if (k >= data.projector_count) {
    throw InputError("projector index " + std::to_string(k) + " out of range (count " +
                     std::to_string(data.projector_count) + ")");
  }
  if (data.case_tag == CaseTag::GenericPair) {
    const Complex l1 = data.eigenvalues[1];
    const Complex l2 = data.eigenvalues[2];
    switch (k) {
    case 0: {
      // (T - l1)(T - l2) / (l1 l2)
      const Complex den = l1 * l2;
      return {1.0, -(l1 + l2) / den, 1.0 / den};
    }
    case 1: {
      // T (T - l2) / (l1 (l1 - l2))
      const Complex den = l1 * (l1 - l2);
      return {0.0, -l2 / den, 1.0 / den};
    }
    default: {
      // T (T - l1) / (l2 (l2 - l1))
      const Complex den = l2 * (l2 - l1);
      return {0.0, -l1 / den, 1.0 / den};
    }
    }
  }
  // -2i sigma is the nonzero eigenvalue.
  const Complex two_i_sigma = -data.eigenvalues[1];
  if (k == 0) return {1.0, 1.0 / two_i_sigma, 0.0}; // (T + 2i sigma) / (2i sigma)
  return {0.0, -1.0 / two_i_sigma, 0.0};           // T / (-2i sigma)
}

StateVector apply_projector(const Generator& gen, std::size_t k, const StateVector& c) {
  const SpectralData data = spectral_data(gen);
  if (k >= data.projector_count) {
    throw InputError("projector index " + std::to_string(k) + " out of range (count " +
                     std::to_string(data.projector_count) + ")");
  }
  detail::require_same_dimension(gen.a(), c, "apply_projector");

  const double aa = gen.aa();
  const double a_norm = std::sqrt(aa);
  const Complex p = inner_product(gen.a(), c);
  const Complex r = inner_product(gen.b_perp(), c);

  // Coordinates (on a, on b_perp) of the rank-one projection onto the
  // eigenvector u = lambda*a/|a| + |a|*b_perp.
  const auto eigenline = [&](Complex lambda) -> std::pair<Complex, Complex> {
    const Complex u_dot_c = std::conj(lambda) * p / a_norm + a_norm * r;
    const double u_sq = std::norm(lambda) + aa * gen.perp_sq();
    const Complex t = u_dot_c / u_sq;
    return {t * lambda / a_norm, t * a_norm};
  };

  Complex on_a{};
  Complex on_perp{};
  if (k > 0) {
    std::tie(on_a, on_perp) = eigenline(data.eigenvalues[k]);
  } else if (data.case_tag == CaseTag::GenericPair) {
    // Complement of span{a, b_perp}.
    on_a = -p / aa;
    on_perp = gen.perp_sq() > 0.0 ? -r / gen.perp_sq() : Complex{};
  } else {
    const auto [x, y] = eigenline(data.eigenvalues[1]);
    on_a = -x;
    on_perp = -y;
  }

  const double keep = k == 0 ? 1.0 : 0.0;
  std::vector<Complex> out(c.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = keep * c[i] + on_a * gen.a()[i] + on_perp * gen.b_perp()[i];
  }
  return StateVector::from_trusted(std::move(out));
}

double min_poly_residual(const Generator& gen, const StateVector& c) {
  const double c_norm = vec_norm(c);
  if (c_norm == 0.0) {
    detail::require_same_dimension(gen.a(), c, "min_poly_residual");
    return 0.0;
  }
  const InvariantSet& inv = gen.invariants();
  const StateVector tc = gen.apply(c);
  switch (gen.case_tag()) {
  case CaseTag::GenericPair: {
    const StateVector ttc = gen.apply(tc);
    const StateVector inner = ttc + (2.0 * kI * inv.sigma) * tc + Complex(inv.G_sq) * c;
    return vec_norm(gen.apply(inner)) / (c_norm * inv.Gamma * inv.Gamma * inv.Gamma);
  }
  case CaseTag::PhaseCollinear: {
    const StateVector inner = tc + (2.0 * kI * inv.sigma) * c;
    return vec_norm(gen.apply(inner)) / (c_norm * inv.sigma * inv.sigma);
  }
  case CaseTag::RealCollinear:
    return vec_norm(tc) / c_norm;
  }
  return 0.0;
}

} // namespace statemap
