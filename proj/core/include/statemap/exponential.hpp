#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "statemap/dense.hpp"
#include "statemap/generator.hpp"

namespace statemap {

enum class Branch { ShortWay, LongWay };

std::string_view to_string(Branch branch) noexcept;

// exp(theta * T / normalizer) = Id + linear * T + quadratic * T^2.
struct ExponentialCoefficients {
  Complex linear;
  Complex quadratic;
};

// Gamma for GenericPair, sigma for PhaseCollinear, none for RealCollinear.
std::optional<double> exponent_normalizer(const Generator& gen) noexcept;

// Below this G^2 / Gamma^2 the generic-pair coefficients are evaluated by
// divided differences instead of the closed form, whose 1/G^2 factors
// amplify rounding as the pair approaches collinearity.
inline constexpr double kClosedFormGramRatio = 1e-3;

ExponentialCoefficients exponential_coefficients(const Generator& gen, double theta);

namespace detail {
// Generic pair, direct closed form:
//   linear    = {2i s + e^{-i th s/Gm} [(Gm + s^2/Gm) sin th - 2i s cos th]} / G^2
//   quadratic = {1 - e^{-i th s/Gm} [cos th + i (s/Gm) sin th]} / G^2
ExponentialCoefficients closed_form_coefficients(const InvariantSet& inv, double theta);

// Generic pair, Newton interpolation of exp(theta x / Gamma) on the spectrum
// {0, lambda_1, lambda_2}. Stays accurate as G -> 0.
ExponentialCoefficients interpolating_coefficients(const InvariantSet& inv, double theta);

// Phase-collinear pair: linear = e^{-i theta} sin(theta) / sigma, quadratic = 0.
ExponentialCoefficients phase_coefficients(const InvariantSet& inv, double theta);

// Rodrigues form for sigma = 0: linear = sin(theta)/Gamma,
// quadratic = (1 - cos(theta))/Gamma^2.
ExponentialCoefficients rodrigues_coefficients(const InvariantSet& inv, double theta);
} // namespace detail

// exp(theta * T / normalizer)(c) in O(d). Identity for RealCollinear.
StateVector exp_apply(const Generator& gen, double theta, const StateVector& c);

// Column-wise exp_apply on the standard basis.
DenseMatrix exp_matrix(const Generator& gen, double theta);

// Angle at which exp(theta T / normalizer) sends a onto the ray of b.
//   GenericPair:    cot(theta) = g / Gamma, ShortWay in (0, pi)
//   PhaseCollinear: tan(2 theta) = sigma / g (theta = sgn(sigma) pi/4 when
//                   g = 0), the root in (-pi/2, pi/2] with positive real scale
//   RealCollinear:  0
// LongWay adds pi in both nontrivial cases.
double solve_angle(const Generator& gen, Branch branch);

// s with exp(theta T / normalizer)(a) = s * b.
//   GenericPair:    sqrt(<a,a>/<b,b>) e^{-i theta sigma/Gamma}, negated when
//                   sin(theta) < 0; valid at the angles from solve_angle
//   PhaseCollinear: <b,a>/<b,b> e^{-2i theta}, any theta
//   RealCollinear:  <b,a>/<b,b>
Complex predicted_scale(const Generator& gen, double theta);

// A fixed exp(theta T / normalizer) with its coefficients folded in once;
// each application costs two inner products and one combination pass.
// Immutable and cheap to copy.
class UnitaryApplicator {
public:
  UnitaryApplicator(std::shared_ptr<const Generator> gen, double theta);

  StateVector operator()(const StateVector& c) const;

  double theta() const noexcept { return theta_; }
  const Generator& generator() const noexcept { return *gen_; }
  bool is_identity() const noexcept { return identity_; }

private:
  std::shared_ptr<const Generator> gen_;
  double theta_;
  ExponentialCoefficients coeffs_{};
  bool identity_ = false;
};

struct MappingResult {
  CaseTag case_tag = CaseTag::GenericPair;
  double theta_prime = 0.0;
  Branch branch = Branch::ShortWay;
  Complex scale;
  std::optional<double> exponent_normalizer;
};

struct Mapping {
  MappingResult result;
  UnitaryApplicator unitary;
};

// Single-exponential unitary U with U(a) = scale * b. Throws InputError on a
// zero vector or a dimension mismatch.
Mapping map_state(const StateVector& a, const StateVector& b,
                  Branch branch = Branch::ShortWay,
                  double epsilon = kDefaultClassificationEpsilon);

} // namespace statemap
