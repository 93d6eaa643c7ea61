#include "statemap/cli/verify.hpp"

#include <algorithm>
#include <cmath>

#include "statemap/exponential.hpp"
#include "statemap/oracle.hpp"
#include "statemap/spectral.hpp"

namespace statemap::cli {

namespace {

constexpr std::size_t kOracleMaxDimension = 64;
constexpr std::size_t kBaselineMaxDimension = 32;

double ray_defect(const StateVector& target, const StateVector& y) {
  const double scale = vec_norm(target) * vec_norm(y);
  return std::abs(scale - std::abs(inner_product(target, y))) / scale;
}

} // namespace

void PropertySuite::record(const std::string& name, CaseTag tag, double residual,
                           double tolerance) {
  const double tol = config_.tolerance.value_or(tolerance);
  const auto key = std::make_pair(tag, name);
  auto [it, inserted] = results_.try_emplace(key);
  PropertyResult& r = it->second;
  if (inserted) {
    r.name = name;
    r.case_tag = tag;
    r.tolerance = tol;
    order_.push_back(key);
  }
  ++r.samples;
  // NaN residuals must fail.
  if (!(residual <= r.max_residual)) r.max_residual = residual;
  if (!(residual <= tol)) r.passed = false;
}

void PropertySuite::check_pair(const StateVector& a, const StateVector& b, Rng& rng) {
  auto gen = std::make_shared<const Generator>(a, b, config_.epsilon);
  const CaseTag tag = gen->case_tag();
  const std::size_t d = gen->dimension();
  const double na = vec_norm(a);
  const double nb = vec_norm(b);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);

  for (std::size_t p = 0; p < config_.probes; ++p) {
    const StateVector c = random_state(d, rng);
    const StateVector x = random_state(d, rng);
    const double nc = vec_norm(c);
    const double nx = vec_norm(x);

    // Generator algebra.
    record("antisymmetry", tag,
           vec_norm(generator_action(a, b, c) + generator_action(b, a, c)) / (na * nb * nc), 1e-13);
    const Complex alpha = random_complex(rng);
    record("middle_conjugate_linearity", tag,
           vec_norm(generator_action(alpha * a, b, c) - generator_action(a, std::conj(alpha) * b, c)) /
               (std::abs(alpha) * na * nb * nc),
           1e-12);
    record("anti_hermiticity", tag,
           std::abs(inner_product(gen->apply(c), x) + inner_product(c, gen->apply(x))) /
               (na * nb * nc * nx),
           1e-12);
    const StateVector e = random_state(d, rng);
    const Generator other(c, e, config_.epsilon);
    record("commutator_closure", tag,
           commutator_residual(*gen, other, x) / (na * nb * nc * vec_norm(e) * nx), 1e-12);

    if (tag == CaseTag::RealCollinear) {
      record("zero_generator", tag, vec_norm(gen->apply(c)) / (na * nb * nc), 1e-12);
      continue;
    }

    record("annihilation", tag, min_poly_residual(*gen, c), 1e-10);

    const SpectralData data = spectral_data(*gen);
    const double lambda_scale = std::max(std::abs(data.eigenvalues[1]), std::abs(data.eigenvalues.back()));
    std::vector<StateVector> parts;
    for (std::size_t k = 0; k < data.projector_count; ++k) parts.push_back(apply_projector(*gen, k, c));
    StateVector sum = StateVector::zeros(d);
    StateVector recon = StateVector::zeros(d);
    double idem = 0.0, mutual = 0.0, eigen = 0.0;
    for (std::size_t k = 0; k < data.projector_count; ++k) {
      idem = std::max(idem, vec_norm(apply_projector(*gen, k, parts[k]) - parts[k]) / nc);
      for (std::size_t j = 0; j < data.projector_count; ++j) {
        if (j != k) mutual = std::max(mutual, vec_norm(apply_projector(*gen, j, parts[k])) / nc);
      }
      eigen = std::max(eigen, vec_norm(gen->apply(parts[k]) - data.eigenvalues[k] * parts[k]) /
                                  (nc * lambda_scale));
      sum = sum + parts[k];
      recon = recon + data.eigenvalues[k] * parts[k];
    }
    record("projector_idempotency", tag, idem, 1e-10);
    record("projector_mutual_annihilation", tag, mutual, 1e-10);
    record("resolution_of_identity", tag, vec_norm(sum - c) / nc, 1e-12);
    record("eigenspace", tag, eigen, 1e-10);
    record("spectral_reconstruction", tag, vec_norm(recon - gen->apply(c)) / (nc * lambda_scale), 1e-10);

    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const StateVector uc = exp_apply(*gen, t1, c);
    const StateVector ux = exp_apply(*gen, t1, x);
    record("unitarity_norm", tag, std::abs(vec_norm(uc) - nc) / nc, 1e-11);
    record("unitarity_inner_product", tag,
           std::abs(inner_product(uc, ux) - inner_product(c, x)) / (nc * nx), 1e-10);
    record("group_law", tag,
           vec_norm(exp_apply(*gen, t1, exp_apply(*gen, t2, c)) - exp_apply(*gen, t1 + t2, c)) / nc,
           1e-10);
    record("inverse", tag, vec_norm(exp_apply(*gen, -t1, uc) - c) / nc, 1e-10);

    if (tag == CaseTag::PhaseCollinear) {
      const StateVector ua = exp_apply(*gen, t1, a);
      const Complex law = gen->ba() / gen->bb() * std::exp(Complex(0.0, -2.0 * t1));
      record("phase_factor_law", tag, vec_norm(ua - law * b) / vec_norm(ua), 1e-11);
    }
    if (tag == CaseTag::GenericPair && gen->invariants().sigma == 0.0) {
      const auto rod = detail::rodrigues_coefficients(gen->invariants(), t1);
      record("rodrigues_reduction", tag,
             vec_norm(uc - gen->apply_quadratic(1.0, rod.linear, rod.quadratic, c)) / nc, 1e-12);
    }
  }

  for (const Branch branch : {Branch::ShortWay, Branch::LongWay}) {
    const Mapping mapping = map_state(a, b, branch, config_.epsilon);
    const StateVector ua = mapping.unitary(a);
    record("mapping", tag, vec_norm(ua - mapping.result.scale * b) / na, 1e-10);
    record("two_branch", tag, ray_defect(b, ua), 1e-10);
    record("scale_magnitude", tag,
           std::abs(std::abs(mapping.result.scale) - na / nb) / (na / nb), 1e-12);
  }

  if (d <= kOracleMaxDimension) {
    const double theta = angle(rng);
    const auto normalizer = exponent_normalizer(*gen);
    const DenseMatrix reference =
        normalizer ? dense_expm(generator_matrix(*gen).scaled(theta / *normalizer))
                   : DenseMatrix::identity(d);
    record("oracle_equivalence", tag, frobenius_distance(exp_matrix(*gen, theta), reference), 1e-9);
  }
  if (d <= kBaselineMaxDimension) {
    const StateVector baseline = matrix_apply(gram_schmidt_unitary(a, b), a);
    const StateVector closed = map_state(a, b, Branch::ShortWay, config_.epsilon).unitary(a);
    record("baseline_agreement", tag, ray_defect(baseline, closed), 1e-10);
  }
}

VerificationReport PropertySuite::report() const {
  VerificationReport out;
  std::vector<CaseTag> seen;
  for (const auto& key : order_) {
    const PropertyResult& r = results_.at(key);
    out.properties.push_back(r);
    out.passed = out.passed && r.passed;
    if (std::find(seen.begin(), seen.end(), r.case_tag) == seen.end()) seen.push_back(r.case_tag);
  }
  for (const CaseTag tag : {CaseTag::GenericPair, CaseTag::PhaseCollinear, CaseTag::RealCollinear}) {
    if (std::find(seen.begin(), seen.end(), tag) == seen.end()) out.skipped_cases.push_back(tag);
  }
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& r : properties) {
    props.push_back({{"name", r.name},
                     {"case", std::string(to_string(r.case_tag))},
                     {"samples", r.samples},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const CaseTag tag : skipped_cases) skipped.push_back(std::string(to_string(tag)));
  return {{"properties", props}, {"skipped_cases", skipped}, {"passed", passed}};
}

VerificationReport verify_pair(const StateVector& a, const StateVector& b, std::uint64_t seed,
                               const VerifyConfig& config) {
  PropertySuite suite(config);
  Rng rng(seed);
  suite.check_pair(a, b, rng);
  return suite.report();
}

VerificationReport verify_random(const std::vector<std::size_t>& dims, std::size_t trials,
                                 std::uint64_t seed, const VerifyConfig& config) {
  PropertySuite suite(config);
  Rng rng(seed);
  for (const std::size_t d : dims) {
    for (std::size_t t = 0; t < trials; ++t) {
      const StateVector a = random_state(d, rng);
      suite.check_pair(a, random_state(d, rng), rng);
      suite.check_pair(random_real_state(d, rng), random_real_state(d, rng), rng);
      suite.check_pair(a, random_nonreal(rng) * a, rng);
      suite.check_pair(a, random_real_multiplier(rng) * a, rng);
    }
  }
  return suite.report();
}

} // namespace statemap::cli
