#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "statemap/cli/sampling.hpp"
#include "statemap/generator.hpp"

namespace statemap::cli {

struct PropertyResult {
  std::string name;
  CaseTag case_tag = CaseTag::GenericPair;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct VerificationReport {
  std::vector<PropertyResult> properties;
  std::vector<CaseTag> skipped_cases;
  bool passed = true;

  nlohmann::json to_json() const;
};

struct VerifyConfig {
  // Replaces every per-property tolerance when set.
  std::optional<double> tolerance;
  double epsilon = kDefaultClassificationEpsilon;
  // Random probe vectors per state pair.
  std::size_t probes = 16;
};

// Runs the invariant suite (generator algebra, annihilation, projector
// algebra, unitarity, group law, oracle equivalence, mapping, baseline
// agreement, ...) and keeps the worst residual per (property, case).
class PropertySuite {
public:
  explicit PropertySuite(VerifyConfig config) : config_(config) {}

  // Throws InputError for zero vectors or mismatched dimensions.
  void check_pair(const StateVector& a, const StateVector& b, Rng& rng);

  VerificationReport report() const;

private:
  void record(const std::string& name, CaseTag tag, double residual, double tolerance);

  VerifyConfig config_;
  std::map<std::pair<CaseTag, std::string>, PropertyResult> results_;
  std::vector<std::pair<CaseTag, std::string>> order_;
};

VerificationReport verify_pair(const StateVector& a, const StateVector& b, std::uint64_t seed,
                               const VerifyConfig& config);

// `trials` pairs of each kind (generic, real-amplitude generic, phase-collinear,
// real-collinear) per dimension.
VerificationReport verify_random(const std::vector<std::size_t>& dims, std::size_t trials,
                                 std::uint64_t seed, const VerifyConfig& config);

} // namespace statemap::cli
