#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace statemap::cli {

// Median wall-clock nanoseconds per dimension.
struct BenchRecord {
  std::size_t dimension = 0;
  double closed_form_construct_ns = 0.0;
  double closed_form_apply_ns = 0.0;
  double dense_expm_ns = 0.0;
  double gram_schmidt_ns = 0.0;
  // dense_expm_ns / (closed_form_construct_ns + closed_form_apply_ns)
  double speedup_apply = 0.0;
};

struct BenchConfig {
  std::vector<std::size_t> dims;
  std::size_t trials = 3;
  std::uint64_t seed = 42;
  bool include_gram_schmidt = true;
};

// Per trial: (1) map_state construction and one application of the
// resulting unitary, (2) generator_matrix + dense_expm, (3)
// gram_schmidt_unitary. Throws InputError for empty dims, a dimension
// below 2, or zero trials.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

nlohmann::json bench_to_json(const std::vector<BenchRecord>& records);

inline constexpr const char* kBenchCsvHeader =
    "dimension,closed_form_construct_ns,closed_form_apply_ns,dense_expm_ns,gram_schmidt_ns,"
    "speedup_apply";

std::string bench_to_csv(const std::vector<BenchRecord>& records);

} // namespace statemap::cli
