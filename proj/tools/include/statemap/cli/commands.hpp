#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "statemap/exponential.hpp"
#include "statemap/generator.hpp"

namespace statemap::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 1,
  kExitNumericalFailure = 2,
};

inline constexpr double kDefaultMapTolerance = 1e-8;

struct GlobalOptions {
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  double epsilon = kDefaultClassificationEpsilon;
};

struct MapOptions {
  std::filesystem::path input;
  Branch branch = Branch::ShortWay;
  bool emit_matrix = false;
  bool oracle = false;
  std::optional<std::filesystem::path> output;
};

struct ApplyOptions {
  std::filesystem::path input;
  std::filesystem::path vector;
  Branch branch = Branch::ShortWay;
  std::optional<double> theta;
};

struct VerifyOptions {
  std::optional<std::filesystem::path> input;
  std::vector<std::size_t> random_dims;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::size_t probes = 16;
  std::optional<std::filesystem::path> output;
};

struct BenchOptions {
  std::vector<std::size_t> dims;
  std::size_t trials = 3;
  bool gram_schmidt = true;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> csv;
};

// Report for one state pair; `matrix` and `oracle_frobenius_distance` only
// when requested.
nlohmann::json mapping_report(const StateVector& a, const StateVector& b, Branch branch,
                              bool emit_matrix, bool oracle, double epsilon);

// Each command writes its report to `out` (or the requested file) and
// diagnostics to `err`, and returns an ExitCode.
int run_map(const MapOptions& options, const GlobalOptions& global, std::ostream& out,
            std::ostream& err);
int run_apply(const ApplyOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err);
int run_verify(const VerifyOptions& options, const GlobalOptions& global, std::ostream& out,
               std::ostream& err);
int run_bench(const BenchOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err);

// "2,4,8" -> {2, 4, 8}. Throws InputError on anything else.
std::vector<std::size_t> parse_dims(const std::string& text);
Branch parse_branch(const std::string& text);

} // namespace statemap::cli
