#include "statemap/cli/commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "statemap/cli/bench.hpp"
#include "statemap/cli/pair_file.hpp"
#include "statemap/cli/verify.hpp"
#include "statemap/errors.hpp"
#include "statemap/oracle.hpp"

namespace statemap::cli {

namespace {

using nlohmann::json;

void emit(const json& doc, const std::optional<std::filesystem::path>& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path) {
    write_text(*path, text);
  } else {
    out << text;
  }
}

// Worst relative violation of norm and inner-product preservation over the
// probes {a, b, (1, ..., 1)}.
double unitarity_residual(const UnitaryApplicator& u, const StateVector& a, const StateVector& b) {
  const StateVector ones = StateVector::from_trusted(std::vector<Complex>(a.dimension(), 1.0));
  const std::vector<const StateVector*> probes{&a, &b, &ones};
  std::vector<StateVector> images;
  for (const StateVector* p : probes) images.push_back(u(*p));
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i; j < probes.size(); ++j) {
      const Complex before = inner_product(*probes[i], *probes[j]);
      const Complex after = inner_product(images[i], images[j]);
      worst = std::max(worst, std::abs(after - before) /
                                  (vec_norm(*probes[i]) * vec_norm(*probes[j])));
    }
  }
  return worst;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnsupportedCaseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

} // namespace

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("dimension list '" + text + "' has an empty entry");
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InputError("invalid dimension '" + item + "'");
    }
    if (pos != item.size() || value < 1) throw InputError("invalid dimension '" + item + "'");
    dims.push_back(static_cast<std::size_t>(value));
  }
  if (dims.empty()) throw InputError("dimension list is empty");
  return dims;
}

Branch parse_branch(const std::string& text) {
  if (text == "short") return Branch::ShortWay;
  if (text == "long") return Branch::LongWay;
  throw InputError("--branch must be 'short' or 'long'");
}

json mapping_report(const StateVector& a, const StateVector& b, Branch branch, bool emit_matrix,
                    bool oracle, double epsilon) {
  const Mapping mapping = map_state(a, b, branch, epsilon);
  const MappingResult& result = mapping.result;
  const Generator& gen = mapping.unitary.generator();
  const InvariantSet& inv = gen.invariants();

  json report;
  report["case_tag"] = std::string(to_string(result.case_tag));
  report["invariants"] = {{"g", inv.g}, {"sigma", inv.sigma}, {"G_sq", inv.G_sq}, {"Gamma", inv.Gamma}};
  report["theta_prime"] = result.theta_prime;
  report["branch"] = std::string(to_string(result.branch));
  // +0.0 folds a negative zero into +0.
  report["scale"] = complex_to_json(result.scale + Complex(0.0, 0.0));
  report["exponent_normalizer"] =
      result.exponent_normalizer ? json(*result.exponent_normalizer) : json(nullptr);
  report["residual_map"] = vec_norm(mapping.unitary(a) - result.scale * b) / vec_norm(a);
  report["unitarity_residual"] = unitarity_residual(mapping.unitary, a, b);

  if (oracle || emit_matrix) {
    const DenseMatrix closed = exp_matrix(gen, result.theta_prime);
    if (oracle) {
      const DenseMatrix reference =
          result.exponent_normalizer
              ? dense_expm(generator_matrix(gen).scaled(result.theta_prime / *result.exponent_normalizer))
              : DenseMatrix::identity(gen.dimension());
      report["oracle_frobenius_distance"] = frobenius_distance(closed, reference);
    }
    if (emit_matrix) report["matrix"] = matrix_to_json(closed);
  }
  return report;
}

int run_map(const MapOptions& options, const GlobalOptions& global, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const StatePairFile pair = read_state_pair(options.input);
    const json report = mapping_report(pair.a, pair.b, options.branch, options.emit_matrix,
                                       options.oracle, global.epsilon);
    emit(report, options.output, out);

    const double tol = global.tolerance.value_or(kDefaultMapTolerance);
    bool ok = report["residual_map"].get<double>() <= tol &&
              report["unitarity_residual"].get<double>() <= tol;
    if (report.contains("oracle_frobenius_distance")) {
      const double scale = std::sqrt(static_cast<double>(pair.a.dimension()));
      ok = ok && report["oracle_frobenius_distance"].get<double>() <= tol * scale;
    }
    if (!ok) {
      err << "error: residuals exceed tolerance " << tol << '\n';
      return static_cast<int>(kExitNumericalFailure);
    }
    return static_cast<int>(kExitSuccess);
  });
}

int run_apply(const ApplyOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const StatePairFile pair = read_state_pair(options.input);
    const StateVector c = read_vector(options.vector);
    if (c.dimension() != pair.a.dimension()) {
      throw InputError("dimension mismatch: vector has " + std::to_string(c.dimension()) +
                       " entries, state pair has " + std::to_string(pair.a.dimension()));
    }
    const Generator gen(pair.a, pair.b, global.epsilon);
    const double theta = options.theta.value_or(solve_angle(gen, options.branch));
    out << vector_to_json(exp_apply(gen, theta, c)).dump() << '\n';
    return static_cast<int>(kExitSuccess);
  });
}

int run_verify(const VerifyOptions& options, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    VerifyConfig config;
    config.tolerance = global.tolerance;
    config.epsilon = global.epsilon;
    config.probes = options.probes;
    const std::uint64_t seed = options.seed.value_or(global.seed);

    VerificationReport report;
    json doc;
    if (options.input) {
      const StatePairFile pair = read_state_pair(*options.input);
      report = verify_pair(pair.a, pair.b, seed, config);
      doc["mode"] = "file";
    } else {
      if (options.random_dims.empty()) throw InputError("verify: give an input file or --random");
      if (options.trials == 0) throw InputError("verify: trials must be positive");
      report = verify_random(options.random_dims, options.trials, seed, config);
      doc["mode"] = "random";
      doc["dims"] = options.random_dims;
      doc["trials"] = options.trials;
    }
    doc["seed"] = seed;
    const json body = report.to_json();
    doc.update(body);
    emit(doc, options.output, out);
    if (!report.passed) {
      for (const auto& r : report.properties) {
        if (!r.passed) {
          err << "FAIL " << r.name << " [" << to_string(r.case_tag) << "] max residual "
              << r.max_residual << " > " << r.tolerance << '\n';
        }
      }
      return static_cast<int>(kExitNumericalFailure);
    }
    return static_cast<int>(kExitSuccess);
  });
}

int run_bench(const BenchOptions& options, const GlobalOptions& global, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    BenchConfig config;
    config.dims = options.dims;
    config.trials = options.trials;
    config.seed = global.seed;
    config.include_gram_schmidt = options.gram_schmidt;
    const auto records = run_benchmark(config);
    emit(bench_to_json(records), options.output, out);
    if (options.csv) write_text(*options.csv, bench_to_csv(records));
    return static_cast<int>(kExitSuccess);
  });
}

} // namespace statemap::cli
