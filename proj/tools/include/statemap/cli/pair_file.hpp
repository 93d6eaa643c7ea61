#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "statemap/dense.hpp"
#include "statemap/hilbert.hpp"

namespace statemap::cli {

// {"dimension": d, "a": [[re, im], ...], "b": [[re, im], ...]}
struct StatePairFile {
  StateVector a;
  StateVector b;
};

// All parsers throw InputError naming the violated precondition.
StatePairFile parse_state_pair(const nlohmann::json& doc);
StatePairFile read_state_pair(const std::filesystem::path& path);

// Either {"dimension": d, "vector": [[re, im], ...]} or a bare [[re, im], ...].
StateVector parse_vector(const nlohmann::json& doc);
StateVector read_vector(const std::filesystem::path& path);

nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const StateVector& v);
nlohmann::json matrix_to_json(const DenseMatrix& m);
nlohmann::json state_pair_to_json(const StatePairFile& pair);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace statemap::cli
