#include "statemap/cli/pair_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "statemap/errors.hpp"

namespace statemap::cli {

namespace {

using nlohmann::json;

Complex parse_complex(const json& entry, const std::string& where) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw InputError(where + ": expected a [re, im] pair of numbers");
  }
  const double re = entry[0].get<double>();
  const double im = entry[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InputError(where + ": non-finite amplitude");
  }
  return {re, im};
}

StateVector parse_amplitudes(const json& list, const std::string& name) {
  if (!list.is_array()) throw InputError("'" + name + "' must be a list of [re, im] pairs");
  if (list.empty()) throw InputError("'" + name + "' is empty");
  std::vector<Complex> v;
  v.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    v.push_back(parse_complex(list[i], name + "[" + std::to_string(i) + "]"));
  }
  return StateVector(std::move(v));
}

std::size_t parse_dimension(const json& doc) {
  if (!doc.contains("dimension")) throw InputError("missing 'dimension'");
  const json& d = doc["dimension"];
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw InputError("'dimension' must be a positive integer");
  }
  return static_cast<std::size_t>(d.get<long long>());
}

void require_length(const StateVector& v, std::size_t dimension, const std::string& name) {
  if (v.dimension() != dimension) {
    throw InputError("dimension mismatch: '" + name + "' has " + std::to_string(v.dimension()) +
                     " entries, expected " + std::to_string(dimension));
  }
}

} // namespace

StatePairFile parse_state_pair(const json& doc) {
  if (!doc.is_object()) throw InputError("state pair file must be a JSON object");
  const std::size_t dimension = parse_dimension(doc);
  for (const char* key : {"a", "b"}) {
    if (!doc.contains(key)) throw InputError(std::string("missing '") + key + "'");
  }
  StatePairFile pair{parse_amplitudes(doc["a"], "a"), parse_amplitudes(doc["b"], "b")};
  require_length(pair.a, dimension, "a");
  require_length(pair.b, dimension, "b");
  return pair;
}

StatePairFile read_state_pair(const std::filesystem::path& path) {
  return parse_state_pair(read_json(path));
}

StateVector parse_vector(const json& doc) {
  if (doc.is_array()) return parse_amplitudes(doc, "vector");
  if (!doc.is_object() || !doc.contains("vector")) {
    throw InputError("vector file must be a [[re, im], ...] list or an object with 'vector'");
  }
  StateVector v = parse_amplitudes(doc["vector"], "vector");
  if (doc.contains("dimension")) require_length(v, parse_dimension(doc), "vector");
  return v;
}

StateVector read_vector(const std::filesystem::path& path) { return parse_vector(read_json(path)); }

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const StateVector& v) {
  json out = json::array();
  for (const Complex& z : v.amplitudes()) out.push_back(complex_to_json(z));
  return out;
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_pair_to_json(const StatePairFile& pair) {
  return json{{"dimension", pair.a.dimension()},
              {"a", vector_to_json(pair.a)},
              {"b", vector_to_json(pair.b)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

} // namespace statemap::cli
