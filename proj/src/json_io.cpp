#include "qcoh/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

using nlohmann::json;

Cx parse_complex(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw Error(ErrorKind::ParseError, where + ": complex entries must be [re, im] pairs");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

Dims parse_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    throw Error(ErrorKind::ParseError, "state file needs a non-empty \"dims\" array");
  }
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
      throw Error(ErrorKind::ParseError, "\"dims\" entries must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

ComplexMatrix parse_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty()) {
    throw Error(ErrorKind::ParseError, where + ": expected a non-empty array of rows");
  }
  const std::size_t n = rows.size();
  std::vector<Cx> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::ParseError, where + ": matrix rows must all have length " +
                                             std::to_string(n));
    }
    for (const auto& cell : row) entries.push_back(parse_complex(cell, where));
  }
  return {n, n, std::move(entries)};
}

json complex_to_json(const Cx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

LoadedState parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("state JSON: ") + e.what());
  }
  const Dims dims = parse_dims(j);

  if (j.contains("matrix")) {
    ComplexMatrix m = parse_matrix(j["matrix"], "matrix");
    try {
      return DensityOperator(std::move(m), dims);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotHermitian || e.kind() == ErrorKind::NotUnitTrace ||
          e.kind() == ErrorKind::NotPositive || e.kind() == ErrorKind::DimensionMismatch) {
        throw Error(ErrorKind::InvalidState, e.what());
      }
      throw;
    }
  }
  if (j.contains("amplitudes")) {
    const json& amps = j["amplitudes"];
    if (!amps.is_array() || amps.empty()) {
      throw Error(ErrorKind::ParseError, "\"amplitudes\" must be a non-empty array");
    }
    std::vector<Cx> v;
    v.reserve(amps.size());
    for (const auto& a : amps) v.push_back(parse_complex(a, "amplitudes"));
    try {
      return PureState(std::move(v), dims);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidState, e.what());
    }
  }
  throw Error(ErrorKind::ParseError, "state file needs a \"matrix\" or \"amplitudes\" field");
}

LoadedState load_state(const std::string& path) { return parse_state(read_file(path)); }

DensityOperator as_density(const LoadedState& state) {
  if (const auto* rho = std::get_if<DensityOperator>(&state)) return *rho;
  return std::get<PureState>(state).to_density();
}

std::string density_to_json(const DensityOperator& rho) {
  nlohmann::ordered_json j;
  j["dims"] = rho.dims();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) row.push_back(complex_to_json(rho.matrix().at(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string pure_to_json(const PureState& psi) {
  nlohmann::ordered_json j;
  j["dims"] = psi.dims();
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  for (const Cx& a : psi.amplitudes()) amps.push_back(complex_to_json(a));
  j["amplitudes"] = std::move(amps);
  return j.dump(2) + "\n";
}

ReferenceBasis load_basis(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("basis JSON: ") + e.what());
  }
  if (!j.contains("matrix")) {
    throw Error(ErrorKind::ParseError, "basis file needs a \"matrix\" field");
  }
  ComplexMatrix m = parse_matrix(j["matrix"], "basis matrix");
  const std::string label = j.value("label", std::string("file:") + path);
  try {
    return {UnitaryGate(std::move(m), label), label};
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidState, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace qcoh
