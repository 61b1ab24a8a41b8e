#pragma once

#include <string>
#include <variant>

#include "qcoh/states.hpp"

namespace qcoh {

// State files carry either a density ({"dims": [...], "matrix": [[[re, im],
// ...], ...]}) or a pure state ({"dims": [...], "amplitudes": [[re, im], ...]}).
using LoadedState = std::variant<DensityOperator, PureState>;

LoadedState parse_state(const std::string& text);
LoadedState load_state(const std::string& path);

DensityOperator as_density(const LoadedState& state);

std::string density_to_json(const DensityOperator& rho);
std::string pure_to_json(const PureState& psi);

// Basis files carry {"matrix": [[[re, im], ...], ...]} plus an optional
// "label"; the matrix columns must form an orthonormal basis.
ReferenceBasis load_basis(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qcoh
