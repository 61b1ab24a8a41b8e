#pragma once

#include <cstdint>
#include <string>

#include "qcoh/report.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

// Named verification suites over the power/correlation relations:
// "cohering", "decohering", "dilation", "chain", "deficit", or "all".
// Deterministic for a given seed. `mset_mode` selects the candidate-set
// convention for the mode-parametrized decohering checks; equality-condition
// checks always run the free-phase search they are stated for.
VerificationReport run_suite(const std::string& name, std::uint64_t seed,
                             PhaseMode mset_mode = PhaseMode::Canonical);

}  // namespace qcoh
