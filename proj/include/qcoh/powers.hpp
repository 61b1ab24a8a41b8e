#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/measures.hpp"

namespace qcoh {

struct PowerResult {
  Bits value = 0.0;
  std::string maximizer;  // achieving state: basis index or phase vector
  PhaseMode mode = PhaseMode::Canonical;
  std::string grid_spec;  // resolution + refinement record
};

// Candidate set of maximally coherent states. Canonical mode is the
// 2^{d-1} sign-pattern states; free mode sweeps a deterministic phase grid
// refined by coordinate descent.
struct MaxCoherentSet {
  PhaseMode mode = PhaseMode::Canonical;
  std::size_t dim = 2;
  std::size_t grid_per_angle = 0;  // 0 = default for the dimension

  std::size_t effective_grid() const;
  std::vector<PureState> canonical_states() const;
  std::string describe() const;
};

// Largest coherence the unitary creates from computational basis states,
// measured relative to `basis`. For the computational basis this is the
// reduction of the incoherent-input maximization to basis states.
PowerResult cohering_power(const UnitaryGate& u, const ReferenceBasis& basis);
PowerResult cohering_power(const UnitaryGate& u);

// Closed form for any ZYZ unitary: H(cos^2(gamma/2), sin^2(gamma/2)).
Bits cohering_power_zyz(double gamma);

// log2 d minus the least coherence surviving the channel on the candidate set.
PowerResult decohering_power(const KrausChannel& channel, const MaxCoherentSet& mset,
                             const ReferenceBasis& basis);
PowerResult decohering_power(const KrausChannel& channel, const MaxCoherentSet& mset);

// max over the same candidate set of the output entropy S(E(psi)).
PowerResult max_output_entropy(const KrausChannel& channel, const MaxCoherentSet& mset);

// Largest coherence a system-ancilla unitary creates from locally maximally
// coherent inputs |psi>|e>, ancilla over the computational basis.
PowerResult sup_cohering_power(const UnitaryGate& u, const Dims& split,
                               PhaseMode mode = PhaseMode::Canonical);

}  // namespace qcoh
