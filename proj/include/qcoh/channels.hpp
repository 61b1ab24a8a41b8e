#pragma once

#include <string>
#include <vector>

#include "qcoh/states.hpp"

namespace qcoh {

// CPTP map in Kraus form: rho -> sum_i K_i rho K_i^dag with
// sum_i K_i^dag K_i = I (within 1e-9).
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string param_tag);

  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }
  const std::string& param_tag() const { return param_tag_; }
  std::size_t dim() const { return kraus_ops_.front().rows(); }

  ComplexMatrix apply_matrix(const ComplexMatrix& m) const;

 private:
  std::vector<ComplexMatrix> kraus_ops_;
  std::string param_tag_;
};

KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);
KrausChannel bit_phase_flip(double p);
KrausChannel amplitude_damping(double eta);
KrausChannel depolarizing(double p);
KrausChannel identity_channel(std::size_t d);

// Parse "bit_flip:0.25", "phase_flip:p", "bit_phase_flip:p",
// "amplitude_damping:eta", "depolarizing:p", "identity:d".
KrausChannel preset_channel(const std::string& name, double param);
KrausChannel build_channel(const std::string& spec);

DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho);

// Kraus operators K_e = (I x <e|) U (I x |0>) of the channel realized by the
// system-ancilla unitary with the ancilla starting in |0>.
KrausChannel dilate(const UnitaryGate& u, std::size_t ancilla_dim);

// Decision procedure on a fixed probe set (symmetrized matrix units plus 20
// seeded random states): does the channel commute with basis dephasing?
bool commutes_with_dephasing(const KrausChannel& channel, const ReferenceBasis& basis);

bool is_unital(const KrausChannel& channel);

KrausChannel channel_tensor(const KrausChannel& a, const KrausChannel& b);

}  // namespace qcoh
