#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcoh/measures.hpp"
#include "qcoh/report.hpp"

namespace qcoh {

// Two-party state with a fixed reference basis on each side; the composite
// reference is the product basis.
class BipartiteState {
 public:
  BipartiteState(DensityOperator state, ReferenceBasis basis_a, ReferenceBasis basis_b);
  explicit BipartiteState(DensityOperator state);  // computational bases

  const DensityOperator& state() const { return state_; }
  const ReferenceBasis& basis_a() const { return basis_a_; }
  const ReferenceBasis& basis_b() const { return basis_b_; }
  std::size_t dim_a() const { return state_.dims()[0]; }
  std::size_t dim_b() const { return state_.dims()[1]; }

 private:
  DensityOperator state_;
  ReferenceBasis basis_a_;
  ReferenceBasis basis_b_;
};

// S(Delta_A(rho)) - S(rho): the closed form of the minimal relative entropy
// to the quantum-incoherent set.
Bits qi_relative_entropy(const BipartiteState& rho);

// S(rho^A) - S(rho^AB) + sum_i p_i S(rho^B_i) for projective measurement of
// A in the fixed basis; no basis optimization.
Bits discord_fixed_basis(const BipartiteState& rho);

struct DeficitResult {
  Bits value = 0.0;
  double theta = 0.0;  // Bloch angles of the optimal A basis
  double phi = 0.0;
};

// Minimum of the A-dephasing entropy gap over all qubit bases of A
// (64x64 angle grid plus deterministic coordinate descent).
DeficitResult one_way_deficit_detailed(const BipartiteState& rho);
Bits one_way_deficit(const BipartiteState& rho);

// Entropy of the reduced state; the pure-state closed form for both the
// relative entropy of entanglement and the classical-set analogue.
Bits ree_pure(const PureState& psi);

struct ChainReport {
  std::map<std::string, Bits> values;                   // C_A, C_AE, and Q, E when pure
  std::vector<std::pair<std::string, double>> margins;  // consecutive differences
  bool pure_input = false;
};

// Coherence/correlation chain for rho_A coupled to a |0> ancilla through
// "CNOT" or "GCNOT:d". Pure inputs get the full four-way chain.
ChainReport verify_coherence_chain(const DensityOperator& rho_a, const std::string& op_spec);

// Identity and inequality checks tying discord, deficit and coherence
// together for a qubit-A bipartite state.
VerificationReport verify_deficit_relations(const BipartiteState& rho);

}  // namespace qcoh
