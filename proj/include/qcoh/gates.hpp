#pragma once

#include <string>

#include "qcoh/complex_matrix.hpp"

namespace qcoh {

// Validated unitary. `spec` records how the gate was built ("H", "ZYZ:...",
// "matrix", ...) so reports can echo provenance.
class UnitaryGate {
 public:
  UnitaryGate(ComplexMatrix matrix, std::string spec);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::string& spec() const { return spec_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  std::string spec_;
};

UnitaryGate pauli_x();
UnitaryGate pauli_y();
UnitaryGate pauli_z();
UnitaryGate hadamard();
UnitaryGate rotation_z(double beta);
UnitaryGate rotation_y(double gamma);

// e^{i alpha} Rz(beta) Ry(gamma) Rz(delta); covers every 1-qubit unitary.
UnitaryGate zyz_gate(double alpha, double beta, double gamma, double delta);

UnitaryGate cnot_gate();

// |i>|j> -> |i>|(i + j) mod d> on two qudits of dimension d.
UnitaryGate generalized_cnot(std::size_t d);

// The 4x4 system-environment interaction realizing amplitude damping with
// transmissivity eta; system is the first tensor factor.
UnitaryGate damping_interaction(double eta);

// U applied to the target block iff all n control qubits read 1.
UnitaryGate controlled_gate(std::size_t n_controls, const UnitaryGate& target);

UnitaryGate gate_from_matrix(const ComplexMatrix& m, const std::string& spec = "matrix");

// Parse a gate spec string: "H", "X", "Y", "Z", "Rz:0.3", "Ry:1.2",
// "ZYZ:a,b,g,d", "CNOT", "GCNOT:d", "U_adc:eta", "controlled:n:SPEC".
UnitaryGate build_gate(const std::string& spec);

}  // namespace qcoh
