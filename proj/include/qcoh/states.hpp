#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcoh/complex_matrix.hpp"
#include "qcoh/gates.hpp"

namespace qcoh {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims& dims);

// Validated density operator: Hermitian, unit trace, positive semidefinite
// (all within the library-wide 1e-10 norm), with a subsystem split attached.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, Dims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return matrix_.rows(); }

  DensityOperator reduce(const std::vector<std::size_t>& keep) const;

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

class PureState {
 public:
  PureState(std::vector<Cx> amplitudes, Dims dims);

  const std::vector<Cx>& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return amplitudes_.size(); }

  DensityOperator to_density() const;

 private:
  std::vector<Cx> amplitudes_;
  Dims dims_;
};

// Orthonormal basis defining incoherence; columns of the unitary are the
// basis vectors. Coherence is always relative to one of these.
class ReferenceBasis {
 public:
  ReferenceBasis(UnitaryGate basis_unitary, std::string label);

  static ReferenceBasis computational(std::size_t d);
  static ReferenceBasis bell();  // two-qubit Bell basis

  const ComplexMatrix& unitary() const { return basis_.matrix(); }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return basis_.dim(); }
  bool is_computational() const;

  std::vector<Cx> vector(std::size_t i) const { return basis_.matrix().column(i); }

  // B^dag M B: expresses M in this basis's frame.
  ComplexMatrix to_frame(const ComplexMatrix& m) const;
  ComplexMatrix from_frame(const ComplexMatrix& m) const;

 private:
  UnitaryGate basis_;
  std::string label_;
};

DensityOperator density_from_matrix(const ComplexMatrix& m, const Dims& dims);

// Remove coherence between distinct basis vectors on the selected subsystems.
// A full-system basis is only valid when every subsystem is selected.
DensityOperator dephase(const DensityOperator& rho, const ReferenceBasis& basis,
                        const std::vector<std::size_t>& subsystems);
DensityOperator dephase(const DensityOperator& rho, const ReferenceBasis& basis);  // all subsystems

enum class PhaseMode { Canonical, Free };

// (1/sqrt(d)) (1, e^{i t1}, ..., e^{i t_{d-1}}); canonical mode admits only
// 0/pi phases (the sign-pattern states).
PureState maximally_coherent(std::size_t d, const std::vector<double>& phases,
                             PhaseMode mode = PhaseMode::Free);

bool is_incoherent(const DensityOperator& rho, const ReferenceBasis& basis, double tol);

DensityOperator random_density(std::size_t d, std::uint64_t seed);
UnitaryGate random_unitary(std::size_t d, std::uint64_t seed);
PureState random_pure(std::size_t d, std::uint64_t seed);

}  // namespace qcoh
