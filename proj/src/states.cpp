#include "qcoh/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qcoh/errors.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

std::size_t total_dim(const Dims& dims) {
  if (dims.empty()) throw Error(ErrorKind::DimensionMismatch, "empty subsystem dimension vector");
  std::size_t d = 1;
  for (std::size_t x : dims) {
    if (x == 0) throw Error(ErrorKind::DimensionMismatch, "zero subsystem dimension");
    d *= x;
  }
  return d;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (!matrix_.square() || total_dim(dims_) != matrix_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "dims do not factor the matrix dimension");
  }
  const double herm = matrix_.hermiticity_deviation();
  if (herm > 1e-10) {
    std::ostringstream msg;
    msg << "||rho - rho^dag||_max = " << herm << " exceeds 1e-10";
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const double tr_dev = std::abs(matrix_.trace() - Cx(1.0, 0.0));
  if (tr_dev > 1e-10) {
    std::ostringstream msg;
    msg << "|Tr(rho) - 1| = " << tr_dev << " exceeds 1e-10";
    throw Error(ErrorKind::NotUnitTrace, msg.str());
  }
  const EigenSystem sys = eig_hermitian(matrix_);
  if (sys.eigenvalues.front() < -1e-10) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << sys.eigenvalues.front() << " below -1e-10";
    throw Error(ErrorKind::NotPositive, msg.str());
  }
}

DensityOperator DensityOperator::reduce(const std::vector<std::size_t>& keep) const {
  Dims kept_dims;
  for (std::size_t k : keep) {
    if (k >= dims_.size()) throw Error(ErrorKind::DimensionMismatch, "keep index out of range");
    kept_dims.push_back(dims_[k]);
  }
  return {partial_trace(matrix_, dims_, keep), kept_dims};
}

PureState::PureState(std::vector<Cx> amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (total_dim(dims_) != amplitudes_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dims do not factor the amplitude count");
  }
  double n2 = 0.0;
  for (const Cx& a : amplitudes_) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "norm deviates from 1 by " << std::abs(std::sqrt(n2) - 1.0);
    throw Error(ErrorKind::InvalidState, msg.str());
  }
}

DensityOperator PureState::to_density() const {
  return {outer_product(amplitudes_, amplitudes_), dims_};
}

ReferenceBasis::ReferenceBasis(UnitaryGate basis_unitary, std::string label)
    : basis_(std::move(basis_unitary)), label_(std::move(label)) {}

ReferenceBasis ReferenceBasis::computational(std::size_t d) {
  return {UnitaryGate(ComplexMatrix::identity(d), "computational"), "computational"};
}

ReferenceBasis ReferenceBasis::bell() {
  const double h = 1.0 / std::sqrt(2.0);
  // Columns: Phi+, Phi-, Psi+, Psi-.
  ComplexMatrix m(4, 4);
  m.at(0, 0) = Cx(h);
  m.at(3, 0) = Cx(h);
  m.at(0, 1) = Cx(h);
  m.at(3, 1) = Cx(-h);
  m.at(1, 2) = Cx(h);
  m.at(2, 2) = Cx(h);
  m.at(1, 3) = Cx(h);
  m.at(2, 3) = Cx(-h);
  return {UnitaryGate(std::move(m), "bell"), "bell"};
}

bool ReferenceBasis::is_computational() const {
  const ComplexMatrix& u = basis_.matrix();
  ComplexMatrix delta = u - ComplexMatrix::identity(u.rows());
  return delta.max_abs() == 0.0;
}

ComplexMatrix ReferenceBasis::to_frame(const ComplexMatrix& m) const {
  if (is_computational()) return m;
  return basis_.matrix().adjoint() * m * basis_.matrix();
}

ComplexMatrix ReferenceBasis::from_frame(const ComplexMatrix& m) const {
  if (is_computational()) return m;
  return basis_.matrix() * m * basis_.matrix().adjoint();
}

DensityOperator density_from_matrix(const ComplexMatrix& m, const Dims& dims) {
  return {m, dims};
}

DensityOperator dephase(const DensityOperator& rho, const ReferenceBasis& basis,
                        const std::vector<std::size_t>& subsystems) {
  const Dims& dims = rho.dims();
  std::vector<bool> selected(dims.size(), false);
  std::size_t sel_dim = 1;
  for (std::size_t s : subsystems) {
    if (s >= dims.size()) throw Error(ErrorKind::DimensionMismatch, "subsystem index out of range");
    if (selected[s]) throw Error(ErrorKind::DimensionMismatch, "duplicate subsystem index");
    selected[s] = true;
    sel_dim *= dims[s];
  }
  if (basis.dim() != sel_dim) {
    std::ostringstream msg;
    msg << "basis dimension " << basis.dim() << " does not match selected joint dimension "
        << sel_dim;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }

  const bool all = subsystems.size() == dims.size();
  ComplexMatrix rotated = all ? basis.to_frame(rho.matrix())
                              : [&] {
                                  ComplexMatrix b = embed_operator(basis.unitary(), dims, subsystems);
                                  return b.adjoint() * rho.matrix() * b;
                                }();

  // Zero every element whose selected-subsystem indices differ.
  const std::size_t n = rotated.rows();
  std::vector<std::size_t> sel_index(n, 0);
  {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t sub = 0;
      for (std::size_t s : subsystems) sub = sub * dims[s] + (i / strides[s]) % dims[s];
      sel_index[i] = sub;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sel_index[r] != sel_index[c]) rotated.at(r, c) = Cx(0.0, 0.0);
    }
  }

  ComplexMatrix back = all ? basis.from_frame(rotated)
                           : [&] {
                               ComplexMatrix b = embed_operator(basis.unitary(), dims, subsystems);
                               return b * rotated * b.adjoint();
                             }();
  return {std::move(back), dims};
}

DensityOperator dephase(const DensityOperator& rho, const ReferenceBasis& basis) {
  std::vector<std::size_t> all(rho.dims().size());
  std::iota(all.begin(), all.end(), 0);
  return dephase(rho, basis, all);
}

PureState maximally_coherent(std::size_t d, const std::vector<double>& phases, PhaseMode mode) {
  if (d < 2) throw Error(ErrorKind::BadParameter, "maximally coherent state needs d >= 2");
  if (phases.size() != d - 1) {
    std::ostringstream msg;
    msg << "expected " << d - 1 << " phases, got " << phases.size();
    throw Error(ErrorKind::BadPhaseCount, msg.str());
  }
  if (mode == PhaseMode::Canonical) {
    for (double t : phases) {
      if (std::abs(t) > 1e-12 && std::abs(t - M_PI) > 1e-12) {
        throw Error(ErrorKind::BadParameter, "canonical mode admits only phases 0 and pi");
      }
    }
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Cx> v(d);
  v[0] = Cx(amp, 0.0);
  for (std::size_t k = 1; k < d; ++k) {
    v[k] = amp * std::exp(Cx(0.0, phases[k - 1]));
  }
  return {std::move(v), {d}};
}

bool is_incoherent(const DensityOperator& rho, const ReferenceBasis& basis, double tol) {
  if (tol <= 0.0) throw Error(ErrorKind::BadParameter, "tolerance must be positive");
  if (basis.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "basis dimension does not match state");
  }
  const ComplexMatrix framed = basis.to_frame(rho.matrix());
  for (std::size_t r = 0; r < framed.rows(); ++r) {
    for (std::size_t c = 0; c < framed.cols(); ++c) {
      if (r != c && std::abs(framed.at(r, c)) > tol) return false;
    }
  }
  return true;
}

DensityOperator random_density(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::BadParameter, "dimension must be >= 1");
  SeededRng rng(seed);
  ComplexMatrix g(d, d);
  for (Cx& z : g.entries()) z = Cx(rng.normal(), rng.normal()) / std::sqrt(2.0);
  ComplexMatrix rho = g * g.adjoint();
  rho = rho * (1.0 / rho.trace().real());
  // Exact Hermitian symmetrization keeps validation noise-free.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      const Cx avg = 0.5 * (rho.at(r, c) + std::conj(rho.at(c, r)));
      rho.at(r, c) = avg;
      rho.at(c, r) = std::conj(avg);
    }
  }
  return {std::move(rho), {d}};
}

UnitaryGate random_unitary(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::BadParameter, "dimension must be >= 1");
  SeededRng rng(seed);
  ComplexMatrix g(d, d);
  for (Cx& z : g.entries()) z = Cx(rng.normal(), rng.normal()) / std::sqrt(2.0);
  // Modified Gram-Schmidt on columns, two passes.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Cx proj(0.0, 0.0);
        for (std::size_t r = 0; r < d; ++r) proj += std::conj(g.at(r, prev)) * g.at(r, c);
        for (std::size_t r = 0; r < d; ++r) g.at(r, c) -= proj * g.at(r, prev);
      }
      double n2 = 0.0;
      for (std::size_t r = 0; r < d; ++r) n2 += std::norm(g.at(r, c));
      const double inv = 1.0 / std::sqrt(n2);
      for (std::size_t r = 0; r < d; ++r) g.at(r, c) *= inv;
    }
  }
  return {std::move(g), "random"};
}

PureState random_pure(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::BadParameter, "dimension must be >= 1");
  SeededRng rng(seed);
  std::vector<Cx> v(d);
  double n2 = 0.0;
  for (Cx& z : v) {
    z = Cx(rng.normal(), rng.normal());
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (Cx& z : v) z *= inv;
  return {std::move(v), {d}};
}

}  // namespace qcoh
