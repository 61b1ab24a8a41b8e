#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qcoh {

using Cx = std::complex<double>;

// Dense complex matrix, row-major. All operators in the library (states,
// gates, Kraus operators) live in this representation.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cx> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cx& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cx& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Cx>& entries() const { return entries_; }
  std::vector<Cx>& entries() { return entries_; }

  bool square() const { return rows_ == cols_; }

  ComplexMatrix adjoint() const;
  Cx trace() const;

  // Largest absolute entry; the norm used for every tolerance check.
  double max_abs() const;

  double hermiticity_deviation() const;  // ||A - A^dag||_max
  bool is_hermitian(double tol) const { return square() && hermiticity_deviation() <= tol; }
  double unitarity_deviation() const;  // ||U^dag U - I||_max

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Cx scalar) const;
  ComplexMatrix operator*(double scalar) const { return *this * Cx(scalar, 0.0); }

  std::vector<Cx> apply(const std::vector<Cx>& vec) const;  // matrix * column vector

  std::vector<Cx> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cx> entries_;
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column i pairs with eigenvalues[i]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
// fixed sweep order, eigenvalues ascending, each eigenvector's first
// nonzero component made real positive.
EigenSystem eig_hermitian(const ComplexMatrix& a);

inline constexpr std::size_t kMaxTensorCells = std::size_t(4096) * 4096;

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_cells = kMaxTensorCells);

// Trace out every subsystem not listed in `keep`. `dims` gives the subsystem
// dimensions in row-major tensor order; kept subsystems retain their order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

// Place an operator acting on the listed target subsystems (in their given
// order) into the full space, identity elsewhere.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& targets);

ComplexMatrix outer_product(const std::vector<Cx>& ket, const std::vector<Cx>& bra);

std::vector<Cx> tensor_product_vec(const std::vector<Cx>& a, const std::vector<Cx>& b);

}  // namespace qcoh
