#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcoh/complex_matrix.hpp"
#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

constexpr int kMaxSweeps = 100;

// One complex Jacobi rotation annihilating A[p][q], A and V updated in place.
// The rotation is the unitary J = I except
//   J[p][p] = c, J[p][q] = -s e^{i phi}, J[q][p] = s e^{-i phi}, J[q][q] = c,
// with e^{i phi} the phase of A[p][q]; A <- J^dag A J, V <- V J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Cx apq = a.at(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Cx phase = apq / mag;

  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  const Cx sp = s * phase;             // s e^{i phi}
  const Cx spc = s * std::conj(phase); // s e^{-i phi}

  for (std::size_t r = 0; r < n; ++r) {  // A <- A J
    const Cx arp = a.at(r, p);
    const Cx arq = a.at(r, q);
    a.at(r, p) = c * arp + spc * arq;
    a.at(r, q) = -sp * arp + c * arq;
  }
  for (std::size_t col = 0; col < n; ++col) {  // A <- J^dag A
    const Cx apc = a.at(p, col);
    const Cx aqc = a.at(q, col);
    a.at(p, col) = c * apc + sp * aqc;
    a.at(q, col) = -spc * apc + c * aqc;
  }
  for (std::size_t r = 0; r < n; ++r) {  // V <- V J
    const Cx vrp = v.at(r, p);
    const Cx vrq = v.at(r, q);
    v.at(r, p) = c * vrp + spc * vrq;
    v.at(r, q) = -sp * vrp + c * vrq;
  }

  a.at(p, q) = Cx(0.0, 0.0);
  a.at(q, p) = Cx(0.0, 0.0);
  a.at(p, p) = Cx(a.at(p, p).real(), 0.0);
  a.at(q, q) = Cx(a.at(q, q).real(), 0.0);
}

double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.rows(); ++q) {
      m = std::max(m, std::abs(a.at(p, q)));
    }
  }
  return m;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& input) {
  if (!input.square()) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition of non-square matrix");
  }
  const double herm_dev = input.hermiticity_deviation();
  if (herm_dev > 1e-10) {
    std::ostringstream msg;
    msg << "||A - A^dag||_max = " << herm_dev << " exceeds 1e-10";
    throw Error(ErrorKind::NotHermitian, msg.str());
  }

  const std::size_t n = input.rows();
  // Work on the exactly-Hermitian part; the <=1e-10 asymmetry is noise.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a.at(r, c) = 0.5 * (input.at(r, c) + std::conj(input.at(c, r)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol = 1e-14 * std::max(1.0, a.max_abs());
  int sweeps = 0;
  while (max_offdiag(a) > tol) {
    if (++sweeps > kMaxSweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap exceeded");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a.at(p, q)) > tol * 1e-2) rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a.at(i, i).real() < a.at(j, j).real(); });

  EigenSystem sys;
  sys.eigenvalues.resize(n);
  sys.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    sys.eigenvalues[k] = a.at(src, src).real();
    // First component of noticeable size is rotated to the positive real axis.
    Cx fix(1.0, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      const Cx z = v.at(r, src);
      if (std::abs(z) > 1e-8) {
        fix = std::conj(z) / std::abs(z);
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) sys.eigenvectors.at(r, k) = v.at(r, src) * fix;
  }
  return sys;
}

}  // namespace qcoh
