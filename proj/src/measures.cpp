#include "qcoh/measures.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

// Eigenvalues in [-1e-10, 1e-12] count as zero: below that the state was
// invalid to begin with, above it the value is genuine.
constexpr double kZeroEigenvalue = 1e-12;
constexpr double kSupportLeakTol = 1e-10;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double clamp_entropy(double bits) { return (bits < 0.0 && bits >= -1e-12) ? 0.0 : bits; }

}  // namespace

Bits shannon_entropy(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12) {
      std::ostringstream msg;
      msg << "probability " << p << " below -1e-12";
      throw Error(ErrorKind::NotDistribution, msg.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum;
    throw Error(ErrorKind::NotDistribution, msg.str());
  }
  double h = 0.0;
  for (double p : probs) {
    const double clamped = std::min(std::max(p, 0.0), 1.0);
    h -= xlog2x(clamped);
  }
  return clamp_entropy(h);
}

Bits binary_entropy(double p) { return shannon_entropy({p, 1.0 - p}); }

Bits von_neumann_entropy(const DensityOperator& rho) {
  const EigenSystem sys = eig_hermitian(rho.matrix());
  double h = 0.0;
  for (double lambda : sys.eigenvalues) {
    if (lambda > kZeroEigenvalue) h -= xlog2x(lambda);
  }
  return clamp_entropy(h);
}

Bits relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "relative entropy needs equal dimensions");
  }
  const EigenSystem sig = eig_hermitian(sigma.matrix());

  double kernel_weight = 0.0;
  double cross = 0.0;  // Tr(rho log2 sigma) over the support
  for (std::size_t i = 0; i < sig.eigenvalues.size(); ++i) {
    const std::vector<Cx> v = sig.eigenvectors.column(i);
    const std::vector<Cx> rv = rho.matrix().apply(v);
    double weight = 0.0;  // <v_i| rho |v_i>
    for (std::size_t r = 0; r < v.size(); ++r) weight += (std::conj(v[r]) * rv[r]).real();
    if (sig.eigenvalues[i] > kZeroEigenvalue) {
      cross += weight * std::log2(sig.eigenvalues[i]);
    } else {
      kernel_weight += weight;
    }
  }
  if (kernel_weight > kSupportLeakTol) {
    return std::numeric_limits<double>::infinity();
  }

  const double value = -von_neumann_entropy(rho) - cross;
  return value < 0.0 && value >= -1e-9 ? 0.0 : value;
}

Bits coherence_rel_entropy(const DensityOperator& rho, const ReferenceBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "basis dimension does not match state");
  }
  const double value = von_neumann_entropy(dephase(rho, basis)) - von_neumann_entropy(rho);
  return value < 0.0 && value >= -1e-9 ? 0.0 : value;
}

Bits coherence_rel_entropy(const DensityOperator& rho) {
  return coherence_rel_entropy(rho, ReferenceBasis::computational(rho.dim()));
}

double coherence_l1(const DensityOperator& rho, const ReferenceBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "basis dimension does not match state");
  }
  const ComplexMatrix framed = basis.to_frame(rho.matrix());
  double sum = 0.0;
  for (std::size_t r = 0; r < framed.rows(); ++r) {
    for (std::size_t c = 0; c < framed.cols(); ++c) {
      if (r != c) sum += std::abs(framed.at(r, c));
    }
  }
  return sum;
}

double coherence_l1(const DensityOperator& rho) {
  return coherence_l1(rho, ReferenceBasis::computational(rho.dim()));
}

}  // namespace qcoh
