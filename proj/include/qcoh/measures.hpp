#pragma once

#include <vector>

#include "qcoh/states.hpp"

namespace qcoh {

// All entropic quantities are in bits (base-2 logarithms). Relative entropy
// may be +infinity (support violation); everything else is finite.
using Bits = double;

Bits shannon_entropy(const std::vector<double>& probs);

Bits binary_entropy(double p);  // H(p, 1-p)

Bits von_neumann_entropy(const DensityOperator& rho);

// Tr(rho log2 rho) - Tr(rho log2 sigma), evaluated in sigma's eigenbasis.
// Returns +infinity when rho has weight above 1e-10 outside sigma's support.
Bits relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// S(Delta(rho)) - S(rho) relative to the given basis.
Bits coherence_rel_entropy(const DensityOperator& rho, const ReferenceBasis& basis);
Bits coherence_rel_entropy(const DensityOperator& rho);  // computational basis

// Sum of off-diagonal magnitudes in the basis frame.
double coherence_l1(const DensityOperator& rho, const ReferenceBasis& basis);
double coherence_l1(const DensityOperator& rho);

}  // namespace qcoh
