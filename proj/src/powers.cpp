#include "qcoh/powers.hpp"

#include <cmath>
#include <sstream>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

constexpr int kRefineIterations = 32;
constexpr double kRefineShrink = 0.6;

std::string format_phases(const std::vector<double>& phases) {
  std::ostringstream out;
  out << "phases:[";
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (i) out << ",";
    out << phases[i];
  }
  out << "]";
  return out.str();
}

double wrap_angle(double t) {
  t = std::fmod(t, 2.0 * M_PI);
  return t < 0.0 ? t + 2.0 * M_PI : t;
}

struct PhaseSearch {
  double value = 0.0;
  std::vector<double> phases;
};

// Deterministic derivative-free search over phase vectors: lexicographic
// grid scan (strict improvement keeps the earliest optimum) followed by
// coordinate descent with a shrinking step.
PhaseSearch optimize_phases(std::size_t n_angles, std::size_t grid_per_angle,
                            const std::function<double(const std::vector<double>&)>& objective,
                            bool minimize) {
  const double sign = minimize ? -1.0 : 1.0;
  const double step0 = 2.0 * M_PI / static_cast<double>(grid_per_angle);

  std::vector<double> current(n_angles, 0.0);
  PhaseSearch best;
  best.phases = current;
  best.value = sign * objective(current);

  std::size_t total = 1;
  for (std::size_t i = 0; i < n_angles; ++i) total *= grid_per_angle;
  for (std::size_t flat = 1; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t i = n_angles; i-- > 0;) {
      current[i] = step0 * static_cast<double>(rem % grid_per_angle);
      rem /= grid_per_angle;
    }
    const double v = sign * objective(current);
    if (v > best.value + 0.0) {
      best.value = v;
      best.phases = current;
    }
  }

  double step = step0;
  for (int iter = 0; iter < kRefineIterations; ++iter) {
    for (std::size_t i = 0; i < n_angles; ++i) {
      for (double delta : {step, -step}) {
        std::vector<double> trial = best.phases;
        trial[i] = wrap_angle(trial[i] + delta);
        const double v = sign * objective(trial);
        if (v > best.value) {
          best.value = v;
          best.phases = trial;
        }
      }
    }
    step *= kRefineShrink;
  }

  best.value *= sign;
  return best;
}

}  // namespace

std::size_t MaxCoherentSet::effective_grid() const {
  if (grid_per_angle != 0) return grid_per_angle;
  // 64 points for the single qubit phase, halving per extra angle.
  std::size_t g = 64;
  for (std::size_t d = 2; d < dim; ++d) g = std::max<std::size_t>(4, g / 2);
  return g;
}

std::vector<PureState> MaxCoherentSet::canonical_states() const {
  const std::size_t n_angles = dim - 1;
  std::vector<PureState> out;
  out.reserve(std::size_t(1) << n_angles);
  for (std::size_t k = 0; k < (std::size_t(1) << n_angles); ++k) {
    std::vector<double> phases(n_angles, 0.0);
    for (std::size_t j = 0; j < n_angles; ++j) {
      if ((k >> (n_angles - 1 - j)) & 1) phases[j] = M_PI;  // lexicographic order
    }
    out.push_back(maximally_coherent(dim, phases, PhaseMode::Canonical));
  }
  return out;
}

std::string MaxCoherentSet::describe() const {
  std::ostringstream out;
  if (mode == PhaseMode::Canonical) {
    out << "canonical:" << (std::size_t(1) << (dim - 1)) << " sign patterns";
  } else {
    out << "free:grid=" << effective_grid() << "/angle,refine=" << kRefineIterations;
  }
  return out.str();
}

PowerResult cohering_power(const UnitaryGate& u, const ReferenceBasis& basis) {
  if (u.dim() != basis.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "gate and basis dimension mismatch");
  }
  const std::size_t d = u.dim();
  PowerResult result;
  result.mode = PhaseMode::Canonical;
  std::ostringstream grid;
  grid << "exact:" << d << " basis states";
  result.grid_spec = grid.str();

  std::size_t best_index = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Cx> e(d, Cx(0.0, 0.0));
    e[i] = Cx(1.0, 0.0);
    const std::vector<Cx> out = u.matrix().apply(e);
    const double c = coherence_rel_entropy(DensityOperator(outer_product(out, out), {d}), basis);
    if (c > best) {
      best = c;
      best_index = i;
    }
  }
  result.value = best;
  std::ostringstream who;
  who << "basis:" << best_index;
  result.maximizer = who.str();
  return result;
}

PowerResult cohering_power(const UnitaryGate& u) {
  return cohering_power(u, ReferenceBasis::computational(u.dim()));
}

Bits cohering_power_zyz(double gamma) {
  const double c = std::cos(gamma / 2.0);
  return binary_entropy(c * c);
}

namespace {

PowerResult optimize_over_mset(const MaxCoherentSet& mset,
                               const std::function<double(const PureState&)>& objective,
                               bool minimize) {
  PowerResult result;
  result.mode = mset.mode;
  result.grid_spec = mset.describe();

  if (mset.mode == PhaseMode::Canonical) {
    bool first = true;
    std::vector<double> best_phases;
    for (const PureState& psi : mset.canonical_states()) {
      const double v = objective(psi);
      const bool better = minimize ? v < result.value : v > result.value;
      if (first || better) {
        first = false;
        result.value = v;
        best_phases.clear();
        for (std::size_t j = 1; j < psi.dim(); ++j) {
          best_phases.push_back(psi.amplitudes()[j].real() < 0.0 ? M_PI : 0.0);
        }
      }
    }
    result.maximizer = format_phases(best_phases);
    return result;
  }

  auto phase_objective = [&](const std::vector<double>& phases) {
    return objective(maximally_coherent(mset.dim, phases, PhaseMode::Free));
  };
  const PhaseSearch found =
      optimize_phases(mset.dim - 1, mset.effective_grid(), phase_objective, minimize);
  result.value = found.value;
  result.maximizer = format_phases(found.phases);
  return result;
}

}  // namespace

PowerResult decohering_power(const KrausChannel& channel, const MaxCoherentSet& mset,
                             const ReferenceBasis& basis) {
  if (channel.dim() != mset.dim) {
    throw Error(ErrorKind::DimensionMismatch, "channel and candidate-set dimension mismatch");
  }
  if (channel.dim() != basis.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "channel and basis dimension mismatch");
  }
  auto surviving_coherence = [&](const PureState& psi) {
    return coherence_rel_entropy(apply_channel(channel, psi.to_density()), basis);
  };
  PowerResult result = optimize_over_mset(mset, surviving_coherence, /*minimize=*/true);
  result.value = std::log2(static_cast<double>(channel.dim())) - result.value;
  if (result.value < 0.0 && result.value >= -1e-9) result.value = 0.0;
  return result;
}

PowerResult decohering_power(const KrausChannel& channel, const MaxCoherentSet& mset) {
  return decohering_power(channel, mset, ReferenceBasis::computational(channel.dim()));
}

PowerResult max_output_entropy(const KrausChannel& channel, const MaxCoherentSet& mset) {
  if (channel.dim() != mset.dim) {
    throw Error(ErrorKind::DimensionMismatch, "channel and candidate-set dimension mismatch");
  }
  auto objective = [&](const PureState& psi) {
    return von_neumann_entropy(apply_channel(channel, psi.to_density()));
  };
  return optimize_over_mset(mset, objective, /*minimize=*/false);
}

PowerResult sup_cohering_power(const UnitaryGate& u, const Dims& split, PhaseMode mode) {
  if (split.size() != 2 || total_dim(split) != u.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "split does not factor the unitary dimension");
  }
  const std::size_t da = split[0];
  const std::size_t de = split[1];
  const ReferenceBasis product_basis = ReferenceBasis::computational(u.dim());

  auto coherence_of = [&](const PureState& psi, std::size_t e) {
    std::vector<Cx> anc(de, Cx(0.0, 0.0));
    anc[e] = Cx(1.0, 0.0);
    const std::vector<Cx> joint = u.matrix().apply(tensor_product_vec(psi.amplitudes(), anc));
    return coherence_rel_entropy(DensityOperator(outer_product(joint, joint), {da, de}),
                                 product_basis);
  };

  PowerResult result;
  bool first = true;
  for (std::size_t e = 0; e < de; ++e) {
    MaxCoherentSet mset{mode, da, 0};
    const PowerResult sub = optimize_over_mset(
        mset, [&](const PureState& psi) { return coherence_of(psi, e); }, /*minimize=*/false);
    if (first || sub.value > result.value) {
      first = false;
      result = sub;
      std::ostringstream who;
      who << sub.maximizer << " ancilla:|" << e << ">";
      result.maximizer = who.str();
    }
  }
  result.mode = mode;
  return result;
}

}  // namespace qcoh
