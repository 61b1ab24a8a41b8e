#include "qcoh/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include "qcoh/channels.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/gates.hpp"
#include "qcoh/powers.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

namespace {

constexpr int kParamGridPoints = 11;  // p = 0, 0.1, ..., 1

double grid_param(int i) { return static_cast<double>(i) / (kParamGridPoints - 1); }

const char* const kQubitPresets[] = {"bit_flip", "phase_flip", "bit_phase_flip",
                                     "amplitude_damping", "depolarizing"};

DensityOperator basis_state_density(std::size_t d, std::size_t i) {
  ComplexMatrix m(d, d);
  m.at(i, i) = Cx(1.0);
  return {std::move(m), {d}};
}

DensityOperator random_diagonal_density(std::size_t d, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<double> w(d);
  double sum = 0.0;
  for (double& x : w) {
    const double g = rng.normal();
    x = g * g;
    sum += x;
  }
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = Cx(w[i] / sum);
  return {std::move(m), {d}};
}

DensityOperator plus_density() {
  return maximally_coherent(2, {0.0}, PhaseMode::Canonical).to_density();
}

VerificationReport cohering_suite(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "cohering";
  report.seed = seed;

  report.add_equality("hadamard-power", "Eq.(12)", cohering_power(hadamard()).value, 1.0, 1e-9);
  report.add_equality("pauli-x-power", "Eq.(12)", cohering_power(pauli_x()).value, 0.0, 1e-9);
  report.add_equality("pauli-y-power", "Eq.(12)", cohering_power(pauli_y()).value, 0.0, 1e-9);
  report.add_equality("pauli-z-power", "Eq.(12)", cohering_power(pauli_z()).value, 0.0, 1e-9);

  {
    SeededRng rng(derive_seed(seed, 1));
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double alpha = 2.0 * M_PI * rng.uniform();
      const double beta = 2.0 * M_PI * rng.uniform();
      const double gamma = 2.0 * M_PI * rng.uniform();
      const double delta = 2.0 * M_PI * rng.uniform();
      const double direct = cohering_power(zyz_gate(alpha, beta, gamma, delta)).value;
      worst = std::max(worst, std::abs(direct - cohering_power_zyz(gamma)));
    }
    report.add_equality("zyz-closed-form", "Eq.(12)", worst, 0.0, 1e-9);
  }

  {
    double above = 0.0;  // max of C(U) - log2 d
    double below = 0.0;  // max of -C(U)
    for (std::size_t d : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
      for (int k = 0; k < 10; ++k) {
        const double c = cohering_power(random_unitary(d, derive_seed(seed, 100 + d * 16 + k))).value;
        above = std::max(above, c - std::log2(static_cast<double>(d)));
        below = std::max(below, -c);
      }
    }
    report.add_upper_bound("power-upper-bound", "Eq.(7)", above, 0.0, 1e-9);
    report.add_upper_bound("power-nonnegative", "Eq.(7)", below, 0.0, 1e-9);
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const UnitaryGate u = random_unitary(2, derive_seed(seed, 200 + 2 * k));
      const UnitaryGate v = random_unitary(2, derive_seed(seed, 201 + 2 * k));
      const UnitaryGate uv = gate_from_matrix(tensor_product(u.matrix(), v.matrix()), "UxV");
      worst = std::max(worst, std::abs(cohering_power(uv).value - cohering_power(u).value -
                                       cohering_power(v).value));
    }
    report.add_equality("additivity-product-basis", "Eq.(8)", worst, 0.0, 1e-9);
  }

  {
    const UnitaryGate hh = gate_from_matrix(tensor_product(hadamard().matrix(), hadamard().matrix()), "HxH");
    const double composite = cohering_power(hh, ReferenceBasis::bell()).value;
    const double local_sum = 2.0 * cohering_power(hadamard()).value;
    report.add_equality("bell-basis-composite", "Eq.(9)-(10)", composite, 1.0, 1e-9);
    report.add_equality("bell-basis-gap", "Eq.(9)-(10)", local_sum - composite, 1.0, 1e-9);
  }

  {
    double worst = 0.0;
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
      for (int k = 0; k < 20; ++k) {
        const UnitaryGate u = random_unitary(2, derive_seed(seed, 300 + n * 64 + k));
        worst = std::max(worst, std::abs(cohering_power(controlled_gate(n, u)).value -
                                         cohering_power(u).value));
      }
    }
    report.add_equality("controlled-reduction", "Eq.(14)", worst, 0.0, 1e-9);
  }

  {
    report.add_equality("cnot-power", "Eq.(2-qubit_qcc)", cohering_power(cnot_gate()).value, 0.0,
                        1e-9);
    const std::vector<Cx> bell = cnot_gate().matrix().apply(
        tensor_product_vec(maximally_coherent(2, {0.0}).amplitudes(), {Cx(1.0), Cx(0.0)}));
    const DensityOperator bell_rho(outer_product(bell, bell), {2, 2});
    report.add_equality("cnot-entangles", "Eq.(2-qubit_qcc)", coherence_rel_entropy(bell_rho), 1.0,
                        1e-9);
  }

  {
    double worst = 0.0;
    for (std::size_t d : {std::size_t(2), std::size_t(3)}) {
      const UnitaryGate g = generalized_cnot(d);
      for (std::size_t i = 0; i < d * d; ++i) {
        std::vector<Cx> e(d * d, Cx(0.0));
        e[i] = Cx(1.0);
        const std::vector<Cx> out = g.matrix().apply(e);
        worst = std::max(worst,
                         coherence_rel_entropy(DensityOperator(outer_product(out, out), {d, d})));
      }
    }
    report.add_equality("gcnot-incoherent", "Sec.III.C", worst, 0.0, 1e-9);
  }

  {
    // Minimization definition vs dephasing closed form.
    double bound_violation = 0.0;  // max of C_re(rho) - S(rho||sigma_diag)
    double equality_gap = 0.0;     // max of |S(rho||Delta(rho)) - C_re(rho)|
    int stream = 0;
    for (std::size_t d : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
      for (int k = 0; k < 67; ++k) {
        const DensityOperator rho = random_density(d, derive_seed(seed, 400 + stream));
        const DensityOperator sigma = random_diagonal_density(d, derive_seed(seed, 401 + stream));
        stream += 2;
        const double cre = coherence_rel_entropy(rho);
        bound_violation = std::max(bound_violation, cre - relative_entropy(rho, sigma));
        equality_gap = std::max(
            equality_gap,
            std::abs(relative_entropy(rho, dephase(rho, ReferenceBasis::computational(d))) - cre));
      }
    }
    report.add_upper_bound("closed-form-minimization", "Eq.(1)-(2)", bound_violation, 0.0, 1e-9);
    report.add_equality("closed-form-equality", "Eq.(1)-(2)", equality_gap, 0.0, 1e-9);
  }

  {
    double worst = 0.0;
    int stream = 0;
    for (std::size_t d : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
      for (int k = 0; k < 34; ++k) {
        const DensityOperator delta = random_diagonal_density(d, derive_seed(seed, 700 + stream));
        const UnitaryGate u = random_unitary(d, derive_seed(seed, 701 + stream));
        stream += 2;
        const ComplexMatrix evolved = u.matrix() * delta.matrix() * u.matrix().adjoint();
        const double c = coherence_rel_entropy(DensityOperator(evolved, {d}));
        worst = std::max(worst, c - cohering_power(u).value);
      }
    }
    report.add_upper_bound("convexity-reduction", "Eq.(5)", worst, 0.0, 1e-9);
  }

  return report;
}

VerificationReport decohering_suite(std::uint64_t seed, PhaseMode mset_mode) {
  VerificationReport report;
  report.suite = "decohering";
  report.seed = seed;
  report.mset = mset_mode == PhaseMode::Canonical ? "canonical" : "free";

  const MaxCoherentSet qubit_set{mset_mode, 2, 0};
  const MaxCoherentSet free_set{PhaseMode::Free, 2, 0};
  const MaxCoherentSet canonical_set{PhaseMode::Canonical, 2, 0};

  for (const char* name : {"phase_flip", "bit_phase_flip", "amplitude_damping", "depolarizing"}) {
    double worst = 0.0;
    for (int i = 0; i < kParamGridPoints; ++i) {
      const KrausChannel channel = preset_channel(name, grid_param(i));
      const double d_power = decohering_power(channel, qubit_set).value;
      const double c_out = coherence_rel_entropy(apply_channel(channel, plus_density()));
      worst = std::max(worst, std::abs(d_power + c_out - 1.0));
    }
    report.add_equality(std::string("eq19-") + name, "Eq.(19)", worst, 0.0, 1e-9);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < kParamGridPoints; ++i) {
      worst = std::max(worst, std::abs(decohering_power(bit_flip(grid_param(i)), qubit_set).value));
    }
    report.add_equality("bitflip-zero", "Sec.IV", worst, 0.0, 1e-9);
  }

  report.add_equality("depolarizing-full", "Eq.(15)",
                      decohering_power(depolarizing(1.0), qubit_set).value, 1.0, 1e-9);
  report.add_equality("phaseflip-half", "Eq.(16)",
                      decohering_power(phase_flip(0.5), qubit_set).value, 1.0, 1e-9);

  {
    // Equality condition: unital and dephasing-commuting channels reach
    // D = max output entropy; amplitude damping keeps only the bound.
    double equality_worst = 0.0;
    bool flags_ok = true;
    const ReferenceBasis basis = ReferenceBasis::computational(2);
    for (const char* name : {"bit_flip", "phase_flip", "depolarizing"}) {
      for (int i = 0; i < kParamGridPoints; ++i) {
        const KrausChannel channel = preset_channel(name, grid_param(i));
        const double d_free = decohering_power(channel, free_set).value;
        const double max_s = max_output_entropy(channel, free_set).value;
        equality_worst = std::max(equality_worst, std::abs(d_free - max_s));
      }
      const KrausChannel probe = preset_channel(name, 0.35);
      flags_ok = flags_ok && is_unital(probe) && commutes_with_dephasing(probe, basis);
    }
    report.add_equality("equality-unital-commuting", "Eq.(17)", equality_worst, 0.0, 1e-6);
    report.add_equality("structure-flags", "Eq.(17)", flags_ok ? 1.0 : 0.0, 1.0, 0.0);

    double bound_worst = 0.0;
    for (int i = 0; i < kParamGridPoints; ++i) {
      const KrausChannel channel = amplitude_damping(grid_param(i));
      bound_worst = std::max(bound_worst, max_output_entropy(channel, free_set).value -
                                              decohering_power(channel, free_set).value);
    }
    report.add_upper_bound("adc-lower-bound", "Eq.(16)", bound_worst, 0.0, 1e-6);
    report.add_equality("adc-not-unital", "Eq.(17)",
                        is_unital(amplitude_damping(0.5)) ? 1.0 : 0.0, 0.0, 0.0);
  }

  {
    double worst = 0.0;
    const MaxCoherentSet pair_set{mset_mode, 4, 0};
    const std::pair<const char*, double> picks[] = {
        {"bit_flip", 0.3}, {"phase_flip", 0.7}, {"amplitude_damping", 0.5}, {"depolarizing", 0.4}};
    for (const auto& [name_a, pa] : picks) {
      for (const auto& [name_b, pb] : picks) {
        const KrausChannel a = preset_channel(name_a, pa);
        const KrausChannel b = preset_channel(name_b, pb);
        const double joint = decohering_power(channel_tensor(a, b), pair_set).value;
        const double split = decohering_power(a, qubit_set).value +
                             decohering_power(b, qubit_set).value;
        worst = std::max(worst, split - joint);
      }
    }
    report.add_upper_bound("superadditivity", "Eq.(18)", worst, 0.0, 1e-9);
  }

  {
    double worst = 0.0;
    for (const char* name : kQubitPresets) {
      for (int i = 0; i < kParamGridPoints; ++i) {
        const KrausChannel channel = preset_channel(name, grid_param(i));
        worst = std::max(worst, decohering_power(channel, canonical_set).value -
                                    decohering_power(channel, free_set).value);
      }
    }
    report.add_upper_bound("free-dominates-canonical", "Eq.(15)", worst, 0.0, 1e-9);
  }

  {
    double worst = 0.0;
    for (const char* name : kQubitPresets) {
      const KrausChannel channel = preset_channel(name, 0.37);
      for (int k = 0; k < 100; ++k) {
        const DensityOperator out =
            apply_channel(channel, random_pure(2, derive_seed(seed, 900 + k)).to_density());
        worst = std::max(worst, coherence_rel_entropy(out) + von_neumann_entropy(out));
      }
    }
    report.add_upper_bound("uncertainty-output", "Eq.(ur_1)", worst, 1.0, 1e-9);
  }

  return report;
}

VerificationReport dilation_suite(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "dilation";
  report.seed = seed;

  std::vector<DensityOperator> probes;
  for (std::size_t i = 0; i < 2; ++i) probes.push_back(basis_state_density(2, i));
  probes.push_back(plus_density());
  probes.push_back(maximally_coherent(2, {M_PI / 2}).to_density());
  for (int k = 0; k < 10; ++k) probes.push_back(random_density(2, derive_seed(seed, 20 + k)));

  {
    double worst = 0.0;
    for (int i = 0; i < kParamGridPoints; ++i) {
      const double eta = grid_param(i);
      const KrausChannel dilated = dilate(damping_interaction(eta), 2);
      const KrausChannel direct = amplitude_damping(eta);
      for (const DensityOperator& rho : probes) {
        worst = std::max(worst,
                         (dilated.apply_matrix(rho.matrix()) - direct.apply_matrix(rho.matrix()))
                             .max_abs());
      }
    }
    report.add_equality("dilated-adc-matches-preset", "Eq.(q_oper_model)", worst, 0.0, 1e-10);
  }

  {
    const KrausChannel dilated = dilate(cnot_gate(), 2);
    const ReferenceBasis basis = ReferenceBasis::computational(2);
    double worst = 0.0;
    for (const DensityOperator& rho : probes) {
      worst = std::max(worst, (dilated.apply_matrix(rho.matrix()) - dephase(rho, basis).matrix())
                                  .max_abs());
    }
    report.add_equality("dilated-cnot-dephases", "Sec.V", worst, 0.0, 1e-10);
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const UnitaryGate u = random_unitary(4, derive_seed(seed, 50 + k));
      const KrausChannel dilated = dilate(u, 2);
      for (const DensityOperator& rho : probes) {
        ComplexMatrix anc(2, 2);
        anc.at(0, 0) = Cx(1.0);
        const ComplexMatrix joint =
            u.matrix() * tensor_product(rho.matrix(), anc) * u.matrix().adjoint();
        const ComplexMatrix reduced = partial_trace(joint, {2, 2}, {0});
        worst = std::max(worst, (dilated.apply_matrix(rho.matrix()) - reduced).max_abs());
      }
    }
    report.add_equality("dilate-vs-partial-trace", "Eq.(q_oper_model)", worst, 0.0, 1e-10);
  }

  {
    double identity_worst = 0.0;
    double power_worst = 0.0;
    const std::vector<Cx> plus0 =
        tensor_product_vec(maximally_coherent(2, {0.0}).amplitudes(), {Cx(1.0), Cx(0.0)});
    for (int i = 0; i < kParamGridPoints; ++i) {
      const double eta = grid_param(i);
      const UnitaryGate u = damping_interaction(eta);
      const std::vector<Cx> out = u.matrix().apply(plus0);
      const double joint_coherence =
          coherence_rel_entropy(DensityOperator(outer_product(out, out), {2, 2}));
      const double gate_power = cohering_power(u).value;
      identity_worst = std::max(identity_worst,
                                std::abs(joint_coherence - 1.0 - 0.5 * gate_power));
      power_worst = std::max(power_worst, std::abs(gate_power - binary_entropy(eta)));
    }
    report.add_equality("adc-local-coherence-identity", "Eq.(20)", identity_worst, 0.0, 1e-9);
    report.add_equality("adc-power-closed-form", "Eq.(20)", power_worst, 0.0, 1e-9);
  }

  {
    report.add_equality("sup-cohering-adc-half", "Eq.(21)",
                        sup_cohering_power(damping_interaction(0.5), {2, 2}).value, 1.5, 1e-9);
    report.add_equality("sup-cohering-cnot", "Eq.(21)",
                        sup_cohering_power(cnot_gate(), {2, 2}).value, 1.0, 1e-9);
    report.add_equality("sup-cohering-identity", "Eq.(21)",
                        sup_cohering_power(gate_from_matrix(ComplexMatrix::identity(4), "I4"),
                                           {2, 2})
                            .value,
                        1.0, 1e-9);
  }

  {
    const MaxCoherentSet canonical_set{PhaseMode::Canonical, 2, 0};
    double worst = 0.0;  // max of 1 - (D + supC)
    for (int i = 0; i < kParamGridPoints; ++i) {
      const double eta = grid_param(i);
      const double d_power = decohering_power(amplitude_damping(eta), canonical_set).value;
      const double sup = sup_cohering_power(damping_interaction(eta), {2, 2}).value;
      worst = std::max(worst, 1.0 - (d_power + sup));
    }
    report.add_upper_bound("dilation-tradeoff", "Eq.(22)", worst, 0.0, 1e-6);
  }

  return report;
}

VerificationReport chain_suite(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "chain";
  report.seed = seed;

  {
    double worst = 0.0;  // max of C_AE - C_A
    for (int k = 0; k < 50; ++k) {
      const ChainReport chain =
          verify_coherence_chain(random_density(2, derive_seed(seed, k)), "CNOT");
      worst = std::max(worst, -chain.margins.front().second);
    }
    for (int k = 0; k < 50; ++k) {
      const ChainReport chain =
          verify_coherence_chain(random_density(3, derive_seed(seed, 100 + k)), "GCNOT:3");
      worst = std::max(worst, -chain.margins.front().second);
    }
    report.add_upper_bound("monotonicity-mixed", "Eq.(23)", worst, 0.0, 1e-9);
  }

  for (std::size_t d : {std::size_t(2), std::size_t(3)}) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const PureState psi = random_pure(d, derive_seed(seed, 200 + d * 32 + k));
      std::string spec = "GCNOT:" + std::to_string(d);
      const ChainReport chain = verify_coherence_chain(psi.to_density(), spec);
      double lo = chain.values.begin()->second;
      double hi = lo;
      for (const auto& [name, value] : chain.values) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
      }
      worst = std::max(worst, hi - lo);
    }
    report.add_equality("four-way-equality-d" + std::to_string(d), "Eq.(25)", worst, 0.0, 1e-9);
  }

  {
    const ChainReport chain = verify_coherence_chain(plus_density(), "CNOT");
    double worst = 0.0;
    for (const auto& [name, value] : chain.values) {
      worst = std::max(worst, std::abs(value - 1.0));
    }
    report.add_equality("plus-cnot-chain", "Eq.(2-qubit_qcc)", worst, 0.0, 1e-9);
  }

  {
    const ChainReport chain =
        verify_coherence_chain(random_diagonal_density(2, derive_seed(seed, 300)), "CNOT");
    double worst = 0.0;
    for (const auto& [name, value] : chain.values) worst = std::max(worst, std::abs(value));
    report.add_equality("diagonal-stays-incoherent", "Eq.(23)", worst, 0.0, 1e-9);
  }

  return report;
}

VerificationReport deficit_suite(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "deficit";
  report.seed = seed;

  // Fold the per-state reports into worst-margin rows.
  std::vector<std::string> order;
  std::map<std::string, CheckRow> folded;
  auto fold = [&](const VerificationReport& single) {
    for (const CheckRow& row : single.checks) {
      auto it = folded.find(row.id);
      if (it == folded.end()) {
        order.push_back(row.id);
        folded.emplace(row.id, row);
      } else if (row.margin > it->second.margin) {
        it->second = row;
      }
    }
  };

  for (int k = 0; k < 200; ++k) {
    Dims dims{2, 2};
    DensityOperator rho = random_density(4, derive_seed(seed, 1000 + k));
    fold(verify_deficit_relations(BipartiteState(DensityOperator(rho.matrix(), dims))));
  }
  for (const std::string& id : order) report.checks.push_back(folded.at(id));

  {
    // Bell pair: every identity sits at its extreme values.
    const std::vector<Cx> bell = {Cx(1 / std::sqrt(2.0)), Cx(0.0), Cx(0.0), Cx(1 / std::sqrt(2.0))};
    const BipartiteState bell_state(PureState(bell, {2, 2}).to_density());
    report.add_equality("bell-qi", "Sec.VI", qi_relative_entropy(bell_state), 1.0, 1e-9);
    report.add_equality("bell-discord", "Eq.(D_C_1)", discord_fixed_basis(bell_state), 1.0, 1e-9);
    report.add_equality("bell-deficit", "Sec.VI", one_way_deficit(bell_state), 1.0, 1e-6);
  }

  {
    // Quantum-incoherent states: zero deficit and zero QI gap.
    double qi_worst = 0.0;
    double deficit_worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      SeededRng rng(derive_seed(seed, 2000 + k));
      const double p = rng.uniform();
      ComplexMatrix block0 = random_density(2, derive_seed(seed, 2100 + k)).matrix() * p;
      ComplexMatrix block1 = random_density(2, derive_seed(seed, 2200 + k)).matrix() * (1.0 - p);
      ComplexMatrix joint(4, 4);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          joint.at(r, c) = block0.at(r, c);
          joint.at(2 + r, 2 + c) = block1.at(r, c);
        }
      }
      const BipartiteState qi_state(DensityOperator(std::move(joint), {2, 2}));
      qi_worst = std::max(qi_worst, qi_relative_entropy(qi_state));
      deficit_worst = std::max(deficit_worst, one_way_deficit(qi_state));
    }
    report.add_equality("qi-fixed-point", "Sec.VI", qi_worst, 0.0, 1e-9);
    report.add_upper_bound("qi-state-zero-deficit", "Sec.VI", deficit_worst, 0.0, 1e-6);
  }

  {
    // Sampling check of the closed-form minimization over product-diagonal
    // states (the global-coherence lemma).
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const DensityOperator rho = random_density(4, derive_seed(seed, 3000 + k));
      const DensityOperator zeta = random_diagonal_density(4, derive_seed(seed, 3100 + k));
      worst = std::max(worst, coherence_rel_entropy(rho) - relative_entropy(rho, zeta));
    }
    report.add_upper_bound("gi-closed-form-bound", "Sec.V", worst, 0.0, 1e-9);
  }

  return report;
}

}  // namespace

VerificationReport run_suite(const std::string& name, std::uint64_t seed, PhaseMode mset_mode) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (name == "cohering") {
    report = cohering_suite(seed);
  } else if (name == "decohering") {
    report = decohering_suite(seed, mset_mode);
  } else if (name == "dilation") {
    report = dilation_suite(seed);
  } else if (name == "chain") {
    report = chain_suite(seed);
  } else if (name == "deficit") {
    report = deficit_suite(seed);
  } else if (name == "all") {
    report.suite = "all";
    report.seed = seed;
    report.mset = mset_mode == PhaseMode::Canonical ? "canonical" : "free";
    for (const char* sub : {"cohering", "decohering", "dilation", "chain", "deficit"}) {
      report.append(run_suite(sub, seed, mset_mode));
    }
  } else {
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace qcoh
