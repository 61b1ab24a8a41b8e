#include "qcoh/channels.hpp"

#include <cmath>
#include <sstream>

#include "qcoh/errors.hpp"
#include "qcoh/gates.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

namespace {

void require_unit_interval(double p, const std::string& name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << name << " parameter " << p << " outside [0, 1]";
    throw Error(ErrorKind::BadParameter, msg.str());
  }
}

std::string tag(const std::string& name, double p) {
  std::ostringstream out;
  out << name << ":" << p;
  return out.str();
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::string param_tag)
    : kraus_ops_(std::move(kraus_ops)), param_tag_(std::move(param_tag)) {
  if (kraus_ops_.empty()) {
    throw Error(ErrorKind::BadParameter, "channel needs at least one Kraus operator");
  }
  const std::size_t d = kraus_ops_.front().rows();
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& k : kraus_ops_) {
    if (!k.square() || k.rows() != d) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus operators must share a square dimension");
    }
    sum = sum + k.adjoint() * k;
  }
  const double dev = (sum - ComplexMatrix::identity(d)).max_abs();
  if (dev > 1e-9) {
    std::ostringstream msg;
    msg << "||sum K^dag K - I||_max = " << dev << " exceeds 1e-9 (" << param_tag_ << ")";
    throw Error(ErrorKind::InvalidState, msg.str());
  }
}

ComplexMatrix KrausChannel::apply_matrix(const ComplexMatrix& m) const {
  const std::size_t d = dim();
  if (!m.square() || m.rows() != d) {
    throw Error(ErrorKind::DimensionMismatch, "channel input dimension mismatch");
  }
  ComplexMatrix out(d, d);
  for (const ComplexMatrix& k : kraus_ops_) {
    out = out + k * m * k.adjoint();
  }
  return out;
}

KrausChannel bit_flip(double p) {
  require_unit_interval(p, "bit_flip");
  return {{ComplexMatrix::identity(2) * std::sqrt(1.0 - p), pauli_x().matrix() * std::sqrt(p)},
          tag("bit_flip", p)};
}

KrausChannel phase_flip(double p) {
  require_unit_interval(p, "phase_flip");
  return {{ComplexMatrix::identity(2) * std::sqrt(1.0 - p), pauli_z().matrix() * std::sqrt(p)},
          tag("phase_flip", p)};
}

KrausChannel bit_phase_flip(double p) {
  require_unit_interval(p, "bit_phase_flip");
  return {{ComplexMatrix::identity(2) * std::sqrt(1.0 - p), pauli_y().matrix() * std::sqrt(p)},
          tag("bit_phase_flip", p)};
}

KrausChannel amplitude_damping(double eta) {
  require_unit_interval(eta, "amplitude_damping");
  ComplexMatrix k0(2, 2);
  k0.at(0, 0) = Cx(1.0);
  k0.at(1, 1) = Cx(std::sqrt(eta));
  ComplexMatrix k1(2, 2);
  k1.at(0, 1) = Cx(std::sqrt(1.0 - eta));
  return {{std::move(k0), std::move(k1)}, tag("amplitude_damping", eta)};
}

KrausChannel depolarizing(double p) {
  require_unit_interval(p, "depolarizing");
  // (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z) = (1-p) rho + p I/2.
  return {{ComplexMatrix::identity(2) * std::sqrt(1.0 - 0.75 * p),
           pauli_x().matrix() * std::sqrt(0.25 * p), pauli_y().matrix() * std::sqrt(0.25 * p),
           pauli_z().matrix() * std::sqrt(0.25 * p)},
          tag("depolarizing", p)};
}

KrausChannel identity_channel(std::size_t d) {
  std::ostringstream t;
  t << "identity:" << d;
  return {{ComplexMatrix::identity(d)}, t.str()};
}

KrausChannel preset_channel(const std::string& name, double param) {
  if (name == "bit_flip") return bit_flip(param);
  if (name == "phase_flip") return phase_flip(param);
  if (name == "bit_phase_flip") return bit_phase_flip(param);
  if (name == "amplitude_damping") return amplitude_damping(param);
  if (name == "depolarizing") return depolarizing(param);
  if (name == "identity") {
    if (param < 1 || param != std::floor(param)) {
      throw Error(ErrorKind::BadParameter, "identity channel dimension must be an integer >= 1");
    }
    return identity_channel(static_cast<std::size_t>(param));
  }
  throw Error(ErrorKind::UnknownPreset, "unknown channel preset '" + name + "'");
}

KrausChannel build_channel(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::ParseError, "channel spec needs name:param, got '" + spec + "'");
  }
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  try {
    std::size_t pos = 0;
    const double param = std::stod(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument(arg);
    return preset_channel(name, param);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad channel parameter '" + arg + "'");
  }
}

DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho) {
  if (channel.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "channel dimension does not match state");
  }
  ComplexMatrix out = channel.apply_matrix(rho.matrix());
  // Symmetrize away arithmetic noise before validation.
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = r; c < out.cols(); ++c) {
      const Cx avg = 0.5 * (out.at(r, c) + std::conj(out.at(c, r)));
      out.at(r, c) = avg;
      out.at(c, r) = std::conj(avg);
    }
  }
  return {std::move(out), rho.dims()};
}

KrausChannel dilate(const UnitaryGate& u, std::size_t ancilla_dim) {
  if (ancilla_dim == 0 || u.dim() % ancilla_dim != 0) {
    throw Error(ErrorKind::DimensionMismatch, "ancilla dimension does not divide unitary dimension");
  }
  const std::size_t sys = u.dim() / ancilla_dim;
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ancilla_dim);
  for (std::size_t e = 0; e < ancilla_dim; ++e) {
    ComplexMatrix k(sys, sys);
    for (std::size_t r = 0; r < sys; ++r) {
      for (std::size_t c = 0; c < sys; ++c) {
        k.at(r, c) = u.matrix().at(r * ancilla_dim + e, c * ancilla_dim);
      }
    }
    kraus.push_back(std::move(k));
  }
  return {std::move(kraus), "dilated(" + u.spec() + ")"};
}

bool commutes_with_dephasing(const KrausChannel& channel, const ReferenceBasis& basis) {
  const std::size_t d = channel.dim();
  if (basis.dim() != d) {
    throw Error(ErrorKind::DimensionMismatch, "basis dimension does not match channel");
  }

  std::vector<DensityOperator> probes;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix m(d, d);
    m.at(i, i) = Cx(1.0);
    probes.emplace_back(std::move(m), Dims{d});
  }
  // Symmetrized matrix units: (|i>+|j>)/sqrt2 and (|i>+i|j>)/sqrt2 projectors.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix re(d, d);
      re.at(i, i) = re.at(j, j) = Cx(0.5);
      re.at(i, j) = re.at(j, i) = Cx(0.5);
      probes.emplace_back(std::move(re), Dims{d});
      ComplexMatrix im(d, d);
      im.at(i, i) = im.at(j, j) = Cx(0.5);
      im.at(i, j) = Cx(0.0, -0.5);
      im.at(j, i) = Cx(0.0, 0.5);
      probes.emplace_back(std::move(im), Dims{d});
    }
  }
  for (std::uint64_t k = 0; k < 20; ++k) {
    probes.push_back(random_density(d, derive_seed(0x5EEDDE9Au, k)));
  }

  for (const DensityOperator& rho : probes) {
    const ComplexMatrix lhs = channel.apply_matrix(dephase(rho, basis).matrix());
    const ComplexMatrix rhs = dephase(apply_channel(channel, rho), basis).matrix();
    if ((lhs - rhs).max_abs() > 1e-9) return false;
  }
  return true;
}

bool is_unital(const KrausChannel& channel) {
  const std::size_t d = channel.dim();
  const ComplexMatrix mixed = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));
  return (channel.apply_matrix(mixed) - mixed).max_abs() <= 1e-9;
}

KrausChannel channel_tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus_ops().size() * b.kraus_ops().size());
  for (const ComplexMatrix& ka : a.kraus_ops()) {
    for (const ComplexMatrix& kb : b.kraus_ops()) {
      kraus.push_back(tensor_product(ka, kb));
    }
  }
  return {std::move(kraus), a.param_tag() + " x " + b.param_tag()};
}

}  // namespace qcoh
