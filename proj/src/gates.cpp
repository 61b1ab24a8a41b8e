#include "qcoh/gates.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

const Cx kI(0.0, 1.0);

std::vector<double> parse_reals(const std::string& args, std::size_t expected,
                                const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad numeric argument '" + tok + "' in gate spec " + spec);
    }
  }
  if (out.size() != expected) {
    std::ostringstream msg;
    msg << "gate spec " << spec << " expects " << expected << " parameter(s), got " << out.size();
    throw Error(ErrorKind::ParseError, msg.str());
  }
  return out;
}

}  // namespace

UnitaryGate::UnitaryGate(ComplexMatrix matrix, std::string spec)
    : matrix_(std::move(matrix)), spec_(std::move(spec)) {
  if (!matrix_.square()) {
    throw Error(ErrorKind::DimensionMismatch, "unitary must be square (" + spec_ + ")");
  }
  const double dev = matrix_.unitarity_deviation();
  if (dev > 1e-10) {
    std::ostringstream msg;
    msg << "||U^dag U - I||_max = " << dev << " exceeds 1e-10 (" << spec_ << ")";
    throw Error(ErrorKind::NotUnitary, msg.str());
  }
}

UnitaryGate pauli_x() {
  return {ComplexMatrix(2, 2, {Cx(0), Cx(1), Cx(1), Cx(0)}), "X"};
}

UnitaryGate pauli_y() {
  return {ComplexMatrix(2, 2, {Cx(0), -kI, kI, Cx(0)}), "Y"};
}

UnitaryGate pauli_z() {
  return {ComplexMatrix(2, 2, {Cx(1), Cx(0), Cx(0), Cx(-1)}), "Z"};
}

UnitaryGate hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {ComplexMatrix(2, 2, {Cx(h), Cx(h), Cx(h), Cx(-h)}), "H"};
}

UnitaryGate rotation_z(double beta) {
  std::ostringstream spec;
  spec << "Rz:" << beta;
  return {ComplexMatrix(2, 2, {std::exp(-kI * (beta / 2.0)), Cx(0), Cx(0), std::exp(kI * (beta / 2.0))}),
          spec.str()};
}

UnitaryGate rotation_y(double gamma) {
  const double c = std::cos(gamma / 2.0);
  const double s = std::sin(gamma / 2.0);
  std::ostringstream spec;
  spec << "Ry:" << gamma;
  return {ComplexMatrix(2, 2, {Cx(c), Cx(-s), Cx(s), Cx(c)}), spec.str()};
}

UnitaryGate zyz_gate(double alpha, double beta, double gamma, double delta) {
  ComplexMatrix m = rotation_z(beta).matrix() * rotation_y(gamma).matrix() * rotation_z(delta).matrix();
  m = m * std::exp(kI * alpha);
  std::ostringstream spec;
  spec << "ZYZ:" << alpha << "," << beta << "," << gamma << "," << delta;
  return {std::move(m), spec.str()};
}

UnitaryGate cnot_gate() {
  ComplexMatrix m(4, 4);
  m.at(0, 0) = m.at(1, 1) = Cx(1.0);
  m.at(2, 3) = m.at(3, 2) = Cx(1.0);
  return {std::move(m), "CNOT"};
}

UnitaryGate generalized_cnot(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::BadParameter, "GCNOT dimension must be >= 2");
  ComplexMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.at(i * d + (i + j) % d, i * d + j) = Cx(1.0);
    }
  }
  std::ostringstream spec;
  spec << "GCNOT:" << d;
  return {std::move(m), spec.str()};
}

UnitaryGate damping_interaction(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::BadParameter, "damping parameter must lie in [0, 1]");
  }
  const double se = std::sqrt(eta);
  const double sc = std::sqrt(1.0 - eta);
  ComplexMatrix m(4, 4);
  m.at(0, 0) = Cx(1.0);
  m.at(1, 1) = Cx(se);
  m.at(1, 2) = Cx(sc);
  m.at(2, 1) = Cx(-sc);
  m.at(2, 2) = Cx(se);
  m.at(3, 3) = Cx(1.0);
  std::ostringstream spec;
  spec << "U_adc:" << eta;
  return {std::move(m), spec.str()};
}

UnitaryGate controlled_gate(std::size_t n_controls, const UnitaryGate& target) {
  if (n_controls == 0) throw Error(ErrorKind::BadParameter, "need at least one control qubit");
  const std::size_t control_dim = std::size_t(1) << n_controls;
  const std::size_t target_dim = target.dim();
  const std::size_t full = control_dim * target_dim;
  ComplexMatrix m(full, full);
  for (std::size_t x = 0; x + 1 < control_dim; ++x) {
    for (std::size_t t = 0; t < target_dim; ++t) {
      m.at(x * target_dim + t, x * target_dim + t) = Cx(1.0);
    }
  }
  const std::size_t base = (control_dim - 1) * target_dim;  // all controls = 1
  for (std::size_t r = 0; r < target_dim; ++r) {
    for (std::size_t c = 0; c < target_dim; ++c) {
      m.at(base + r, base + c) = target.matrix().at(r, c);
    }
  }
  std::ostringstream spec;
  spec << "controlled:" << n_controls << ":" << target.spec();
  return {std::move(m), spec.str()};
}

UnitaryGate gate_from_matrix(const ComplexMatrix& m, const std::string& spec) {
  return {m, spec};
}

UnitaryGate build_gate(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "X") return pauli_x();
  if (name == "Y") return pauli_y();
  if (name == "Z") return pauli_z();
  if (name == "H") return hadamard();
  if (name == "CNOT") return cnot_gate();
  if (name == "Rz") return rotation_z(parse_reals(args, 1, spec)[0]);
  if (name == "Ry") return rotation_y(parse_reals(args, 1, spec)[0]);
  if (name == "ZYZ") {
    auto p = parse_reals(args, 4, spec);
    return zyz_gate(p[0], p[1], p[2], p[3]);
  }
  if (name == "GCNOT") {
    const double d = parse_reals(args, 1, spec)[0];
    if (d < 2 || d != std::floor(d)) {
      throw Error(ErrorKind::BadParameter, "GCNOT dimension must be an integer >= 2");
    }
    return generalized_cnot(static_cast<std::size_t>(d));
  }
  if (name == "U_adc") return damping_interaction(parse_reals(args, 1, spec)[0]);
  if (name == "controlled") {
    const std::size_t second = args.find(':');
    if (second == std::string::npos) {
      throw Error(ErrorKind::ParseError, "controlled spec needs controlled:n:GATE");
    }
    const double n = parse_reals(args.substr(0, second), 1, spec)[0];
    if (n < 1 || n != std::floor(n)) {
      throw Error(ErrorKind::BadParameter, "control count must be an integer >= 1");
    }
    return controlled_gate(static_cast<std::size_t>(n), build_gate(args.substr(second + 1)));
  }
  throw Error(ErrorKind::UnknownPreset, "unknown gate spec '" + spec + "'");
}

}  // namespace qcoh
