#include "qcoh/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

void check_finite(const std::vector<Cx>& entries) {
  for (const Cx& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::BadParameter, "matrix entry is not finite");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Cx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::BadParameter, "matrix dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::BadParameter, "matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    std::ostringstream msg;
    msg << "entry count " << entries_.size() << " does not equal " << rows << "x" << cols;
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cx(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

Cx ComplexMatrix::trace() const {
  if (!square()) throw Error(ErrorKind::DimensionMismatch, "trace of non-square matrix");
  Cx t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Cx& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_deviation() const {
  if (!square()) throw Error(ErrorKind::DimensionMismatch, "hermiticity of non-square matrix");
  double dev = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      dev = std::max(dev, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return dev;
}

double ComplexMatrix::unitarity_deviation() const {
  ComplexMatrix gram = adjoint() * (*this);
  for (std::size_t i = 0; i < gram.rows(); ++i) gram.at(i, i) -= Cx(1.0, 0.0);
  return gram.max_abs();
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix addition shape mismatch");
  }
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix subtraction shape mismatch");
  }
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cx a = at(r, k);
      if (a == Cx(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out.at(r, c) += a * other.at(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Cx scalar) const {
  ComplexMatrix out = *this;
  for (Cx& z : out.entries_) z *= scalar;
  return out;
}

std::vector<Cx> ComplexMatrix::apply(const std::vector<Cx>& vec) const {
  if (vec.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<Cx> out(rows_, Cx(0.0, 0.0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Cx acc(0.0, 0.0);
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * vec[c];
    out[r] = acc;
  }
  return out;
}

std::vector<Cx> ComplexMatrix::column(std::size_t c) const {
  std::vector<Cx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_cells) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows == 0 || cols == 0 || rows > max_cells / cols) {
    std::ostringstream msg;
    msg << "tensor product size " << rows << "x" << cols << " exceeds cap of " << max_cells
        << " cells";
    throw Error(ErrorKind::Overflow, msg.str());
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cx aij = a.at(i, j);
      if (aij == Cx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return out;
}

std::vector<Cx> tensor_product_vec(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  std::vector<Cx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

ComplexMatrix outer_product(const std::vector<Cx>& ket, const std::vector<Cx>& bra) {
  ComplexMatrix out(ket.size(), bra.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) {
      out.at(r, c) = ket[r] * std::conj(bra[c]);
    }
  }
  return out;
}

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t(1), std::multiplies<>());
}

// Row-major strides: index = sum_k i_k * stride_k.
std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    s[k - 1] = s[k] * dims[k];
  }
  return s;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  if (!rho.square()) throw Error(ErrorKind::DimensionMismatch, "partial trace of non-square matrix");
  if (product(dims) != rho.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "subsystem dims do not factor the matrix dimension");
  }
  if (keep.empty()) throw Error(ErrorKind::DimensionMismatch, "keep set must be non-empty");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw Error(ErrorKind::DimensionMismatch, "keep index out of range");
    if (kept[k]) throw Error(ErrorKind::DimensionMismatch, "duplicate keep index");
    kept[k] = true;
  }

  std::vector<std::size_t> keep_sorted;
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? keep_sorted : traced).push_back(k);

  const std::vector<std::size_t> st = strides(dims);
  std::size_t keep_dim = 1;
  for (std::size_t k : keep_sorted) keep_dim *= dims[k];
  std::size_t trace_dim = 1;
  for (std::size_t k : traced) trace_dim *= dims[k];

  // Flat offsets contributed by each kept / traced multi-index.
  auto offsets = [&](const std::vector<std::size_t>& subsys) {
    std::size_t n = 1;
    for (std::size_t k : subsys) n *= dims[k];
    std::vector<std::size_t> out(n, 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
      std::size_t rem = flat;
      for (std::size_t pos = subsys.size(); pos-- > 0;) {
        const std::size_t k = subsys[pos];
        out[flat] += (rem % dims[k]) * st[k];
        rem /= dims[k];
      }
    }
    return out;
  };

  const std::vector<std::size_t> keep_off = offsets(keep_sorted);
  const std::vector<std::size_t> trace_off = offsets(traced);

  ComplexMatrix out(keep_dim, keep_dim);
  for (std::size_t r = 0; r < keep_dim; ++r) {
    for (std::size_t c = 0; c < keep_dim; ++c) {
      Cx acc(0.0, 0.0);
      for (std::size_t t = 0; t < trace_dim; ++t) {
        acc += rho.at(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& targets) {
  if (!op.square()) throw Error(ErrorKind::DimensionMismatch, "embedded operator must be square");
  std::size_t target_dim = 1;
  std::vector<bool> is_target(dims.size(), false);
  for (std::size_t t : targets) {
    if (t >= dims.size()) throw Error(ErrorKind::DimensionMismatch, "target index out of range");
    if (is_target[t]) throw Error(ErrorKind::DimensionMismatch, "duplicate target index");
    is_target[t] = true;
    target_dim *= dims[t];
  }
  if (target_dim != op.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimension does not match target subsystems");
  }

  const std::size_t full = product(dims);
  const std::vector<std::size_t> st = strides(dims);

  // Flat index over the targets' joint space (in target-list order) for a full index.
  auto target_index = [&](std::size_t full_idx) {
    std::size_t sub = 0;
    for (std::size_t t : targets) {
      sub = sub * dims[t] + (full_idx / st[t]) % dims[t];
    }
    return sub;
  };
  // Full index with all target digits removed; identifies the spectator part.
  auto spectator_key = [&](std::size_t full_idx) {
    std::size_t key = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (is_target[k]) continue;
      key = key * dims[k] + (full_idx / st[k]) % dims[k];
    }
    return key;
  };

  ComplexMatrix out(full, full);
  for (std::size_t r = 0; r < full; ++r) {
    const std::size_t spec_r = spectator_key(r);
    const std::size_t sub_r = target_index(r);
    for (std::size_t c = 0; c < full; ++c) {
      if (spectator_key(c) != spec_r) continue;
      out.at(r, c) = op.at(sub_r, target_index(c));
    }
  }
  return out;
}

}  // namespace qcoh
