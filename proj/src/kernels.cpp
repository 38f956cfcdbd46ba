#include "ffd/kernels.hpp"

#include <bit>

#include "ffd/error.hpp"

namespace ffd {

namespace {

std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t out = 0;
  for (int j = 0; j < n; ++j)
    if ((v >> j) & 1) out |= std::uint64_t{1} << (n - 1 - j);
  return out;
}

void check_shape(const Matrix& m, Eigen::Index dim) {
  if (m.rows() != dim) throw DimensionError("matrix rows do not match Pauli dimension");
}

constexpr Eigen::Index kParallelMin = 64;

}  // namespace

PauliAction::PauliAction(const PauliString& p) {
  int n = p.n_sites();
  if (n > dense_cap())
    throw SizeError("dense realization of " + std::to_string(n) + " sites exceeds cap " +
                    std::to_string(dense_cap()));
  dim_ = Eigen::Index{1} << n;
  flip_ = reverse_bits(p.x_mask(), n);
  std::uint64_t zd = reverse_bits(p.z_mask(), n);
  cplx base = i_pow(p.phase_exp() + std::popcount(p.x_mask() & p.z_mask()));
  col_.resize(static_cast<std::size_t>(dim_));
  for (Eigen::Index b = 0; b < dim_; ++b)
    col_[static_cast<std::size_t>(b)] = (std::popcount(zd & std::uint64_t(b)) & 1) ? -base : base;
}

void apply_left(Matrix& m, const PauliString& p, cplx a, cplx b) {
  PauliAction act(p);
  check_shape(m, act.dim());
  const Eigen::Index dim = act.dim(), cols = m.cols();
  const std::uint64_t f = act.flip();
#pragma omp parallel for schedule(static) if (cols >= kParallelMin)
  for (Eigen::Index c = 0; c < cols; ++c) {
    auto col = m.col(c);
    for (Eigen::Index r = 0; r < dim; ++r) {
      Eigen::Index s = r ^ Eigen::Index(f);
      if (s < r) continue;
      cplx mr = col(r), ms = col(s);
      if (s == r) {
        col(r) = (a + b * act.row_value(r)) * mr;
      } else {
        col(r) = a * mr + b * act.row_value(r) * ms;
        col(s) = a * ms + b * act.row_value(s) * mr;
      }
    }
  }
}

void apply_right(Matrix& m, const PauliString& p, cplx a, cplx b) {
  PauliAction act(p);
  if (m.cols() != act.dim()) throw DimensionError("matrix cols do not match Pauli dimension");
  const Eigen::Index dim = act.dim(), rows = m.rows();
  const std::uint64_t f = act.flip();
  // (m P)(:, k) = m(:, k ^ f) * P(k ^ f, k)
#pragma omp parallel for schedule(static) if (dim >= kParallelMin)
  for (Eigen::Index k = 0; k < dim; ++k) {
    Eigen::Index s = k ^ Eigen::Index(f);
    if (s < k) continue;
    if (s == k) {
      m.col(k) *= a + b * act.column_value(k);
      continue;
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      cplx mk = m(r, k), ms = m(r, s);
      m(r, k) = a * mk + b * act.column_value(k) * ms;
      m(r, s) = a * ms + b * act.column_value(s) * mk;
    }
  }
}

void add_pauli(Matrix& m, const PauliString& p, cplx c) {
  PauliAction act(p);
  check_shape(m, act.dim());
  if (m.cols() != act.dim()) throw DimensionError("add_pauli needs a square matrix");
  const Eigen::Index dim = act.dim();
#pragma omp parallel for schedule(static) if (dim >= kParallelMin)
  for (Eigen::Index b = 0; b < dim; ++b) m(b ^ Eigen::Index(act.flip()), b) += c * act.column_value(b);
}

void add_pauli_times(Matrix& out, const PauliString& p, cplx c, const Matrix& m) {
  PauliAction act(p);
  check_shape(m, act.dim());
  check_shape(out, act.dim());
  if (out.cols() != m.cols()) throw DimensionError("add_pauli_times: column mismatch");
  const Eigen::Index dim = act.dim(), cols = m.cols();
#pragma omp parallel for schedule(static) if (cols >= kParallelMin)
  for (Eigen::Index k = 0; k < cols; ++k)
    for (Eigen::Index r = 0; r < dim; ++r)
      out(r, k) += c * act.row_value(r) * m(r ^ Eigen::Index(act.flip()), k);
}

namespace reference {

void apply_left(Matrix& m, const PauliString& p, cplx a, cplx b) {
  Matrix g = b * to_dense(p);
  g.diagonal().array() += a;
  m = (g * m).eval();
}

void apply_right(Matrix& m, const PauliString& p, cplx a, cplx b) {
  Matrix g = b * to_dense(p);
  g.diagonal().array() += a;
  m = (m * g).eval();
}

void add_pauli(Matrix& m, const PauliString& p, cplx c) { m += c * to_dense(p); }

void add_pauli_times(Matrix& out, const PauliString& p, cplx c, const Matrix& m) {
  out += c * (to_dense(p) * m);
}

}  // namespace reference

Matrix identity(int n_sites) {
  if (n_sites > dense_cap()) throw SizeError("identity exceeds dense cap");
  Eigen::Index d = Eigen::Index{1} << n_sites;
  return Matrix::Identity(d, d);
}

double commutator_norm(const Matrix& a, const Matrix& b) { return (a * b - b * a).norm(); }

}  // namespace ffd
