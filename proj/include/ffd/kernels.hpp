#pragma once

#include <cstdint>
#include <vector>

#include "ffd/pauli.hpp"

namespace ffd {

/// Dense action of a Pauli string: column b has one nonzero, at row b ^ flip.
class PauliAction {
 public:
  explicit PauliAction(const PauliString& p);

  Eigen::Index dim() const { return dim_; }
  std::uint64_t flip() const { return flip_; }
  /// Entry P(b ^ flip, b).
  cplx column_value(Eigen::Index b) const { return col_[static_cast<std::size_t>(b)]; }
  /// Entry P(r, r ^ flip).
  cplx row_value(Eigen::Index r) const { return col_[static_cast<std::size_t>(r ^ flip_)]; }

 private:
  Eigen::Index dim_;
  std::uint64_t flip_;
  std::vector<cplx> col_;
};

// OpenMP kernels.  All of them work in place and touch each column (or row)
// independently.

/// m <- (a I + b P) m
void apply_left(Matrix& m, const PauliString& p, cplx a, cplx b);
/// m <- m (a I + b P)
void apply_right(Matrix& m, const PauliString& p, cplx a, cplx b);
/// m <- m + c P
void add_pauli(Matrix& m, const PauliString& p, cplx c);
/// out <- out + c P m
void add_pauli_times(Matrix& out, const PauliString& p, cplx c, const Matrix& m);

/// Serial dense-product versions of the kernels above, kept for testing.
namespace reference {
void apply_left(Matrix& m, const PauliString& p, cplx a, cplx b);
void apply_right(Matrix& m, const PauliString& p, cplx a, cplx b);
void add_pauli(Matrix& m, const PauliString& p, cplx c);
void add_pauli_times(Matrix& out, const PauliString& p, cplx c, const Matrix& m);
}  // namespace reference

/// Identity of dimension 2^n_sites, honouring the dense cap.
Matrix identity(int n_sites);

/// Frobenius norm of a*b - b*a.
double commutator_norm(const Matrix& a, const Matrix& b);

}  // namespace ffd
