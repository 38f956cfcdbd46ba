#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace ffd {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tensor product of single-site Pauli operators with a global factor i^phase.
///
/// Site j (1-based) is stored in bit j-1 of the masks.  A site with both bits
/// set carries Y, so the string equals i^phase * prod_j i^{x_j z_j} X^{x_j} Z^{z_j}.
class PauliString {
 public:
  static constexpr int kMaxSites = 64;

  PauliString() = default;
  explicit PauliString(int n_sites);
  PauliString(int n_sites, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);

  /// Single operator ('I', 'X', 'Y' or 'Z') on one site.
  static PauliString single(int n_sites, char op, int site);

  /// Parses "+i X1 X2 Z3".  With n_sites <= 0 the width is the largest site index.
  static PauliString parse(const std::string& text, int n_sites = 0);

  int n_sites() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }

  char op_at(int site) const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const;
  int weight() const;
  int max_site() const;

  PauliString with_phase(int phase_exp) const;
  PauliString times_i(int power) const { return with_phase(phase_ + power); }

  /// Moves every operator `by` sites to the right on a chain of `n_sites` sites.
  PauliString shifted(int by, int n_sites) const;

  /// Drops every operator on sites beyond `n_sites`.
  PauliString truncated(int n_sites) const;

  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ && a.phase_ == b.phase_;
  }

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

bool commutes(const PauliString& p, const PauliString& q);

/// i^k as an exact complex number.
cplx i_pow(int k);

/// Largest site count accepted by to_dense (default 14).
int dense_cap();
void set_dense_cap(int n_sites);

Matrix to_dense(const PauliString& p);

}  // namespace ffd
