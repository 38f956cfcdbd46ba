#pragma once

#include <string>
#include <vector>

#include "ffd/pauli.hpp"
#include "ffd/polynomial.hpp"
#include "ffd/transfer.hpp"

namespace ffd {

/// Couplings a_1..a_L and b_1..b_L.
struct GenCouplings {
  std::vector<double> a;
  std::vector<double> b;

  int length() const { return static_cast<int>(a.size()); }
};

/// t^A_j, t^B_j (j = 2..L) and t^C_j (j = 1..L) on the chain of sites 0..L+1.
/// Vectors are indexed by j directly; unused slots hold the identity.
struct GenOperators {
  int L = 0;
  int n_sites = 0;  // L + 2
  std::vector<PauliString> A, B, C;
};

GenOperators gen_operators(int L);

/// Pauli string on the chain 0..L+1 from text with 0-based site labels ("Z0 Y1 Y2").
PauliString gen_site_string(int L, const std::string& text);

/// H = C_1 + sum_{j=2}^{L} (A_j + B_j + C_j).
Matrix gen_hamiltonian(const GenCouplings& c);

/// Exact check of t^A_j t^B_j = -t^C_{j-1} t^C_j for j = 2..L.
bool gen_fine_tuning_exact(const GenOperators& ops);

struct GenRelationViolation {
  char x;
  int j;
  char y;
  int k;
  std::string relation;
};

/// Expected anticommutation between term x_j and term y_k (x, y in {'A','B','C'}).
bool gen_expect_anticommute(char x, int j, char y, int k);

std::vector<GenRelationViolation> verify_gen_commutation(const GenOperators& ops);
std::vector<GenRelationViolation> verify_gen_commutation(int L);

struct GenTransfer {
  Matrix t, ta, tb;
};

GenTransfer gen_transfer(const GenCouplings& c, cplx v);

struct GenPolys {
  CharPolynomial p, pa, pb;
};

GenPolys gen_char_polys(const GenCouplings& c);

QuasiEnergySet gen_quasi_energies(const GenCouplings& c);

struct GenAngles {
  // Indexed by j = 0..L; phiA/phiB meaningful from 2, phiC from 1.
  std::vector<double> phiA, phiB, phiC;
  Regime regime = Regime::HermitianRealV;
  double max_residual = 0;
};

/// Hermitian regime angles for real v; throws DomainError with index and species.
GenAngles gen_angles(const GenCouplings& c, double v);

/// Max over j of |sin phiC_{j-1} sin phiC_j - tan phiA_j tan phiB_j|.
double gen_angle_relation_residual(const GenAngles& a);

/// Unitary regime angles: tan 2 phi recursions with parameter y.
GenAngles gen_unitary_angles(const GenCouplings& c, double y = 1.0);

/// G_l = g^C_1 (g^B_2 g^A_2 g^C_2) ... (g^B_l g^A_l g^C_l), g^x = cos(phi/2) + t^x sin(phi/2).
Matrix gen_factor_G(const GenOperators& ops, const GenAngles& a, int l);
/// G^T_l = (g^C_l g^A_l g^B_l) ... (g^C_2 g^A_2 g^B_2) g^C_1.
Matrix gen_factor_Gt(const GenOperators& ops, const GenAngles& a, int l);
/// Local factor g^x_j.
Matrix gen_local_factor(const GenOperators& ops, const GenAngles& a, char x, int j);

struct GenCircuit {
  GenAngles angles;
  Matrix v;
};

/// V = U U^T with u^x_j = exp(i phi^x_j t^x_j), in the factor order of G G^T.
GenCircuit gen_unitary_circuit(const GenCouplings& c, double y = 1.0);

struct ConstraintCheck {
  bool ok = true;
  std::vector<double> residuals;  // index j - 2 for j = 2..L
};

/// tan 2phiC_{j-1} tan 2phiC_j = sin 2phiA_j sin 2phiB_j for j = 2..L.
ConstraintCheck check_angle_constraint(const GenAngles& a, double tol = 1e-9);

}  // namespace ffd
