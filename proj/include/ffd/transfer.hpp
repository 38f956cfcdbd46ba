#pragma once

#include <vector>

#include "ffd/algebras.hpp"
#include "ffd/circuits.hpp"
#include "ffd/polynomial.hpp"

namespace ffd {

struct QuasiEnergySet {
  std::vector<double> v_tilde;    // positive roots in v
  std::vector<double> eps;        // 1 / v_tilde, descending
  std::vector<double> eps_angle;  // atan(eps)
};

enum class Regime { HermitianRealV, UnitaryImaginaryV };

struct StaircaseAngles {
  std::vector<double> phi;  // phi_1..phi_M
  Regime regime = Regime::HermitianRealV;
  double max_residual = 0;
};

/// H = sum_j alpha_j h_j.
Matrix hamiltonian(const Representation& rep, const std::vector<double>& alpha);

/// Q^(s): sum over m_1 < ... < m_s with gaps larger than 2 of prod alpha_m h_m.
Matrix charge(const Representation& rep, const std::vector<double>& alpha, int s);

/// Largest admissible charge order floor((m + 2) / 3).
int max_charge_order(int m);

/// T_M = T_{M-1} - v alpha_M h_M T_{M-3}, with T_{<=0} = 1.
Matrix transfer_dense(const Representation& rep, const std::vector<double>& alpha, cplx v);

/// sum_s (-v)^s Q^(s), the same operator built from the charges.
Matrix transfer_from_charges(const Representation& rep, const std::vector<double>& alpha, cplx v);

CharPolynomial char_poly(const std::vector<double>& alpha);

QuasiEnergySet quasi_energies(const std::vector<double>& alpha);
QuasiEnergySet quasi_energies_from_poly(const CharPolynomial& p);

/// All 2^S sums of +-eps_k, sorted, each repeated `multiplicity` times.
std::vector<double> energy_sums(const std::vector<double>& eps, int multiplicity = 1);

/// Angles of T(v) = G G^T for real v: sin phi_{j+1} = -v alpha_{j+1} / (cos phi_j cos phi_{j-1}).
StaircaseAngles hermitian_angles(const std::vector<double>& alpha, double v);

struct HermitianStaircase {
  StaircaseAngles angles;
  Matrix g;    // g_1 g_2 ... g_M
  Matrix ggt;  // g_1 ... g_M g_M ... g_1
};

HermitianStaircase hermitian_staircase(const Representation& rep, const std::vector<double>& alpha, double v);

/// tan 2 phi_{j+1} = -alpha_{j+1} cos 2 phi_j cos 2 phi_{j-1}.
StaircaseAngles unitary_angles_from_couplings(const std::vector<double>& alpha);

/// Inverse of unitary_angles_from_couplings.
std::vector<double> couplings_from_angles(const std::vector<double>& phi);

/// Staircase word u_1 ... u_M u_M ... u_1 in application order.
CircuitGeometry staircase_geometry(const std::vector<double>& phi);

/// V = u_1 ... u_M u_M ... u_1 with u_j = exp(i phi_j h_j).
Matrix unitary_staircase(const Representation& rep, const std::vector<double>& phi);

/// Positive scalar C with T(i) = C V, equal to prod_j 1 / cos 2 phi_j.
double staircase_normalization(const std::vector<double>& phi);

/// Signed sums of atan(eps_k), each with multiplicity 2^n_sites / 2^S.
std::vector<double> predicted_phases(const std::vector<double>& alpha, int n_sites);
std::vector<double> predicted_phases(const QuasiEnergySet& q, int n_sites, double y = 1.0);

/// cos^2(2 phi) h_1 + cos(2 phi) h_2 + sum_{j>=3} h_j.  Without boundary factors all weights are 1.
Matrix homogeneous_commuting_H(const Representation& rep, double phi, bool boundary_factors = true);

/// Brickwork word: even generators first, then odd ones.
CircuitGeometry ising_brickwork(const std::vector<double>& phi);

/// Extensive charge commuting with the brickwork circuit (phi_0 = phi_{M+1} = 0).
Matrix ising_charge(const Representation& rep, const std::vector<double>& phi);

/// Lowest-order charge of the homogeneous g1 G G^T circuit (m even, m >= 6).
Matrix g1_commuting_charge(const Representation& rep, double phi);

struct FermionMode {
  double eps;
  Matrix plus;   // Psi_{+k}
  Matrix minus;  // Psi_{-k}
};

/// Psi_{+-k} = T(-+v_k) chi T(+-v_k) / N_k with N_k fixed by {Psi_{+k}, Psi_{-k}} = 1.
std::vector<FermionMode> fermion_ops(const Representation& rep, const std::vector<double>& alpha);

/// Ladder operators built from the spectral decomposition of a normal operator A
/// whose eigenvalues are e^{i sum_k tau_k modes[k]}.  Within each level the basis is
/// fixed by Gram-Schmidt of projected computational basis vectors.
std::vector<FermionMode> ladder_oracle(const Matrix& a, const std::vector<double>& modes, double tol = 1e-7);

}  // namespace ffd
