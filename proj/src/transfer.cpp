#include "ffd/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ffd/error.hpp"
#include "ffd/kernels.hpp"
#include "ffd/spectral.hpp"

namespace ffd {

namespace {

void check_couplings(const Representation& rep, const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != rep.m)
    throw DimensionError("expected " + std::to_string(rep.m) + " couplings, got " + std::to_string(alpha.size()));
}

// Calls f(indices) for every increasing tuple of length s with consecutive gaps > 2.
void for_each_tuple(int m, int s, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(t.size()) == s) {
      f(t);
      return;
    }
    for (int j = next; j <= m; ++j) {
      t.push_back(j);
      rec(j + 3);
      t.pop_back();
    }
  };
  rec(1);
}

}  // namespace

Matrix hamiltonian(const Representation& rep, const std::vector<double>& alpha) {
  check_couplings(rep, alpha);
  Matrix h = Matrix::Zero(Eigen::Index{1} << rep.n_sites, Eigen::Index{1} << rep.n_sites);
  for (int j = 1; j <= rep.m; ++j) add_pauli(h, rep.h(j), alpha[static_cast<std::size_t>(j - 1)]);
  return h;
}

int max_charge_order(int m) { return (m + 2) / 3; }

Matrix charge(const Representation& rep, const std::vector<double>& alpha, int s) {
  check_couplings(rep, alpha);
  if (s < 0 || s > max_charge_order(rep.m))
    throw IndexError("charge order " + std::to_string(s) + " outside 0.." + std::to_string(max_charge_order(rep.m)));
  Matrix q = Matrix::Zero(Eigen::Index{1} << rep.n_sites, Eigen::Index{1} << rep.n_sites);
  for_each_tuple(rep.m, s, [&](const std::vector<int>& t) {
    PauliString p(rep.n_sites);
    double w = 1;
    for (int j : t) {
      p = multiply(p, rep.h(j));
      w *= alpha[static_cast<std::size_t>(j - 1)];
    }
    add_pauli(q, p, w);
  });
  return q;
}

Matrix transfer_dense(const Representation& rep, const std::vector<double>& alpha, cplx v) {
  check_couplings(rep, alpha);
  std::vector<Matrix> t;
  t.push_back(identity(rep.n_sites));
  auto at = [&t](int m) -> const Matrix& { return t[static_cast<std::size_t>(std::max(m, 0))]; };
  for (int m = 1; m <= rep.m; ++m) {
    Matrix next = at(m - 1);
    add_pauli_times(next, rep.h(m), -v * alpha[static_cast<std::size_t>(m - 1)], at(m - 3));
    t.push_back(std::move(next));
  }
  return t.back();
}

Matrix transfer_from_charges(const Representation& rep, const std::vector<double>& alpha, cplx v) {
  Matrix t = Matrix::Zero(Eigen::Index{1} << rep.n_sites, Eigen::Index{1} << rep.n_sites);
  cplx w = 1;
  for (int s = 0; s <= max_charge_order(rep.m); ++s) {
    t += w * charge(rep, alpha, s);
    w *= -v;
  }
  return t;
}

CharPolynomial char_poly(const std::vector<double>& alpha) { return ffd_char_poly(alpha); }

QuasiEnergySet quasi_energies_from_poly(const CharPolynomial& p) {
  QuasiEnergySet q;
  for (double u : positive_roots(p)) {
    double v = std::sqrt(u);
    q.v_tilde.push_back(v);
    q.eps.push_back(1.0 / v);
    q.eps_angle.push_back(std::atan(1.0 / v));
  }
  return q;
}

QuasiEnergySet quasi_energies(const std::vector<double>& alpha) { return quasi_energies_from_poly(char_poly(alpha)); }

std::vector<double> energy_sums(const std::vector<double>& eps, int multiplicity) {
  std::vector<double> out;
  const std::size_t n = eps.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    double s = 0;
    for (std::size_t k = 0; k < n; ++k) s += ((mask >> k) & 1) ? -eps[k] : eps[k];
    for (int r = 0; r < multiplicity; ++r) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StaircaseAngles hermitian_angles(const std::vector<double>& alpha, double v) {
  StaircaseAngles a;
  a.regime = Regime::HermitianRealV;
  double p1 = 0, p2 = 0;  // phi_j, phi_{j-1}
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    double den = std::cos(p1) * std::cos(p2);
    if (den == 0.0) throw DomainError("vanishing cosine in staircase recursion", static_cast<int>(j + 1));
    double s = -v * alpha[j] / den;
    if (!(std::abs(s) <= 1.0))
      throw DomainError("|sin phi| = " + std::to_string(std::abs(s)) + " > 1 at step " + std::to_string(j + 1),
                        static_cast<int>(j + 1));
    double phi = std::asin(s);
    a.max_residual = std::max(a.max_residual, std::abs(std::sin(phi) * den + v * alpha[j]));
    a.phi.push_back(phi);
    p2 = p1;
    p1 = phi;
  }
  return a;
}

HermitianStaircase hermitian_staircase(const Representation& rep, const std::vector<double>& alpha, double v) {
  check_couplings(rep, alpha);
  HermitianStaircase out;
  out.angles = hermitian_angles(alpha, v);
  out.g = identity(rep.n_sites);
  for (int j = 1; j <= rep.m; ++j) {
    double phi = out.angles.phi[static_cast<std::size_t>(j - 1)];
    apply_right(out.g, rep.h(j), std::cos(phi / 2), std::sin(phi / 2));
  }
  out.ggt = out.g;
  for (int j = rep.m; j >= 1; --j) {
    double phi = out.angles.phi[static_cast<std::size_t>(j - 1)];
    apply_right(out.ggt, rep.h(j), std::cos(phi / 2), std::sin(phi / 2));
  }
  return out;
}

StaircaseAngles unitary_angles_from_couplings(const std::vector<double>& alpha) {
  StaircaseAngles a;
  a.regime = Regime::UnitaryImaginaryV;
  double p1 = 0, p2 = 0;
  for (double al : alpha) {
    double rhs = -al * std::cos(2 * p1) * std::cos(2 * p2);
    double phi = std::atan(rhs) / 2;
    a.max_residual = std::max(a.max_residual, std::abs(std::tan(2 * phi) - rhs) / std::max(1.0, std::abs(rhs)));
    a.phi.push_back(phi);
    p2 = p1;
    p1 = phi;
  }
  return a;
}

std::vector<double> couplings_from_angles(const std::vector<double>& phi) {
  std::vector<double> alpha;
  double p1 = 0, p2 = 0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    double c = std::cos(2 * phi[j]);
    if (std::abs(c) < 1e-14)
      throw DomainError("cos(2 phi) vanishes at index " + std::to_string(j + 1), static_cast<int>(j + 1));
    alpha.push_back(-std::tan(2 * phi[j]) / (std::cos(2 * p1) * std::cos(2 * p2)));
    p2 = p1;
    p1 = phi[j];
  }
  return alpha;
}

CircuitGeometry staircase_geometry(const std::vector<double>& phi) {
  std::vector<int> word;
  for (int j = 1; j <= static_cast<int>(phi.size()); ++j) word.push_back(j);
  for (int j = static_cast<int>(phi.size()); j >= 1; --j) word.push_back(j);
  return from_product_word(word, phi, "staircase_ggt");
}

Matrix unitary_staircase(const Representation& rep, const std::vector<double>& phi) {
  if (static_cast<int>(phi.size()) != rep.m)
    throw DimensionError("expected " + std::to_string(rep.m) + " angles, got " + std::to_string(phi.size()));
  return assemble(rep, staircase_geometry(phi));
}

double staircase_normalization(const std::vector<double>& phi) {
  double c = 1;
  for (double p : phi) c /= std::cos(2 * p);
  return c;
}

std::vector<double> predicted_phases(const QuasiEnergySet& q, int n_sites, double y) {
  const int s = static_cast<int>(q.eps.size());
  if (s > n_sites) throw DimensionError("more modes than sites");
  std::vector<double> modes;
  for (double e : q.eps) modes.push_back(std::atan(y * e));
  std::vector<double> sums = signed_sums(modes);
  std::vector<double> out;
  const int mult = 1 << (n_sites - s);
  for (double p : sums)
    for (int r = 0; r < mult; ++r) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> predicted_phases(const std::vector<double>& alpha, int n_sites) {
  return predicted_phases(quasi_energies(alpha), n_sites);
}

Matrix homogeneous_commuting_H(const Representation& rep, double phi, bool boundary_factors) {
  if (rep.m < 3) throw ConstructionError("homogeneous commuting Hamiltonian needs m >= 3");
  std::vector<double> w(static_cast<std::size_t>(rep.m), 1.0);
  if (boundary_factors) {
    double c = std::cos(2 * phi);
    w[0] = c * c;
    w[1] = c;
  }
  return hamiltonian(rep, w);
}

CircuitGeometry ising_brickwork(const std::vector<double>& phi) {
  return named_geometry("ising_brickwork", static_cast<int>(phi.size()), AngleSource::explicit_list(phi));
}

Matrix ising_charge(const Representation& rep, const std::vector<double>& phi) {
  if (is_ffd(rep.kind)) throw ConstructionError("ising_charge needs an Ising representation");
  if (static_cast<int>(phi.size()) != rep.m) throw DimensionError("one angle per generator expected");
  const int m = rep.m;
  auto ph = [&](int j) { return (j < 1 || j > m) ? 0.0 : phi[static_cast<std::size_t>(j - 1)]; };
  auto s = [&](int j) { return std::sin(2 * ph(j)); };
  auto c = [&](int j) { return std::cos(2 * ph(j)); };
  Matrix q = Matrix::Zero(Eigen::Index{1} << rep.n_sites, Eigen::Index{1} << rep.n_sites);
  for (int j = 1; j <= m; ++j) add_pauli(q, rep.h(j), s(j) * (c(j - 1) + c(j + 1)));
  for (int j = 1; j < m; ++j) {
    double sign = (j % 2) ? 1.0 : -1.0;
    add_pauli(q, multiply(rep.h(j), rep.h(j + 1)), cplx(0, sign * s(j) * s(j + 1)));
  }
  return q;
}

Matrix g1_commuting_charge(const Representation& rep, double phi) {
  const int m = rep.m;
  if (m % 2 || m < 6) throw ConstructionError("g1 charge needs even m >= 6");
  const double c = std::cos(2 * phi), s2 = std::sin(2 * phi) * std::sin(2 * phi);
  Matrix q = Matrix::Zero(Eigen::Index{1} << rep.n_sites, Eigen::Index{1} << rep.n_sites);
  add_pauli(q, rep.h(1), c * c * c);
  add_pauli(q, rep.h(2), c);
  for (int r = 1; r <= (m - 4) / 2; ++r) {
    add_pauli(q, rep.h(2 * r + 1), c * c);
    add_pauli(q, rep.h(2 * r + 2), 1.0);
  }
  add_pauli(q, rep.h(m - 1), c * c);
  add_pauli(q, rep.h(m), c);
  add_pauli(q, rep.h(2) * rep.h(3) * rep.h(5), s2 * c);
  for (int r = 4; r <= m - 4; r += 2) add_pauli(q, rep.h(r) * rep.h(r + 1) * rep.h(r + 3), s2);
  return q;
}

std::vector<FermionMode> fermion_ops(const Representation& rep, const std::vector<double>& alpha) {
  check_couplings(rep, alpha);
  PauliString chi = boundary_operator(rep);
  QuasiEnergySet q;
  try {
    q = quasi_energies(alpha);
  } catch (const ConditioningError& e) {
    throw GaugeError(std::string("degenerate quasi-energies: ") + e.what());
  }
  for (std::size_t k = 1; k < q.eps.size(); ++k)
    if (std::abs(q.eps[k] - q.eps[k - 1]) < 1e-8 * std::max(1.0, std::abs(q.eps[k])))
      throw GaugeError("degenerate quasi-energies leave the fermionic operators undefined");
  std::vector<FermionMode> out;
  const double dim = static_cast<double>(Eigen::Index{1} << rep.n_sites);
  for (std::size_t k = 0; k < q.eps.size(); ++k) {
    double vt = q.v_tilde[k];
    Matrix plus = transfer_dense(rep, alpha, -vt);
    apply_right(plus, chi, 0.0, 1.0);
    plus = plus * transfer_dense(rep, alpha, vt);
    Matrix minus = plus.adjoint();
    double n2 = (plus * minus + minus * plus).trace().real() / dim;
    if (!(n2 > 0)) throw GaugeError("fermionic operator vanishes");
    double n = std::sqrt(n2);
    out.push_back({q.eps[k], plus / n, minus / n});
  }
  return out;
}

std::vector<FermionMode> ladder_oracle(const Matrix& a, const std::vector<double>& modes, double tol) {
  const Eigen::Index d = a.rows();
  const std::size_t n = modes.size();
  bool hermitian = (a - a.adjoint()).cwiseAbs().maxCoeff() < 1e-10;
  Eigen::VectorXcd evals;
  Matrix evecs;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    evals = es.eigenvalues().cast<cplx>();
    evecs = es.eigenvectors();
  } else {
    Eigen::ComplexSchur<Matrix> cs(a);
    evals = cs.matrixT().diagonal();
    evecs = cs.matrixU();
    Matrix off = cs.matrixT();
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1e-8) throw ValidationError("ladder oracle needs a normal operator");
  }
  const std::size_t levels = std::size_t{1} << n;
  // Pattern bit k set means tau_k = -1.
  auto target = [&](std::size_t pat) {
    double s = 0;
    for (std::size_t k = 0; k < n; ++k) s += ((pat >> k) & 1) ? -modes[k] : modes[k];
    return hermitian ? cplx(s, 0) : std::polar(1.0, s);
  };
  std::vector<std::vector<Eigen::Index>> members(levels);
  for (Eigen::Index i = 0; i < d; ++i) {
    int hits = 0;
    std::size_t which = 0;
    for (std::size_t p = 0; p < levels; ++p)
      if (std::abs(evals(i) - target(p)) <= tol) {
        ++hits;
        which = p;
      }
    if (hits != 1)
      throw ValidationError("eigenvalue does not match exactly one signed-sum pattern; oracle inapplicable");
    members[which].push_back(i);
  }
  const std::size_t deg = members[0].size();
  for (const auto& m : members)
    if (m.size() != deg || deg == 0) throw ValidationError("levels are not uniformly degenerate; oracle inapplicable");

  std::vector<Matrix> basis(levels);
  for (std::size_t p = 0; p < levels; ++p) {
    Matrix v(d, static_cast<Eigen::Index>(deg));
    for (std::size_t c = 0; c < deg; ++c) v.col(static_cast<Eigen::Index>(c)) = evecs.col(members[p][c]);
    Matrix proj = v * v.adjoint();
    Matrix b(d, static_cast<Eigen::Index>(deg));
    Eigen::Index found = 0;
    for (Eigen::Index e = 0; e < d && found < static_cast<Eigen::Index>(deg); ++e) {
      Eigen::VectorXcd x = proj.col(e);
      for (Eigen::Index c = 0; c < found; ++c) x -= b.col(c) * b.col(c).dot(x);
      double nx = x.norm();
      if (nx > 1e-6) b.col(found++) = x / nx;
    }
    if (found != static_cast<Eigen::Index>(deg)) throw ValidationError("failed to build level basis");
    basis[p] = b;
  }

  std::vector<FermionMode> out;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix psi = Matrix::Zero(d, d);
    for (std::size_t p = 0; p < levels; ++p) {
      if ((p >> k) & 1) continue;  // p has tau_k = +1
      std::size_t q = p | (std::size_t{1} << k);
      double sign = 1;
      for (std::size_t l = 0; l < k; ++l)
        if ((p >> l) & 1) sign = -sign;
      psi += sign * basis[p] * basis[q].adjoint();
    }
    out.push_back({modes[k], psi, psi.adjoint()});
  }
  return out;
}

}  // namespace ffd
