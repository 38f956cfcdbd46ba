#include "ffd/genmodel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffd/error.hpp"
#include "ffd/kernels.hpp"

namespace ffd {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;

void check_couplings(const GenCouplings& c) {
  if (c.a.size() != c.b.size()) throw DimensionError("a and b must have the same length");
  if (c.a.empty()) throw ConstructionError("generalized model needs L >= 1");
  for (std::size_t i = 0; i < c.a.size(); ++i)
    if (!std::isfinite(c.a[i]) || !std::isfinite(c.b[i])) throw DomainError("non-finite coupling", static_cast<int>(i + 1));
}

double a_(const GenCouplings& c, int j) { return c.a[static_cast<std::size_t>(j - 1)]; }
double b_(const GenCouplings& c, int j) { return c.b[static_cast<std::size_t>(j - 1)]; }

RPoly combine(const RPoly& x, const RPoly& y, const RPoly& z, const RPoly& w, const Rational& coef, int sx, int sy,
              int sz) {
  std::size_t n = std::max({x.size(), y.size(), z.size(), w.size() + 1});
  RPoly out(n, Rational(0));
  auto add = [&out](const RPoly& p, int sign) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (sign > 0) out[k] += p[k];
      else if (sign < 0) out[k] -= p[k];
    }
  };
  add(x, sx);
  add(y, sy);
  add(z, sz);
  for (std::size_t k = 0; k < w.size(); ++k) out[k + 1] -= coef * w[k];
  return out;
}

CharPolynomial to_poly(const RPoly& p) {
  CharPolynomial out;
  for (const Rational& c : p) out.coeffs.push_back(static_cast<double>(c));
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0.0) out.coeffs.pop_back();
  return out;
}

double asin_checked(double s, int j, const char* species) {
  if (!(std::abs(s) <= 1.0))
    throw DomainError("|sin phi^" + std::string(species) + "_" + std::to_string(j) + "| = " +
                          std::to_string(std::abs(s)) + " > 1",
                      j, species);
  return std::asin(s);
}

double safe_div(double num, double den, int j, const char* species) {
  if (den == 0.0) throw DomainError("vanishing cosine in recursion", j, species);
  return num / den;
}

const PauliString& term(const GenOperators& ops, char x, int j) {
  const std::vector<PauliString>& v = x == 'A' ? ops.A : x == 'B' ? ops.B : ops.C;
  return v[static_cast<std::size_t>(j)];
}

double angle(const GenAngles& a, char x, int j) {
  const std::vector<double>& v = x == 'A' ? a.phiA : x == 'B' ? a.phiB : a.phiC;
  return v[static_cast<std::size_t>(j)];
}

}  // namespace

PauliString gen_site_string(int L, const std::string& text) {
  // Shift labels by one so site 0 becomes internal site 1.
  std::istringstream in(text);
  std::string tok, shifted;
  while (in >> tok) {
    if (tok.size() < 2) throw ParseError("bad token '" + tok + "'");
    shifted += " " + tok.substr(0, 1) + std::to_string(std::stoi(tok.substr(1)) + 1);
  }
  return PauliString::parse(shifted, L + 2);
}

GenOperators gen_operators(int L) {
  if (L < 1) throw ConstructionError("generalized model needs L >= 1");
  GenOperators ops;
  ops.L = L;
  ops.n_sites = L + 2;
  PauliString id(ops.n_sites);
  ops.A.assign(static_cast<std::size_t>(L + 1), id);
  ops.B = ops.A;
  ops.C = ops.A;
  auto s = [](int k) { return std::to_string(k); };
  for (int j = 1; j <= L; ++j) {
    ops.C[static_cast<std::size_t>(j)] = gen_site_string(L, "Z" + s(j - 1) + " Z" + s(j + 1));
    if (j < 2) continue;
    ops.A[static_cast<std::size_t>(j)] = gen_site_string(L, "X" + s(j - 1) + " X" + s(j) + " Z" + s(j + 1));
    ops.B[static_cast<std::size_t>(j)] = gen_site_string(L, "Z" + s(j - 2) + " Y" + s(j - 1) + " Y" + s(j));
  }
  return ops;
}

Matrix gen_hamiltonian(const GenCouplings& c) {
  check_couplings(c);
  const int L = c.length();
  GenOperators ops = gen_operators(L);
  Matrix h = Matrix::Zero(Eigen::Index{1} << ops.n_sites, Eigen::Index{1} << ops.n_sites);
  add_pauli(h, ops.C[1], a_(c, 1) * b_(c, 1));
  for (int j = 2; j <= L; ++j) {
    add_pauli(h, ops.A[static_cast<std::size_t>(j)], a_(c, j - 1) * a_(c, j));
    add_pauli(h, ops.B[static_cast<std::size_t>(j)], b_(c, j - 1) * b_(c, j));
    add_pauli(h, ops.C[static_cast<std::size_t>(j)], a_(c, j) * b_(c, j));
  }
  return h;
}

bool gen_fine_tuning_exact(const GenOperators& ops) {
  for (int j = 2; j <= ops.L; ++j) {
    PauliString ab = multiply(term(ops, 'A', j), term(ops, 'B', j));
    PauliString cc = multiply(term(ops, 'C', j - 1), term(ops, 'C', j)).times_i(2);
    if (!(ab == cc)) return false;
  }
  return true;
}

bool gen_expect_anticommute(char x, int j, char y, int k) {
  if (x == 'C' && y != 'C') return gen_expect_anticommute(y, k, x, j);
  int d = k - j;
  if (x == 'C' && y == 'C') return false;
  if (y == 'C') return d >= -2 && d <= 1;
  if (x == y) return std::abs(d) == 1 || std::abs(d) == 2;
  return std::abs(d) == 1;
}

std::vector<GenRelationViolation> verify_gen_commutation(const GenOperators& ops) {
  struct Term {
    char x;
    int j;
  };
  std::vector<Term> terms;
  for (int j = 1; j <= ops.L; ++j) {
    if (j >= 2) {
      terms.push_back({'A', j});
      terms.push_back({'B', j});
    }
    terms.push_back({'C', j});
  }
  std::vector<GenRelationViolation> out;
  for (std::size_t p = 0; p < terms.size(); ++p) {
    for (std::size_t q = p + 1; q < terms.size(); ++q) {
      const Term& s = terms[p];
      const Term& t = terms[q];
      bool anti = gen_expect_anticommute(s.x, s.j, t.x, t.j);
      if (commutes(term(ops, s.x, s.j), term(ops, t.x, t.j)) == anti)
        out.push_back({s.x, s.j, t.x, t.j, anti ? "anticommute" : "commute"});
    }
  }
  return out;
}

std::vector<GenRelationViolation> verify_gen_commutation(int L) { return verify_gen_commutation(gen_operators(L)); }

GenTransfer gen_transfer(const GenCouplings& c, cplx v) {
  check_couplings(c);
  const int L = c.length();
  GenOperators ops = gen_operators(L);
  const Matrix id = identity(ops.n_sites);
  // Index offset 1 so that T_{-1} lives at slot 0.
  std::vector<Matrix> t(static_cast<std::size_t>(L + 2), id), ta(static_cast<std::size_t>(L + 2), id),
      tb(static_cast<std::size_t>(L + 2), id);
  auto T = [&t](int l) -> Matrix& { return t[static_cast<std::size_t>(l + 1)]; };
  auto TA = [&ta](int l) -> Matrix& { return ta[static_cast<std::size_t>(l + 1)]; };
  auto TB = [&tb](int l) -> Matrix& { return tb[static_cast<std::size_t>(l + 1)]; };
  for (int l = 1; l <= L; ++l) {
    Matrix next = TA(l) + TB(l) - T(l - 1);
    add_pauli_times(next, ops.C[static_cast<std::size_t>(l)], -v * a_(c, l) * b_(c, l), T(l - 2));
    T(l) = std::move(next);
    if (l + 1 <= L) {
      Matrix na = T(l);
      add_pauli_times(na, ops.A[static_cast<std::size_t>(l + 1)], -v * a_(c, l) * a_(c, l + 1), TB(l - 1));
      Matrix nb = T(l);
      add_pauli_times(nb, ops.B[static_cast<std::size_t>(l + 1)], -v * b_(c, l) * b_(c, l + 1), TA(l - 1));
      TA(l + 1) = std::move(na);
      TB(l + 1) = std::move(nb);
    }
  }
  return {T(L), TA(L), TB(L)};
}

GenPolys gen_char_polys(const GenCouplings& c) {
  check_couplings(c);
  const int L = c.length();
  std::vector<RPoly> p(static_cast<std::size_t>(L + 2), RPoly{Rational(1)});
  std::vector<RPoly> pa = p, pb = p;
  auto P = [&p](int l) -> RPoly& { return p[static_cast<std::size_t>(l + 1)]; };
  auto PA = [&pa](int l) -> RPoly& { return pa[static_cast<std::size_t>(l + 1)]; };
  auto PB = [&pb](int l) -> RPoly& { return pb[static_cast<std::size_t>(l + 1)]; };
  auto sq = [](double x) -> Rational {
    Rational r(x);
    return r * r;
  };
  for (int l = 1; l <= L; ++l) {
    P(l) = combine(PA(l), PB(l), P(l - 1), P(l - 2), sq(a_(c, l) * b_(c, l)), 1, 1, -1);
    if (l + 1 <= L) {
      PA(l + 1) = combine(P(l), {}, {}, PB(l - 1), sq(a_(c, l) * a_(c, l + 1)), 1, 0, 0);
      PB(l + 1) = combine(P(l), {}, {}, PA(l - 1), sq(b_(c, l) * b_(c, l + 1)), 1, 0, 0);
    }
  }
  return {to_poly(P(L)), to_poly(PA(L)), to_poly(PB(L))};
}

QuasiEnergySet gen_quasi_energies(const GenCouplings& c) { return quasi_energies_from_poly(gen_char_polys(c).p); }

GenAngles gen_angles(const GenCouplings& c, double v) {
  check_couplings(c);
  const int L = c.length();
  GenAngles g;
  g.regime = Regime::HermitianRealV;
  g.phiA.assign(static_cast<std::size_t>(L + 1), 0.0);
  g.phiB = g.phiA;
  g.phiC = g.phiA;
  auto cA = [&g](int j) { return std::cos(g.phiA[static_cast<std::size_t>(j)]); };
  auto cB = [&g](int j) { return std::cos(g.phiB[static_cast<std::size_t>(j)]); };
  auto cC = [&g](int j) { return std::cos(g.phiC[static_cast<std::size_t>(j)]); };
  auto stepC = [&](int j) {  // phiC_{j+1}
    double den = cC(j) * cC(j) * cA(j) * cB(j) * cA(j + 1) * cB(j + 1);
    double s = safe_div(-v * a_(c, j + 1) * b_(c, j + 1), den, j + 1, "C");
    g.phiC[static_cast<std::size_t>(j + 1)] = asin_checked(s, j + 1, "C");
    g.max_residual = std::max(g.max_residual, std::abs(std::sin(g.phiC[static_cast<std::size_t>(j + 1)]) * den +
                                                       v * a_(c, j + 1) * b_(c, j + 1)));
  };
  stepC(0);
  for (int j = 1; j < L; ++j) {
    double denA = cC(j - 1) * cA(j - 1) * cA(j) * cB(j) * cC(j);
    double denB = cC(j - 1) * cB(j - 1) * cA(j) * cB(j) * cC(j);
    double sA = safe_div(-v * a_(c, j) * a_(c, j + 1), denA, j + 1, "A");
    double sB = safe_div(-v * b_(c, j) * b_(c, j + 1), denB, j + 1, "B");
    g.phiA[static_cast<std::size_t>(j + 1)] = asin_checked(sA, j + 1, "A");
    g.phiB[static_cast<std::size_t>(j + 1)] = asin_checked(sB, j + 1, "B");
    g.max_residual = std::max(g.max_residual, std::abs(std::sin(g.phiA[static_cast<std::size_t>(j + 1)]) * denA +
                                                       v * a_(c, j) * a_(c, j + 1)));
    g.max_residual = std::max(g.max_residual, std::abs(std::sin(g.phiB[static_cast<std::size_t>(j + 1)]) * denB +
                                                       v * b_(c, j) * b_(c, j + 1)));
    stepC(j);
  }
  return g;
}

double gen_angle_relation_residual(const GenAngles& a) {
  double worst = 0;
  const int L = static_cast<int>(a.phiC.size()) - 1;
  for (int j = 1; j <= L; ++j) {
    double lhs = std::sin(a.phiC[static_cast<std::size_t>(j - 1)]) * std::sin(a.phiC[static_cast<std::size_t>(j)]);
    double rhs = std::tan(a.phiA[static_cast<std::size_t>(j)]) * std::tan(a.phiB[static_cast<std::size_t>(j)]);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

GenAngles gen_unitary_angles(const GenCouplings& c, double y) {
  check_couplings(c);
  const int L = c.length();
  GenAngles g;
  g.regime = Regime::UnitaryImaginaryV;
  g.phiA.assign(static_cast<std::size_t>(L + 1), 0.0);
  g.phiB = g.phiA;
  g.phiC = g.phiA;
  auto cA = [&g](int j) { return std::cos(2 * g.phiA[static_cast<std::size_t>(j)]); };
  auto cB = [&g](int j) { return std::cos(2 * g.phiB[static_cast<std::size_t>(j)]); };
  auto cC = [&g](int j) { return std::cos(2 * g.phiC[static_cast<std::size_t>(j)]); };
  auto stepC = [&](int j) {
    double rhs = -y * a_(c, j + 1) * b_(c, j + 1) * cC(j) * cC(j) * cA(j) * cB(j) * cA(j + 1) * cB(j + 1);
    g.phiC[static_cast<std::size_t>(j + 1)] = std::atan(rhs) / 2;
  };
  stepC(0);
  for (int j = 1; j < L; ++j) {
    double rA = -y * a_(c, j) * a_(c, j + 1) * cC(j - 1) * cA(j - 1) * cA(j) * cB(j) * cC(j);
    double rB = -y * b_(c, j) * b_(c, j + 1) * cC(j - 1) * cB(j - 1) * cA(j) * cB(j) * cC(j);
    g.phiA[static_cast<std::size_t>(j + 1)] = std::atan(rA) / 2;
    g.phiB[static_cast<std::size_t>(j + 1)] = std::atan(rB) / 2;
    stepC(j);
  }
  return g;
}

Matrix gen_local_factor(const GenOperators& ops, const GenAngles& a, char x, int j) {
  Matrix m = identity(ops.n_sites);
  double phi = angle(a, x, j);
  apply_left(m, term(ops, x, j), std::cos(phi / 2), std::sin(phi / 2));
  return m;
}

namespace {

// Multiplies the factor of (x, j) onto the right of m: Hermitian g or unitary u.
void right_factor(Matrix& m, const GenOperators& ops, const GenAngles& a, char x, int j) {
  double phi = angle(a, x, j);
  if (a.regime == Regime::HermitianRealV) apply_right(m, term(ops, x, j), std::cos(phi / 2), std::sin(phi / 2));
  else apply_right(m, term(ops, x, j), std::cos(phi), cplx(0, std::sin(phi)));
}

}  // namespace

Matrix gen_factor_G(const GenOperators& ops, const GenAngles& a, int l) {
  Matrix g = identity(ops.n_sites);
  if (l < 1) return g;
  right_factor(g, ops, a, 'C', 1);
  for (int j = 2; j <= l; ++j) {
    right_factor(g, ops, a, 'B', j);
    right_factor(g, ops, a, 'A', j);
    right_factor(g, ops, a, 'C', j);
  }
  return g;
}

Matrix gen_factor_Gt(const GenOperators& ops, const GenAngles& a, int l) {
  Matrix g = identity(ops.n_sites);
  if (l < 1) return g;
  for (int j = l; j >= 2; --j) {
    right_factor(g, ops, a, 'C', j);
    right_factor(g, ops, a, 'A', j);
    right_factor(g, ops, a, 'B', j);
  }
  right_factor(g, ops, a, 'C', 1);
  return g;
}

GenCircuit gen_unitary_circuit(const GenCouplings& c, double y) {
  GenCircuit out;
  out.angles = gen_unitary_angles(c, y);
  GenOperators ops = gen_operators(c.length());
  out.v = gen_factor_G(ops, out.angles, c.length()) * gen_factor_Gt(ops, out.angles, c.length());
  return out;
}

ConstraintCheck check_angle_constraint(const GenAngles& a, double tol) {
  ConstraintCheck r;
  const int L = static_cast<int>(a.phiC.size()) - 1;
  for (int j = 2; j <= L; ++j) {
    double lhs = std::tan(2 * a.phiC[static_cast<std::size_t>(j - 1)]) * std::tan(2 * a.phiC[static_cast<std::size_t>(j)]);
    double rhs = std::sin(2 * a.phiA[static_cast<std::size_t>(j)]) * std::sin(2 * a.phiB[static_cast<std::size_t>(j)]);
    r.residuals.push_back(std::abs(lhs - rhs));
    if (!(std::abs(lhs - rhs) < tol)) r.ok = false;
  }
  return r;
}

}  // namespace ffd
