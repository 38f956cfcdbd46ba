#include "ffd/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>

#include "ffd/error.hpp"

namespace ffd {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;

RPoly sub_shifted(const RPoly& a, const RPoly& b, const Rational& w) {
  RPoly out(std::max(a.size(), b.size() + 1), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k + 1] -= w * b[k];
  return out;
}

}  // namespace

double CharPolynomial::eval(double u) const {
  double r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * u + *it;
  return r;
}

double CharPolynomial::derivative(double u) const {
  double r = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;) r = r * u + static_cast<double>(k) * coeffs[k];
  return r;
}

CharPolynomial ffd_char_poly(const std::vector<double>& alpha) {
  std::vector<RPoly> p;  // p[m] for m = 0..M, with p[m<0] = p[0] = 1
  p.push_back({Rational(1)});
  auto at = [&p](int m) -> const RPoly& { return p[static_cast<std::size_t>(std::max(m, 0))]; };
  for (int m = 1; m <= static_cast<int>(alpha.size()); ++m) {
    if (!std::isfinite(alpha[m - 1])) throw DomainError("non-finite coupling", m);
    Rational a(alpha[m - 1]);
    p.push_back(sub_shifted(at(m - 1), at(m - 3), a * a));
  }
  CharPolynomial out;
  for (const Rational& c : p.back()) out.coeffs.push_back(static_cast<double>(c));
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0.0) out.coeffs.pop_back();
  return out;
}

std::vector<double> positive_roots(const CharPolynomial& p, double tol) {
  const int s = p.degree();
  if (s <= 0) return {};
  const double lead = p.coeffs.back();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(s, s);
  for (int i = 1; i < s; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < s; ++i) comp(i, s - 1) = -p.coeffs[static_cast<std::size_t>(i)] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw ConditioningError("companion eigen-decomposition failed");
  double scale = 0;
  for (double c : p.coeffs) scale = std::max(scale, std::abs(c));
  std::vector<double> roots;
  for (int i = 0; i < s; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z)))
      throw ConditioningError("complex root u = " + std::to_string(z.real()) + " + " + std::to_string(z.imag()) + "i");
    double u = z.real();
    double d = p.derivative(u);
    if (d != 0.0) u -= p.eval(u) / d;
    if (u <= 0) throw ConditioningError("non-positive root u = " + std::to_string(u));
    double res = std::abs(p.eval(u));
    // Residual is judged against the size of the terms being summed at u.
    double terms = 0;
    double pw = 1;
    for (double c : p.coeffs) {
      terms = std::max(terms, std::abs(c) * pw);
      pw *= u;
    }
    if (res > tol * std::max(scale, terms))
      throw ConditioningError("root residual " + std::to_string(res) + " above tolerance");
    roots.push_back(u);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ffd
