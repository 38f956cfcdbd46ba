#pragma once

#include <vector>

namespace ffd {

/// Real polynomial in u, coefficient of u^k at index k.
struct CharPolynomial {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double u) const;
  double derivative(double u) const;
};

/// Exact three-term recursion P_m = P_{m-1} - u alpha_m^2 P_{m-3}, with P_{<=0} = 1,
/// evaluated in rational arithmetic on the given doubles.
CharPolynomial ffd_char_poly(const std::vector<double>& alpha);

/// Roots of p in u, via companion-matrix eigenvalues and one Newton polish each.
/// Every root must be real and positive; otherwise ConditioningError.  Sorted ascending.
std::vector<double> positive_roots(const CharPolynomial& p, double tol = 1e-10);

}  // namespace ffd
