#pragma once

#include <cstdint>
#include <vector>

#include "fzspec/common.hpp"

namespace fz {

// Integer-coefficient polynomial; coeffs[j-1] is the coefficient of lambda^(j-1).
// Houses both the eigenvector component polynomials u_i (coefficients in
// {-1,0,1}) and exact characteristic polynomials of finite sections.
struct IntPolynomial {
  std::vector<long long> coeffs;

  // Degree of the zero polynomial is -1.
  int degree() const {
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
      if (coeffs[static_cast<std::size_t>(j)] != 0) return j;
    return -1;
  }

  bool is_monic() const {
    int d = degree();
    return d >= 0 && coeffs[static_cast<std::size_t>(d)] == 1;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
};

// Horner evaluation; the empty polynomial evaluates to 0.
inline Complex poly_eval(const IntPolynomial& p, Complex lambda) {
  Complex acc(0.0, 0.0);
  for (std::size_t j = p.coeffs.size(); j-- > 0;)
    acc = acc * lambda + static_cast<double>(p.coeffs[j]);
  return acc;
}

// Formal derivative, exact in integers.
inline IntPolynomial poly_derivative(const IntPolynomial& p) {
  IntPolynomial d;
  if (p.coeffs.size() <= 1) return d;
  d.coeffs.resize(p.coeffs.size() - 1);
  for (std::size_t j = 1; j < p.coeffs.size(); ++j)
    d.coeffs[j - 1] = p.coeffs[j] * static_cast<long long>(j);
  return d;
}

}  // namespace fz
