#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/complex_grid.hpp"
#include "fzspec/dense_matrix.hpp"

namespace fz::pseudo {

// The pseudospectral inflation constant eps_n = 4 sin(theta_n), where
// theta_n is the unique root of 2 cos((n+1)theta) = cos((n-1)theta) in
// (pi/(2(n+3)), pi/(2(n+1))).
struct EpsNResult {
  int n = 0;
  double theta_n = 0.0;
  double eps_n = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// Bisection to absolute tolerance 1e-14 on the stated bracket. Throws
// ConvergenceFailure if the bracket shows no sign change (which would mean
// an implementation bug, the root is provably unique in the interior).
EpsNResult eps_n(int n);

// Field value at each node z is the smallest singular value of m - zI
// (equivalently 1/||(m - zI)^{-1}||).
ComplexGrid resolvent_norm_grid(const DenseMatrix& m, const ComplexGrid& grid, int workers = 1);

// The eps-pseudospectrum mask: {value < eps} plus every node within one
// node spacing of an eigenvalue (eigenvalues between nodes would otherwise
// be missed at coarse resolution).
std::vector<std::uint8_t> pseudospectrum_mask(const ComplexGrid& field, double eps,
                                              const std::vector<Complex>& eigenvalues);

// Support values h(theta_k) = max Re spectrum of the Hermitian part of
// e^{-i theta_k} m at theta_k = 2 pi k/angles, and the polygon cut out by
// the support half-planes {Re(e^{-i theta_k} z) <= h(theta_k)} (vertices of
// consecutive support lines). The numerical range lies inside this polygon;
// containment checks compare support values, never recovered boundary
// points.
struct NumericalRange {
  int angles = 0;
  std::vector<double> support;
  std::vector<Complex> vertices;
};

NumericalRange numerical_range_boundary(const DenseMatrix& m, int angles);

// Support function of the square |x| + |y| <= 2: h(theta) = 2 max(|cos|, |sin|).
double square_support(double theta);

// Rows n = 1..max_n with columns n, theta_n, eps_n, 2 pi/(n+1),
// 15 decimal digits, aligned.
std::string eps_table_text(int max_n);

}  // namespace fz::pseudo
