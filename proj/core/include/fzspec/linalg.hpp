#pragma once

#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/dense_matrix.hpp"

namespace fz {

// All eigenvalues of a general complex matrix, with multiplicity, in
// unspecified order. Hessenberg reduction followed by explicitly shifted QR
// iteration with deflation; throws ConvergenceFailure after 100*n sweeps
// (never returns garbage) and CapExceeded beyond size_cap.
std::vector<Complex> eigenvalues(const DenseMatrix& m, int size_cap = kEigenSizeCap);

// Smallest singular value, >= 0. Householder bidiagonalization followed by
// Sturm-count bisection on the Golub-Kahan tridiagonal form.
double smallest_singular_value(const DenseMatrix& m, int size_cap = kEigenSizeCap);

// Support function of the numerical range of m in direction theta: the
// largest eigenvalue of the Hermitian part of e^{-i theta} m.
double hermitian_support(const DenseMatrix& m, double theta, int size_cap = kEigenSizeCap);

}  // namespace fz
