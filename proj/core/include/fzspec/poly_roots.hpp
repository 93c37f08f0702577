#pragma once

#include <optional>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/int_polynomial.hpp"

namespace fz {

struct AberthOptions {
  int max_iterations = 160;
  // Relative step size below which a root is considered settled.
  double step_tol = 1e-13;
  // Backward-error acceptance used when the step criterion stalls
  // (clustered roots converge linearly and may never meet step_tol).
  double residual_tol = 1e-8;
};

// All complex roots of sum_k coeffs[k] z^k, leading coefficient nonzero.
// Degree 0 yields an empty vector; degrees 1 and 2 use closed forms.
// `warm_start` (if non-null and of matching degree) seeds the iteration,
// which is much faster when solving a slowly varying family of polynomials.
// Throws ConvergenceFailure when neither the step criterion nor the
// backward-error bound is met within the iteration budget.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs,
                                  const std::vector<Complex>* warm_start = nullptr,
                                  const AberthOptions& opts = {});

std::vector<Complex> aberth_roots(const IntPolynomial& p,
                                  const std::vector<Complex>* warm_start = nullptr,
                                  const AberthOptions& opts = {});

// Removes the root at zero exactly: divides by the highest power of the
// variable that divides p. Returns the multiplicity removed.
int strip_zero_roots(IntPolynomial& p);

// True when every odd-power coefficient vanishes, i.e. p(z) = r(z^2).
bool has_even_support(const IntPolynomial& p);

// The r with p(z) = r(z^2). Requires has_even_support(p).
IntPolynomial compress_even(const IntPolynomial& p);

// Exact quotient num/den over the integers, or nullopt when den does not
// divide num. den must be monic. Intermediate arithmetic is 128-bit.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& num,
                                          const IntPolynomial& den);

// The square-free part of a monic integer polynomial: the monic divisor with
// the same roots, all simple. Computed as p / gcd(p, p') where the gcd is
// found modulo a large prime and then certified by exact integer division
// against both p and p'; a second prime is tried if the first candidate
// fails certification. Degree-0 modular gcd certifies p square-free as is.
IntPolynomial square_free_part(const IntPolynomial& p);

}  // namespace fz
