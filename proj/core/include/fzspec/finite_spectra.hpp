#pragma once

#include <cstdint>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/complex_grid.hpp"
#include "fzspec/dense_matrix.hpp"
#include "fzspec/int_polynomial.hpp"
#include "fzspec/point_cloud.hpp"

namespace fz::finite {

// One n x n finite section: zero diagonal, superdiagonal 1, subdiagonal
// signs b_1..b_{n-1} encoded in bits (bit k-1 set means b_k = +1).
struct PatternId {
  int n = 1;
  std::uint32_t bits = 0;

  int sub_sign(int k) const {  // b_k, 1 <= k <= n-1
    return (bits >> (k - 1)) & 1u ? 1 : -1;
  }
};

struct SweepOptions {
  int workers = 1;
  int cap = kFiniteSectionCap;
};

DenseMatrix build_finite_matrix(const PatternId& p);

// All 2^(n-1) pattern ids in Gray-code order (k ^ (k >> 1)), so consecutive
// patterns differ in exactly one sign. Order is fixed.
std::vector<PatternId> enumerate_patterns(int n);

// Characteristic polynomial det(lambda I - A) of the section, computed
// exactly over the integers by the three-term continuant recurrence
// D_k = lambda D_{k-1} - b_{k-1} D_{k-2}. Monic of degree n.
IntPolynomial section_char_poly(const PatternId& p);

// Distinct eigenvalues of one section. Solved from the characteristic
// polynomial: the zero root is stripped exactly, the square-free part is
// taken (sections can be defective, e.g. n=3 with b=(+1,-1) is a Jordan
// block with char poly lambda^3), and the remaining even polynomial is
// compressed to half degree before root finding.
std::vector<Complex> distinct_section_eigenvalues(const PatternId& p);

// sigma_n: union over all 2^(n-1) patterns of section eigenvalues, sorted
// and deduped at tol 1e-9, each survivor labeled with a witnessing pattern.
// Deterministic for any worker count.
SpectralPointCloud sigma_n(int n, const SweepOptions& opts = {});

// sigma_n restricted to the square |Re z - Re center| <= halfwidth,
// |Im z - Im center| <= halfwidth. Points outside the window are dropped
// before the merge, keeping zoomed sweeps at large n memory-bounded.
SpectralPointCloud sigma_n_window(int n, Complex center, double halfwidth,
                                  const SweepOptions& opts = {});

// sigma_{n,eps} field: value at each grid node z is the minimum over
// patterns of the smallest singular value of A - zI; the region is the
// sublevel set {value < eps}. Once the running minimum at a node drops
// below eps the remaining patterns are skipped, so values below eps are
// upper bounds; the sublevel mask is unaffected.
ComplexGrid sigma_n_eps(int n, double eps, const ComplexGrid& grid,
                        const SweepOptions& opts = {});

}  // namespace fz::finite
