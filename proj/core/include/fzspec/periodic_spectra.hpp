#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/dense_matrix.hpp"
#include "fzspec/int_polynomial.hpp"
#include "fzspec/point_cloud.hpp"

namespace fz::periodic {

// One n-periodic sign pattern b_1..b_n (bit k-1 set means b_k = +1) at
// phase phi. The symbol's eigenvalues, swept over phi, cover the spectrum
// of the n-periodic operator.
struct FloquetSymbol {
  int n = 1;
  std::uint32_t bits = 0;
  double phi = 0.0;

  int sub_sign(int k) const {  // b_k, 1 <= k <= n
    return (bits >> (k - 1)) & 1u ? 1 : -1;
  }
};

struct PeriodicOptions {
  int workers = 1;
  int cap = kPeriodCap;
};

// n x n Bloch reduction of the periodic operator: zero diagonal,
// superdiagonal 1, subdiagonal b_2..b_n, corners M[0][n-1] += b_1 e^{-i phi}
// and M[n-1][0] += e^{i phi}. For n=1 this is the scalar b_1 e^{-i phi} + e^{i phi};
// for n=2 the corner terms add onto the existing off-diagonal entries.
DenseMatrix floquet_symbol_matrix(const FloquetSymbol& s);

// Trace of the one-period transfer matrix as a monic integer polynomial Q:
// det(lambda I - M(phi)) = Q(lambda) - e^{i phi} - B e^{-i phi} with
// B = b_1 ... b_n, so the symbol eigenvalues at phase phi are the solutions
// of Q(lambda) = 2 cos(phi) (B = +1) or Q(lambda) = 2i sin(phi) (B = -1).
// Q is invariant under cyclic rotation of the pattern.
IntPolynomial transfer_trace_poly(int n, std::uint32_t bits);

int corner_product(int n, std::uint32_t bits);  // B = b_1 ... b_n

// Symbol eigenvalues at one phase, solved from the trace polynomial.
std::vector<Complex> symbol_eigenvalues(int n, std::uint32_t bits, double phi);

// pi_n: union over all 2^n patterns and phases 2*pi*k/phi_samples of symbol
// eigenvalues, sorted and deduped at 1e-9, labeled by (pattern, phase).
// Patterns related by cyclic rotation have identical trace polynomials and
// B, hence bitwise-identical root sets; each rotation class is therefore
// solved once, for its lexicographically smallest member, which is exactly
// the witness the dedup pass would keep anyway. Output is byte-identical to
// the full enumeration and independent of the worker count.
SpectralPointCloud pi_n(int n, int phi_samples, const PeriodicOptions& opts = {});

// Streaming variant: invokes sink once per rotation class with the labeled
// points of that class's full phase sweep. The union over all batches is
// pi_n before dedup. sink may be called concurrently from worker threads;
// callers synchronize their own state.
void for_each_pattern_batch(int n, int phi_samples, const PeriodicOptions& opts,
                            const std::function<void(const std::vector<SpectralPoint>&)>& sink);

struct Segment {
  Complex a;
  Complex b;
};

// pi_1 = [-2,2] on the real axis union [-2i,2i] on the imaginary axis.
std::vector<Segment> pi_1_analytic();
// pi_2 = pi_1 union the diagonals y = x and y = -x for |x| <= 1.
std::vector<Segment> pi_2_analytic();

double distance_to_segments(Complex z, const std::vector<Segment>& segments);

// Figure-style rendering: one polyline per (rotation class, eigenvalue
// branch), branches matched greedily between consecutive phases.
void write_arcs_svg(int n, int phi_samples, const std::string& path,
                    const PeriodicOptions& opts = {});

}  // namespace fz::periodic
