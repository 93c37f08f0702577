#pragma once

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/int_polynomial.hpp"

namespace fz::sierpinski {

// The sign sequence c over all integers: c_1 = 1, c_{2i} = c_{2i-1} c_i,
// c_{2i+1} = -c_{2i}, and c_{-i} = c_{i+1} for i >= 0. Entries are memoized
// in a growable cache; concurrent lookups are safe.
class SierpinskiSequence {
 public:
  SierpinskiSequence() = default;

  int sign(long long i) const;

  // Fault-injection hook for the self-check suite: flips c_i (i >= 1).
  void flip_entry(long long i);

 private:
  void extend(std::size_t upto) const;

  mutable std::vector<signed char> cache_;  // cache_[k] = c_{k+1}
  mutable std::mutex mu_;
  long long flipped_ = 0;  // 0 means no injected fault
};

// c_i from a process-wide shared sequence.
int sierpinski_sign(long long i);

// Rows 1..N of the coefficient triangle: p_{1,1} = 1 and
// p_{i+1,j} = p_{i,j-1} - c_i p_{i-1,j} with zero boundary. Row i holds the
// ascending coefficients of the degree-(i-1) monic section polynomial u_i.
class CoefficientTable {
 public:
  static CoefficientTable build(int rows);
  static CoefficientTable build(int rows, const SierpinskiSequence& c);

  int rows() const { return rows_; }
  // 1-based indices; entries outside 1 <= j <= i <= rows() are 0.
  int at(int i, int j) const;
  int generator_sign(int i) const { return c_.at(static_cast<std::size_t>(i) - 1); }
  IntPolynomial row_polynomial(int i) const;
  std::size_t nonzero_count() const;

  // One line per row: right-aligned index, the c_i glyph, then one glyph
  // per column ('+', '-', or ' ' for zero). No trailing spaces.
  std::vector<std::string> render_rows() const;
  std::string render_text() const;  // render_rows joined with newlines

 private:
  std::size_t offset(int i) const { return static_cast<std::size_t>(i - 1) * i / 2; }

  int rows_ = 0;
  std::vector<signed char> entries_;  // packed triangle, row-major
  std::vector<signed char> c_;        // c_1..c_rows
};

struct ForcedSignCheck {
  int i = 0;
  int j = 0;
  int product = 0;   // p_{i,j-1} * p_{i-1,j}
  int expected = 0;  // c_i
};

struct ForcedSignReport {
  std::vector<ForcedSignCheck> checks;      // every (i,j) with both factors nonzero
  std::vector<ForcedSignCheck> violations;  // subset with product != expected
  bool pass = true;
};

// Verifies that every overdetermined choice of c_i in the table agrees:
// wherever p_{i,j-1} and p_{i-1,j} are both nonzero, their product is c_i.
ForcedSignReport forced_sign_consistency(const CoefficientTable& t);

// Window u_{-m}..u_m of the candidate eigenvector for A^c at lambda:
// u_0 = 0, u_1 = 1, u_{i+1} = lambda u_i - c_i u_{i-1} going forward and
// u_{i-1} = (lambda u_i - u_{i+1}) / c_i going backward (c_i = ±1, so this
// is a multiplication). Index i lives at position i + m.
std::vector<Complex> eigenvector(Complex lambda, int m);
std::vector<Complex> eigenvector(Complex lambda, int m, const SierpinskiSequence& c);

// sup over interior indices of |u_{i+1} - lambda u_i + c_i u_{i-1}|.
double residual_sup(Complex lambda, const std::vector<Complex>& u);
double residual_sup(Complex lambda, const std::vector<Complex>& u, const SierpinskiSequence& c);

// d_i with u_{-i} = d_i u_i: d_0 = 1, d_{2j} = (-1)^j c_{2j}, d_{2j+1} = (-1)^{j+1}.
int mirror_sign(long long i);
int mirror_sign(long long i, const SierpinskiSequence& c);

struct MirrorReport {
  double worst = 0.0;  // max over i of |u_{-i} - d_i u_i| / (1 + |u_i|)
  long long worst_index = 0;
  double tol = 0.0;
  bool pass = true;
};

MirrorReport mirror_check(Complex lambda, int m, double tol);
MirrorReport mirror_check(Complex lambda, int m, double tol, const SierpinskiSequence& c);

using IndexPair = std::pair<long long, long long>;

// S_levels where S_1 = {(1,1)} and S_{n+1} = 2 S_n + {(0,0),(-1,-1),(1,-1)}.
// Sorted lexicographically. |S_levels| = 3^(levels-1), so levels is capped.
std::vector<IndexPair> sierpinski_set(int levels);

// {(i,j): p_{i,j} != 0}, sorted lexicographically.
std::vector<IndexPair> nonzero_set(const CoefficientTable& t);

struct PascalReport {
  long long checked = 0;
  std::vector<IndexPair> mismatches;
  bool pass = true;
};

// For i <= N, j <= i: binomial(i-1, j-1) is odd (by the Lucas bit test
// (j-1) & (i-j) == 0) iff (2i-j, j) is a nonzero position of the 2N-row table.
PascalReport pascal_parity_correspondence(int N);

}  // namespace fz::sierpinski
