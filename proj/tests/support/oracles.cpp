#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fzspec/linalg.hpp"

namespace oracle {
namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

using Coeffs = std::vector<long long>;

int ll_degree(const Coeffs& v) {
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
    if (v[static_cast<std::size_t>(j)] != 0) return j;
  return -1;
}

Coeffs primitive_part(Coeffs v) {
  long long g = 0;
  for (long long c : v) g = std::gcd(g, std::llabs(c));
  if (g > 1)
    for (long long& c : v) c /= g;
  return v;
}

// Remainder of lead(b)^(deg a - deg b + 1) * a divided by b, exact in
// __int128 (degrees here stay <= 20 with small coefficients).
Coeffs pseudo_remainder(const Coeffs& a, const Coeffs& b) {
  int da = ll_degree(a), db = ll_degree(b);
  std::vector<__int128> r(a.begin(), a.end());
  __int128 lead = b[static_cast<std::size_t>(db)];
  for (int k = da; k >= db; --k) {
    __int128 top = r[static_cast<std::size_t>(k)];
    for (int j = 0; j <= k; ++j) r[static_cast<std::size_t>(j)] *= lead;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= top * b[static_cast<std::size_t>(j)];
  }
  Coeffs out(static_cast<std::size_t>(db > 0 ? db : 1), 0);
  for (std::size_t j = 0; j < out.size() && j < r.size(); ++j) {
    __int128 v = r[j];
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
      throw std::overflow_error("pseudo-remainder coefficient overflow");
    out[j] = static_cast<long long>(v);
  }
  return out;
}

Coeffs prs_gcd(Coeffs a, Coeffs b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  while (ll_degree(b) >= 0) {
    Coeffs r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (ll_degree(a) >= 0 && a[static_cast<std::size_t>(ll_degree(a))] < 0)
    for (long long& c : a) c = -c;
  return a;
}

}  // namespace

fz::IntPolynomial leibniz_char_poly(const fz::finite::PatternId& p) {
  const int n = p.n;
  // Entries of lambda I - A: lambda on the diagonal, -1 on the superdiagonal,
  // -b_k on the subdiagonal.
  auto off_entry = [&](int i, int j) -> long long {
    if (j == i + 1) return -1;
    if (j == i - 1) return -p.sub_sign(j + 1);
    return 0;
  };
  fz::IntPolynomial out;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    long long prod = 1;
    int lambda_power = 0;
    for (int i = 0; i < n && prod != 0; ++i) {
      if (perm[static_cast<std::size_t>(i)] == i)
        ++lambda_power;
      else
        prod *= off_entry(i, perm[static_cast<std::size_t>(i)]);
    }
    if (prod != 0)
      out.coeffs[static_cast<std::size_t>(lambda_power)] += permutation_sign(perm) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

fz::IntPolynomial squarefree_by_prs(const fz::IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("squarefree_by_prs needs a monic polynomial");
  fz::IntPolynomial dp = fz::poly_derivative(p);
  Coeffs g = prs_gcd(p.coeffs, dp.coeffs);
  int dg = ll_degree(g);
  if (dg <= 0) return p;
  if (g[static_cast<std::size_t>(dg)] != 1)
    throw std::logic_error("gcd of a monic polynomial with its derivative must be monic");

  // Long division p / g, then multiply back to confirm exactness.
  int dq = p.degree() - dg;
  Coeffs q(static_cast<std::size_t>(dq) + 1, 0);
  Coeffs rem = p.coeffs;
  for (int k = dq; k >= 0; --k) {
    long long f = rem[static_cast<std::size_t>(k + dg)];
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * g[static_cast<std::size_t>(j)];
  }
  Coeffs check(p.coeffs.size(), 0);
  for (int i = 0; i <= dq; ++i)
    for (int j = 0; j <= dg; ++j)
      check[static_cast<std::size_t>(i + j)] +=
          q[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
  if (check != p.coeffs) throw std::logic_error("square-free division failed to multiply back");
  fz::IntPolynomial out;
  out.coeffs = std::move(q);
  return out;
}

std::vector<fz::Complex> companion_roots(const fz::IntPolynomial& p) {
  int d = p.degree();
  if (d < 1) return {};
  if (!p.is_monic()) throw std::invalid_argument("companion_roots needs a monic polynomial");
  fz::DenseMatrix m(d);
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = fz::Complex(1.0, 0.0);
  for (int i = 0; i < d; ++i)
    m.at(i, d - 1) = fz::Complex(-static_cast<double>(p.coeffs[static_cast<std::size_t>(i)]), 0.0);
  return fz::eigenvalues(m);
}

std::vector<fz::Complex> section_roots(const fz::finite::PatternId& p) {
  return companion_roots(squarefree_by_prs(leibniz_char_poly(p)));
}

fz::Complex lu_determinant(fz::DenseMatrix m) {
  const int n = m.size();
  fz::Complex det(1.0, 0.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
    if (std::abs(m.at(pivot, col)) == 0.0) return fz::Complex(0.0, 0.0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      fz::Complex f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<double> all_plus_eigenvalues(int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    v[static_cast<std::size_t>(k - 1)] = 2.0 * std::cos(k * M_PI / (n + 1));
  std::sort(v.begin(), v.end());
  return v;
}

double min_distance(fz::Complex z, const std::vector<fz::Complex>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (const fz::Complex& p : pts) best = std::min(best, std::abs(z - p));
  return best;
}

double directed_distance(const std::vector<fz::Complex>& a, const std::vector<fz::Complex>& b) {
  double worst = 0.0;
  for (const fz::Complex& z : a) worst = std::max(worst, min_distance(z, b));
  return worst;
}

}  // namespace oracle
