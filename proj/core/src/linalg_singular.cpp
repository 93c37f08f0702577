#include <algorithm>
#include <cmath>
#include <limits>

#include "fzspec/linalg.hpp"

namespace fz {

namespace {

// Eigenvalue count below t (t > 0) for the Golub-Kahan tridiagonal: zero
// diagonal, off-diagonal sequence z, dimension z.size()+1. LDL^T Sturm count.
int count_below(double t, const std::vector<double>& z) {
  double q = -t;
  int neg = q < 0.0 ? 1 : 0;
  for (double off : z) {
    double den = q;
    if (den == 0.0) den = -std::numeric_limits<double>::min() * 4.0;
    q = -t - (off * off) / den;
    if (q < 0.0) ++neg;
  }
  return neg;
}

}  // namespace

double smallest_singular_value(const DenseMatrix& m, int size_cap) {
  const int n = m.size();
  if (n > size_cap)
    throw CapExceeded("smallest_singular_value: dimension " + std::to_string(n) +
                      " exceeds configured maximum " + std::to_string(size_cap));
  if (n == 1) return std::abs(m.at(0, 0));

  // Householder bidiagonalization; only the moduli of the bidiagonal entries
  // matter (diagonal phase factors are unitary).
  std::vector<Complex> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> Complex& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = m.at(i, j);

  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  std::vector<double> e(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0.0);
  std::vector<Complex> u(static_cast<std::size_t>(n));

  for (int k = 0; k < n; ++k) {
    // Left reflector: zero column k below the diagonal.
    double sigma = 0.0;
    for (int i = k; i < n; ++i) sigma += std::norm(at(i, k));
    sigma = std::sqrt(sigma);
    if (sigma > 0.0) {
      const Complex x0 = at(k, k);
      const Complex phase = (x0 == Complex(0.0, 0.0)) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
      const Complex alpha = -phase * sigma;
      double uu = 0.0;
      for (int i = k; i < n; ++i) {
        u[i] = at(i, k);
        if (i == k) u[i] -= alpha;
        uu += std::norm(u[i]);
      }
      if (uu > 0.0) {
        const double tau = 2.0 / uu;
        for (int j = k + 1; j < n; ++j) {
          Complex s(0.0, 0.0);
          for (int i = k; i < n; ++i) s += std::conj(u[i]) * at(i, j);
          s *= tau;
          for (int i = k; i < n; ++i) at(i, j) -= s * u[i];
        }
      }
      at(k, k) = alpha;
      for (int i = k + 1; i < n; ++i) at(i, k) = Complex(0.0, 0.0);
    }
    d[static_cast<std::size_t>(k)] = std::abs(at(k, k));

    if (k >= n - 1) continue;
    // Right reflector: zero row k beyond column k+1.
    sigma = 0.0;
    for (int j = k + 1; j < n; ++j) sigma += std::norm(at(k, j));
    sigma = std::sqrt(sigma);
    if (sigma > 0.0) {
      const Complex x0 = at(k, k + 1);
      const Complex phase = (x0 == Complex(0.0, 0.0)) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
      const Complex alpha = -phase * sigma;
      double uu = 0.0;
      for (int j = k + 1; j < n; ++j) {
        u[j] = std::conj(at(k, j));
        if (j == k + 1) u[j] -= std::conj(alpha);
        uu += std::norm(u[j]);
      }
      if (uu > 0.0) {
        const double tau = 2.0 / uu;
        for (int i = k; i < n; ++i) {
          Complex s(0.0, 0.0);
          for (int j = k + 1; j < n; ++j) s += at(i, j) * u[j];
          s *= tau;
          for (int j = k + 1; j < n; ++j) at(i, j) -= s * std::conj(u[j]);
        }
      }
      at(k, k + 1) = alpha;
      for (int j = k + 2; j < n; ++j) at(k, j) = Complex(0.0, 0.0);
    }
    e[static_cast<std::size_t>(k)] = std::abs(at(k, k + 1));
  }

  // Interleave into the Golub-Kahan off-diagonal sequence.
  std::vector<double> z;
  z.reserve(static_cast<std::size_t>(2 * n - 1));
  for (int k = 0; k < n; ++k) {
    z.push_back(d[static_cast<std::size_t>(k)]);
    if (k < n - 1) z.push_back(e[static_cast<std::size_t>(k)]);
  }

  double upper = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double left = i > 0 ? z[i - 1] : 0.0;
    upper = std::max(upper, left + z[i]);
    if (i + 1 < z.size()) upper = std::max(upper, z[i] + z[i + 1]);
  }
  upper += 1.0;

  // Bisect for the smallest positive Golub-Kahan eigenvalue; eigenvalues come
  // in +-sigma pairs, so sigma_min is the first t with count_below(t) > n.
  double lo = 0.0, hi = upper;
  for (int iter = 0; iter < 160 && hi - lo > lo * 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid, z) - n >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fz
