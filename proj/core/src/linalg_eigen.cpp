#include <algorithm>
#include <cmath>
#include <limits>

#include "fzspec/linalg.hpp"

namespace fz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_cap(int n, int cap, const char* op) {
  if (n > cap)
    throw CapExceeded(std::string(op) + ": dimension " + std::to_string(n) +
                      " exceeds configured maximum " + std::to_string(cap));
}

// Working copy with flat indexing.
struct Work {
  int n;
  std::vector<Complex> h;
  Complex& at(int i, int j) { return h[static_cast<std::size_t>(i) * n + j]; }
};

// Unitary reduction to upper Hessenberg form by Householder reflectors.
void hessenberg(Work& w) {
  const int n = w.n;
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (int k = 0; k + 2 < n; ++k) {
    double sigma = 0.0;
    for (int i = k + 1; i < n; ++i) sigma += std::norm(w.at(i, k));
    sigma = std::sqrt(sigma);
    if (sigma == 0.0) continue;

    const Complex x0 = w.at(k + 1, k);
    const Complex phase = (x0 == Complex(0.0, 0.0)) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * sigma;

    double vv = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = w.at(i, k);
      if (i == k + 1) v[i] -= alpha;
      vv += std::norm(v[i]);
    }
    if (vv <= 0.0) continue;
    const double scale = 2.0 / vv;

    // Left: rows k+1..n-1.
    for (int j = k; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * w.at(i, j);
      s *= scale;
      for (int i = k + 1; i < n; ++i) w.at(i, j) -= s * v[i];
    }
    // Right: columns k+1..n-1.
    for (int i = 0; i < n; ++i) {
      Complex s(0.0, 0.0);
      for (int j = k + 1; j < n; ++j) s += w.at(i, j) * v[j];
      s *= scale;
      for (int j = k + 1; j < n; ++j) w.at(i, j) -= s * std::conj(v[j]);
    }
    w.at(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) w.at(i, k) = Complex(0.0, 0.0);
  }
}

// Eigenvalues of the 2x2 block [[a,b],[c,d]].
std::pair<Complex, Complex> eig2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {half_tr + disc, half_tr - disc};
}

// Wilkinson shift: the eigenvalue of the trailing 2x2 closest to the corner.
Complex wilkinson_shift(Work& w, int hi) {
  auto [m1, m2] = eig2(w.at(hi - 1, hi - 1), w.at(hi - 1, hi), w.at(hi, hi - 1), w.at(hi, hi));
  const Complex corner = w.at(hi, hi);
  return std::abs(m1 - corner) <= std::abs(m2 - corner) ? m1 : m2;
}

struct Givens {
  double c;
  Complex s;
};

}  // namespace

std::vector<Complex> eigenvalues(const DenseMatrix& m, int size_cap) {
  const int n = m.size();
  check_cap(n, size_cap, "eigenvalues");

  std::vector<Complex> ev;
  ev.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    ev.push_back(m.at(0, 0));
    return ev;
  }

  Work w{n, {}};
  w.h.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
  hessenberg(w);

  const double hnorm = [&] {
    double s = 0.0;
    for (const Complex& z : w.h) s += std::abs(z);
    return std::max(s, 1.0);
  }();

  const int max_sweeps = 100 * n;
  int sweeps = 0;
  int hi = n - 1;
  int stalls = 0;
  std::vector<Givens> rot(static_cast<std::size_t>(n));

  while (hi >= 0) {
    // Deflate wherever a subdiagonal entry is negligible.
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(w.at(lo, lo - 1));
      double thresh = kEps * (std::abs(w.at(lo - 1, lo - 1)) + std::abs(w.at(lo, lo)));
      if (thresh == 0.0) thresh = kEps * hnorm;
      if (sub <= thresh) {
        w.at(lo, lo - 1) = Complex(0.0, 0.0);
        break;
      }
      --lo;
    }

    if (lo == hi) {
      ev.push_back(w.at(hi, hi));
      --hi;
      stalls = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [m1, m2] = eig2(w.at(lo, lo), w.at(lo, hi), w.at(hi, lo), w.at(hi, hi));
      ev.push_back(m1);
      ev.push_back(m2);
      hi = lo - 1;
      stalls = 0;
      continue;
    }

    if (++sweeps > max_sweeps)
      throw ConvergenceFailure("eigenvalues: QR iteration exceeded " +
                               std::to_string(max_sweeps) + " sweeps");

    Complex mu;
    if (stalls > 0 && stalls % 12 == 0) {
      // Exceptional ad-hoc shift to break rare limit cycles.
      mu = Complex(std::abs(w.at(hi, hi - 1)) + std::abs(w.at(hi - 1, hi - 2)), 0.0);
    } else {
      mu = wilkinson_shift(w, hi);
    }
    ++stalls;

    for (int i = lo; i <= hi; ++i) w.at(i, i) -= mu;

    // QR step: left rotations annihilate the subdiagonal of the shifted block.
    for (int k = lo; k < hi; ++k) {
      const Complex a = w.at(k, k);
      const Complex b = w.at(k + 1, k);
      const double t = std::sqrt(std::norm(a) + std::norm(b));
      Givens g;
      if (t == 0.0 || std::abs(a) == 0.0) {
        g.c = 0.0;
        g.s = Complex(1.0, 0.0);
      } else {
        g.c = std::abs(a) / t;
        g.s = (a / std::abs(a)) * std::conj(b) / t;
      }
      rot[static_cast<std::size_t>(k)] = g;
      for (int j = k; j <= hi; ++j) {
        const Complex rk = w.at(k, j), rk1 = w.at(k + 1, j);
        w.at(k, j) = g.c * rk + g.s * rk1;
        w.at(k + 1, j) = -std::conj(g.s) * rk + g.c * rk1;
      }
    }
    // RQ: apply the adjoint rotations from the right.
    for (int k = lo; k < hi; ++k) {
      const Givens g = rot[static_cast<std::size_t>(k)];
      const int top = lo;
      const int bottom = std::min(k + 2, hi);
      for (int i = top; i <= bottom; ++i) {
        const Complex ck = w.at(i, k), ck1 = w.at(i, k + 1);
        w.at(i, k) = g.c * ck + std::conj(g.s) * ck1;
        w.at(i, k + 1) = -g.s * ck + g.c * ck1;
      }
    }
    for (int i = lo; i <= hi; ++i) w.at(i, i) += mu;
  }

  return ev;
}

double hermitian_support(const DenseMatrix& m, double theta, int size_cap) {
  const int n = m.size();
  check_cap(n, size_cap, "hermitian_support");
  const Complex rot = std::polar(1.0, -theta);
  DenseMatrix k(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      k.at(i, j) = 0.5 * (rot * m.at(i, j) + std::conj(rot * m.at(j, i)));
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& ev : eigenvalues(k, size_cap)) best = std::max(best, ev.real());
  return best;
}

}  // namespace fz
