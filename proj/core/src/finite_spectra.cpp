#include "fzspec/finite_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fzspec/linalg.hpp"
#include "fzspec/parallel.hpp"
#include "fzspec/poly_roots.hpp"

namespace fz::finite {
namespace {

void check_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("section size must be positive");
  if (n > cap)
    throw CapExceeded("section sweep refused: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap) + " (cost is 2^(n-1) sections of size n)");
}

}  // namespace

DenseMatrix build_finite_matrix(const PatternId& p) {
  if (p.n < 1) throw std::invalid_argument("section size must be positive");
  DenseMatrix m(p.n);
  for (int k = 1; k < p.n; ++k) {
    m.at(k - 1, k) = Complex(1.0, 0.0);
    m.at(k, k - 1) = Complex(static_cast<double>(p.sub_sign(k)), 0.0);
  }
  return m;
}

std::vector<PatternId> enumerate_patterns(int n) {
  if (n < 1) throw std::invalid_argument("section size must be positive");
  if (n - 1 >= 31) throw CapExceeded("pattern space 2^(n-1) too large to enumerate");
  std::uint32_t count = 1u << (n - 1);
  std::vector<PatternId> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) out.push_back({n, k ^ (k >> 1)});
  return out;
}

IntPolynomial section_char_poly(const PatternId& p) {
  IntPolynomial prev{{1}};     // D_0
  IntPolynomial cur{{0, 1}};   // D_1
  if (p.n == 0) return prev;
  for (int k = 2; k <= p.n; ++k) {
    IntPolynomial next;
    next.coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t j = 0; j < cur.coeffs.size(); ++j) next.coeffs[j + 1] = cur.coeffs[j];
    long long b = p.sub_sign(k - 1);
    for (std::size_t j = 0; j < prev.coeffs.size(); ++j) next.coeffs[j] -= b * prev.coeffs[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Complex> distinct_section_eigenvalues(const PatternId& p) {
  IntPolynomial poly = section_char_poly(p);
  int zero_mult = strip_zero_roots(poly);
  std::vector<Complex> roots;
  if (poly.degree() >= 1) {
    IntPolynomial reduced = square_free_part(poly);
    if (!has_even_support(reduced))
      throw std::logic_error("section polynomial lost its even/odd symmetry");
    IntPolynomial half = compress_even(reduced);
    std::vector<Complex> mu = aberth_roots(half);
    roots.reserve(mu.size() * 2 + 1);
    for (const Complex& m : mu) {
      Complex r = std::sqrt(m);
      roots.push_back(r);
      roots.push_back(-r);
    }
  }
  if (zero_mult > 0) roots.push_back(Complex(0.0, 0.0));
  return roots;
}

namespace {

SpectralPointCloud sweep_patterns(int n, const SweepOptions& opts, bool windowed, Complex center,
                                  double halfwidth) {
  std::vector<PatternId> patterns = enumerate_patterns(n);
  int workers = resolve_workers(opts.workers);
  std::vector<std::vector<SpectralPoint>> chunks(
      static_cast<std::size_t>(std::min<std::size_t>(workers, patterns.size())));

  run_chunked(patterns.size(), opts.workers,
              [&](std::size_t begin, std::size_t end, int chunk) {
                std::vector<SpectralPoint>& local = chunks[static_cast<std::size_t>(chunk)];
                for (std::size_t k = begin; k < end; ++k) {
                  const PatternId& id = patterns[k];
                  PointLabel label = PointLabel::pattern(id.n, id.bits);
                  for (const Complex& z : distinct_section_eigenvalues(id)) {
                    if (windowed && (std::fabs(z.real() - center.real()) > halfwidth ||
                                     std::fabs(z.imag() - center.imag()) > halfwidth))
                      continue;
                    local.push_back(SpectralPoint{z.real(), z.imag(), label});
                  }
                }
              });

  SpectralPointCloud cloud;
  std::size_t total = 0;
  for (const auto& c : chunks) total += c.size();
  cloud.reserve(total);
  for (const auto& c : chunks)
    for (const SpectralPoint& pt : c) cloud.add(pt);
  cloud.sort();
  return dedup(cloud, 1e-9);
}

}  // namespace

SpectralPointCloud sigma_n(int n, const SweepOptions& opts) {
  check_cap(n, opts.cap);
  return sweep_patterns(n, opts, false, Complex(0.0, 0.0), 0.0);
}

SpectralPointCloud sigma_n_window(int n, Complex center, double halfwidth,
                                  const SweepOptions& opts) {
  check_cap(n, opts.cap);
  if (!(halfwidth > 0.0)) throw std::invalid_argument("window halfwidth must be positive");
  return sweep_patterns(n, opts, true, center, halfwidth);
}

ComplexGrid sigma_n_eps(int n, double eps, const ComplexGrid& grid, const SweepOptions& opts) {
  check_cap(n, opts.cap);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  std::vector<PatternId> patterns = enumerate_patterns(n);
  ComplexGrid out = grid;
  out.values.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);

  run_chunked(out.values.size(), opts.workers,
              [&](std::size_t begin, std::size_t end, int) {
                for (std::size_t node = begin; node < end; ++node) {
                  int ix = static_cast<int>(node % static_cast<std::size_t>(grid.nx));
                  int iy = static_cast<int>(node / static_cast<std::size_t>(grid.nx));
                  Complex z = grid.node(ix, iy);
                  double running = std::numeric_limits<double>::infinity();
                  for (const PatternId& id : patterns) {
                    DenseMatrix m = build_finite_matrix(id);
                    for (int d = 0; d < id.n; ++d) m.at(d, d) -= z;
                    running = std::min(running, smallest_singular_value(m));
                    if (running < eps) break;
                  }
                  out.values[node] = running;
                }
              });
  return out;
}

}  // namespace fz::finite
