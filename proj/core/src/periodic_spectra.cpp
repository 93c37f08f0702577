#include "fzspec/periodic_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "fzspec/finite_spectra.hpp"
#include "fzspec/parallel.hpp"
#include "fzspec/poly_roots.hpp"
#include "fzspec/svg.hpp"

namespace fz::periodic {
namespace {

void check_args(int n, int phi_samples, int cap) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  if (n > cap)
    throw CapExceeded("periodic sweep refused: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap) + " (cost is 2^n patterns times phi samples)");
  if (phi_samples < 16) throw std::invalid_argument("phi_samples must be at least 16");
}

std::uint32_t rotate_bits(std::uint32_t bits, int n, int r) {
  std::uint32_t mask = n == 32 ? 0xffffffffu : (1u << n) - 1u;
  if (r == 0) return bits & mask;
  return ((bits >> r) | (bits << (n - r))) & mask;
}

std::uint32_t minimal_rotation(std::uint32_t bits, int n) {
  std::uint32_t best = bits;
  for (int r = 1; r < n; ++r) best = std::min(best, rotate_bits(bits, n, r));
  return best;
}

std::vector<std::uint32_t> rotation_class_representatives(int n) {
  std::uint32_t count = 1u << n;
  std::vector<std::uint32_t> reps;
  for (std::uint32_t bits = 0; bits < count; ++bits)
    if (minimal_rotation(bits, n) == bits) reps.push_back(bits);
  return reps;
}

IntPolynomial continuant(int size, std::uint32_t bits) {
  if (size < 0) return IntPolynomial{};       // empty: identically zero
  if (size == 0) return IntPolynomial{{1}};
  return finite::section_char_poly({size, bits});
}

Complex phase_value(int corner_b, double phi) {
  // e^{i phi} + B e^{-i phi}
  return corner_b == 1 ? Complex(2.0 * std::cos(phi), 0.0) : Complex(0.0, 2.0 * std::sin(phi));
}

// Solves Q(lambda) = w for one phase. For even n, Q has only even powers, so
// the half-degree polynomial in mu = lambda^2 is solved instead and both
// square roots are emitted. warm carries the previous phase's mu (even n)
// or lambda (odd n) roots.
void roots_at_phase(const IntPolynomial& q, const IntPolynomial& q_half, int corner_b, double phi,
                    std::vector<Complex>& warm, std::vector<Complex>& out) {
  Complex w = phase_value(corner_b, phi);
  const IntPolynomial& base = q_half.coeffs.empty() ? q : q_half;
  std::vector<Complex> coeffs(base.coeffs.size());
  for (std::size_t k = 0; k < base.coeffs.size(); ++k)
    coeffs[k] = Complex(static_cast<double>(base.coeffs[k]), 0.0);
  coeffs[0] -= w;
  std::vector<Complex> roots = aberth_roots(coeffs, warm.empty() ? nullptr : &warm);
  warm = roots;
  out.clear();
  if (q_half.coeffs.empty()) {
    out = std::move(roots);
  } else {
    out.reserve(roots.size() * 2);
    for (const Complex& mu : roots) {
      Complex r = std::sqrt(mu);
      out.push_back(r);
      out.push_back(-r);
    }
  }
}

struct ClassSolver {
  IntPolynomial q;
  IntPolynomial q_half;  // empty unless n is even
  int corner_b = 1;

  ClassSolver(int n, std::uint32_t bits) {
    q = transfer_trace_poly(n, bits);
    corner_b = corner_product(n, bits);
    if (n % 2 == 0) {
      if (!has_even_support(q))
        throw std::logic_error("even-period trace polynomial has odd-power terms");
      q_half = compress_even(q);
    }
  }
};

}  // namespace

DenseMatrix floquet_symbol_matrix(const FloquetSymbol& s) {
  if (s.n < 1) throw std::invalid_argument("period must be positive");
  DenseMatrix m(s.n);
  Complex forward = std::exp(Complex(0.0, s.phi));
  Complex backward = std::exp(Complex(0.0, -s.phi));
  if (s.n == 1) {
    m.at(0, 0) = forward + static_cast<double>(s.sub_sign(1)) * backward;
    return m;
  }
  for (int k = 0; k + 1 < s.n; ++k) m.at(k, k + 1) = Complex(1.0, 0.0);
  for (int k = 1; k < s.n; ++k)
    m.at(k, k - 1) = Complex(static_cast<double>(s.sub_sign(k + 1)), 0.0);
  m.at(0, s.n - 1) += static_cast<double>(s.sub_sign(1)) * backward;
  m.at(s.n - 1, 0) += forward;
  return m;
}

IntPolynomial transfer_trace_poly(int n, std::uint32_t bits) {
  if (n < 1) throw std::invalid_argument("period must be positive");
  if (n == 1) return IntPolynomial{{0, 1}};
  IntPolynomial outer = continuant(n, bits);
  IntPolynomial inner = continuant(n - 2, bits >> 1);
  long long bn = (bits >> (n - 1)) & 1u ? 1 : -1;
  IntPolynomial q = outer;
  for (std::size_t j = 0; j < inner.coeffs.size(); ++j) q.coeffs[j] -= bn * inner.coeffs[j];
  return q;
}

int corner_product(int n, std::uint32_t bits) {
  std::uint32_t mask = n == 32 ? 0xffffffffu : (1u << n) - 1u;
  int minus_count = n - __builtin_popcount(bits & mask);
  return minus_count % 2 == 0 ? 1 : -1;
}

std::vector<Complex> symbol_eigenvalues(int n, std::uint32_t bits, double phi) {
  ClassSolver solver(n, bits);
  std::vector<Complex> warm, out;
  roots_at_phase(solver.q, solver.q_half, solver.corner_b, phi, warm, out);
  return out;
}

void for_each_pattern_batch(int n, int phi_samples, const PeriodicOptions& opts,
                            const std::function<void(const std::vector<SpectralPoint>&)>& sink) {
  check_args(n, phi_samples, opts.cap);
  std::vector<std::uint32_t> reps = rotation_class_representatives(n);

  run_chunked(reps.size(), opts.workers, [&](std::size_t begin, std::size_t end, int) {
    std::vector<SpectralPoint> batch;
    std::vector<Complex> warm, roots;
    for (std::size_t c = begin; c < end; ++c) {
      std::uint32_t bits = reps[c];
      ClassSolver solver(n, bits);
      batch.clear();
      batch.reserve(static_cast<std::size_t>(phi_samples) * n);
      warm.clear();
      for (int k = 0; k < phi_samples; ++k) {
        double phi = 2.0 * M_PI * k / phi_samples;
        roots_at_phase(solver.q, solver.q_half, solver.corner_b, phi, warm, roots);
        PointLabel label = PointLabel::pattern_phase(n, bits, k, phi_samples);
        for (const Complex& z : roots)
          batch.push_back(SpectralPoint{z.real(), z.imag(), label});
      }
      sink(batch);
    }
  });
}

SpectralPointCloud pi_n(int n, int phi_samples, const PeriodicOptions& opts) {
  check_args(n, phi_samples, opts.cap);
  std::mutex mu;
  std::vector<std::vector<SpectralPoint>> batches;
  for_each_pattern_batch(n, phi_samples, opts, [&](const std::vector<SpectralPoint>& batch) {
    std::lock_guard<std::mutex> lock(mu);
    batches.push_back(batch);
  });

  SpectralPointCloud cloud;
  std::size_t total = 0;
  for (const auto& b : batches) total += b.size();
  cloud.reserve(total);
  for (const auto& b : batches)
    for (const SpectralPoint& pt : b) cloud.add(pt);
  cloud.sort();
  return dedup(cloud, 1e-9);
}

std::vector<Segment> pi_1_analytic() {
  return {{Complex(-2.0, 0.0), Complex(2.0, 0.0)}, {Complex(0.0, -2.0), Complex(0.0, 2.0)}};
}

std::vector<Segment> pi_2_analytic() {
  std::vector<Segment> segs = pi_1_analytic();
  segs.push_back({Complex(-1.0, -1.0), Complex(1.0, 1.0)});
  segs.push_back({Complex(-1.0, 1.0), Complex(1.0, -1.0)});
  return segs;
}

double distance_to_segments(Complex z, const std::vector<Segment>& segments) {
  if (segments.empty()) throw std::invalid_argument("no segments");
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& s : segments) {
    Complex d = s.b - s.a;
    double len2 = std::norm(d);
    double t = len2 > 0.0 ? std::clamp(std::real(std::conj(d) * (z - s.a)) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, std::abs(z - (s.a + t * d)));
  }
  return best;
}

void write_arcs_svg(int n, int phi_samples, const std::string& path, const PeriodicOptions& opts) {
  check_args(n, phi_samples, opts.cap);
  SvgWriter svg;
  std::vector<std::uint32_t> reps = rotation_class_representatives(n);
  for (std::uint32_t bits : reps) {
    ClassSolver solver(n, bits);
    std::vector<Complex> warm, roots;
    std::vector<std::vector<Complex>> branches(static_cast<std::size_t>(n));
    std::vector<Complex> prev;
    for (int k = 0; k <= phi_samples; ++k) {
      double phi = 2.0 * M_PI * (k % phi_samples) / phi_samples;
      roots_at_phase(solver.q, solver.q_half, solver.corner_b, phi, warm, roots);
      if (prev.empty()) {
        for (std::size_t b = 0; b < roots.size(); ++b) branches[b].push_back(roots[b]);
        prev = roots;
      } else {
        std::vector<bool> used(roots.size(), false);
        for (std::size_t b = 0; b < prev.size(); ++b) {
          std::size_t pick = 0;
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t r = 0; r < roots.size(); ++r) {
            if (used[r]) continue;
            double d = std::abs(roots[r] - prev[b]);
            if (d < best) {
              best = d;
              pick = r;
            }
          }
          used[pick] = true;
          prev[b] = roots[pick];
          branches[b].push_back(roots[pick]);
        }
      }
    }
    for (const auto& branch : branches)
      if (branch.size() > 1) svg.add_polyline(branch, "#355f8d", 0.6);
  }
  svg.write_file(path);
}

}  // namespace fz::periodic
