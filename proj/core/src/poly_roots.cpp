#include "fzspec/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace fz {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrimes[2] = {2305843009213693951ULL, 9223372036854775783ULL};

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((u128)a * b % q); }

u64 addmod(u64 a, u64 b, u64 q) {
  u64 s = a + b;
  if (s >= q || s < a) s -= q;
  return s;
}

u64 submod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 q) { return powmod(a, q - 2, q); }

u64 to_mod(long long c, u64 q) {
  long long r = c % static_cast<long long>(q);
  if (r < 0) r += static_cast<long long>(q);
  return static_cast<u64>(r);
}

using ModPoly = std::vector<u64>;  // ascending powers, no trailing zeros

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce_mod(const IntPolynomial& p, u64 q) {
  ModPoly r(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) r[k] = to_mod(p.coeffs[k], q);
  trim_mod(r);
  return r;
}

void make_monic_mod(ModPoly& p, u64 q) {
  if (p.empty()) return;
  u64 inv = invmod(p.back(), q);
  for (u64& c : p) c = mulmod(c, inv, q);
}

ModPoly remainder_mod(ModPoly a, const ModPoly& b, u64 q) {
  // b monic
  while (a.size() >= b.size()) {
    u64 f = a.back();
    std::size_t shift = a.size() - b.size();
    if (f != 0) {
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = submod(a[shift + j], mulmod(f, b[j], q), q);
    }
    a.pop_back();
    trim_mod(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 q) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    make_monic_mod(b, q);
    ModPoly r = remainder_mod(std::move(a), b, q);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic_mod(a, q);
  return a;
}

IntPolynomial lift_symmetric(const ModPoly& p, u64 q) {
  IntPolynomial r;
  r.coeffs.resize(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    u64 v = p[k];
    r.coeffs[k] = v > q / 2 ? static_cast<long long>(v) - static_cast<long long>(q)
                            : static_cast<long long>(v);
  }
  return r;
}

void eval_with_derivative(const std::vector<Complex>& a, Complex z, Complex& p, Complex& dp) {
  p = a.back();
  dp = Complex(0.0, 0.0);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
}

double coefficient_scale_at(const std::vector<Complex>& a, double az) {
  double s = 0.0, pw = 1.0;
  for (const Complex& c : a) {
    s += std::abs(c) * pw;
    pw *= az;
  }
  return s;
}

std::vector<Complex> quadratic_roots(const Complex& b, const Complex& c) {
  if (c == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), -b};
  Complex disc = std::sqrt(b * b - 4.0 * c);
  if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
  Complex r1 = -0.5 * (b + disc);
  Complex r2 = c / r1;
  return {r1, r2};
}

void fujiwara_start(const std::vector<Complex>& a, std::vector<Complex>& z) {
  const int deg = static_cast<int>(z.size());
  double radius = 0.0;
  for (int k = 1; k <= deg; ++k) {
    double m = std::abs(a[static_cast<std::size_t>(deg - k)]);
    if (m > 0.0) radius = std::max(radius, std::pow(m, 1.0 / k));
  }
  radius *= 2.0;
  for (int j = 0; j < deg; ++j) {
    double phase = 2.0 * M_PI * j / deg + 0.7;
    z[j] = radius * Complex(std::cos(phase), std::sin(phase));
  }
}

// Gauss-Seidel Ehrlich sweeps on a monic polynomial. Each root is accepted by
// a small final step or, failing that, by backward error against the
// coefficient scale at its modulus.
bool ehrlich_converges(const std::vector<Complex>& a, std::vector<Complex>& z,
                       const AberthOptions& opts) {
  const int deg = static_cast<int>(z.size());
  std::vector<bool> settled(static_cast<std::size_t>(deg), false);
  bool all_settled = false;
  for (int iter = 0; iter < opts.max_iterations && !all_settled; ++iter) {
    all_settled = true;
    for (int j = 0; j < deg; ++j) {
      Complex p, dp;
      eval_with_derivative(a, z[j], p, dp);
      if (p == Complex(0.0, 0.0)) {
        settled[j] = true;
        continue;
      }
      if (dp == Complex(0.0, 0.0)) {
        z[j] += Complex(1e-8, 1e-8) * (1.0 + std::abs(z[j]));
        settled[j] = false;
        all_settled = false;
        continue;
      }
      Complex newton = p / dp;
      Complex repulsion(0.0, 0.0);
      for (int k = 0; k < deg; ++k) {
        if (k == j) continue;
        Complex d = z[j] - z[k];
        if (std::abs(d) < 1e-300) {
          d = Complex(1e-12, 1e-12) * (1.0 + std::abs(z[j]));
          z[j] += d;
        }
        repulsion += 1.0 / d;
      }
      Complex denom = 1.0 - newton * repulsion;
      Complex step = std::abs(denom) < 1e-300 ? newton : newton / denom;
      z[j] -= step;
      settled[j] = std::abs(step) <= opts.step_tol * (1.0 + std::abs(z[j]));
      if (!settled[j]) all_settled = false;
    }
  }
  if (all_settled) return true;
  for (int j = 0; j < deg; ++j) {
    if (settled[j]) continue;
    Complex p, dp;
    eval_with_derivative(a, z[j], p, dp);
    double scale = coefficient_scale_at(a, std::abs(z[j]));
    if (std::abs(p) > opts.residual_tol * scale) return false;
  }
  return true;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs,
                                  const std::vector<Complex>* warm_start,
                                  const AberthOptions& opts) {
  std::vector<Complex> a = coeffs;
  while (a.size() > 1 && a.back() == Complex(0.0, 0.0)) a.pop_back();
  if (a.size() <= 1) return {};
  const int deg = static_cast<int>(a.size()) - 1;

  Complex lead = a.back();
  for (Complex& c : a) c /= lead;

  if (deg == 1) return {-a[0]};
  if (deg == 2) return quadratic_roots(a[1], a[0]);

  bool pure_power = true;
  for (int k = 0; k < deg; ++k)
    if (a[k] != Complex(0.0, 0.0)) pure_power = false;
  if (pure_power) return std::vector<Complex>(deg, Complex(0.0, 0.0));

  // A warm start is only a hint: real-axis starts on a real polynomial can
  // never reach roots that left the axis (Newton and the repulsion terms stay
  // real), so on failure fall back to the symmetry-breaking cold start.
  std::vector<Complex> z(static_cast<std::size_t>(deg));
  if (warm_start && static_cast<int>(warm_start->size()) == deg) {
    z = *warm_start;
    for (int j = 0; j < deg; ++j) {
      if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) z[j] = Complex(0.1 * j, 0.2);
      for (int k = 0; k < j; ++k) {
        if (std::abs(z[j] - z[k]) < 1e-14 * (1.0 + std::abs(z[j])))
          z[j] += Complex(1e-9 * (k + 1), 2e-9) * (1.0 + std::abs(z[j]));
      }
    }
    if (ehrlich_converges(a, z, opts)) return z;
  }
  fujiwara_start(a, z);
  if (ehrlich_converges(a, z, opts)) return z;
  throw ConvergenceFailure("root iteration failed to converge within budget");
}

std::vector<Complex> aberth_roots(const IntPolynomial& p,
                                  const std::vector<Complex>* warm_start,
                                  const AberthOptions& opts) {
  std::vector<Complex> c(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    c[k] = Complex(static_cast<double>(p.coeffs[k]), 0.0);
  return aberth_roots(c, warm_start, opts);
}

int strip_zero_roots(IntPolynomial& p) {
  p.trim();
  if (p.coeffs.empty()) throw std::invalid_argument("cannot strip roots of the zero polynomial");
  std::size_t s = 0;
  while (s < p.coeffs.size() && p.coeffs[s] == 0) ++s;
  p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(s));
  return static_cast<int>(s);
}

bool has_even_support(const IntPolynomial& p) {
  for (std::size_t k = 1; k < p.coeffs.size(); k += 2)
    if (p.coeffs[k] != 0) return false;
  return true;
}

IntPolynomial compress_even(const IntPolynomial& p) {
  if (!has_even_support(p)) throw std::invalid_argument("polynomial has odd-power terms");
  IntPolynomial r;
  r.coeffs.resize(p.coeffs.size() / 2 + (p.coeffs.size() % 2 ? 1 : 0));
  for (std::size_t k = 0; k < p.coeffs.size(); k += 2) r.coeffs[k / 2] = p.coeffs[k];
  r.trim();
  return r;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.coeffs.empty() || den.coeffs.back() != 1)
    throw std::invalid_argument("divisor must be monic");
  const int dn = num.degree();
  const int dd = den.degree();
  if (dn < dd) return std::nullopt;

  constexpr __int128 kQuotientBound = static_cast<__int128>(1) << 53;
  std::vector<__int128> rem(num.coeffs.begin(), num.coeffs.end());
  IntPolynomial quot;
  quot.coeffs.assign(static_cast<std::size_t>(dn - dd) + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    __int128 qk = rem[static_cast<std::size_t>(k + dd)];
    if (qk > kQuotientBound || qk < -kQuotientBound) return std::nullopt;
    quot.coeffs[static_cast<std::size_t>(k)] = static_cast<long long>(qk);
    if (qk != 0) {
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k + j)] -= qk * den.coeffs[static_cast<std::size_t>(j)];
    }
  }
  for (int j = 0; j < dd; ++j)
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  quot.trim();
  return quot;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  IntPolynomial q = p;
  q.trim();
  if (q.degree() < 1) throw std::invalid_argument("square-free part needs degree >= 1");
  if (!q.is_monic()) throw std::invalid_argument("square-free part needs a monic polynomial");
  IntPolynomial dq = poly_derivative(q);

  for (u64 prime : kPrimes) {
    ModPoly g = gcd_mod(reduce_mod(q, prime), reduce_mod(dq, prime), prime);
    if (g.size() <= 1) return q;  // coprime with its derivative: already square-free
    IntPolynomial lifted = lift_symmetric(g, prime);
    if (lifted.coeffs.back() != 1) continue;
    auto quotient = exact_divide(q, lifted);
    if (!quotient) continue;
    if (!exact_divide(dq, lifted)) continue;
    return *quotient;
  }
  throw ConvergenceFailure("square-free certification failed for both moduli");
}

}  // namespace fz
