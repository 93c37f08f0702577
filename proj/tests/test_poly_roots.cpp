#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fzspec/poly_roots.hpp"
#include "support/oracles.hpp"

using fz::Complex;
using fz::IntPolynomial;

namespace {

double backward_error(const std::vector<Complex>& coeffs, Complex z) {
  Complex p(0.0, 0.0);
  double scale = 0.0, pw = 1.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
  for (const Complex& c : coeffs) {
    scale += std::abs(c) * pw;
    pw *= std::abs(z);
  }
  return std::abs(p) / (scale > 0.0 ? scale : 1.0);
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (const Complex& r : roots) {
    c.insert(c.begin(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c.size() - 1; ++k) c[k] -= r * c[k + 1];
  }
  return c;
}

}  // namespace

TEST_CASE("closed forms for low degrees") {
  CHECK(fz::aberth_roots({Complex(6, 0), Complex(2, 0)})[0] == Complex(-3.0, 0.0));

  auto r = fz::aberth_roots({Complex(2, 0), Complex(-3, 0), Complex(1, 0)});  // (z-1)(z-2)
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(r[1] - Complex(2, 0)) < 1e-14);

  r = fz::aberth_roots({Complex(0, 0), Complex(-5, 0), Complex(1, 0)});  // z(z-5)
  REQUIRE(r.size() == 2);
  CHECK(oracle::min_distance(Complex(0, 0), r) < 1e-14);
  CHECK(oracle::min_distance(Complex(5, 0), r) < 1e-14);

  CHECK(fz::aberth_roots({Complex(1, 0)}).empty());
  CHECK(fz::aberth_roots({Complex(-3, 2)}).empty());
}

TEST_CASE("pure powers return the origin with multiplicity") {
  auto r = fz::aberth_roots({Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(2, 0)});
  REQUIRE(r.size() == 3);
  for (Complex z : r) CHECK(std::abs(z) == 0.0);
}

TEST_CASE("roots of constructed polynomials match the construction") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    // Integer-lattice roots, pairwise distinct by construction.
    std::vector<Complex> roots;
    while (roots.size() < 6) {
      Complex z(pick(rng), pick(rng));
      if (oracle::min_distance(z, roots) > 0.5 || roots.empty()) roots.push_back(z);
    }
    auto coeffs = poly_from_roots(roots);
    auto found = fz::aberth_roots(coeffs);
    REQUIRE(found.size() == roots.size());
    CHECK(oracle::directed_distance(found, roots) < 1e-8);
    CHECK(oracle::directed_distance(roots, found) < 1e-8);
  }
}

TEST_CASE("every returned root has a small backward error") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int deg = 3; deg <= 9; ++deg) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = Complex(d(rng), d(rng));
    coeffs.back() = Complex(1.0, 0.0);
    auto r = fz::aberth_roots(coeffs);
    REQUIRE(static_cast<int>(r.size()) == deg);
    for (Complex z : r) CHECK(backward_error(coeffs, z) < 1e-10);
  }
}

TEST_CASE("warm starts reproduce cold-start root sets") {
  std::vector<Complex> coeffs = {Complex(-1.2, 0.3), Complex(0.5, 0), Complex(-2.0, 0),
                                 Complex(0, 0), Complex(1.0, 0)};
  auto cold = fz::aberth_roots(coeffs);
  auto perturbed = coeffs;
  perturbed[0] += Complex(1e-3, -2e-3);
  auto warm = fz::aberth_roots(perturbed, &cold);
  auto again = fz::aberth_roots(perturbed);
  CHECK(oracle::directed_distance(warm, again) < 1e-9);
  CHECK(oracle::directed_distance(again, warm) < 1e-9);
}

TEST_CASE("an all-real warm start cannot pin roots that left the axis") {
  // Two real roots of the previous sweep collide and become a conjugate
  // pair; the solver must fall back to its cold start rather than stall.
  std::vector<Complex> coeffs = {Complex(2.0 - 2.0 * std::cos(M_PI / 8.0), 0.0), Complex(1, 0),
                                 Complex(2, 0), Complex(1, 0)};
  std::vector<Complex> stale = {Complex(-0.26387011024, 0.0), Complex(-1.32811878296, 0.0),
                                Complex(-0.408011106801, 0.0)};
  auto r = fz::aberth_roots(coeffs, &stale);
  REQUIRE(r.size() == 3);
  for (Complex z : r) CHECK(backward_error(coeffs, z) < 1e-10);
  int off_axis = 0;
  for (Complex z : r)
    if (std::abs(z.imag()) > 1e-3) ++off_axis;
  CHECK(off_axis == 2);
}

TEST_CASE("warm starts with invalid entries are repaired") {
  std::vector<Complex> coeffs = {Complex(-6, 0), Complex(11, 0), Complex(-6, 0), Complex(1, 0)};
  std::vector<Complex> bad = {Complex(1.0, 0.0), Complex(1.0, 0.0),
                              Complex(std::nan(""), 0.0)};
  auto r = fz::aberth_roots(coeffs, &bad);
  std::vector<Complex> expect = {Complex(1, 0), Complex(2, 0), Complex(3, 0)};
  CHECK(oracle::directed_distance(r, expect) < 1e-8);
  CHECK(oracle::directed_distance(expect, r) < 1e-8);
}

TEST_CASE("strip_zero_roots removes the exact power of lambda") {
  IntPolynomial p{{0, 0, 3, 1}};
  CHECK(fz::strip_zero_roots(p) == 2);
  CHECK(p.coeffs == std::vector<long long>{3, 1});

  IntPolynomial q{{5, 1}};
  CHECK(fz::strip_zero_roots(q) == 0);

  IntPolynomial zero{{0, 0}};
  CHECK_THROWS_AS(fz::strip_zero_roots(zero), std::invalid_argument);
}

TEST_CASE("even-support compression halves the degree") {
  IntPolynomial p{{4, 0, -3, 0, 1}};
  CHECK(fz::has_even_support(p));
  IntPolynomial h = fz::compress_even(p);
  CHECK(h.coeffs == std::vector<long long>{4, -3, 1});

  IntPolynomial odd{{1, 2, 1}};
  CHECK_FALSE(fz::has_even_support(odd));
  CHECK_THROWS_AS(fz::compress_even(odd), std::invalid_argument);
}

TEST_CASE("exact integer division recovers known factors") {
  IntPolynomial num{{-6, 11, -6, 1}};  // (x-1)(x-2)(x-3)
  IntPolynomial den{{-1, 1}};
  auto q = fz::exact_divide(num, den);
  REQUIRE(q.has_value());
  CHECK(q->coeffs == std::vector<long long>{6, -5, 1});

  CHECK_FALSE(fz::exact_divide(num, IntPolynomial{{7, 0, 1}}).has_value());
  CHECK_THROWS_AS(fz::exact_divide(num, IntPolynomial{{1, 2}}), std::invalid_argument);
}

TEST_CASE("square-free part strips multiplicity and keeps every root") {
  // (x^2-1)^2 (x-2) = x^5 - 2x^4 - 2x^3 + 4x^2 + x - 2
  IntPolynomial p{{-2, 1, 4, -2, -2, 1}};
  IntPolynomial s = fz::square_free_part(p);
  CHECK(s.coeffs == std::vector<long long>{2, -1, -2, 1});  // hand-expanded (x^2-1)(x-2)

  IntPolynomial already{{-2, 0, 1}};
  CHECK(fz::square_free_part(already).coeffs == already.coeffs);

  IntPolynomial cube{{0, 0, 0, 1}};
  CHECK(fz::square_free_part(cube).coeffs == std::vector<long long>{0, 1});

  IntPolynomial quartic{{1, -4, 6, -4, 1}};  // (x-1)^4
  CHECK(fz::square_free_part(quartic).coeffs == std::vector<long long>{-1, 1});
}

TEST_CASE("square-free part agrees with the pseudo-remainder oracle") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    // Random monic polynomial with a planted repeated factor.
    IntPolynomial base{{pick(rng), pick(rng), 1}};
    IntPolynomial rest{{pick(rng), pick(rng), pick(rng), 1}};
    IntPolynomial prod;
    prod.coeffs.assign(base.coeffs.size() + base.coeffs.size() + rest.coeffs.size() - 2, 0);
    for (std::size_t i = 0; i < base.coeffs.size(); ++i)
      for (std::size_t j = 0; j < base.coeffs.size(); ++j)
        for (std::size_t k = 0; k < rest.coeffs.size(); ++k)
          prod.coeffs[i + j + k] += base.coeffs[i] * base.coeffs[j] * rest.coeffs[k];
    IntPolynomial lib = fz::square_free_part(prod);
    IntPolynomial ref = oracle::squarefree_by_prs(prod);
    CHECK(lib.coeffs == ref.coeffs);
  }
}
