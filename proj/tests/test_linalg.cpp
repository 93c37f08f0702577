#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fzspec/linalg.hpp"
#include "support/oracles.hpp"

using fz::Complex;
using fz::DenseMatrix;

namespace {

DenseMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Complex(d(rng), d(rng));
  return m;
}

DenseMatrix shifted(const DenseMatrix& m, Complex z) {
  DenseMatrix s = m;
  for (int i = 0; i < m.size(); ++i) s.at(i, i) -= z;
  return s;
}

std::vector<double> sorted_real(std::vector<Complex> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (Complex z : v) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("triangular matrices return their diagonal") {
  DenseMatrix m(4);
  m.at(0, 0) = Complex(1, 2);
  m.at(1, 1) = Complex(-3, 0);
  m.at(2, 2) = Complex(0, 1);
  m.at(3, 3) = Complex(4, -4);
  m.at(0, 2) = Complex(7, 7);
  m.at(1, 3) = Complex(-2, 5);
  auto eigs = fz::eigenvalues(m);
  REQUIRE(eigs.size() == 4);
  std::vector<Complex> want = {{1, 2}, {-3, 0}, {0, 1}, {4, -4}};
  CHECK(oracle::directed_distance(eigs, want) < 1e-12);
  CHECK(oracle::directed_distance(want, eigs) < 1e-12);
}

TEST_CASE("eigenvalues satisfy the determinant equation") {
  for (int n = 2; n <= 6; ++n) {
    DenseMatrix m = random_matrix(n, 100u + static_cast<unsigned>(n));
    auto eigs = fz::eigenvalues(m);
    REQUIRE(static_cast<int>(eigs.size()) == n);
    for (Complex lambda : eigs) {
      double det = std::abs(oracle::lu_determinant(shifted(m, lambda)));
      CHECK(det < 1e-9 * std::max(1.0, std::pow(m.abs_sum(), n)));
    }
  }
}

TEST_CASE("eigenvalue sum and product match trace and determinant") {
  DenseMatrix m = random_matrix(7, 42);
  auto eigs = fz::eigenvalues(m);
  Complex sum(0, 0), prod(1, 0);
  for (Complex z : eigs) {
    sum += z;
    prod *= z;
  }
  CHECK(std::abs(sum - m.trace()) < 1e-10);
  CHECK(std::abs(prod - oracle::lu_determinant(m)) < 1e-9);
}

TEST_CASE("symmetric tridiagonal spectrum matches the cosine formula") {
  const int n = 12;
  DenseMatrix m(n);
  for (int i = 0; i + 1 < n; ++i) {
    m.at(i, i + 1) = Complex(1, 0);
    m.at(i + 1, i) = Complex(1, 0);
  }
  auto eigs = fz::eigenvalues(m);
  auto got = sorted_real(eigs);
  auto want = oracle::all_plus_eigenvalues(n);
  for (int k = 0; k < n; ++k) {
    CHECK(got[static_cast<std::size_t>(k)] ==
          doctest::Approx(want[static_cast<std::size_t>(k)]).epsilon(1e-10));
    CHECK(std::abs(eigs[static_cast<std::size_t>(k)].imag()) < 1e-10);
  }
}

TEST_CASE("defective blocks still produce clustered eigenvalues") {
  DenseMatrix j(4);
  for (int i = 0; i + 1 < 4; ++i) j.at(i, i + 1) = Complex(1, 0);
  auto eigs = fz::eigenvalues(j);
  REQUIRE(eigs.size() == 4);
  for (Complex z : eigs) CHECK(std::abs(z) < 1e-3);
}

TEST_CASE("smallest singular value on matrices with known answers") {
  DenseMatrix id = DenseMatrix::identity(5);
  CHECK(fz::smallest_singular_value(id) == doctest::Approx(1.0).epsilon(1e-12));

  DenseMatrix d(3);
  d.at(0, 0) = Complex(3, 0);
  d.at(1, 1) = Complex(1e-7, 0);
  d.at(2, 2) = Complex(-2, 0);
  CHECK(fz::smallest_singular_value(d) == doctest::Approx(1e-7).epsilon(1e-6));

  DenseMatrix rank_deficient(3);
  for (int j = 0; j < 3; ++j) {
    rank_deficient.at(0, j) = Complex(1, 1);
    rank_deficient.at(1, j) = Complex(1, 1);
    rank_deficient.at(2, j) = Complex(j, 0);
  }
  CHECK(fz::smallest_singular_value(rank_deficient) < 1e-12);
}

TEST_CASE("smallest singular value squares to the smallest eigenvalue of the Gram matrix") {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    DenseMatrix m = random_matrix(5, seed);
    DenseMatrix gram(5);
    DenseMatrix adj = m.adjoint();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Complex s(0, 0);
        for (int k = 0; k < 5; ++k) s += adj.at(i, k) * m.at(k, j);
        gram.at(i, j) = s;
      }
    auto eigs = fz::eigenvalues(gram);
    double min_eig = std::numeric_limits<double>::infinity();
    for (Complex z : eigs) min_eig = std::min(min_eig, z.real());
    double smin = fz::smallest_singular_value(m);
    CHECK(std::abs(smin * smin - min_eig) < 1e-8);
  }
}

TEST_CASE("hermitian support of a normal matrix is the farthest-eigenvalue projection") {
  DenseMatrix m(4);
  m.at(0, 0) = Complex(1, 0);
  m.at(1, 1) = Complex(-1, 0);
  m.at(2, 2) = Complex(0, 1);
  m.at(3, 3) = Complex(0, -1);
  for (double theta : {0.0, 0.3, M_PI / 4, 1.7, M_PI, 5.0}) {
    double want = -std::numeric_limits<double>::infinity();
    for (Complex lambda : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)})
      want = std::max(want, std::real(std::exp(Complex(0, -theta)) * lambda));
    CHECK(fz::hermitian_support(m, theta) == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("dense kernels refuse sizes beyond the cap") {
  DenseMatrix big(fz::kEigenSizeCap + 1);
  CHECK_THROWS_AS(fz::eigenvalues(big), fz::CapExceeded);
  CHECK_THROWS_AS(fz::smallest_singular_value(big), fz::CapExceeded);
  CHECK_THROWS_AS(fz::hermitian_support(big, 0.0), fz::CapExceeded);
  CHECK_NOTHROW(fz::eigenvalues(DenseMatrix::identity(3), 3));
  CHECK_THROWS_AS(fz::eigenvalues(DenseMatrix::identity(4), 3), fz::CapExceeded);
}
