#pragma once

#include <stdexcept>
#include <vector>

#include "fzspec/common.hpp"

namespace fz {

// Square complex matrix, row-major, 0-based access.
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0)) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  int size() const { return n_; }
  Complex& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
  }

  DenseMatrix adjoint() const {
    DenseMatrix m(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
    return m;
  }

  Complex trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  // Sum of entry moduli; scale reference for deflation thresholds.
  double abs_sum() const {
    double s = 0.0;
    for (const Complex& v : a_) s += std::abs(v);
    return s;
  }

 private:
  int n_;
  std::vector<Complex> a_;
};

}  // namespace fz
