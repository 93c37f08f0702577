#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fz {

using Complex = std::complex<double>;

// Default size caps. Every sweep entry point takes the cap as a parameter
// so callers (CLI flags, tests) can reconfigure; these are the defaults.
inline constexpr int kFiniteSectionCap = 20;  // sigma_n: cost grows as 2^(n-1)
inline constexpr int kPeriodCap = 14;         // pi_n: cost grows as 2^n
inline constexpr int kEigenSizeCap = 64;      // dense kernels

// A request exceeded a configured cap. The message names the cost.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative kernel failed to converge within its bounded step budget.
// Thrown instead of returning garbage.
class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File output failed (unwritable path, missing directory).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fz
