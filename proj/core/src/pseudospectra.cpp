#include "fzspec/pseudospectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fzspec/linalg.hpp"
#include "fzspec/parallel.hpp"

namespace fz::pseudo {
namespace {

double root_equation(int n, double theta) {
  return 2.0 * std::cos((n + 1) * theta) - std::cos((n - 1) * theta);
}

}  // namespace

EpsNResult eps_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  EpsNResult r;
  r.n = n;
  r.bracket_lo = M_PI / (2.0 * (n + 3));
  r.bracket_hi = M_PI / (2.0 * (n + 1));
  double lo = r.bracket_lo, hi = r.bracket_hi;
  double flo = root_equation(n, lo), fhi = root_equation(n, hi);
  if (!(flo > 0.0 && fhi < 0.0) && !(flo < 0.0 && fhi > 0.0))
    throw ConvergenceFailure("no sign change on the 4 sin(theta_n) bracket for n=" +
                             std::to_string(n) + ": the root equation solver is broken");
  while (hi - lo > 1e-14) {
    double mid = 0.5 * (lo + hi);
    double fm = root_equation(n, mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  r.theta_n = 0.5 * (lo + hi);
  r.eps_n = 4.0 * std::sin(r.theta_n);
  return r;
}

ComplexGrid resolvent_norm_grid(const DenseMatrix& m, const ComplexGrid& grid, int workers) {
  ComplexGrid out = grid;
  out.values.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);
  run_chunked(out.values.size(), workers, [&](std::size_t begin, std::size_t end, int) {
    DenseMatrix shifted(m.size());
    for (std::size_t node = begin; node < end; ++node) {
      int ix = static_cast<int>(node % static_cast<std::size_t>(grid.nx));
      int iy = static_cast<int>(node / static_cast<std::size_t>(grid.nx));
      Complex z = grid.node(ix, iy);
      shifted = m;
      for (int d = 0; d < m.size(); ++d) shifted.at(d, d) -= z;
      out.values[node] = smallest_singular_value(shifted);
    }
  });
  return out;
}

std::vector<std::uint8_t> pseudospectrum_mask(const ComplexGrid& field, double eps,
                                              const std::vector<Complex>& eigenvalues) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  std::vector<std::uint8_t> mask(field.values.size(), 0);
  const double spacing = field.node_spacing();
  for (int iy = 0; iy < field.ny; ++iy) {
    for (int ix = 0; ix < field.nx; ++ix) {
      std::size_t idx = static_cast<std::size_t>(iy) * field.nx + ix;
      bool member = field.values[idx] < eps;
      if (!member) {
        Complex z = field.node(ix, iy);
        for (const Complex& ev : eigenvalues) {
          if (std::abs(z - ev) <= spacing) {
            member = true;
            break;
          }
        }
      }
      mask[idx] = member ? 1 : 0;
    }
  }
  return mask;
}

NumericalRange numerical_range_boundary(const DenseMatrix& m, int angles) {
  if (angles < 8) throw std::invalid_argument("need at least 8 support angles");
  NumericalRange r;
  r.angles = angles;
  r.support.resize(static_cast<std::size_t>(angles));
  for (int k = 0; k < angles; ++k)
    r.support[static_cast<std::size_t>(k)] = hermitian_support(m, 2.0 * M_PI * k / angles);

  r.vertices.resize(static_cast<std::size_t>(angles));
  for (int k = 0; k < angles; ++k) {
    int k1 = (k + 1) % angles;
    double t0 = 2.0 * M_PI * k / angles, t1 = 2.0 * M_PI * k1 / angles;
    double h0 = r.support[static_cast<std::size_t>(k)];
    double h1 = r.support[static_cast<std::size_t>(k1)];
    double det = std::sin(t1 - t0);
    double x = (h0 * std::sin(t1) - h1 * std::sin(t0)) / det;
    double y = (std::cos(t0) * h1 - std::cos(t1) * h0) / det;
    r.vertices[static_cast<std::size_t>(k)] = Complex(x, y);
  }
  return r;
}

double square_support(double theta) {
  return 2.0 * std::max(std::fabs(std::cos(theta)), std::fabs(std::sin(theta)));
}

std::string eps_table_text(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  std::string out = "  n               theta_n                 eps_n            2pi/(n+1)\n";
  char buf[128];
  for (int n = 1; n <= max_n; ++n) {
    EpsNResult r = eps_n(n);
    std::snprintf(buf, sizeof buf, "%3d %21.15f %21.15f %21.15f\n", n, r.theta_n, r.eps_n,
                  2.0 * M_PI / (n + 1));
    out += buf;
  }
  return out;
}

}  // namespace fz::pseudo
