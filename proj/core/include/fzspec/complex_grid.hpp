#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fzspec/common.hpp"

namespace fz {

// Axis-aligned rectangle in the complex plane sampled on an nx-by-ny node
// lattice (endpoints included), carrying one scalar field value per node.
// Node (ix, iy) sits at re_min + ix*dre, im_min + iy*dim.
struct ComplexGrid {
  double re_min = -2.2, re_max = 2.2;
  double im_min = -2.2, im_max = 2.2;
  int nx = 2, ny = 2;
  std::vector<double> values;  // size nx*ny, iy-major: values[iy*nx + ix]

  static ComplexGrid make(double re_min, double re_max, double im_min, double im_max,
                          int nx, int ny);
  // The default viewport used by every exported figure.
  static ComplexGrid standard(int nx, int ny) { return make(-2.2, 2.2, -2.2, 2.2, nx, ny); }

  double dre() const { return (re_max - re_min) / (nx - 1); }
  double dim() const { return (im_max - im_min) / (ny - 1); }
  // The node spacing quoted next to every mask derived from this grid.
  double node_spacing() const { return dre() > dim() ? dre() : dim(); }
  Complex node(int ix, int iy) const {
    return Complex(re_min + ix * dre(), im_min + iy * dim());
  }
  double& value_at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  double value_at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
};

// 0/1 mask of the strict sublevel set {value < eps}.
std::vector<std::uint8_t> sublevel_mask(const ComplexGrid& g, double eps);

// Binary PGM (P5): header "P5\n<nx> <ny>\n255\n", then ny rows of nx bytes,
// top row = im_max (imaginary axis upward). Byte = round(255*clamp(v/vmax,0,1));
// vmax <= 0 means "use the field maximum" (an all-zero field writes zeros).
void write_pgm(const ComplexGrid& g, const std::string& path, double vmax = 0.0);

// Mask rendered as a PGM, member nodes white (255).
void write_mask_pgm(const ComplexGrid& g, const std::vector<std::uint8_t>& mask,
                    const std::string& path);

// CSV of node values: header "re,im,value", nodes in iy-major order starting
// at (re_min, im_min), 17 significant digits.
void write_grid_csv(const ComplexGrid& g, const std::string& path);

}  // namespace fz
