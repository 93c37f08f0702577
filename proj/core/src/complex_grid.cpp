#include "fzspec/complex_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fz {

ComplexGrid ComplexGrid::make(double re_min, double re_max, double im_min, double im_max,
                              int nx, int ny) {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw std::invalid_argument("grid bounds must be nonempty intervals");
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 samples per axis");
  ComplexGrid g;
  g.re_min = re_min;
  g.re_max = re_max;
  g.im_min = im_min;
  g.im_max = im_max;
  g.nx = nx;
  g.ny = ny;
  g.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  return g;
}

std::vector<std::uint8_t> sublevel_mask(const ComplexGrid& g, double eps) {
  std::vector<std::uint8_t> mask(g.values.size(), 0);
  for (std::size_t i = 0; i < g.values.size(); ++i) mask[i] = g.values[i] < eps ? 1 : 0;
  return mask;
}

namespace {

std::ofstream open_binary(const std::string& path) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw IoError("cannot open for writing: " + path);
  return ofs;
}

void write_pgm_bytes(const ComplexGrid& g, const std::vector<std::uint8_t>& bytes,
                     const std::string& path) {
  auto ofs = open_binary(path);
  ofs << "P5\n" << g.nx << " " << g.ny << "\n255\n";
  // Top image row is the maximal imaginary part.
  for (int iy = g.ny - 1; iy >= 0; --iy)
    ofs.write(reinterpret_cast<const char*>(&bytes[static_cast<std::size_t>(iy) * g.nx]), g.nx);
  ofs.flush();
  if (!ofs) throw IoError("write failed: " + path);
}

}  // namespace

void write_pgm(const ComplexGrid& g, const std::string& path, double vmax) {
  if (vmax <= 0.0)
    for (double v : g.values) vmax = std::max(vmax, v);
  std::vector<std::uint8_t> bytes(g.values.size(), 0);
  if (vmax > 0.0) {
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const double t = std::clamp(g.values[i] / vmax, 0.0, 1.0);
      bytes[i] = static_cast<std::uint8_t>(std::lround(255.0 * t));
    }
  }
  write_pgm_bytes(g, bytes, path);
}

void write_mask_pgm(const ComplexGrid& g, const std::vector<std::uint8_t>& mask,
                    const std::string& path) {
  if (mask.size() != g.values.size())
    throw std::invalid_argument("mask size does not match grid");
  std::vector<std::uint8_t> bytes(mask.size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i) bytes[i] = mask[i] ? 255 : 0;
  write_pgm_bytes(g, bytes, path);
}

void write_grid_csv(const ComplexGrid& g, const std::string& path) {
  auto ofs = open_binary(path);
  ofs << "re,im,value\n";
  char buf[128];
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const Complex z = g.node(ix, iy);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", z.real(), z.imag(),
                    g.value_at(ix, iy));
      ofs << buf;
    }
  ofs.flush();
  if (!ofs) throw IoError("write failed: " + path);
}

}  // namespace fz
