#pragma once

#include <string>
#include <vector>

#include "fzspec/common.hpp"

namespace fz {

class SpectralPointCloud;

// Minimal SVG emitter with a fixed viewport mapping [-2.2, 2.2]^2 to an
// 880x880 pixel canvas, imaginary axis pointing up. Intended for eyeball
// comparison, not pixel-exact figure reproduction.
class SvgWriter {
 public:
  SvgWriter();

  void add_points(const SpectralPointCloud& cloud, const std::string& color, double radius);
  void add_points(const std::vector<Complex>& pts, const std::string& color, double radius);
  void add_polyline(const std::vector<Complex>& pts, const std::string& color, double width);
  void add_polygon(const std::vector<Complex>& vertices, const std::string& color, double width);
  void add_circle(Complex center, double radius, const std::string& color, double width);

  std::string str() const;
  void write_file(const std::string& path) const;  // throws IoError on failure

 private:
  double px(double re) const;
  double py(double im) const;
  void emit_path(const std::vector<Complex>& pts, const std::string& color, double width,
                 bool closed);

  std::string body_;
};

}  // namespace fz
