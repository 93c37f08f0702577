#include "fzspec/svg.hpp"

#include <cstdio>
#include <fstream>

#include "fzspec/point_cloud.hpp"

namespace fz {
namespace {

constexpr double kExtent = 2.2;  // viewport covers [-kExtent, kExtent]^2
constexpr double kCanvas = 880.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

SvgWriter::SvgWriter() = default;

double SvgWriter::px(double re) const { return (re + kExtent) / (2.0 * kExtent) * kCanvas; }

double SvgWriter::py(double im) const { return (kExtent - im) / (2.0 * kExtent) * kCanvas; }

void SvgWriter::add_points(const SpectralPointCloud& cloud, const std::string& color,
                           double radius) {
  for (const SpectralPoint& p : cloud.points()) {
    body_ += "<circle cx=\"" + fmt(px(p.re)) + "\" cy=\"" + fmt(py(p.im)) + "\" r=\"" +
             fmt(radius) + "\" fill=\"" + color + "\"/>\n";
  }
}

void SvgWriter::add_points(const std::vector<Complex>& pts, const std::string& color,
                           double radius) {
  for (const Complex& z : pts) {
    body_ += "<circle cx=\"" + fmt(px(z.real())) + "\" cy=\"" + fmt(py(z.imag())) + "\" r=\"" +
             fmt(radius) + "\" fill=\"" + color + "\"/>\n";
  }
}

void SvgWriter::emit_path(const std::vector<Complex>& pts, const std::string& color, double width,
                          bool closed) {
  if (pts.size() < 2) return;
  std::string d = "M " + fmt(px(pts[0].real())) + " " + fmt(py(pts[0].imag()));
  for (std::size_t i = 1; i < pts.size(); ++i)
    d += " L " + fmt(px(pts[i].real())) + " " + fmt(py(pts[i].imag()));
  if (closed) d += " Z";
  body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           fmt(width) + "\"/>\n";
}

void SvgWriter::add_polyline(const std::vector<Complex>& pts, const std::string& color,
                             double width) {
  emit_path(pts, color, width, false);
}

void SvgWriter::add_polygon(const std::vector<Complex>& vertices, const std::string& color,
                            double width) {
  emit_path(vertices, color, width, true);
}

void SvgWriter::add_circle(Complex center, double radius, const std::string& color, double width) {
  double r = radius / (2.0 * kExtent) * kCanvas;
  body_ += "<circle cx=\"" + fmt(px(center.real())) + "\" cy=\"" + fmt(py(center.imag())) +
           "\" r=\"" + fmt(r) + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           fmt(width) + "\"/>\n";
}

std::string SvgWriter::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kCanvas) +
                    "\" height=\"" + fmt(kCanvas) + "\" viewBox=\"0 0 " + fmt(kCanvas) + " " +
                    fmt(kCanvas) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void SvgWriter::write_file(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << str();
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace fz
