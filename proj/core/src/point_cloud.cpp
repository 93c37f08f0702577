#include "fzspec/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace fz {

namespace {

double normalize_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::tuple<int, int, std::uint32_t, int> label_key(const PointLabel& l) {
  return {l.present ? 1 : 0, l.n, l.bits, l.phi_index};
}

void format_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string PointLabel::render() const {
  if (!present) return {};
  std::string s = "n=" + std::to_string(n) + ";b=" + std::to_string(bits);
  if (phi_index >= 0)
    s += ";k=" + std::to_string(phi_index) + "/" + std::to_string(phi_samples);
  return s;
}

bool point_less(const SpectralPoint& a, const SpectralPoint& b) {
  if (a.re != b.re) return a.re < b.re;
  if (a.im != b.im) return a.im < b.im;
  return label_key(a.label) < label_key(b.label);
}

void SpectralPointCloud::add(double re, double im) { add(re, im, PointLabel{}); }

void SpectralPointCloud::add(double re, double im, PointLabel label) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::invalid_argument("spectral points must be finite");
  SpectralPoint p;
  p.re = normalize_zero(re);
  p.im = normalize_zero(im);
  p.label = label;
  points_.push_back(p);
}

bool SpectralPointCloud::any_labels() const {
  for (const auto& p : points_)
    if (p.label.present) return true;
  return false;
}

void SpectralPointCloud::sort() { std::sort(points_.begin(), points_.end(), point_less); }

SpectralPointCloud dedup(const SpectralPointCloud& c, double tol) {
  if (tol < 0.0) throw std::invalid_argument("dedup tolerance must be nonnegative");
  std::vector<SpectralPoint> pts = c.points();
  std::sort(pts.begin(), pts.end(), point_less);

  SpectralPointCloud out;
  if (pts.empty()) return out;

  if (tol == 0.0) {
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0 && pts[i].re == pts[i - 1].re && pts[i].im == pts[i - 1].im) continue;
      out.points().push_back(pts[i]);
    }
    return out;
  }

  // Accepted points bucketed on a grid of cell size tol; any point within
  // tol of a candidate lives in the 3x3 cell neighborhood.
  struct CellHash {
    std::size_t operator()(const std::pair<long long, long long>& c) const {
      return std::hash<long long>()(c.first * 1000003LL + c.second);
    }
  };
  std::unordered_map<std::pair<long long, long long>, std::vector<std::size_t>, CellHash> grid;
  const double tol2 = tol * tol;
  auto cell_of = [tol](double v) { return static_cast<long long>(std::floor(v / tol)); };

  for (const auto& p : pts) {
    const long long cx = cell_of(p.re);
    const long long cy = cell_of(p.im);
    bool merged = false;
    for (long long dx = -1; dx <= 1 && !merged; ++dx)
      for (long long dy = -1; dy <= 1 && !merged; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (std::size_t idx : it->second) {
          const auto& q = out.points()[idx];
          const double dre = p.re - q.re, dim = p.im - q.im;
          if (dre * dre + dim * dim <= tol2) {
            merged = true;
            break;
          }
        }
      }
    if (!merged) {
      grid[{cx, cy}].push_back(out.size());
      out.points().push_back(p);
    }
  }
  return out;
}

PlanarIndex::PlanarIndex(const std::vector<SpectralPoint>& pts) {
  xs_.reserve(pts.size());
  ys_.reserve(pts.size());
  for (const auto& p : pts) {
    xs_.push_back(p.re);
    ys_.push_back(p.im);
  }
  build();
}

PlanarIndex::PlanarIndex(const double* xs, const double* ys, std::size_t count)
    : xs_(xs, xs + count), ys_(ys, ys + count) {
  build();
}

void PlanarIndex::build() {
  const std::size_t n = xs_.size();
  if (n < 48) return;  // brute force is faster and simpler below this

  double xmin = xs_[0], xmax = xs_[0], ymin = ys_[0], ymax = ys_[0];
  for (std::size_t i = 1; i < n; ++i) {
    xmin = std::min(xmin, xs_[i]);
    xmax = std::max(xmax, xs_[i]);
    ymin = std::min(ymin, ys_[i]);
    ymax = std::max(ymax, ys_[i]);
  }
  const double w = xmax - xmin, h = ymax - ymin;
  if (w <= 0.0 && h <= 0.0) return;

  const double target = std::sqrt((std::max(w, 1e-12) * std::max(h, 1e-12)) / static_cast<double>(n));
  cell_ = std::max({target, w / 2048.0, h / 2048.0, 1e-12});
  x0_ = xmin;
  y0_ = ymin;
  nx_ = static_cast<int>(w / cell_) + 1;
  ny_ = static_cast<int>(h / cell_) + 1;

  std::vector<std::int32_t> counts(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
  auto bucket_of = [this](double x, double y) {
    int ix = static_cast<int>((x - x0_) / cell_);
    int iy = static_cast<int>((y - y0_) / cell_);
    ix = std::clamp(ix, 0, nx_ - 1);
    iy = std::clamp(iy, 0, ny_ - 1);
    return static_cast<std::size_t>(iy) * nx_ + ix;
  };
  for (std::size_t i = 0; i < n; ++i) ++counts[bucket_of(xs_[i], ys_[i]) + 1];
  for (std::size_t b = 1; b < counts.size(); ++b) counts[b] += counts[b - 1];
  bucket_start_ = counts;
  order_.resize(n);
  std::vector<std::int32_t> cursor(bucket_start_.begin(), bucket_start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i)
    order_[static_cast<std::size_t>(cursor[bucket_of(xs_[i], ys_[i])]++)] = static_cast<std::int32_t>(i);
  use_grid_ = true;
}

double PlanarIndex::brute_force(double x, double y) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    const double dx = xs_[i] - x, dy = ys_[i] - y;
    best = std::min(best, dx * dx + dy * dy);
  }
  return std::sqrt(best);
}

double PlanarIndex::nearest_distance(double x, double y) const {
  if (!use_grid_) return brute_force(x, y);

  const int qx = static_cast<int>(std::floor((x - x0_) / cell_));
  const int qy = static_cast<int>(std::floor((y - y0_) / cell_));
  double best2 = std::numeric_limits<double>::infinity();
  const int max_ring = std::max({nx_, ny_, std::abs(qx) + nx_, std::abs(qy) + ny_}) + 2;

  for (int r = 0; r <= max_ring; ++r) {
    // Any point in a cell at Chebyshev ring r is at least (r-1)*cell away.
    if (best2 < std::numeric_limits<double>::infinity()) {
      const double floor_dist = (static_cast<double>(r) - 1.0) * cell_;
      if (floor_dist > 0.0 && floor_dist * floor_dist > best2) break;
    }
    const int ix_lo = std::max(qx - r, 0), ix_hi = std::min(qx + r, nx_ - 1);
    const int iy_lo = std::max(qy - r, 0), iy_hi = std::min(qy + r, ny_ - 1);
    if (ix_lo > ix_hi || iy_lo > iy_hi) continue;
    for (int iy = iy_lo; iy <= iy_hi; ++iy) {
      const bool edge_row = (iy == qy - r || iy == qy + r);
      for (int ix = ix_lo; ix <= ix_hi; ++ix) {
        if (!edge_row && ix != qx - r && ix != qx + r) continue;  // ring cells only
        const std::size_t b = static_cast<std::size_t>(iy) * nx_ + ix;
        for (std::int32_t k = bucket_start_[b]; k < bucket_start_[b + 1]; ++k) {
          const std::int32_t i = order_[static_cast<std::size_t>(k)];
          const double dx = xs_[static_cast<std::size_t>(i)] - x;
          const double dy = ys_[static_cast<std::size_t>(i)] - y;
          best2 = std::min(best2, dx * dx + dy * dy);
        }
      }
    }
  }
  return std::sqrt(best2);
}

double one_sided_distance(const SpectralPointCloud& a, const SpectralPointCloud& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("set distances require non-empty clouds");
  PlanarIndex index(b.points());
  double worst = 0.0;
  for (const auto& p : a.points())
    worst = std::max(worst, index.nearest_distance(p.re, p.im));
  return worst;
}

double hausdorff_distance(const SpectralPointCloud& a, const SpectralPointCloud& b) {
  return std::max(one_sided_distance(a, b), one_sided_distance(b, a));
}

void write_csv(const SpectralPointCloud& c, std::ostream& os) {
  const bool labeled = c.any_labels();
  std::string line;
  line.reserve(96);
  os << (labeled ? "re,im,label\n" : "re,im\n");
  for (const auto& p : c.points()) {
    line.clear();
    format_double(line, p.re);
    line += ',';
    format_double(line, p.im);
    if (labeled) {
      line += ',';
      line += p.label.render();
    }
    line += '\n';
    os << line;
  }
}

void write_csv_file(const SpectralPointCloud& c, const std::string& path) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw IoError("cannot open for writing: " + path);
  write_csv(c, ofs);
  ofs.flush();
  if (!ofs) throw IoError("write failed: " + path);
}

}  // namespace fz
