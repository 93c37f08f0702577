#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fzspec/common.hpp"

namespace fz {

// Provenance of a spectral point: which sweep produced it.
// For finite-section sweeps: n and the pattern bits.
// For periodic sweeps: period n, pattern bits, and the phase index
// phi_index (phase = 2*pi*phi_index/phi_samples).
struct PointLabel {
  bool present = false;
  int n = 0;
  std::uint32_t bits = 0;
  int phi_index = -1;
  int phi_samples = 0;

  static PointLabel pattern(int n, std::uint32_t bits) {
    PointLabel l;
    l.present = true;
    l.n = n;
    l.bits = bits;
    return l;
  }
  static PointLabel pattern_phase(int n, std::uint32_t bits, int phi_index, int phi_samples) {
    PointLabel l = pattern(n, bits);
    l.phi_index = phi_index;
    l.phi_samples = phi_samples;
    return l;
  }

  std::string render() const;
};

struct SpectralPoint {
  double re = 0.0;
  double im = 0.0;
  PointLabel label;
};

// Total order used everywhere a deterministic arrangement is needed:
// lexicographic by (re, im), provenance as tie-break.
bool point_less(const SpectralPoint& a, const SpectralPoint& b);

// Finite multiset of complex points with optional provenance labels.
class SpectralPointCloud {
 public:
  void add(double re, double im);
  void add(double re, double im, PointLabel label);
  void add(Complex z) { add(z.real(), z.imag()); }
  void add(Complex z, PointLabel label) { add(z.real(), z.imag(), label); }
  void add(const SpectralPoint& p) { add(p.re, p.im, p.label); }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const SpectralPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<SpectralPoint>& points() const& { return points_; }
  std::vector<SpectralPoint>& points() & { return points_; }
  // On a temporary the storage is moved out, so iterating the result of a
  // call chain never dangles.
  std::vector<SpectralPoint> points() && { return std::move(points_); }
  bool any_labels() const;
  void reserve(std::size_t n) { points_.reserve(n); }
  void sort();

 private:
  std::vector<SpectralPoint> points_;
};

// Greedy merge in sorted order: the output points are pairwise farther than
// tol apart, every input point lies within tol of an output point, and the
// output is sorted by point_less. tol = 0 removes exact duplicates.
SpectralPointCloud dedup(const SpectralPointCloud& c, double tol);

// sup over a of the Euclidean distance to b. Both clouds must be non-empty.
double one_sided_distance(const SpectralPointCloud& a, const SpectralPointCloud& b);

// max of the two one-sided distances. Both clouds must be non-empty.
double hausdorff_distance(const SpectralPointCloud& a, const SpectralPointCloud& b);

// CSV serialization: header `re,im` (plus `,label` when any point carries
// provenance), one point per row, 17 significant digits.
void write_csv(const SpectralPointCloud& c, std::ostream& os);
void write_csv_file(const SpectralPointCloud& c, const std::string& path);

// Uniform-bucket planar nearest-neighbor index over a fixed point set.
// Exact distances; deterministic; used by the set-distance utilities and by
// the streaming inclusion checks.
class PlanarIndex {
 public:
  explicit PlanarIndex(const std::vector<SpectralPoint>& pts);
  PlanarIndex(const double* xs, const double* ys, std::size_t count);
  double nearest_distance(double x, double y) const;
  std::size_t size() const { return xs_.size(); }

 private:
  void build();
  double brute_force(double x, double y) const;

  std::vector<double> xs_, ys_;
  bool use_grid_ = false;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::int32_t> bucket_start_;
  std::vector<std::int32_t> order_;
};

}  // namespace fz
