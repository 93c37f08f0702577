#include "fzspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "fzspec/finite_spectra.hpp"
#include "fzspec/linalg.hpp"
#include "fzspec/periodic_spectra.hpp"
#include "fzspec/pseudospectra.hpp"
#include "fzspec/svg.hpp"

namespace fz::analysis {
namespace {

std::string format_point(double re, double im) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.9g,%.9g)", re, im);
  return buf;
}

std::string format_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

struct DirectedWorst {
  double distance = 0.0;
  double re = 0.0, im = 0.0;
};

DirectedWorst directed_distance(const std::vector<SpectralPoint>& from, const PlanarIndex& to) {
  DirectedWorst worst;
  for (const SpectralPoint& p : from) {
    double d = to.nearest_distance(p.re, p.im);
    if (d > worst.distance) worst = {d, p.re, p.im};
  }
  return worst;
}

SpectralPointCloud mapped_cloud(const SpectralPointCloud& cloud, int map) {
  SpectralPointCloud out;
  out.reserve(cloud.size());
  for (const SpectralPoint& p : cloud.points()) {
    switch (map) {
      case 0: out.add(p.re, -p.im); break;   // conj
      case 1: out.add(-p.re, p.im); break;   // -conj
      case 2: out.add(-p.re, -p.im); break;  // -z
      default: out.add(-p.im, p.re); break;  // iz
    }
  }
  return out;
}

const char* kMapNames[4] = {"conj", "-conj", "-z", "iz"};

// The 16-row sign table in rendered form, frozen for the self-check.
const char* kTable16[16] = {
    " 1 + +",
    " 2 +  +",
    " 3 - - +",
    " 4 -    +",
    " 5 + - + +",
    " 6 -  -   +",
    " 7 + -   + +",
    " 8 -        +",
    " 9 + -   + + +",
    "10 +  -   +   +",
    "11 - + - -   - +",
    "12 +    -       +",
    "13 - - +     + - +",
    "14 -  -       +   +",
    "15 + -       +   + +",
    "16 -                +",
};

CheckReport table_pattern_check(const sierpinski::SierpinskiSequence& c) {
  CheckReport r;
  r.name = "table_16_pattern";
  r.tol = 0.0;
  try {
    sierpinski::CoefficientTable t = sierpinski::CoefficientTable::build(16, c);
    std::vector<std::string> rows = t.render_rows();
    int mismatches = 0;
    for (int i = 0; i < 16; ++i) {
      if (rows[static_cast<std::size_t>(i)] != kTable16[i]) {
        ++mismatches;
        if (r.witness.empty())
          r.witness = "row " + std::to_string(i + 1) + " got '" +
                      rows[static_cast<std::size_t>(i)] + "' want '" + kTable16[i] + "'";
      }
    }
    r.metric = mismatches;
    r.pass = mismatches == 0;
    if (r.pass) r.witness = "16 rows exact";
  } catch (const std::exception& e) {
    r.pass = false;
    r.metric = 1.0;
    r.witness = e.what();
  }
  return r;
}

CheckReport forced_sign_check(const sierpinski::SierpinskiSequence& c) {
  CheckReport r;
  r.name = "forced_signs_64";
  r.tol = 0.0;
  try {
    sierpinski::CoefficientTable t = sierpinski::CoefficientTable::build(64, c);
    sierpinski::ForcedSignReport f = sierpinski::forced_sign_consistency(t);
    r.metric = static_cast<double>(f.violations.size());
    r.pass = f.pass;
    r.witness = f.pass ? std::to_string(f.checks.size()) + " checks"
                       : "(" + std::to_string(f.violations[0].i) + "," +
                             std::to_string(f.violations[0].j) + ")";
  } catch (const std::exception& e) {
    r.pass = false;
    r.metric = 1.0;
    r.witness = e.what();
  }
  return r;
}

CheckReport mirror_check_report(const sierpinski::SierpinskiSequence& c) {
  sierpinski::MirrorReport m = sierpinski::mirror_check(Complex(0.3, 0.4), 512, 1e-10, c);
  CheckReport r;
  r.name = "mirror_512";
  r.tol = m.tol;
  r.metric = m.worst;
  r.pass = m.pass;
  r.witness = "i=" + std::to_string(m.worst_index);
  return r;
}

CheckReport eps_n_check() {
  CheckReport r;
  r.name = "eps_n_suite";
  r.tol = 1e-12;
  double worst = -1.0;
  std::string witness = "all of n=1..30";
  std::vector<double> eps;
  for (int n = 1; n <= 30; ++n) {
    pseudo::EpsNResult e = pseudo::eps_n(n);
    eps.push_back(e.eps_n);
    double over_bound = e.eps_n - 2.0 * M_PI / (n + 1);
    if (over_bound > worst) {
      worst = over_bound;
      witness = "bound at n=" + std::to_string(n);
    }
    double outside = std::max(e.bracket_lo - e.theta_n, e.theta_n - e.bracket_hi);
    if (outside > worst) {
      worst = outside;
      witness = "bracket at n=" + std::to_string(n);
    }
  }
  double exact1 = std::fabs(eps[0] - 2.0);
  if (exact1 > worst) {
    worst = exact1;
    witness = "eps_1 vs 2";
  }
  for (std::size_t k = 0; k + 1 < eps.size(); ++k) {
    double increase = eps[k + 1] - eps[k];
    if (increase > worst) {
      worst = increase;
      witness = "monotonicity at n=" + std::to_string(k + 1);
    }
  }
  r.metric = worst;
  r.pass = worst <= r.tol;
  r.witness = witness;
  return r;
}

CheckReport cloud_match_check(const std::string& name, const SpectralPointCloud& got,
                              const std::vector<Complex>& want, double tol) {
  SpectralPointCloud expected;
  for (const Complex& z : want) expected.add(z);
  expected.sort();
  CheckReport r;
  r.name = name;
  r.tol = tol;
  r.metric = hausdorff_distance(got, expected);
  r.pass = r.metric <= tol;
  r.witness = std::to_string(got.size()) + " points";
  return r;
}

CheckReport pi_1_analytic_check() {
  SpectralPointCloud cloud = periodic::pi_n(1, 512);
  std::vector<periodic::Segment> segs = periodic::pi_1_analytic();
  double worst = 0.0;
  std::string witness = "on-segment";
  for (const SpectralPoint& p : cloud.points()) {
    double d = periodic::distance_to_segments(Complex(p.re, p.im), segs);
    if (d > worst) {
      worst = d;
      witness = format_point(p.re, p.im);
    }
  }
  const Complex endpoints[4] = {{2.0, 0.0}, {-2.0, 0.0}, {0.0, 2.0}, {0.0, -2.0}};
  for (const Complex& t : endpoints) {
    double miss = std::numeric_limits<double>::infinity();
    for (const SpectralPoint& p : cloud.points())
      miss = std::min(miss, std::abs(Complex(p.re, p.im) - t));
    if (miss > worst) {
      worst = miss;
      witness = "endpoint " + format_point(t.real(), t.imag());
    }
  }
  CheckReport r;
  r.name = "pi_1_analytic";
  r.tol = 1e-10;
  r.metric = worst;
  r.pass = worst <= r.tol;
  r.witness = witness;
  return r;
}

CheckReport pi_2_nesting_check() {
  SpectralPointCloud pi1 = periodic::pi_n(1, 512);
  SpectralPointCloud pi2 = periodic::pi_n(2, 512);
  double worst = one_sided_distance(pi1, pi2);
  std::string witness = "pi_1 inside pi_2";
  std::vector<periodic::Segment> segs = periodic::pi_2_analytic();
  for (const SpectralPoint& p : pi2.points()) {
    double d = periodic::distance_to_segments(Complex(p.re, p.im), segs);
    if (d > worst) {
      worst = d;
      witness = format_point(p.re, p.im);
    }
  }
  CheckReport r;
  r.name = "pi_2_analytic_and_nesting";
  r.tol = 1e-8;
  r.metric = worst;
  r.pass = worst <= r.tol;
  r.witness = witness;
  return r;
}

CheckReport numerical_range_check() {
  CheckReport r;
  r.name = "numerical_range_square_n6";
  r.tol = 1e-8;
  double worst = -std::numeric_limits<double>::infinity();
  for (const finite::PatternId& id : finite::enumerate_patterns(6)) {
    DenseMatrix m = finite::build_finite_matrix(id);
    pseudo::NumericalRange nr = pseudo::numerical_range_boundary(m, 64);
    for (int k = 0; k < nr.angles; ++k) {
      double theta = 2.0 * M_PI * k / nr.angles;
      double excess = nr.support[static_cast<std::size_t>(k)] - pseudo::square_support(theta);
      if (excess > worst) {
        worst = excess;
        r.witness = "pattern " + std::to_string(id.bits) + " angle " + std::to_string(k);
      }
    }
  }
  r.metric = worst;
  r.pass = worst <= r.tol;
  return r;
}

}  // namespace

std::string format_report_line(const CheckReport& r) {
  return r.name + (r.pass ? " pass " : " fail ") + format_value(r.metric) + " " +
         format_value(r.tol) + " " + (r.witness.empty() ? "-" : r.witness);
}

CheckReport inclusion_sigma_in_pi(int n, int phi_samples, double tol, int workers) {
  const int period = 2 * n + 2;
  SpectralPointCloud sigma = finite::sigma_n(n, {workers, kFiniteSectionCap});
  std::vector<double> best(sigma.size(), std::numeric_limits<double>::infinity());
  std::mutex mu;
  periodic::PeriodicOptions popts;
  popts.workers = workers;
  periodic::for_each_pattern_batch(period, phi_samples, popts,
                                   [&](const std::vector<SpectralPoint>& batch) {
                                     PlanarIndex index(batch);
                                     std::vector<double> local(sigma.size());
                                     for (std::size_t i = 0; i < sigma.size(); ++i)
                                       local[i] = index.nearest_distance(sigma[i].re, sigma[i].im);
                                     std::lock_guard<std::mutex> lock(mu);
                                     for (std::size_t i = 0; i < sigma.size(); ++i)
                                       best[i] = std::min(best[i], local[i]);
                                   });
  CheckReport r;
  r.name = "inclusion_sigma" + std::to_string(n) + "_in_pi" + std::to_string(period);
  r.tol = tol;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < best.size(); ++i)
    if (best[i] > best[worst]) worst = i;
  r.metric = best.empty() ? 0.0 : best[worst];
  r.pass = r.metric <= tol;
  if (!best.empty()) r.witness = format_point(sigma[worst].re, sigma[worst].im);
  return r;
}

CheckReport symmetry_report(const SpectralPointCloud& cloud, double tol) {
  if (cloud.empty()) throw std::invalid_argument("symmetry check needs a non-empty cloud");
  PlanarIndex original(cloud.points());
  CheckReport r;
  r.name = "symmetry";
  r.tol = tol;
  r.metric = -std::numeric_limits<double>::infinity();
  for (int map = 0; map < 4; ++map) {
    SpectralPointCloud m = mapped_cloud(cloud, map);
    PlanarIndex mapped(m.points());
    DirectedWorst there = directed_distance(m.points(), original);
    DirectedWorst back = directed_distance(cloud.points(), mapped);
    DirectedWorst worse = there.distance >= back.distance ? there : back;
    if (worse.distance > r.metric) {
      r.metric = worse.distance;
      r.witness = std::string(kMapNames[map]) + " " + format_point(worse.re, worse.im);
    }
  }
  r.pass = r.metric <= tol;
  return r;
}

CheckReport square_bound_report(const SpectralPointCloud& cloud, double tol) {
  CheckReport r;
  r.name = "square_bound";
  r.tol = tol;
  r.metric = -2.0;
  r.witness = "none";
  for (const SpectralPoint& p : cloud.points()) {
    double v = std::fabs(p.re) + std::fabs(p.im) - 2.0;
    if (v > r.metric) {
      r.metric = v;
      r.witness = format_point(p.re, p.im);
    }
  }
  r.pass = r.metric <= tol;
  return r;
}

CheckReport disk_inclusion_report(double radius, int radial_steps, int angular_steps, int m,
                                  double tol) {
  static const sierpinski::SierpinskiSequence shared;
  return disk_inclusion_report(radius, radial_steps, angular_steps, m, tol, shared);
}

CheckReport disk_inclusion_report(double radius, int radial_steps, int angular_steps, int m,
                                  double tol, const sierpinski::SierpinskiSequence& c) {
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("radius must lie strictly inside the unit disk");
  if (radial_steps < 1 || angular_steps < 1) throw std::invalid_argument("need positive steps");
  CheckReport r;
  r.name = "disk_inclusion_r" + std::to_string(radius).substr(0, 4);
  r.tol = tol;
  r.metric = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= radial_steps; ++k) {
    double rho = radius * k / radial_steps;
    for (int j = 0; j < angular_steps; ++j) {
      double ang = 2.0 * M_PI * j / angular_steps;
      Complex lambda = rho * Complex(std::cos(ang), std::sin(ang));
      std::vector<Complex> u = sierpinski::eigenvector(lambda, m, c);
      double resid = sierpinski::residual_sup(lambda, u, c);
      double sup = 0.0;
      for (const Complex& v : u) sup = std::max(sup, std::abs(v));
      double excess = sup * (1.0 - std::abs(lambda)) - 1.0;
      double local = std::max(resid, excess);
      if (local > r.metric) {
        r.metric = local;
        r.witness = format_point(lambda.real(), lambda.imag());
      }
    }
  }
  r.pass = r.metric <= tol;
  return r;
}

OverlayResult conjecture_overlay(int n_sigma, int n_pi, int phi_samples,
                                 const std::string& out_dir, int workers) {
  SpectralPointCloud sigma = finite::sigma_n(n_sigma, {workers, kFiniteSectionCap});
  periodic::PeriodicOptions popts;
  popts.workers = workers;
  SpectralPointCloud pi = periodic::pi_n(n_pi, phi_samples, popts);

  SpectralPointCloud circle;
  std::vector<Complex> circle_line;
  for (int k = 0; k <= 512; ++k) {
    double t = 2.0 * M_PI * k / 512;
    Complex z(std::cos(t), std::sin(t));
    if (k < 512) circle.add(z);
    circle_line.push_back(z);
  }
  SpectralPointCloud square;
  std::vector<Complex> corners = {{2.0, 0.0}, {0.0, 2.0}, {-2.0, 0.0}, {0.0, -2.0}};
  for (int side = 0; side < 4; ++side) {
    Complex a = corners[static_cast<std::size_t>(side)];
    Complex b = corners[static_cast<std::size_t>((side + 1) % 4)];
    for (int k = 0; k < 128; ++k) square.add(a + (b - a) * (k / 128.0));
  }
  square.sort();

  OverlayResult result;
  result.sigma_points = sigma.size();
  result.pi_points = pi.size();
  auto emit = [&](const std::string& name, const SpectralPointCloud& cloud) {
    std::string path = out_dir + "/" + name;
    write_csv_file(cloud, path);
    result.files.push_back(path);
  };
  emit("overlay_sigma.csv", sigma);
  emit("overlay_pi.csv", pi);
  emit("overlay_circle.csv", circle);
  emit("overlay_square.csv", square);

  SvgWriter svg;
  svg.add_polygon(corners, "#222222", 1.5);
  svg.add_points(pi, "#7aa6d9", 0.8);
  svg.add_points(sigma, "#a03030", 1.4);
  svg.add_polyline(circle_line, "#2f7d32", 1.2);
  std::string svg_path = out_dir + "/overlay.svg";
  svg.write_file(svg_path);
  result.files.push_back(svg_path);
  return result;
}

std::vector<CheckReport> verify_suite(const VerifyOptions& opts) {
  sierpinski::SierpinskiSequence seq;
  if (opts.inject_c_sign_error > 0) seq.flip_entry(opts.inject_c_sign_error);

  std::vector<CheckReport> reports;
  reports.push_back(table_pattern_check(seq));
  reports.push_back(forced_sign_check(seq));
  reports.push_back(mirror_check_report(seq));
  reports.push_back(disk_inclusion_report(0.9, 10, 12, 1024, 1e-9, seq));
  reports.push_back(cloud_match_check(
      "sigma_2_exact", finite::sigma_n(2, {opts.workers, kFiniteSectionCap}),
      {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}, 1e-10));
  double r2 = std::sqrt(2.0);
  reports.push_back(cloud_match_check(
      "sigma_3_exact", finite::sigma_n(3, {opts.workers, kFiniteSectionCap}),
      {{0.0, 0.0}, {r2, 0.0}, {-r2, 0.0}, {0.0, r2}, {0.0, -r2}}, 1e-10));
  {
    CheckReport r = symmetry_report(finite::sigma_n(6, {opts.workers, kFiniteSectionCap}), 1e-8);
    r.name = "sigma_6_symmetry";
    reports.push_back(r);
  }
  {
    CheckReport r =
        square_bound_report(finite::sigma_n(8, {opts.workers, kFiniteSectionCap}), 1e-8);
    r.name = "sigma_8_square_bound";
    reports.push_back(r);
  }
  reports.push_back(inclusion_sigma_in_pi(2, 512, 1e-3, opts.workers));
  reports.push_back(eps_n_check());
  reports.push_back(pi_1_analytic_check());
  reports.push_back(pi_2_nesting_check());
  reports.push_back(numerical_range_check());
  return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

}  // namespace fz::analysis
