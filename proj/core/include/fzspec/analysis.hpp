#pragma once

#include <string>
#include <vector>

#include "fzspec/common.hpp"
#include "fzspec/point_cloud.hpp"
#include "fzspec/sierpinski.hpp"

namespace fz::analysis {

// One verification result. pass is equivalent to metric <= tol; witness
// identifies the worst case (a point, an index, or an error message).
struct CheckReport {
  std::string name;
  bool pass = false;
  double metric = 0.0;
  double tol = 0.0;
  std::string witness;
};

// "name pass|fail metric tol witness"
std::string format_report_line(const CheckReport& r);

// Distance from every sigma_n point to the sampled pi_{2n+2} cloud at
// phi_samples phases. The periodic cloud is consumed batch by batch (one
// rotation class at a time), never materialized. metric = the largest
// distance; the section eigenvalues embed at phases 0 and pi exactly, so
// tol mainly absorbs root-finding noise.
CheckReport inclusion_sigma_in_pi(int n, int phi_samples, double tol, int workers = 1);

// metric = max over the maps conj, -conj, -z, iz of the Hausdorff distance
// between the mapped cloud and the original.
CheckReport symmetry_report(const SpectralPointCloud& cloud, double tol);

// metric = max over points of |re| + |im| - 2.
CheckReport square_bound_report(const SpectralPointCloud& cloud, double tol);

// For every lambda on the polar grid {radius*k/radial_steps} x
// {2 pi j/angular_steps}: the eigenvector window of half-width m must have
// residual_sup <= tol and sup|u_i| <= (1 + tol)/(1 - |lambda|). metric
// folds both (residual and bound excess), worst lambda reported.
CheckReport disk_inclusion_report(double radius, int radial_steps, int angular_steps, int m,
                                  double tol);
CheckReport disk_inclusion_report(double radius, int radial_steps, int angular_steps, int m,
                                  double tol, const sierpinski::SierpinskiSequence& c);

struct OverlayResult {
  std::vector<std::string> files;
  std::size_t sigma_points = 0;
  std::size_t pi_points = 0;
};

// Writes sigma_{n_sigma}, pi_{n_pi}, the unit circle and the square
// |x|+|y| = 2 as layered CSV files plus one combined SVG into out_dir.
// Purely descriptive: the rendered coincidence of the layers is a
// conjecture, so no pass/fail claim is made.
OverlayResult conjecture_overlay(int n_sigma, int n_pi, int phi_samples,
                                 const std::string& out_dir, int workers = 1);

struct VerifyOptions {
  long long inject_c_sign_error = 0;  // flip c_i (testing hook; 0 = off)
  int workers = 1;
};

// The self-check suite run by the verify subcommand: frozen 16-row table
// pattern, forced-sign and mirror identities, disk bound, exact small
// sigma_n values, symmetry/square bounds, the sigma-in-pi inclusion,
// eps_n facts, and the analytic pi_1/pi_2 descriptions.
std::vector<CheckReport> verify_suite(const VerifyOptions& opts = {});

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace fz::analysis
