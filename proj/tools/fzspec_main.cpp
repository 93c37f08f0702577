#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fzspec/analysis.hpp"
#include "fzspec/complex_grid.hpp"
#include "fzspec/finite_spectra.hpp"
#include "fzspec/linalg.hpp"
#include "fzspec/periodic_spectra.hpp"
#include "fzspec/point_cloud.hpp"
#include "fzspec/pseudospectra.hpp"
#include "fzspec/sierpinski.hpp"

namespace {

// Everything a dispatch needs, collected from flags before any computation.
struct RunConfig {
  std::string out_dir = ".";
  int n = 1;
  double eps = 0.0;
  int grid_res = 512;
  std::string zoom;
  double window = 0.2;
  int phi_samples = 512;
  int workers = 1;
  int sigma_cap = fz::kFiniteSectionCap;
  int pi_cap = fz::kPeriodCap;
  int rows = 16;
  int max_n = 50;
  long long pattern = 0;
  int angles = 64;
  int n_sigma = 12;
  int n_pi = 12;
  long long inject = 0;
  bool arcs = false;
};

fz::Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return {std::stod(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    char c = s[k];
    if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    return {0.0, std::stod(s)};
  }
  std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {std::stod(re), std::stod(im)};
}

std::string join(const std::string& dir, const std::string& name) { return dir + "/" + name; }

void announce(const std::string& path) { std::cout << "wrote " << path << "\n"; }

int run_sigma(const RunConfig& cfg) {
  fz::finite::SweepOptions opts{cfg.workers, cfg.sigma_cap};
  if (cfg.n >= 21)
    std::cerr << "warning: sweeping 2^" << (cfg.n - 1) << " sections of size " << cfg.n << "\n";

  if (!cfg.zoom.empty()) {
    fz::Complex center = parse_complex(cfg.zoom);
    fz::SpectralPointCloud cloud = fz::finite::sigma_n_window(cfg.n, center, cfg.window, opts);
    std::string path = join(cfg.out_dir, "sigma_" + std::to_string(cfg.n) + "_zoom.csv");
    fz::write_csv_file(cloud, path);
    announce(path);
    return 0;
  }
  if (cfg.eps > 0.0) {
    fz::ComplexGrid grid = fz::ComplexGrid::standard(cfg.grid_res, cfg.grid_res);
    fz::ComplexGrid field = fz::finite::sigma_n_eps(cfg.n, cfg.eps, grid, opts);
    std::string base = join(cfg.out_dir, "sigma_" + std::to_string(cfg.n) + "_eps");
    fz::write_pgm(field, base + ".pgm");
    announce(base + ".pgm");
    fz::write_grid_csv(field, base + ".csv");
    announce(base + ".csv");
    fz::SpectralPointCloud points = fz::finite::sigma_n(cfg.n, opts);
    std::vector<fz::Complex> eigs;
    eigs.reserve(points.size());
    for (const fz::SpectralPoint& p : points.points()) eigs.emplace_back(p.re, p.im);
    std::vector<std::uint8_t> mask = fz::pseudo::pseudospectrum_mask(field, cfg.eps, eigs);
    fz::write_mask_pgm(field, mask, base + "_mask.pgm");
    announce(base + "_mask.pgm");
    return 0;
  }
  fz::SpectralPointCloud cloud = fz::finite::sigma_n(cfg.n, opts);
  std::string path = join(cfg.out_dir, "sigma_" + std::to_string(cfg.n) + ".csv");
  fz::write_csv_file(cloud, path);
  announce(path);
  return 0;
}

int run_pi(const RunConfig& cfg) {
  fz::periodic::PeriodicOptions opts{cfg.workers, cfg.pi_cap};
  fz::SpectralPointCloud cloud = fz::periodic::pi_n(cfg.n, cfg.phi_samples, opts);
  std::string path = join(cfg.out_dir, "pi_" + std::to_string(cfg.n) + ".csv");
  fz::write_csv_file(cloud, path);
  announce(path);
  if (cfg.arcs) {
    std::string svg = join(cfg.out_dir, "pi_" + std::to_string(cfg.n) + "_arcs.svg");
    fz::periodic::write_arcs_svg(cfg.n, cfg.phi_samples, svg, opts);
    announce(svg);
  }
  return 0;
}

int run_pseudo(const RunConfig& cfg) {
  if (cfg.pattern < 0 || cfg.pattern >= (1ll << (cfg.n - 1)) + (cfg.n == 1 ? 1 : 0))
    throw std::invalid_argument("pattern bits must lie in [0, 2^(n-1))");
  fz::finite::PatternId id{cfg.n, static_cast<std::uint32_t>(cfg.pattern)};
  fz::DenseMatrix m = fz::finite::build_finite_matrix(id);
  fz::ComplexGrid grid = fz::ComplexGrid::standard(cfg.grid_res, cfg.grid_res);
  fz::ComplexGrid field = fz::pseudo::resolvent_norm_grid(m, grid, cfg.workers);
  std::string base = join(cfg.out_dir,
                          "pseudo_" + std::to_string(cfg.n) + "_b" + std::to_string(cfg.pattern));
  fz::write_pgm(field, base + ".pgm");
  announce(base + ".pgm");
  fz::write_grid_csv(field, base + ".csv");
  announce(base + ".csv");
  if (cfg.eps > 0.0) {
    std::vector<fz::Complex> eigs = fz::finite::distinct_section_eigenvalues(id);
    std::vector<std::uint8_t> mask = fz::pseudo::pseudospectrum_mask(field, cfg.eps, eigs);
    fz::write_mask_pgm(field, mask, base + "_mask.pgm");
    announce(base + "_mask.pgm");
  }
  return 0;
}

int run_table(const RunConfig& cfg) {
  fz::sierpinski::CoefficientTable t = fz::sierpinski::CoefficientTable::build(cfg.rows);
  std::cout << t.render_text();
  return 0;
}

int run_epsn(const RunConfig& cfg) {
  std::cout << fz::pseudo::eps_table_text(cfg.max_n);
  return 0;
}

int run_nrange(const RunConfig& cfg) {
  if (cfg.pattern < 0 || cfg.pattern >= (1ll << (cfg.n - 1)) + (cfg.n == 1 ? 1 : 0))
    throw std::invalid_argument("pattern bits must lie in [0, 2^(n-1))");
  fz::finite::PatternId id{cfg.n, static_cast<std::uint32_t>(cfg.pattern)};
  fz::DenseMatrix m = fz::finite::build_finite_matrix(id);
  fz::pseudo::NumericalRange nr = fz::pseudo::numerical_range_boundary(m, cfg.angles);
  for (int k = 0; k < nr.angles; ++k) {
    char line[96];
    std::snprintf(line, sizeof line, "%.17g %.17g\n", 2.0 * M_PI * k / nr.angles,
                  nr.support[static_cast<std::size_t>(k)]);
    std::cout << line;
  }
  fz::SpectralPointCloud vertices;
  for (const fz::Complex& v : nr.vertices) vertices.add(v);
  std::string path = join(cfg.out_dir, "nrange_" + std::to_string(cfg.n) + "_b" +
                                           std::to_string(cfg.pattern) + ".csv");
  fz::write_csv_file(vertices, path);
  announce(path);
  return 0;
}

int run_verify(const RunConfig& cfg) {
  fz::analysis::VerifyOptions opts;
  opts.inject_c_sign_error = cfg.inject;
  opts.workers = cfg.workers;
  std::vector<fz::analysis::CheckReport> reports = fz::analysis::verify_suite(opts);
  std::string text;
  for (const fz::analysis::CheckReport& r : reports) text += fz::analysis::format_report_line(r) + "\n";
  std::cout << text;
  std::string path = join(cfg.out_dir, "verify_report.txt");
  std::ofstream os(path, std::ios::binary);
  if (!os || !(os << text)) throw fz::IoError("cannot write " + path);
  os.close();
  announce(path);
  return fz::analysis::all_pass(reports) ? 0 : 1;
}

int run_overlay(const RunConfig& cfg) {
  fz::analysis::OverlayResult result = fz::analysis::conjecture_overlay(
      cfg.n_sigma, cfg.n_pi, cfg.phi_samples, cfg.out_dir, cfg.workers);
  for (const std::string& f : result.files) announce(f);
  std::cout << "sigma points: " << result.sigma_points << "\n";
  std::cout << "pi points: " << result.pi_points << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sweeps for the random hopping sign model: finite-section "
               "eigenvalue clouds, periodic-operator spectra, pseudospectra, and the "
               "coefficient-triangle checks."};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--out-dir", cfg.out_dir,
                 "Directory for generated files (must exist). Defaults to FZSPEC_OUT_DIR or .")
      ->envname("FZSPEC_OUT_DIR");

  CLI::App* sigma = app.add_subcommand(
      "sigma", "Union of eigenvalues of all 2^(n-1) finite sections; CSV (or a min-singular-"
               "value field when --eps > 0). Cost doubles per n; refused above --cap.");
  sigma->add_option("--n", cfg.n, "Section size (cap: --cap, default 20)")->required();
  sigma->add_option("--eps", cfg.eps, "Pseudospectrum level; 0 emits the eigenvalue cloud");
  sigma->add_option("--grid-res", cfg.grid_res, "Nodes per axis for --eps fields (default 512)");
  sigma->add_option("--zoom", cfg.zoom, "Center of a zoom window, e.g. 1+1i");
  sigma->add_option("--window", cfg.window, "Zoom half-width (default 0.2)");
  sigma->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware (default 1)");
  sigma->add_option("--cap", cfg.sigma_cap, "Refusal threshold for n (default 20)");

  CLI::App* pi = app.add_subcommand(
      "pi", "Union of spectra of all 2^n n-periodic operators via phase-swept symbol curves.");
  pi->add_option("--n", cfg.n, "Period (cap: --cap, default 14)")->required();
  pi->add_option("--phi-samples", cfg.phi_samples, "Phase samples, >= 16 (default 512)");
  pi->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware (default 1)");
  pi->add_option("--cap", cfg.pi_cap, "Refusal threshold for the period (default 14)");
  pi->add_flag("--arcs", cfg.arcs, "Also render the eigenvalue curves as SVG polylines");

  CLI::App* pseudo = app.add_subcommand(
      "pseudo", "Resolvent-norm field (smallest singular value of A - zI) of one section.");
  pseudo->add_option("--n", cfg.n, "Section size")->required();
  pseudo->add_option("--pattern", cfg.pattern, "Subdiagonal sign bits, bit k-1 set = b_k = +1");
  pseudo->add_option("--eps", cfg.eps, "Also write the eps-pseudospectrum mask when > 0");
  pseudo->add_option("--grid-res", cfg.grid_res, "Nodes per axis (default 512)");
  pseudo->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware (default 1)");

  CLI::App* table = app.add_subcommand(
      "table", "Print the sign triangle of the section polynomials' coefficients.");
  table->add_option("--rows", cfg.rows, "Rows to print (default 16, cap 4096)");

  CLI::App* epsn = app.add_subcommand(
      "epsn", "Print n, theta_n, eps_n = 4 sin(theta_n), 2pi/(n+1) as aligned columns.");
  epsn->add_option("--max-n", cfg.max_n, "Last row (default 50)");

  CLI::App* nrange = app.add_subcommand(
      "nrange", "Numerical-range support values of one section; prints theta/support pairs "
                "and writes the support-polygon vertices as CSV.");
  nrange->add_option("--n", cfg.n, "Section size")->required();
  nrange->add_option("--pattern", cfg.pattern, "Subdiagonal sign bits (default 0)");
  nrange->add_option("--angles", cfg.angles, "Support directions, >= 8 (default 64)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the self-check suite; prints 'name pass|fail metric tol witness' lines "
                "and writes verify_report.txt. Exit 1 if any check fails.");
  verify->add_option("--inject-c-sign-error", cfg.inject,
                     "Testing hook: flip sign entry i of the generator sequence");
  verify->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware (default 1)");

  CLI::App* overlay = app.add_subcommand(
      "overlay", "Layered export: section cloud, periodic cloud, unit circle, square |x|+|y|=2.");
  overlay->add_option("--n-sigma", cfg.n_sigma, "Section size for the sigma layer (default 12)");
  overlay->add_option("--n-pi", cfg.n_pi, "Period for the pi layer (default 12)");
  overlay->add_option("--phi-samples", cfg.phi_samples, "Phase samples (default 512)");
  overlay->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware (default 1)");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sigma->parsed()) return run_sigma(cfg);
    if (pi->parsed()) return run_pi(cfg);
    if (pseudo->parsed()) return run_pseudo(cfg);
    if (table->parsed()) return run_table(cfg);
    if (epsn->parsed()) return run_epsn(cfg);
    if (nrange->parsed()) return run_nrange(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (overlay->parsed()) return run_overlay(cfg);
  } catch (const fz::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const fz::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
