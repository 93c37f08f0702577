#include <doctest.h>

#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fzspec/sierpinski.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + FZSPEC_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string temp_dir() {
  char pattern[] = "/tmp/fzspec_cli_XXXXXX";
  char* dir = mkdtemp(pattern);
  REQUIRE(dir != nullptr);
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool exists(const std::string& path) {
  struct stat st{};
  return stat(path.c_str(), &st) == 0 && st.st_size > 0;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("table subcommand prints the rendered rows") {
  CliResult r = run_cli("table --rows 16");
  CHECK(r.status == 0);
  CHECK(r.output == fz::sierpinski::CoefficientTable::build(16).render_text());
}

TEST_CASE("sigma sweep CSV is byte-identical across worker counts") {
  std::string d1 = temp_dir(), d2 = temp_dir();
  CliResult r1 = run_cli("sigma --n 10 --workers 1 --out-dir " + d1);
  CliResult r2 = run_cli("sigma --n 10 --workers 4 --out-dir " + d2);
  CHECK(r1.status == 0);
  CHECK(r2.status == 0);
  CHECK(r1.output.find("sigma_10.csv") != std::string::npos);
  std::string csv1 = slurp(d1 + "/sigma_10.csv");
  CHECK(csv1 == slurp(d2 + "/sigma_10.csv"));
  CHECK(csv1.rfind("re,im,label\n", 0) == 0);
}

TEST_CASE("zoomed sigma sweep writes the window file") {
  std::string dir = temp_dir();
  CliResult r = run_cli("sigma --n 5 --zoom 1+1i --window 0.3 --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(exists(dir + "/sigma_5_zoom.csv"));
}

TEST_CASE("pi sweep writes points and optional arcs") {
  std::string dir = temp_dir();
  CliResult r = run_cli("pi --n 3 --phi-samples 32 --arcs --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(exists(dir + "/pi_3.csv"));
  CHECK(exists(dir + "/pi_3_arcs.svg"));
  CHECK(slurp(dir + "/pi_3_arcs.svg").find("<svg") != std::string::npos);
}

TEST_CASE("pseudo subcommand writes field, image and mask") {
  std::string dir = temp_dir();
  CliResult r = run_cli("pseudo --n 4 --pattern 3 --eps 0.5 --grid-res 16 --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(exists(dir + "/pseudo_4_b3.csv"));
  CHECK(slurp(dir + "/pseudo_4_b3.pgm").rfind("P5\n16 16\n255\n", 0) == 0);
  CHECK(exists(dir + "/pseudo_4_b3_mask.pgm"));
}

TEST_CASE("nrange prints support lines and writes vertices") {
  std::string dir = temp_dir();
  CliResult r = run_cli("nrange --n 4 --pattern 5 --angles 16 --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(count_occurrences(r.output, "\n") >= 16);
  CHECK(exists(dir + "/nrange_4_b5.csv"));
}

TEST_CASE("epsn prints header plus one row per n") {
  CliResult r = run_cli("epsn --max-n 5");
  CHECK(r.status == 0);
  CHECK(count_occurrences(r.output, "\n") == 6);
  CHECK(r.output.find("theta_n") != std::string::npos);
}

TEST_CASE("overlay writes the five layer files") {
  std::string dir = temp_dir();
  CliResult r = run_cli("overlay --n-sigma 6 --n-pi 6 --phi-samples 32 --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(count_occurrences(r.output, "wrote ") == 5);
}

TEST_CASE("verify reports pass lines and exits zero") {
  std::string dir = temp_dir();
  CliResult r = run_cli("verify --out-dir " + dir);
  CHECK(r.status == 0);
  CHECK(count_occurrences(r.output, " pass ") == 13);
  CHECK(count_occurrences(r.output, " fail ") == 0);
  CHECK(exists(dir + "/verify_report.txt"));
}

TEST_CASE("verify with an injected sign flip exits one and localizes it") {
  std::string dir = temp_dir();
  CliResult r = run_cli("verify --inject-c-sign-error 5 --out-dir " + dir);
  CHECK(r.status == 1);
  CHECK(r.output.find(" fail ") != std::string::npos);
  CHECK(r.output.find("row 6, column 4") != std::string::npos);
}

TEST_CASE("unwritable output directory exits three") {
  CliResult r = run_cli("verify --out-dir /nonexistent_fzspec_dir/xyz");
  CHECK(r.status == 3);
  CHECK(r.output.find("io error") != std::string::npos);
}

TEST_CASE("refused sweeps exit two") {
  CliResult r = run_cli("sigma --n 25");
  CHECK(r.status == 2);
  CHECK(r.output.find("refused") != std::string::npos);
}

TEST_CASE("usage errors exit two") {
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("sigma").status == 2);
  CHECK(run_cli("pi --n 3 --phi-samples 4").status == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("sigma --help").status == 0);
}

TEST_CASE("the environment variable sets the output directory") {
  std::string dir = temp_dir();
  CliResult r = run_cli("sigma --n 4", "FZSPEC_OUT_DIR=" + dir + " ");
  CHECK(r.status == 0);
  CHECK(exists(dir + "/sigma_4.csv"));
}
