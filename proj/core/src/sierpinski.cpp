#include "fzspec/sierpinski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fz::sierpinski {
namespace {

constexpr int kTableRowCap = 4096;
constexpr int kSetLevelCap = 14;  // |S_levels| = 3^(levels-1)

char glyph(int v) { return v > 0 ? '+' : (v < 0 ? '-' : ' '); }

const SierpinskiSequence& shared_sequence() {
  static SierpinskiSequence s;
  return s;
}

}  // namespace

void SierpinskiSequence::extend(std::size_t upto) const {
  if (cache_.empty()) cache_.push_back(1);  // c_1
  for (std::size_t k = cache_.size() + 1; k <= upto; ++k) {
    signed char v;
    if (k % 2 == 0)
      v = static_cast<signed char>(cache_[k - 2] * cache_[k / 2 - 1]);
    else
      v = static_cast<signed char>(-cache_[k - 2]);
    cache_.push_back(v);
  }
}

int SierpinskiSequence::sign(long long i) const {
  if (i <= 0) i = 1 - i;  // reflection: c_{-i} = c_{i+1}
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<std::size_t>(i) > cache_.size()) extend(static_cast<std::size_t>(i));
  int v = cache_[static_cast<std::size_t>(i) - 1];
  if (flipped_ == i) v = -v;
  return v;
}

void SierpinskiSequence::flip_entry(long long i) {
  if (i < 1) throw std::invalid_argument("flip index must be positive");
  std::lock_guard<std::mutex> lock(mu_);
  flipped_ = i;
}

int sierpinski_sign(long long i) { return shared_sequence().sign(i); }

CoefficientTable CoefficientTable::build(int rows) { return build(rows, shared_sequence()); }

CoefficientTable CoefficientTable::build(int rows, const SierpinskiSequence& c) {
  if (rows < 1) throw std::invalid_argument("table needs at least one row");
  if (rows > kTableRowCap)
    throw CapExceeded("table rows capped at " + std::to_string(kTableRowCap));
  CoefficientTable t;
  t.rows_ = rows;
  t.entries_.assign(static_cast<std::size_t>(rows) * (rows + 1) / 2, 0);
  t.c_.resize(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i)
    t.c_[static_cast<std::size_t>(i) - 1] = static_cast<signed char>(c.sign(i));

  t.entries_[0] = 1;  // p_{1,1}
  for (int i = 1; i < rows; ++i) {
    const int ci = t.c_[static_cast<std::size_t>(i) - 1];
    for (int j = 1; j <= i + 1; ++j) {
      int v = t.at(i, j - 1) - ci * t.at(i - 1, j);
      if (v < -1 || v > 1)
        throw std::domain_error("table coefficient escaped {-1,0,1} at row " +
                                std::to_string(i + 1) + ", column " + std::to_string(j) +
                                ": sign sequence is inconsistent");
      t.entries_[t.offset(i + 1) + static_cast<std::size_t>(j) - 1] =
          static_cast<signed char>(v);
    }
  }
  return t;
}

int CoefficientTable::at(int i, int j) const {
  if (i < 1 || j < 1 || j > i || i > rows_) return 0;
  return entries_[offset(i) + static_cast<std::size_t>(j) - 1];
}

IntPolynomial CoefficientTable::row_polynomial(int i) const {
  if (i < 1 || i > rows_) throw std::out_of_range("row index outside table");
  IntPolynomial p;
  p.coeffs.resize(static_cast<std::size_t>(i));
  for (int j = 1; j <= i; ++j) p.coeffs[static_cast<std::size_t>(j) - 1] = at(i, j);
  return p;
}

std::size_t CoefficientTable::nonzero_count() const {
  std::size_t n = 0;
  for (signed char v : entries_)
    if (v != 0) ++n;
  return n;
}

std::vector<std::string> CoefficientTable::render_rows() const {
  const std::size_t width = std::to_string(rows_).size();
  std::vector<std::string> lines;
  lines.reserve(static_cast<std::size_t>(rows_));
  for (int i = 1; i <= rows_; ++i) {
    std::string idx = std::to_string(i);
    std::string line(width - idx.size(), ' ');
    line += idx;
    line += ' ';
    line += glyph(generator_sign(i));
    line += ' ';
    for (int j = 1; j <= i; ++j) line += glyph(at(i, j));
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string CoefficientTable::render_text() const {
  std::string out;
  for (const std::string& line : render_rows()) {
    out += line;
    out += '\n';
  }
  return out;
}

ForcedSignReport forced_sign_consistency(const CoefficientTable& t) {
  ForcedSignReport report;
  for (int i = 2; i <= t.rows(); ++i) {
    for (int j = 2; j < i; ++j) {
      int left = t.at(i, j - 1);
      int up = t.at(i - 1, j);
      if (left == 0 || up == 0) continue;
      ForcedSignCheck check{i, j, left * up, t.generator_sign(i)};
      report.checks.push_back(check);
      if (check.product != check.expected) report.violations.push_back(check);
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::vector<Complex> eigenvector(Complex lambda, int m) {
  return eigenvector(lambda, m, shared_sequence());
}

std::vector<Complex> eigenvector(Complex lambda, int m, const SierpinskiSequence& c) {
  if (m < 1) throw std::invalid_argument("window radius must be positive");
  std::vector<Complex> u(static_cast<std::size_t>(2 * m + 1));
  auto idx = [m](long long i) { return static_cast<std::size_t>(i + m); };
  u[idx(0)] = Complex(0.0, 0.0);
  u[idx(1)] = Complex(1.0, 0.0);
  for (long long i = 1; i < m; ++i)
    u[idx(i + 1)] = lambda * u[idx(i)] - static_cast<double>(c.sign(i)) * u[idx(i - 1)];
  for (long long i = 0; i > -m; --i)
    u[idx(i - 1)] = (lambda * u[idx(i)] - u[idx(i + 1)]) * static_cast<double>(c.sign(i));
  return u;
}

double residual_sup(Complex lambda, const std::vector<Complex>& u) {
  return residual_sup(lambda, u, shared_sequence());
}

double residual_sup(Complex lambda, const std::vector<Complex>& u, const SierpinskiSequence& c) {
  if (u.size() < 3 || u.size() % 2 == 0)
    throw std::invalid_argument("window must cover -m..m with m >= 1");
  const long long m = static_cast<long long>(u.size() / 2);
  auto idx = [m](long long i) { return static_cast<std::size_t>(i + m); };
  double sup = 0.0;
  for (long long i = -m + 1; i <= m - 1; ++i) {
    Complex r = u[idx(i + 1)] - lambda * u[idx(i)] + static_cast<double>(c.sign(i)) * u[idx(i - 1)];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

int mirror_sign(long long i) { return mirror_sign(i, shared_sequence()); }

int mirror_sign(long long i, const SierpinskiSequence& c) {
  if (i < 0) throw std::invalid_argument("mirror signs are indexed by nonnegative integers");
  if (i == 0) return 1;
  if (i % 2 == 0) {
    long long j = i / 2;
    return (j % 2 ? -1 : 1) * c.sign(i);
  }
  long long j = (i - 1) / 2;
  return j % 2 ? 1 : -1;
}

MirrorReport mirror_check(Complex lambda, int m, double tol) {
  return mirror_check(lambda, m, tol, shared_sequence());
}

MirrorReport mirror_check(Complex lambda, int m, double tol, const SierpinskiSequence& c) {
  std::vector<Complex> u = eigenvector(lambda, m, c);
  auto idx = [m](long long i) { return static_cast<std::size_t>(i + m); };
  MirrorReport report;
  report.tol = tol;
  for (long long i = 0; i <= m; ++i) {
    double diff = std::abs(u[idx(-i)] - static_cast<double>(mirror_sign(i, c)) * u[idx(i)]);
    double rel = diff / (1.0 + std::abs(u[idx(i)]));
    if (rel > report.worst) {
      report.worst = rel;
      report.worst_index = i;
    }
  }
  report.pass = report.worst <= tol;
  return report;
}

std::vector<IndexPair> sierpinski_set(int levels) {
  if (levels < 1) throw std::invalid_argument("levels must be positive");
  if (levels > kSetLevelCap)
    throw CapExceeded("set levels capped at " + std::to_string(kSetLevelCap) +
                      " (size grows as 3^(levels-1))");
  std::vector<IndexPair> cur{{1, 1}};
  for (int step = 2; step <= levels; ++step) {
    std::vector<IndexPair> next;
    next.reserve(cur.size() * 3);
    for (const IndexPair& p : cur) {
      next.emplace_back(2 * p.first, 2 * p.second);
      next.emplace_back(2 * p.first - 1, 2 * p.second - 1);
      next.emplace_back(2 * p.first + 1, 2 * p.second - 1);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::vector<IndexPair> nonzero_set(const CoefficientTable& t) {
  std::vector<IndexPair> out;
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= i; ++j)
      if (t.at(i, j) != 0) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

PascalReport pascal_parity_correspondence(int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  CoefficientTable t = CoefficientTable::build(2 * N);
  PascalReport report;
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= i; ++j) {
      bool odd_binomial = ((j - 1) & (i - j)) == 0;
      bool in_table = t.at(2 * i - j, j) != 0;
      ++report.checked;
      if (odd_binomial != in_table) report.mismatches.emplace_back(i, j);
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

}  // namespace fz::sierpinski
