#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fz {

// A finite or periodic map from integer indices to signs in {-1,+1}.
// Carrier for hopping-sign sequences: finite pattern windows and the
// n-periodic sequences swept by the periodic-spectrum module.
class SignSequence {
 public:
  // Periodic sequence with entry(k) = signs[(k-1) mod n] for every integer k
  // (1-based convention: entry(1) is the first stored sign).
  static SignSequence periodic(std::vector<int> signs);

  // Finite window starting at index `first`; entries outside the window are
  // absent and reading them throws.
  static SignSequence window(long long first, std::vector<int> signs);

  int entry(long long k) const;
  bool has_entry(long long k) const;
  std::optional<int> period() const { return period_; }

 private:
  SignSequence() = default;
  static void check_sign(int v);

  std::map<long long, int> entries_;
  std::optional<int> period_;
  std::vector<int> periodic_signs_;
};

inline void SignSequence::check_sign(int v) {
  if (v != 1 && v != -1) throw std::invalid_argument("sign values must be -1 or +1");
}

inline SignSequence SignSequence::periodic(std::vector<int> signs) {
  if (signs.empty()) throw std::invalid_argument("periodic sign sequence needs at least one entry");
  for (int v : signs) check_sign(v);
  SignSequence s;
  s.period_ = static_cast<int>(signs.size());
  s.periodic_signs_ = std::move(signs);
  return s;
}

inline SignSequence SignSequence::window(long long first, std::vector<int> signs) {
  SignSequence s;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    check_sign(signs[i]);
    s.entries_[first + static_cast<long long>(i)] = signs[i];
  }
  return s;
}

inline int SignSequence::entry(long long k) const {
  if (period_) {
    const long long n = *period_;
    long long r = (k - 1) % n;
    if (r < 0) r += n;
    return periodic_signs_[static_cast<std::size_t>(r)];
  }
  auto it = entries_.find(k);
  if (it == entries_.end()) throw std::out_of_range("sign sequence has no entry at this index");
  return it->second;
}

inline bool SignSequence::has_entry(long long k) const {
  if (period_) return true;
  return entries_.count(k) != 0;
}

}  // namespace fz
