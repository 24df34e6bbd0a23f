#ifndef MHG_MAGIC_HPP
#define MHG_MAGIC_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/params.hpp"

namespace mhg {

/// Which branch of the oplus rule closed a fork.
enum class ForkKind { Plus, Minus, CFork, Magic };

inline std::string_view to_string(ForkKind k) {
  switch (k) {
    case ForkKind::Plus: return "plus";
    case ForkKind::Minus: return "minus";
    case ForkKind::CFork: return "C";
    case ForkKind::Magic: return "magic";
  }
  return "?";
}

/// Sentinel for t(M).
inline constexpr int kInfiniteTime = std::numeric_limits<int>::max();

/// Every M in [max(K1, ceil(delta/2)), min(K2, floor((C-delta-1)/2))] that also
/// passes the two Case III side conditions.
inline std::vector<int> magic_distances(const ParameterSequence& p) {
  p.require_admissible();
  const int d = p.delta();
  const int lo = std::max(p.k1(), (d + 1) / 2);
  const int hi = std::min(p.k2(), (p.c() - d - 1) / 2);
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) {
    if (p.case_iii() && p.k1() + 2 * p.k2() == 2 * d - 1 && !(m > p.k1())) continue;
    if (p.case_iii() && p.c_prime() > p.c() + 1 && p.c() == 2 * d + p.k2() && !(m < p.k2()))
      continue;
    out.push_back(m);
  }
  return out;
}

inline int time_value(int delta, int m, int x) {
  if (x < m) return 2 * x + 1;
  if (x > m) return 2 * (delta - x);
  return kInfiniteTime;
}

/// Distances ordered by ascending time; the last entry is always `m`.
inline std::vector<int> magic_permutation(int delta, int m) {
  std::vector<int> perm(static_cast<std::size_t>(delta));
  for (int x = 1; x <= delta; ++x) perm[static_cast<std::size_t>(x - 1)] = x;
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return time_value(delta, m, a) < time_value(delta, m, b);
  });
  return perm;
}

inline std::vector<int> magic_permutation(const ParameterSequence& p, int m) {
  return magic_permutation(p.delta(), m);
}

/// Admissible parameters with a fixed magic distance and the precomputed
/// oplus table. Immutable after construction.
class MagicContext {
 public:
  explicit MagicContext(const ParameterSequence& p) : MagicContext(p, std::nullopt) {}

  MagicContext(const ParameterSequence& p, std::optional<int> m) : params_(p) {
    const auto candidates = magic_distances(p);
    if (candidates.empty()) {
      throw std::logic_error("no magic distance for " + p.to_string());
    }
    m_ = m.value_or(candidates.front());
    if (std::find(candidates.begin(), candidates.end(), m_) == candidates.end()) {
      throw std::invalid_argument(std::to_string(m_) + " is not a magic distance for " +
                                  p.to_string());
    }
    const int d = p.delta();
    const auto n = static_cast<std::size_t>(d + 1);
    table_.assign(n * n, 0);
    kinds_.assign(n * n, ForkKind::Magic);
    for (int x = 1; x <= d; ++x) {
      for (int y = 1; y <= d; ++y) {
        const auto [value, kind] = evaluate(x, y);
        table_[index(x, y)] = static_cast<std::uint8_t>(value);
        kinds_[index(x, y)] = kind;
      }
    }
    time_.assign(n, 0);
    for (int x = 1; x <= d; ++x) time_[static_cast<std::size_t>(x)] = time_value(d, m_, x);
    permutation_ = magic_permutation(d, m_);
    stage_of_.assign(n, 0);
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
      stage_of_[static_cast<std::size_t>(permutation_[i])] = static_cast<int>(i);
    }
  }

  const ParameterSequence& params() const { return params_; }
  int delta() const { return params_.delta(); }
  int m() const { return m_; }

  int oplus(int x, int y) const {
    check_label(x);
    check_label(y);
    return table_[index(x, y)];
  }
  /// Unchecked variant for inner loops over known-valid labels.
  int oplus_unchecked(int x, int y) const { return table_[index(x, y)]; }

  ForkKind fork_kind(int x, int y) const {
    check_label(x);
    check_label(y);
    return kinds_[index(x, y)];
  }

  int time(int x) const {
    check_label(x);
    return time_[static_cast<std::size_t>(x)];
  }
  int time_unchecked(int x) const { return time_[static_cast<std::size_t>(x)]; }

  /// d_1 .. d_delta.
  const std::vector<int>& permutation() const { return permutation_; }
  /// Zero-based position of distance x in the permutation.
  int stage_of(int x) const { return stage_of_[static_cast<std::size_t>(x)]; }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(delta() + 1) +
           static_cast<std::size_t>(y);
  }

  void check_label(int x) const {
    if (x < 1 || x > delta()) {
      throw std::out_of_range("label " + std::to_string(x) + " outside 1.." +
                              std::to_string(delta()));
    }
  }

  std::pair<int, ForkKind> evaluate(int x, int y) const {
    const int diff = std::abs(x - y);
    if (diff > m_) return {diff, ForkKind::Minus};
    const int plus = x + y;
    const int cfork = params_.c() - 1 - x - y;
    // Ties between the two sums report Plus.
    if (plus <= cfork) {
      if (plus < m_) return {plus, ForkKind::Plus};
    } else if (cfork < m_) {
      return {cfork, ForkKind::CFork};
    }
    return {m_, ForkKind::Magic};
  }

  ParameterSequence params_;
  int m_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<ForkKind> kinds_;
  std::vector<int> time_;
  std::vector<int> permutation_;
  std::vector<int> stage_of_;
};

}  // namespace mhg

#endif  // MHG_MAGIC_HPP
