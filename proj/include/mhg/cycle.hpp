#ifndef MHG_CYCLE_HPP
#define MHG_CYCLE_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhg {

/// Lexicographically least sequence among all rotations of `labels` and of
/// its reversal.
inline std::vector<int> canonical_cycle(const std::vector<int>& labels) {
  const std::size_t k = labels.size();
  std::vector<int> best = labels;
  std::vector<int> cand(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        cand[i] = dir == 0 ? labels[(s + i) % k] : labels[(s + k - i) % k];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

/// A cyclic sequence of edge labels (c_1, ..., c_k); c_k is adjacent to c_1.
/// Stored as given; equality compares canonical forms.
class LabelledCycle {
 public:
  LabelledCycle() = default;
  explicit LabelledCycle(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 3) throw std::invalid_argument("a cycle needs at least 3 edges");
  }
  LabelledCycle(std::initializer_list<int> labels) : LabelledCycle(std::vector<int>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  /// Cyclic indexing.
  int at_cyclic(std::size_t i) const { return labels_[i % labels_.size()]; }
  const std::vector<int>& labels() const { return labels_; }

  int perimeter() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }
  int max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

  LabelledCycle canonical() const {
    LabelledCycle c;
    c.labels_ = canonical_cycle(labels_);
    return c;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << labels_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const LabelledCycle& a, const LabelledCycle& b) {
    return a.size() == b.size() && canonical_cycle(a.labels_) == canonical_cycle(b.labels_);
  }

 private:
  std::vector<int> labels_;
};

/// Shorter cycles first, then lexicographic. Apply to canonical forms.
struct CycleOrder {
  bool operator()(const LabelledCycle& a, const LabelledCycle& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.labels() < b.labels();
  }
};

}  // namespace mhg

#endif  // MHG_CYCLE_HPP
