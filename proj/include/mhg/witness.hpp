#ifndef MHG_WITNESS_HPP
#define MHG_WITNESS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mhg/families.hpp"
#include "mhg/graph.hpp"

namespace mhg {

/// Dense numbering of all label multisets over 1..delta with at most
/// `max_size` elements, with the "add one label" transition precomputed.
class MultisetIndex {
 public:
  MultisetIndex(int delta, int max_size) : delta_(delta), max_size_(max_size) {
    std::map<std::vector<std::uint8_t>, int> rank;
    std::vector<std::uint8_t> counts(static_cast<std::size_t>(delta), 0);
    const auto rec = [&](auto&& self, int label, int size) -> void {
      if (label == delta) {
        rank.emplace(counts, 0);
        return;
      }
      for (int c = 0; size + c <= max_size; ++c) {
        counts[static_cast<std::size_t>(label)] = static_cast<std::uint8_t>(c);
        self(self, label + 1, size + c);
      }
      counts[static_cast<std::size_t>(label)] = 0;
    };
    rec(rec, 0, 0);

    int next_rank = 0;
    for (auto& [key, r] : rank) {
      r = next_rank++;
      counts_.push_back(key);
    }
    const auto n = counts_.size();
    next_.assign(n * static_cast<std::size_t>(delta), -1);
    size_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      int sz = 0;
      for (auto c : counts_[r]) sz += c;
      size_[r] = sz;
      if (sz == max_size) continue;
      for (int l = 0; l < delta; ++l) {
        auto key = counts_[r];
        ++key[static_cast<std::size_t>(l)];
        next_[r * static_cast<std::size_t>(delta) + static_cast<std::size_t>(l)] = rank.at(key);
      }
    }
    empty_ = rank.at(std::vector<std::uint8_t>(static_cast<std::size_t>(delta), 0));
  }

  int delta() const { return delta_; }
  int max_size() const { return max_size_; }
  std::size_t count() const { return counts_.size(); }
  int empty_rank() const { return empty_; }
  int size_of(int r) const { return size_[static_cast<std::size_t>(r)]; }
  /// Rank after adding `label` (1-based); -1 when the size would exceed max_size.
  int next(int r, int label) const {
    return next_[static_cast<std::size_t>(r) * static_cast<std::size_t>(delta_) +
                 static_cast<std::size_t>(label - 1)];
  }
  std::vector<int> labels(int r) const {
    std::vector<int> out;
    const auto& c = counts_[static_cast<std::size_t>(r)];
    for (int l = delta_; l >= 1; --l) out.insert(out.end(), c[static_cast<std::size_t>(l - 1)], l);
    return out;
  }

 private:
  int delta_;
  int max_size_;
  int empty_ = 0;
  std::vector<std::vector<std::uint8_t>> counts_;
  std::vector<int> next_;
  std::vector<int> size_;
};

/// A closed walk of g whose label sequence lies in F.
struct ForbiddenWitness {
  std::vector<int> walk;  // v_0 .. v_{L-1}; the walk returns to v_0
  LabelledCycle cycle;    // labels along the walk, starting with (v_0, v_1)
  FamilyWitness witness;
};

/// Searches graphs for homomorphic images of members of F, i.e. closed walks
/// of length at most B(p) whose label multiset is in F. The tables are shared
/// and immutable; the scratch buffers are per instance, so use one instance
/// per thread.
class WitnessSearch {
 public:
  struct Tables {
    ParameterSequence params;
    int bound;
    MultisetIndex index;
    std::vector<std::uint8_t> forbidden;  // by multiset rank

    explicit Tables(const ParameterSequence& p)
        : params(p), bound(length_bound(p)), index(p.delta(), bound) {
      p.require_admissible();
      forbidden.assign(index.count(), 0);
      for (std::size_t r = 0; r < index.count(); ++r) {
        const int rank = static_cast<int>(r);
        if (index.size_of(rank) >= 3 && in_F(p, index.labels(rank))) forbidden[r] = 1;
      }
    }
  };

  explicit WitnessSearch(const ParameterSequence& p)
      : tables_(std::make_shared<const Tables>(p)) {}
  explicit WitnessSearch(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

  const std::shared_ptr<const Tables>& tables() const { return tables_; }
  int bound() const { return tables_->bound; }

  /// First witness ordered by walk length, then lexicographically by vertex
  /// sequence.
  std::optional<ForbiddenWitness> find(const EdgeLabelledGraph& g) {
    const auto& t = *tables_;
    if (g.max_label() > t.params.delta()) throw std::out_of_range("graph label exceeds delta");
    const int n = g.size();
    const auto ranks = static_cast<int>(t.index.count());
    const auto states = static_cast<std::size_t>(n) * static_cast<std::size_t>(ranks);
    if (stamp_.size() < states) {
      stamp_.assign(states, 0);
      parent_.assign(states, -1);
    }

    int best_len = t.bound + 1;
    std::vector<int> best_walk;
    for (int s = 0; s < n; ++s) {
      if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
      }
      const int root = s * ranks + t.index.empty_rank();
      stamp_[static_cast<std::size_t>(root)] = epoch_;
      parent_[static_cast<std::size_t>(root)] = -1;
      layer_.assign(1, root);
      // Equal length loses to an earlier start, so only strictly shorter walks matter.
      for (int len = 1; len < best_len && !layer_.empty(); ++len) {
        next_layer_.clear();
        bool found = false;
        for (int st : layer_) {
          const int v = st / ranks, r = st % ranks;
          for (int w = s; w < n; ++w) {
            const int l = g.label(v, w);
            if (l == 0) continue;
            const int nr = t.index.next(r, l);
            if (nr < 0) continue;
            const int ns = w * ranks + nr;
            auto& mark = stamp_[static_cast<std::size_t>(ns)];
            if (mark == epoch_) continue;
            mark = epoch_;
            parent_[static_cast<std::size_t>(ns)] = st;
            next_layer_.push_back(ns);
            if (w == s && len >= 3 && t.forbidden[static_cast<std::size_t>(nr)]) {
              best_len = len;
              best_walk = trace_back(st, ranks);
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
        layer_.swap(next_layer_);
      }
    }
    if (best_walk.empty()) return std::nullopt;

    const auto& walk = best_walk;
    std::vector<int> labels;
    for (std::size_t i = 0; i < walk.size(); ++i)
      labels.push_back(g.label(walk[i], walk[(i + 1) % walk.size()]));
    ForbiddenWitness out{walk, LabelledCycle(labels), {}};
    const auto tags = detail::forbidden_tags(t.params);
    for (auto& w : classify_cycle(t.params, out.cycle)) {
      if (std::find(tags.begin(), tags.end(), w.tag) != tags.end()) {
        out.witness = std::move(w);
        break;
      }
    }
    return out;
  }

  bool has_witness(const EdgeLabelledGraph& g) { return find(g).has_value(); }

 private:
  /// Vertices v_0 .. v_{L-1} of the path ending in state `last`.
  std::vector<int> trace_back(int last, int ranks) const {
    std::vector<int> walk;
    for (int st = last; st >= 0; st = parent_[static_cast<std::size_t>(st)]) walk.push_back(st / ranks);
    std::reverse(walk.begin(), walk.end());
    return walk;
  }

  std::shared_ptr<const Tables> tables_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> parent_;
  std::vector<int> layer_;
  std::vector<int> next_layer_;
};

inline std::optional<ForbiddenWitness> find_forbidden_witness(const ParameterSequence& p,
                                                              const EdgeLabelledGraph& g) {
  WitnessSearch search(p);
  return search.find(g);
}

}  // namespace mhg

#endif  // MHG_WITNESS_HPP
