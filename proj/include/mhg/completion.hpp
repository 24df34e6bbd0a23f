#ifndef MHG_COMPLETION_HPP
#define MHG_COMPLETION_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "mhg/cycle.hpp"
#include "mhg/graph.hpp"
#include "mhg/magic.hpp"

namespace mhg {

struct CompletionStage {
  int index = 0;     // 1-based stage number i, filling distance d_i
  int distance = 0;  // d_i
  std::vector<std::pair<int, int>> pairs;
};

struct CompletionTrace {
  std::vector<CompletionStage> stages;  // only stages that filled something
  std::vector<std::pair<int, int>> fallback_pairs;

  bool fallback_fired() const { return !fallback_pairs.empty(); }
};

struct CompletionResult {
  EdgeLabelledGraph graph;
  CompletionTrace trace;
};

/// Runs the stages in magic-permutation order. A stage only looks at forks
/// through edges that existed before the stage started. Pairs still open after
/// the last stage get M and are recorded as fallback pairs.
inline CompletionResult magic_complete(const MagicContext& ctx, const EdgeLabelledGraph& g) {
  if (g.max_label() > ctx.delta()) throw std::out_of_range("graph label exceeds delta");
  const int n = g.size();
  CompletionResult result{g, {}};
  EdgeLabelledGraph& cur = result.graph;
  const auto& perm = ctx.permutation();

  std::vector<std::pair<int, int>> fill;
  for (std::size_t stage = 0; stage < perm.size(); ++stage) {
    const int target = perm[stage];
    fill.clear();
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (cur.has_edge(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          const int a = cur.label(x, z), b = cur.label(y, z);
          if (a != 0 && b != 0 && ctx.oplus_unchecked(a, b) == target) {
            fill.emplace_back(x, y);
            break;
          }
        }
      }
    }
    if (fill.empty()) continue;
    for (auto [x, y] : fill) cur.set_label(x, y, target);
    result.trace.stages.push_back({static_cast<int>(stage) + 1, target, fill});
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!cur.has_edge(x, y)) {
        cur.set_label(x, y, ctx.m());
        result.trace.fallback_pairs.emplace_back(x, y);
      }
  return result;
}

/// True iff some pair of neighbouring edges has oplus different from M.
inline bool has_tension(const MagicContext& ctx, const LabelledCycle& c) {
  const std::size_t k = c.size();
  for (std::size_t j = 0; j < k; ++j)
    if (ctx.oplus(c[j], c.at_cyclic(j + 1)) != ctx.m()) return true;
  return false;
}

/// Smallest time over all neighbouring pairs of the cycle.
inline int first_stage_time(const MagicContext& ctx, const std::vector<int>& labels) {
  const std::size_t k = labels.size();
  int best = kInfiniteTime;
  for (std::size_t j = 0; j < k; ++j) {
    const int v = ctx.oplus(labels[j], labels[(j + 1) % k]);
    best = std::min(best, ctx.time_unchecked(v));
  }
  return best;
}

/// Replaces positions j and j+1 (cyclically) by a single label.
inline std::vector<int> contract_pair(const std::vector<int>& labels, std::size_t j, int value) {
  const std::size_t k = labels.size();
  std::vector<int> out;
  out.reserve(k - 1);
  if (j + 1 < k) {
    out.insert(out.end(), labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(value);
    out.insert(out.end(), labels.begin() + static_cast<std::ptrdiff_t>(j + 2), labels.end());
  } else {
    // pair (c_k, c_1)
    out.push_back(value);
    out.insert(out.end(), labels.begin() + 1, labels.end() - 1);
  }
  return out;
}

/// Calls f(j, value, contracted) for every step: j is the position of the
/// closed fork (c_j, c_{j+1}), value the label it receives. Triangles have no
/// steps.
template <typename F>
void for_each_step(const MagicContext& ctx, const LabelledCycle& c, F&& f) {
  if (c.size() <= 3) return;
  const auto& labels = c.labels();
  const int best = first_stage_time(ctx, labels);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const int v = ctx.oplus(labels[j], c.at_cyclic(j + 1));
    if (ctx.time_unchecked(v) == best) f(j, v, contract_pair(labels, j, v));
  }
}

/// All cycles one step of the completion can produce, canonical, sorted and
/// deduplicated.
inline std::vector<LabelledCycle> steps(const MagicContext& ctx, const LabelledCycle& c) {
  std::set<LabelledCycle, CycleOrder> out;
  for_each_step(ctx, c, [&](std::size_t, int, const std::vector<int>& next) {
    out.insert(LabelledCycle(next).canonical());
  });
  return {out.begin(), out.end()};
}

/// Calls f(j, q, r, expanded) for every inverse step that replaces edge c_j by
/// the fork (q, r) with q oplus r = c_j, such that this fork is first-stage in
/// the expanded cycle. Expanded cycles longer than max_edges are skipped.
template <typename F>
void for_each_inverse_step(const MagicContext& ctx, const LabelledCycle& c, int max_edges, F&& f) {
  const std::size_t k = c.size();
  if (static_cast<int>(k) + 1 > max_edges) return;
  const int d = ctx.delta();
  const auto& labels = c.labels();
  std::vector<int> expanded;
  for (std::size_t j = 0; j < k; ++j) {
    const int p = labels[j];
    for (int q = 1; q <= d; ++q) {
      for (int r = 1; r <= d; ++r) {
        if (ctx.oplus_unchecked(q, r) != p) continue;
        expanded.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(j));
        expanded.push_back(q);
        expanded.push_back(r);
        expanded.insert(expanded.end(), labels.begin() + static_cast<std::ptrdiff_t>(j + 1),
                        labels.end());
        if (ctx.time_unchecked(p) == first_stage_time(ctx, expanded)) f(j, q, r, expanded);
      }
    }
  }
}

inline std::vector<LabelledCycle> inverse_steps(const MagicContext& ctx, const LabelledCycle& c,
                                                int max_edges) {
  std::set<LabelledCycle, CycleOrder> out;
  for_each_inverse_step(ctx, c, max_edges,
                        [&](std::size_t, int, int, const std::vector<int>& expanded) {
                          out.insert(LabelledCycle(expanded).canonical());
                        });
  return {out.begin(), out.end()};
}

}  // namespace mhg

#endif  // MHG_COMPLETION_HPP
