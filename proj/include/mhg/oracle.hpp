#ifndef MHG_ORACLE_HPP
#define MHG_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mhg/completion.hpp"
#include "mhg/graph.hpp"
#include "mhg/magic.hpp"
#include "mhg/witness.hpp"

namespace mhg {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct BruteForceResult {
  bool completable = false;
  std::optional<EdgeLabelledGraph> completion;
};

/// Exhaustive search for a completion in A. Partial assignments are cut as
/// soon as a fully labelled triangle is forbidden; such a triangle stays
/// forbidden under every extension, so nothing valid is skipped.
class BruteForceOracle {
 public:
  BruteForceOracle(const ParameterSequence& p, std::uint64_t budget = kDefaultBudget)
      : delta_(p.delta()), table_(p), budget_(budget) {
    if (budget == 0) throw std::invalid_argument("budget must be positive");
  }

  /// Throws BudgetExceeded when delta^(non-edges) is above the budget.
  BruteForceResult run(const EdgeLabelledGraph& g, bool want_completion = true) {
    if (g.max_label() > delta_) throw std::out_of_range("graph label exceeds delta");
    const int n = g.size();
    open_.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) open_.emplace_back(u, v);
    check_budget(open_.size());

    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        for (int w = v + 1; w < n; ++w)
          if (g.has_edge(u, w) && g.has_edge(v, w) &&
              !table_.allowed(g.label(u, v), g.label(u, w), g.label(v, w)))
            return {};
      }

    work_ = g;
    if (!assign(0)) return {};
    BruteForceResult out{true, std::nullopt};
    if (want_completion) out.completion = work_;
    return out;
  }

 private:
  void check_budget(std::size_t open) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < open; ++i) {
      if (total > budget_ / static_cast<std::uint64_t>(delta_)) {
        throw BudgetExceeded("brute force needs " + std::to_string(delta_) + "^" +
                             std::to_string(open) + " assignments, above budget " +
                             std::to_string(budget_));
      }
      total *= static_cast<std::uint64_t>(delta_);
    }
  }

  bool assign(std::size_t i) {
    if (i == open_.size()) return true;
    const auto [u, v] = open_[i];
    const int n = work_.size();
    for (int l = 1; l <= delta_; ++l) {
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        const int a = work_.label(u, w), b = work_.label(v, w);
        if (a != 0 && b != 0 && !table_.allowed(l, a, b)) ok = false;
      }
      if (!ok) continue;
      work_.set_label(u, v, l);
      if (assign(i + 1)) return true;
      work_.clear_label(u, v);
    }
    return false;
  }

  int delta_;
  TriangleTable table_;
  std::uint64_t budget_;
  std::vector<std::pair<int, int>> open_;
  EdgeLabelledGraph work_;
};

inline BruteForceResult has_completion_bruteforce(const ParameterSequence& p,
                                                  const EdgeLabelledGraph& g,
                                                  std::uint64_t budget = kDefaultBudget) {
  BruteForceOracle oracle(p, budget);
  return oracle.run(g);
}

// ---------------------------------------------------------------------------
// Equivalence sweep

/// Vertex pairs (0,1), (0,2), ..., (n-2,n-1): the digit order of graph codes.
inline std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

/// Graph on n vertices whose pair labels are the base-(delta+1) digits of
/// `code`, least significant digit first; digit 0 is a non-edge.
inline EdgeLabelledGraph decode_graph(int n, int delta, std::uint64_t code) {
  EdgeLabelledGraph g(n);
  const auto base = static_cast<std::uint64_t>(delta + 1);
  for (const auto& [u, v] : pair_order(n)) {
    const auto digit = static_cast<int>(code % base);
    code /= base;
    if (digit != 0) g.set_label(u, v, digit);
  }
  return g;
}

/// Accepts exactly one labelling per isomorphism class: the one whose label
/// vector (in pair order) is lexicographically least.
class IsoFilter {
 public:
  explicit IsoFilter(int n) : pairs_(pair_order(n)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) perms_.push_back(perm);
  }

  bool is_representative(const EdgeLabelledGraph& g) const {
    for (const auto& perm : perms_) {
      for (const auto& [u, v] : pairs_) {
        const int a = g.label(u, v);
        const int b = g.label(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (b < a) return false;
        if (b > a) break;
      }
    }
    return true;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> perms_;
};

struct GraphRecord {
  EdgeLabelledGraph graph;
  bool completable = false;
  bool witness = false;
  bool magic_member = false;
  bool fallback = false;
};

struct EquivalenceReport {
  RawParams params;
  int magic = 0;
  int n_max = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  bool iso_reduced = false;
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t completable = 0;
  /// completable differs from "no forbidden witness"
  std::vector<GraphRecord> mismatches;
  /// completable differs from "magic completion lies in A"
  std::vector<GraphRecord> magic_mismatches;
  std::uint64_t fallback_events = 0;
  std::uint64_t fallback_disagreements = 0;
  std::vector<GraphRecord> fallback_samples;

  bool clean() const { return mismatches.empty() && magic_mismatches.empty(); }
};

struct VerifyOptions {
  int n_max = 4;
  std::optional<std::uint64_t> sample_count;  // exhaustive when empty
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t budget = kDefaultBudget;
  bool iso_reduce = true;  // exhaustive mode only
  std::optional<int> magic;
  std::size_t fallback_sample_limit = 16;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      throw BudgetExceeded("graph space too large to enumerate");
    out *= base;
  }
  return out;
}

/// Per-worker state and partial report.
struct SweepWorker {
  const MagicContext& ctx;
  TriangleTable table;
  BruteForceOracle oracle;
  WitnessSearch search;
  EquivalenceReport part;
  std::vector<std::pair<std::uint64_t, GraphRecord>> mism, magic_mism, fallbacks;

  SweepWorker(const MagicContext& c, std::shared_ptr<const WitnessSearch::Tables> tables,
              std::uint64_t budget)
      : ctx(c), table(c.params()), oracle(c.params(), budget), search(std::move(tables)) {}

  void check(std::uint64_t order_key, const EdgeLabelledGraph& g, std::size_t fallback_limit) {
    GraphRecord rec{g};
    rec.completable = oracle.run(g, false).completable;
    rec.witness = search.has_witness(g);
    const auto completed = magic_complete(ctx, g);
    rec.magic_member = is_member_A(table, completed.graph);
    rec.fallback = completed.trace.fallback_fired();

    ++part.graphs_checked;
    part.completable += rec.completable;
    if (rec.completable == rec.witness) mism.emplace_back(order_key, rec);
    if (rec.magic_member != rec.completable) magic_mism.emplace_back(order_key, rec);
    if (rec.fallback) {
      ++part.fallback_events;
      if (rec.magic_member != rec.completable) ++part.fallback_disagreements;
      // Keep the smallest keys seen; trimmed again after the merge.
      fallbacks.emplace_back(order_key, rec);
      if (fallbacks.size() > 4 * fallback_limit + 64) trim(fallbacks, fallback_limit);
    }
  }

  static void trim(std::vector<std::pair<std::uint64_t, GraphRecord>>& v, std::size_t limit) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (v.size() > limit) v.resize(limit);
  }
};

}  // namespace detail

/// Compares, graph by graph, brute-force completability with the absence of
/// a forbidden witness and with membership of the magic completion in A.
/// Results do not depend on the thread count.
inline EquivalenceReport verify_equivalence(const ParameterSequence& p, const VerifyOptions& opt) {
  p.require_admissible();
  if (opt.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const MagicContext ctx(p, opt.magic);
  const auto tables = std::make_shared<const WitnessSearch::Tables>(p);
  const int delta = p.delta();
  const auto base = static_cast<std::uint64_t>(delta + 1);

  // Work items: (n, first code, last code) ranges, in a fixed global order.
  struct Range {
    int n;
    std::uint64_t begin, end, key_offset;
  };
  std::vector<Range> ranges;
  std::uint64_t enumerated = 0;
  if (opt.sample_count) {
    const std::uint64_t count = *opt.sample_count;
    for (std::uint64_t b = 0; b < count; b += 4096)
      ranges.push_back({opt.n_max, b, std::min(count, b + 4096), 0});
    enumerated = count;
  } else {
    for (int n = 1; n <= opt.n_max; ++n) {
      const auto total = detail::checked_pow(base, static_cast<std::size_t>(n * (n - 1) / 2));
      for (std::uint64_t b = 0; b < total; b += 4096)
        ranges.push_back({n, b, std::min(total, b + 4096), enumerated});
      enumerated += total;
    }
  }

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, ranges.size())));

  std::vector<std::unique_ptr<detail::SweepWorker>> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(std::make_unique<detail::SweepWorker>(ctx, tables, opt.budget));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto run = [&](detail::SweepWorker& w) {
    try {
      std::vector<std::unique_ptr<IsoFilter>> filters(static_cast<std::size_t>(opt.n_max + 1));
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= ranges.size()) break;
        const Range& r = ranges[i];
        for (std::uint64_t code = r.begin; code < r.end; ++code) {
          if (opt.sample_count) {
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(code >> 32)};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<int> label(0, delta);
            EdgeLabelledGraph g(r.n);
            for (const auto& [u, v] : pair_order(r.n)) {
              const int l = label(rng);
              if (l != 0) g.set_label(u, v, l);
            }
            w.check(code, g, opt.fallback_sample_limit);
          } else {
            const auto g = decode_graph(r.n, delta, code);
            if (opt.iso_reduce) {
              auto& f = filters[static_cast<std::size_t>(r.n)];
              if (!f) f = std::make_unique<IsoFilter>(r.n);
              if (!f->is_representative(g)) continue;
            }
            w.check(r.key_offset + code, g, opt.fallback_sample_limit);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(ranges.size());
    }
  };

  if (threads == 1) {
    run(*workers.front());
  } else {
    std::vector<std::thread> pool;
    for (auto& w : workers) pool.emplace_back(run, std::ref(*w));
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  EquivalenceReport report;
  report.params = p.raw();
  report.magic = ctx.m();
  report.n_max = opt.n_max;
  report.sampled = opt.sample_count.has_value();
  report.seed = opt.seed;
  report.iso_reduced = !report.sampled && opt.iso_reduce;
  report.graphs_enumerated = enumerated;
  std::vector<std::pair<std::uint64_t, GraphRecord>> mism, magic_mism, fallbacks;
  for (auto& w : workers) {
    report.graphs_checked += w->part.graphs_checked;
    report.completable += w->part.completable;
    report.fallback_events += w->part.fallback_events;
    report.fallback_disagreements += w->part.fallback_disagreements;
    mism.insert(mism.end(), w->mism.begin(), w->mism.end());
    magic_mism.insert(magic_mism.end(), w->magic_mism.begin(), w->magic_mism.end());
    fallbacks.insert(fallbacks.end(), w->fallbacks.begin(), w->fallbacks.end());
  }
  const auto by_key = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(mism.begin(), mism.end(), by_key);
  std::sort(magic_mism.begin(), magic_mism.end(), by_key);
  detail::SweepWorker::trim(fallbacks, opt.fallback_sample_limit);
  for (auto& [k, r] : mism) report.mismatches.push_back(std::move(r));
  for (auto& [k, r] : magic_mism) report.magic_mismatches.push_back(std::move(r));
  for (auto& [k, r] : fallbacks) report.fallback_samples.push_back(std::move(r));
  return report;
}

}  // namespace mhg

#endif  // MHG_ORACLE_HPP
