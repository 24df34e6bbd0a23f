#ifndef MHG_FAMILIES_HPP
#define MHG_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mhg/cycle.hpp"
#include "mhg/params.hpp"

namespace mhg {

enum class FamilyTag { NonMetric, CCycle, C0Cycle, C1Cycle, K1Cycle, K2Cycle, Special5 };

inline constexpr std::array<FamilyTag, 7> kAllFamilyTags = {
    FamilyTag::NonMetric, FamilyTag::CCycle,  FamilyTag::C0Cycle, FamilyTag::C1Cycle,
    FamilyTag::K1Cycle,   FamilyTag::K2Cycle, FamilyTag::Special5};

inline std::string_view to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::NonMetric: return "NonMetric";
    case FamilyTag::CCycle: return "C";
    case FamilyTag::C0Cycle: return "C0";
    case FamilyTag::C1Cycle: return "C1";
    case FamilyTag::K1Cycle: return "K1";
    case FamilyTag::K2Cycle: return "K2";
    case FamilyTag::Special5: return "Special5";
  }
  return "?";
}

/// One way of reading a cycle as a member of a family: which labels play the
/// distinguished role (d) and which are fillers (x). Decompositions are over
/// label multisets; positions in the cycle do not matter.
struct FamilyWitness {
  LabelledCycle cycle;
  FamilyTag tag = FamilyTag::NonMetric;
  int n = 0;
  std::vector<int> d_edges;  // descending
  std::vector<int> x_edges;  // descending

  int k() const { return static_cast<int>(x_edges.size()); }
  int d_sum() const { return std::accumulate(d_edges.begin(), d_edges.end(), 0); }
  int x_sum() const { return std::accumulate(x_edges.begin(), x_edges.end(), 0); }
};

namespace detail {

/// Labels sorted descending with prefix sums; the best d-choice of any size is
/// always a prefix.
struct SortedLabels {
  std::vector<int> desc;
  std::vector<int> prefix;  // prefix[m] = sum of the m largest labels
  int total = 0;
  std::size_t k = 0;

  explicit SortedLabels(std::vector<int> labels) : desc(std::move(labels)) {
    std::sort(desc.begin(), desc.end(), std::greater<>());
    k = desc.size();
    prefix.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + desc[i];
    total = prefix[k];
  }

  /// max over d-choices of size m of (sum d - sum x).
  int best_margin(std::size_t m) const { return 2 * prefix[m] - total; }
  bool odd() const { return total % 2 != 0; }
  bool metric() const { return k == 0 || desc[0] <= total - desc[0]; }
};

inline bool holds(const ParameterSequence& p, FamilyTag tag, const SortedLabels& s) {
  if (s.k < 3) return false;
  const int cm1 = p.c() - 1;
  switch (tag) {
    case FamilyTag::NonMetric:
      return !s.metric();
    case FamilyTag::CCycle:
      for (int n = 1; static_cast<std::size_t>(2 * n + 1) <= s.k; ++n)
        if (s.best_margin(static_cast<std::size_t>(2 * n + 1)) > n * cm1) return true;
      return false;
    case FamilyTag::C0Cycle:
      return !s.odd() && s.best_margin(3) > p.c0() - 1;
    case FamilyTag::C1Cycle:
      return s.odd() && s.best_margin(3) > p.c1() - 1;
    case FamilyTag::K1Cycle:
      return s.metric() && s.odd() && s.total < 2 * p.k1();
    case FamilyTag::K2Cycle:
      if (!s.odd()) return false;
      for (int n = 0; static_cast<std::size_t>(2 * n + 2) <= s.k; ++n)
        if (s.best_margin(static_cast<std::size_t>(2 * n + 2)) > 2 * p.k2() + n * cm1) return true;
      return false;
    case FamilyTag::Special5:
      return p.delta() == 5 && s.k == 5 &&
             std::all_of(s.desc.begin(), s.desc.end(), [](int x) { return x == 5; });
  }
  return false;
}

/// Families whose union forms F for these parameters.
inline std::vector<FamilyTag> forbidden_tags(const ParameterSequence& p) {
  if (p.adjacent_cs())
    return {FamilyTag::NonMetric, FamilyTag::CCycle, FamilyTag::K1Cycle, FamilyTag::K2Cycle};
  std::vector<FamilyTag> tags = {FamilyTag::NonMetric, FamilyTag::C0Cycle, FamilyTag::C1Cycle,
                                 FamilyTag::K1Cycle, FamilyTag::K2Cycle};
  if (p.delta() == 5 && p.case_iib()) tags.push_back(FamilyTag::Special5);
  return tags;
}

/// Calls f(chosen) for every distinct sub-multiset of `desc` (sorted
/// descending) of the given size; `chosen` is descending.
template <typename F>
void for_each_submultiset(const std::vector<int>& desc, std::size_t size, F&& f) {
  std::vector<std::pair<int, int>> groups;  // (label, multiplicity), descending labels
  for (int x : desc) {
    if (groups.empty() || groups.back().first != x) groups.emplace_back(x, 0);
    ++groups.back().second;
  }
  std::vector<int> chosen;
  const auto rec = [&](auto&& self, std::size_t g, std::size_t left) -> void {
    if (left == 0) {
      f(std::as_const(chosen));
      return;
    }
    if (g == groups.size()) return;
    const auto [label, mult] = groups[g];
    const std::size_t take_max = std::min<std::size_t>(static_cast<std::size_t>(mult), left);
    for (std::size_t t = take_max + 1; t-- > 0;) {
      chosen.insert(chosen.end(), t, label);
      self(self, g + 1, left - t);
      chosen.resize(chosen.size() - t);
    }
  };
  rec(rec, 0, size);
}

inline std::vector<int> multiset_difference(const std::vector<int>& all_desc,
                                            const std::vector<int>& part_desc) {
  std::vector<int> out;
  std::set_difference(all_desc.begin(), all_desc.end(), part_desc.begin(), part_desc.end(),
                      std::back_inserter(out), std::greater<>());
  return out;
}

}  // namespace detail

/// Whether the cycle belongs to the given family (decision only).
inline bool in_family(const ParameterSequence& p, FamilyTag tag, const std::vector<int>& labels) {
  return detail::holds(p, tag, detail::SortedLabels(labels));
}

/// Every witnessing decomposition of the cycle, over all families. C-, C0- and
/// C1-cycles are reported with n >= 1; the n = 0 instances are the
/// non-metric cycles.
inline std::vector<FamilyWitness> classify_cycle(const ParameterSequence& p,
                                                 const LabelledCycle& c) {
  std::vector<FamilyWitness> out;
  const detail::SortedLabels s(c.labels());
  const int total = s.total;
  const int cm1 = p.c() - 1;

  const auto add_decompositions = [&](FamilyTag tag, int n, std::size_t d_size, auto&& accept) {
    if (d_size > s.k) return;
    detail::for_each_submultiset(s.desc, d_size, [&](const std::vector<int>& d) {
      const int dsum = std::accumulate(d.begin(), d.end(), 0);
      const int xsum = total - dsum;
      if (accept(dsum, xsum))
        out.push_back({c, tag, n, d, detail::multiset_difference(s.desc, d)});
    });
  };

  add_decompositions(FamilyTag::NonMetric, 0, 1, [](int a, int x) { return a > x; });
  for (int n = 1; static_cast<std::size_t>(2 * n + 1) <= s.k; ++n)
    add_decompositions(FamilyTag::CCycle, n, static_cast<std::size_t>(2 * n + 1),
                       [&](int d, int x) { return d > n * cm1 + x; });
  if (!s.odd())
    add_decompositions(FamilyTag::C0Cycle, 1, 3, [&](int d, int x) { return d > p.c0() - 1 + x; });
  else
    add_decompositions(FamilyTag::C1Cycle, 1, 3, [&](int d, int x) { return d > p.c1() - 1 + x; });
  if (detail::holds(p, FamilyTag::K1Cycle, s)) out.push_back({c, FamilyTag::K1Cycle, 0, {}, s.desc});
  if (s.odd())
    for (int n = 0; static_cast<std::size_t>(2 * n + 2) <= s.k; ++n)
      add_decompositions(FamilyTag::K2Cycle, n, static_cast<std::size_t>(2 * n + 2),
                         [&](int d, int x) { return d > 2 * p.k2() + n * cm1 + x; });
  if (detail::holds(p, FamilyTag::Special5, s)) out.push_back({c, FamilyTag::Special5, 2, s.desc, {}});
  return out;
}

/// Membership in F, following the three-way split on |C0 - C1|, the diameter
/// and the admissibility case. Throws for non-admissible parameters.
inline bool in_F(const ParameterSequence& p, const std::vector<int>& labels) {
  p.require_admissible();
  const detail::SortedLabels s(labels);
  for (auto tag : detail::forbidden_tags(p))
    if (detail::holds(p, tag, s)) return true;
  return false;
}

inline bool in_F(const ParameterSequence& p, const LabelledCycle& c) { return in_F(p, c.labels()); }

/// Largest number of edges any member of the given family can have; 0 when
/// the family is empty. Derived from labels lying in 1..delta.
inline int family_length_bound(const ParameterSequence& p, FamilyTag tag) {
  const int d = p.delta();
  int bound = 0;
  switch (tag) {
    case FamilyTag::NonMetric:
      bound = d;  // a <= delta and every x_i >= 1
      break;
    case FamilyTag::K1Cycle:
      bound = 2 * p.k1() - 1;
      break;
    case FamilyTag::K2Cycle:
      // (2n+2) delta > 2K2 + n(C-1) + k with C-1 >= 2 delta + 1
      for (int n = 0; n < 2 * d - 2 * p.k2(); ++n)
        for (int k = 0; n + k < 2 * d - 2 * p.k2(); ++k) bound = std::max(bound, 2 * n + 2 + k);
      break;
    case FamilyTag::CCycle:
      // (2n+1) delta > n(C-1) + k, n >= 1
      for (int n = 1; n < d; ++n)
        for (int k = 0; n + k < d; ++k) bound = std::max(bound, 2 * n + 1 + k);
      break;
    case FamilyTag::C0Cycle:
      bound = 3 * d - p.c0() >= 0 ? 3 + 3 * d - p.c0() : 0;
      break;
    case FamilyTag::C1Cycle:
      bound = 3 * d - p.c1() >= 0 ? 3 + 3 * d - p.c1() : 0;
      break;
    case FamilyTag::Special5:
      bound = d == 5 ? 5 : 0;
      break;
  }
  return bound >= 3 ? bound : 0;
}

/// B(p): no member of F has more edges.
inline int length_bound(const ParameterSequence& p) {
  int b = 3;
  for (auto tag : detail::forbidden_tags(p)) b = std::max(b, family_length_bound(p, tag));
  return b;
}

/// Calls f(desc) for every label multiset (descending) with size in
/// [min_size, max_size] over labels 1..delta.
template <typename F>
void for_each_label_multiset(int delta, int min_size, int max_size, F&& f) {
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int max_label) -> void {
    if (static_cast<int>(cur.size()) >= min_size) f(std::as_const(cur));
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int l = max_label; l >= 1; --l) {
      cur.push_back(l);
      self(self, l);
      cur.pop_back();
    }
  };
  rec(rec, delta);
}

/// Every distinct cyclic arrangement (canonical) of a label multiset.
inline std::vector<LabelledCycle> arrangements(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::set<std::vector<int>> seen;
  std::vector<LabelledCycle> out;
  // The canonical form starts with a smallest label, so fix one in front.
  std::vector<int> rest(labels.begin() + 1, labels.end());
  do {
    std::vector<int> seq;
    seq.reserve(labels.size());
    seq.push_back(labels.front());
    seq.insert(seq.end(), rest.begin(), rest.end());
    auto canon = canonical_cycle(seq);
    if (seen.insert(canon).second) out.emplace_back(std::move(canon));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end(), CycleOrder{});
  return out;
}

/// All members of F in canonical form, ordered by length then lexicographically.
inline std::vector<LabelledCycle> enumerate_F(const ParameterSequence& p) {
  p.require_admissible();
  std::vector<LabelledCycle> out;
  for_each_label_multiset(p.delta(), 3, length_bound(p), [&](const std::vector<int>& ms) {
    if (!in_F(p, ms)) return;
    for (auto& c : arrangements(ms)) out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), CycleOrder{});
  return out;
}

}  // namespace mhg

#endif  // MHG_FAMILIES_HPP
