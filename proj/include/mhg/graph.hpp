#ifndef MHG_GRAPH_HPP
#define MHG_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhg/params.hpp"

namespace mhg {

/// Finite graph with a symmetric partial labelling of vertex pairs by 1..delta.
/// Label 0 marks a non-edge.
class EdgeLabelledGraph {
 public:
  EdgeLabelledGraph() = default;
  explicit EdgeLabelledGraph(int n) : n_(n), labels_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  }

  int size() const { return n_; }

  int label(int u, int v) const { return labels_[idx(u, v)]; }
  bool has_edge(int u, int v) const { return label(u, v) != 0; }

  void set_label(int u, int v, int label) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (label < 0 || label > 255) throw std::out_of_range("label out of range");
    labels_[idx(u, v)] = static_cast<std::uint8_t>(label);
    labels_[idx(v, u)] = static_cast<std::uint8_t>(label);
  }
  void clear_label(int u, int v) { set_label(u, v, 0); }

  bool is_complete() const {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) return false;
    return true;
  }

  int edge_count() const {
    int count = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) count += has_edge(u, v);
    return count;
  }

  int max_label() const {
    int best = 0;
    for (auto l : labels_) best = std::max(best, static_cast<int>(l));
    return best;
  }

  /// Edges as (u, v, label) with u < v, in lexicographic order.
  std::vector<std::array<int, 3>> edges() const {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.push_back({u, v, label(u, v)});
    return out;
  }

  friend bool operator==(const EdgeLabelledGraph&, const EdgeLabelledGraph&) = default;

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<std::uint8_t> labels_;
};

enum class TriangleViolation : unsigned {
  NonMetric = 1u << 0,
  K1Low = 1u << 1,
  K2High = 1u << 2,
  C0High = 1u << 3,
  C1High = 1u << 4,
};

inline std::string_view to_string(TriangleViolation v) {
  switch (v) {
    case TriangleViolation::NonMetric: return "NonMetric";
    case TriangleViolation::K1Low: return "K1Low";
    case TriangleViolation::K2High: return "K2High";
    case TriangleViolation::C0High: return "C0High";
    case TriangleViolation::C1High: return "C1High";
  }
  return "?";
}

inline constexpr std::array<TriangleViolation, 5> kAllTriangleViolations = {
    TriangleViolation::NonMetric, TriangleViolation::K1Low, TriangleViolation::K2High,
    TriangleViolation::C0High, TriangleViolation::C1High};

struct TriangleVerdict {
  unsigned violations = 0;
  int perimeter = 0;
  int m_edge = 0;

  bool allowed() const { return violations == 0; }
  bool has(TriangleViolation v) const { return (violations & static_cast<unsigned>(v)) != 0; }
  std::vector<std::string_view> names() const {
    std::vector<std::string_view> out;
    for (auto v : kAllTriangleViolations)
      if (has(v)) out.push_back(to_string(v));
    return out;
  }
};

inline TriangleVerdict triangle_verdict(const ParameterSequence& p, int a, int b, int c) {
  for (int x : {a, b, c}) {
    if (x < 1 || x > p.delta()) {
      throw std::out_of_range("triangle label " + std::to_string(x) + " outside 1.." +
                              std::to_string(p.delta()));
    }
  }
  TriangleVerdict v;
  v.perimeter = a + b + c;
  v.m_edge = std::min({a, b, c});
  const auto flag = [&](TriangleViolation f) { v.violations |= static_cast<unsigned>(f); };
  const int longest = std::max({a, b, c});
  if (longest > v.perimeter - longest) flag(TriangleViolation::NonMetric);
  if (v.perimeter % 2 != 0) {
    if (!(2 * p.k1() < v.perimeter)) flag(TriangleViolation::K1Low);
    if (!(v.perimeter < 2 * p.k2() + 2 * v.m_edge)) flag(TriangleViolation::K2High);
    if (!(v.perimeter < p.c1())) flag(TriangleViolation::C1High);
  } else if (!(v.perimeter < p.c0())) {
    flag(TriangleViolation::C0High);
  }
  return v;
}

/// allowed(a, b, c) for all label triples, for hot loops.
class TriangleTable {
 public:
  explicit TriangleTable(const ParameterSequence& p) : delta_(p.delta()) {
    const auto n = static_cast<std::size_t>(delta_ + 1);
    allowed_.assign(n * n * n, 0);
    for (int a = 1; a <= delta_; ++a)
      for (int b = 1; b <= delta_; ++b)
        for (int c = 1; c <= delta_; ++c)
          allowed_[index(a, b, c)] = triangle_verdict(p, a, b, c).allowed() ? 1 : 0;
  }

  int delta() const { return delta_; }
  bool allowed(int a, int b, int c) const { return allowed_[index(a, b, c)] != 0; }

 private:
  std::size_t index(int a, int b, int c) const {
    const auto n = static_cast<std::size_t>(delta_ + 1);
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
           static_cast<std::size_t>(c);
  }

  int delta_;
  std::vector<std::uint8_t> allowed_;
};

/// First triangle (u < v < w) that is fully labelled and forbidden.
inline std::optional<std::array<int, 3>> first_forbidden_triangle(const ParameterSequence& p,
                                                                  const EdgeLabelledGraph& g) {
  const int n = g.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        if (!triangle_verdict(p, g.label(u, v), g.label(u, w), g.label(v, w)).allowed())
          return std::array<int, 3>{u, v, w};
      }
    }
  return std::nullopt;
}

inline bool labels_in_range(const ParameterSequence& p, const EdgeLabelledGraph& g) {
  return g.max_label() <= p.delta();
}

/// Complete, labels within 1..delta, and every triangle allowed.
inline bool is_member_A(const ParameterSequence& p, const EdgeLabelledGraph& g) {
  return g.is_complete() && labels_in_range(p, g) && !first_forbidden_triangle(p, g);
}

inline bool is_member_A(const TriangleTable& t, const EdgeLabelledGraph& g) {
  const int n = g.size();
  if (g.max_label() > t.delta()) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int a = g.label(u, v);
      if (a == 0) return false;
      for (int w = v + 1; w < n; ++w) {
        const int b = g.label(u, w), c = g.label(v, w);
        if (b == 0 || c == 0) return false;
        if (!t.allowed(a, b, c)) return false;
      }
    }
  return true;
}

/// Streams every closed walk of length 3..max_len. Walks are vertex sequences
/// v_0 .. v_{L-1} (returning to v_0), produced by length and then in
/// lexicographic order; every rotation is a separate walk. The visitor is
/// called as f(vertices, labels) and returns false to stop.
template <typename Visitor>
void for_each_closed_walk(const EdgeLabelledGraph& g, int max_len, Visitor&& f) {
  const int n = g.size();
  std::vector<int> verts;
  std::vector<int> labels;
  bool stop = false;

  const auto dfs = [&](auto&& self, int len) -> void {
    if (stop) return;
    const int cur = verts.back();
    if (static_cast<int>(verts.size()) == len) {
      const int l = g.label(cur, verts.front());
      if (l == 0) return;
      labels.push_back(l);
      if (!f(std::as_const(verts), std::as_const(labels))) stop = true;
      labels.pop_back();
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      const int l = g.label(cur, w);
      if (l == 0) continue;
      verts.push_back(w);
      labels.push_back(l);
      self(self, len);
      verts.pop_back();
      labels.pop_back();
    }
  };

  for (int len = 3; len <= max_len && !stop; ++len) {
    for (int start = 0; start < n && !stop; ++start) {
      verts.assign(1, start);
      labels.clear();
      dfs(dfs, len);
    }
  }
}

}  // namespace mhg

#endif  // MHG_GRAPH_HPP
