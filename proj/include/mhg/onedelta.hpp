#ifndef MHG_ONEDELTA_HPP
#define MHG_ONEDELTA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhg/params.hpp"

namespace mhg {

/// Constraint responsible for forbidding the (1,delta)-cycles with i edges of
/// length delta and j edges of length 1.
enum class OneDeltaTag { K1, NonMetric, K2, C, C0, C1, C1_5 };

inline std::string_view to_string(OneDeltaTag t) {
  switch (t) {
    case OneDeltaTag::K1: return "K1";
    case OneDeltaTag::NonMetric: return "NonMetric";
    case OneDeltaTag::K2: return "K2";
    case OneDeltaTag::C: return "C";
    case OneDeltaTag::C0: return "C0";
    case OneDeltaTag::C1: return "C1";
    case OneDeltaTag::C1_5: return "C1_5";
  }
  return "?";
}

/// Short symbol used in the rendered table.
inline std::string_view table_symbol(OneDeltaTag t) {
  switch (t) {
    case OneDeltaTag::K1: return "K1";
    case OneDeltaTag::NonMetric: return "δ";
    case OneDeltaTag::K2: return "K2";
    case OneDeltaTag::C: return "C";
    case OneDeltaTag::C0: return "C0";
    case OneDeltaTag::C1: return "C1";
    case OneDeltaTag::C1_5: return "C1^5";
  }
  return "?";
}

using Cell = std::pair<int, int>;  // (i, j)

inline std::optional<OneDeltaTag> classify_1d(const ParameterSequence& p, int i, int j) {
  if (i < 0 || j < 0 || i + j < 3) return std::nullopt;
  const int d = p.delta();
  const int c = p.c();
  const int fork = c - 1 - 2 * d;  // distance closing a delta-delta fork via the C branch

  if (i == 0) {
    if (j % 2 == 1 && j < 2 * p.k1()) return OneDeltaTag::K1;
    return std::nullopt;
  }
  if (i == 1) {
    if (j < d) return OneDeltaTag::NonMetric;
    return std::nullopt;
  }
  if (i % 2 == 0) {
    if (j % 2 == 1 && 2 * j < 2 * c - 4 * p.k2() - 2 - fork * i) return OneDeltaTag::K2;
    return std::nullopt;
  }
  // odd i >= 3
  if (p.adjacent_cs()) {
    if (2 * j < c - 1 - fork * i) return OneDeltaTag::C;
    return std::nullopt;
  }
  if (i == 3) {
    if ((d + j) % 2 == 0 && 2 * j < p.c0() - 1 - (p.c0() - 1 - 2 * d) * 3) return OneDeltaTag::C0;
    if ((d + j) % 2 == 1 && 2 * j < p.c1() - 1 - (p.c1() - 1 - 2 * d) * 3) return OneDeltaTag::C1;
    return std::nullopt;
  }
  if (i == 5 && j == 0 && d == 5 && p.case_iib()) return OneDeltaTag::C1_5;
  return std::nullopt;
}

struct OneDeltaTable {
  RawParams params;
  std::map<Cell, OneDeltaTag> cells;  // tagged cells only
  int i_max = 0;
  int j_max = 0;

  std::set<Cell> support() const {
    std::set<Cell> out;
    for (const auto& [cell, tag] : cells) out.insert(cell);
    return out;
  }
  std::optional<OneDeltaTag> at(int i, int j) const {
    auto it = cells.find({i, j});
    if (it == cells.end()) return std::nullopt;
    return it->second;
  }
};

/// Scan limits that contain every tagged cell: each row's inequality has a
/// right-hand side that shrinks by at least one per extra delta edge.
inline int onedelta_row_limit(const ParameterSequence& p) { return 6 * p.delta() + 6; }
inline int onedelta_col_limit(const ParameterSequence& p) { return 3 * p.delta() + 3; }

inline OneDeltaTable build_table(const ParameterSequence& p) {
  p.require_admissible();
  OneDeltaTable t;
  t.params = p.raw();
  for (int i = 0; i <= onedelta_row_limit(p); ++i)
    for (int j = 0; j <= onedelta_col_limit(p); ++j)
      if (auto tag = classify_1d(p, i, j)) {
        t.cells.emplace(Cell{i, j}, *tag);
        t.i_max = std::max(t.i_max, i);
        t.j_max = std::max(t.j_max, j);
      }
  return t;
}

/// Fixed-width text rendering. Rows are "0δ".."<i_max>δ", columns 0..j_max.
/// Cells with i + j < 3 are left blank (the staircase), other untagged cells
/// show ".".
inline std::string render_table_text(const OneDeltaTable& t) {
  constexpr int kWidth = 5;
  // Pads by display width; "δ" is one column but two bytes.
  const auto pad = [](std::string_view s, int width) {
    int display = 0;
    for (unsigned char ch : s) display += (ch & 0xC0) != 0x80;
    std::string out(static_cast<std::size_t>(std::max(0, width - display)), ' ');
    out += s;
    return out;
  };
  std::ostringstream os;
  os << pad("", 3);
  for (int j = 0; j <= t.j_max; ++j) os << pad(std::to_string(j), kWidth);
  os << '\n';
  for (int i = 0; i <= t.i_max; ++i) {
    os << pad(std::to_string(i) + "δ", 3);
    for (int j = 0; j <= t.j_max; ++j) {
      if (i + j < 3) {
        os << pad("", kWidth);
      } else if (auto tag = t.at(i, j)) {
        os << pad(table_symbol(*tag), kWidth);
      } else {
        os << pad(".", kWidth);
      }
    }
    os << '\n';
  }
  return os.str();
}

inline std::set<Cell> transpose(const std::set<Cell>& cells) {
  std::set<Cell> out;
  for (auto [i, j] : cells) out.insert({j, i});
  return out;
}

/// One table's tagged cells are exactly the transpose of the other's.
inline bool is_twisted_pair(const ParameterSequence& a, const ParameterSequence& b) {
  return build_table(a).support() == transpose(build_table(b).support());
}

}  // namespace mhg

#endif  // MHG_ONEDELTA_HPP
