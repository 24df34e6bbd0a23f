#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mhg/cycle.hpp"
#include "mhg/graph.hpp"
#include "test_support.hpp"

using namespace mhg;

namespace {

EdgeLabelledGraph triangle(int a, int b, int c) {
  EdgeLabelledGraph g(3);
  g.set_label(0, 1, a);
  g.set_label(0, 2, b);
  g.set_label(1, 2, c);
  return g;
}

}  // namespace

TEST(Graph, Basics) {
  EdgeLabelledGraph g(4);
  EXPECT_EQ(g.edge_count(), 0);
  g.set_label(2, 1, 3);
  EXPECT_EQ(g.label(1, 2), 3);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_THROW(g.set_label(1, 1, 2), std::invalid_argument);
  g.clear_label(1, 2);
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_FALSE(g.is_complete());
  EXPECT_TRUE(EdgeLabelledGraph(1).is_complete());
}

TEST(Graph, TriangleVerdictExamples) {
  const ParameterSequence p(5, 3, 3, 16, 13);
  const auto v111 = triangle_verdict(p, 1, 1, 1);
  EXPECT_EQ(v111.violations, static_cast<unsigned>(TriangleViolation::K1Low));
  const auto v555 = triangle_verdict(p, 5, 5, 5);
  EXPECT_EQ(v555.violations, static_cast<unsigned>(TriangleViolation::C1High));
  EXPECT_TRUE(triangle_verdict(p, 1, 1, 5).has(TriangleViolation::NonMetric));
  EXPECT_TRUE(triangle_verdict(p, 1, 2, 3).allowed());
  EXPECT_THROW(triangle_verdict(p, 0, 1, 1), std::out_of_range);
  EXPECT_THROW(triangle_verdict(p, 6, 1, 1), std::out_of_range);
}

TEST(Graph, TriangleVerdictMatchesDefinition) {
  for (const auto& p : mhg::testing::admissible_up_to(7)) {
    const TriangleTable table(p);
    const int d = p.delta();
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        for (int c = 1; c <= d; ++c) {
          const auto v = triangle_verdict(p, a, b, c);
          ASSERT_EQ(!v.allowed(), mhg::testing::naive_triangle_forbidden(p, a, b, c))
              << p.to_string() << " " << a << b << c;
          EXPECT_EQ(v.violations, triangle_verdict(p, b, c, a).violations);
          EXPECT_EQ(v.violations, triangle_verdict(p, c, b, a).violations);
          EXPECT_EQ(table.allowed(a, b, c), v.allowed());
        }
  }
}

TEST(Graph, MembershipInA) {
  const ParameterSequence p(5, 3, 3, 16, 13);
  EXPECT_TRUE(is_member_A(p, triangle(1, 2, 3)));
  EXPECT_FALSE(is_member_A(p, triangle(1, 1, 1)));
  EdgeLabelledGraph open(3);
  open.set_label(0, 1, 2);
  EXPECT_FALSE(is_member_A(p, open));
  EXPECT_FALSE(is_member_A(TriangleTable(p), open));
  EXPECT_EQ(first_forbidden_triangle(p, triangle(1, 1, 1)), (std::array<int, 3>{0, 1, 2}));
  EXPECT_FALSE(first_forbidden_triangle(p, triangle(1, 2, 3)));
}

TEST(Graph, MembershipMatchesTriangleScan) {
  std::mt19937_64 rng(7);
  const ParameterSequence p(4, 2, 3, 12, 13);
  const TriangleTable table(p);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto g = mhg::testing::random_graph(rng, 5, 4, 1.0);
    bool ok = true;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v)
        for (int w = v + 1; w < 5; ++w)
          ok = ok && !mhg::testing::naive_triangle_forbidden(p, g.label(u, v), g.label(u, w), g.label(v, w));
    EXPECT_EQ(is_member_A(p, g), ok);
    EXPECT_EQ(is_member_A(table, g), ok);
  }
}

TEST(Graph, ClosedWalksOfTriangle) {
  std::set<std::vector<int>> canon;
  int count = 0;
  for_each_closed_walk(triangle(1, 2, 3), 3, [&](const std::vector<int>& v, const std::vector<int>& l) {
    EXPECT_EQ(v.size(), 3u);
    canon.insert(canonical_cycle(l));
    ++count;
    return true;
  });
  EXPECT_EQ(count, 6);  // 3 starts, 2 directions
  EXPECT_EQ(canon, (std::set<std::vector<int>>{{1, 2, 3}}));
}

TEST(Graph, ClosedWalksOfSingleEdge) {
  EdgeLabelledGraph g(2);
  g.set_label(0, 1, 4);
  int count = 0;
  for_each_closed_walk(g, 3, [&](const auto&, const auto&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 0);
  // Length 4 allows back-and-forth walks.
  for_each_closed_walk(g, 4, [&](const auto&, const std::vector<int>& l) {
    EXPECT_EQ(l, (std::vector<int>{4, 4, 4, 4}));
    ++count;
    return true;
  });
  EXPECT_EQ(count, 2);
}

TEST(Graph, ClosedWalksOfPentagon) {
  EdgeLabelledGraph g(5);
  for (int i = 0; i < 5; ++i) g.set_label(i, (i + 1) % 5, 5);
  bool pentagon = false;
  for_each_closed_walk(g, 5, [&](const std::vector<int>& v, const std::vector<int>&) {
    if (v.size() == 5 && std::set<int>(v.begin(), v.end()).size() == 5) pentagon = true;
    return true;
  });
  EXPECT_TRUE(pentagon);
}

TEST(Cycle, Canonicalization) {
  EXPECT_EQ(canonical_cycle({3, 1, 2}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(canonical_cycle({2, 1, 3}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(canonical_cycle({5, 2, 5, 5}), (std::vector<int>{2, 5, 5, 5}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> lab(1, 4);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<int> c(5);
    for (auto& x : c) x = lab(rng);
    const auto canon = canonical_cycle(c);
    EXPECT_EQ(canonical_cycle(canon), canon);
    auto rot = c;
    std::rotate(rot.begin(), rot.begin() + 2, rot.end());
    EXPECT_EQ(canonical_cycle(rot), canon);
    std::reverse(rot.begin(), rot.end());
    EXPECT_EQ(canonical_cycle(rot), canon);
  }
}

TEST(Cycle, LabelledCycle) {
  const LabelledCycle c{5, 2, 5, 5};
  EXPECT_EQ(c.perimeter(), 17);
  EXPECT_EQ(c.max_label(), 5);
  EXPECT_EQ(c.at_cyclic(4), 5);
  EXPECT_EQ(c.to_string(), "(5,2,5,5)");
  EXPECT_EQ(c.canonical().to_string(), "(2,5,5,5)");
  EXPECT_EQ(c, (LabelledCycle{2, 5, 5, 5}));
  EXPECT_THROW(LabelledCycle({1, 2}), std::invalid_argument);
}
