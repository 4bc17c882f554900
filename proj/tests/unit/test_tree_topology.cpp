#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "suffixient/errors.hpp"
#include "suffixient/tree_topology.hpp"

using namespace suffixient;

namespace {

struct ParentChain {
  std::vector<std::uint32_t> parent{0};
  std::vector<std::set<ColorId>> marks{{}};

  bool is_ancestor(std::uint32_t a, std::uint32_t b) const {
    while (true) {
      if (a == b) return true;
      if (b == 0) return false;
      b = parent[b];
    }
  }
  std::uint32_t lca(std::uint32_t a, std::uint32_t b) const {
    while (!is_ancestor(a, b)) a = parent[a];
    return a;
  }
  bool subtree_marked(std::uint32_t v, ColorId c) const {
    for (std::uint32_t u = 0; u < parent.size(); ++u) {
      if (marks[u].contains(c) && is_ancestor(v, u)) return true;
    }
    return false;
  }
};

}  // namespace

TEST_CASE("random growth matches a parent-chain tree") {
  std::mt19937_64 rng(42);
  TreeTopology t;
  ParentChain p;
  constexpr ColorId kColors = 3;
  for (int step = 0; step < 600; ++step) {
    const auto n = static_cast<std::uint32_t>(t.size());
    const auto r = rng() % 10;
    if (r < 6 || n == 1) {
      const auto parent = static_cast<std::uint32_t>(rng() % n);
      const auto id = t.add_leaf(NodeId{parent});
      REQUIRE(id.value == n);
      p.parent.push_back(parent);
      p.marks.emplace_back();
    } else if (r < 8) {
      const auto child = 1 + static_cast<std::uint32_t>(rng() % (n - 1));
      const auto id = t.subdivide_edge(NodeId{p.parent[child]}, NodeId{child});
      REQUIRE(id.value == n);
      p.parent.push_back(p.parent[child]);
      p.marks.emplace_back();
      p.parent[child] = n;
    } else {
      const auto v = static_cast<std::uint32_t>(rng() % n);
      const auto c = static_cast<ColorId>(rng() % kColors);
      t.mark(NodeId{v}, c);
      p.marks[v].insert(c);
    }
  }
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t v = 0; v < n; ++v) REQUIRE(t.parent(NodeId{v}).value == p.parent[v]);
  for (int q = 0; q < 3000; ++q) {
    const auto a = static_cast<std::uint32_t>(rng() % n);
    const auto b = static_cast<std::uint32_t>(rng() % n);
    REQUIRE(t.is_ancestor(NodeId{a}, NodeId{b}) == p.is_ancestor(a, b));
    REQUIRE(t.lca(NodeId{a}, NodeId{b}).value == p.lca(a, b));
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    for (ColorId c = 0; c < kColors; ++c) {
      REQUIRE(t.is_marked(NodeId{v}, c) == p.marks[v].contains(c));
      const auto first = t.first_marked_in_subtree(NodeId{v}, c);
      REQUIRE(first.has_value() == p.subtree_marked(v, c));
      if (first) {
        REQUIRE(p.is_ancestor(v, first->value));
        REQUIRE(p.marks[first->value].contains(c));
        // No marked node of the subtree opens before it.
        for (std::uint32_t u = 0; u < n; ++u) {
          if (u != first->value && p.marks[u].contains(c) && p.is_ancestor(v, u)) {
            REQUIRE(t.list().order(t.handle(NodeId{u}).open, t.handle(*first).open) > 0);
          }
        }
      }
      if (p.subtree_marked(v, c)) continue;
      std::optional<std::uint32_t> expected;
      for (auto u = v; u != 0;) {
        u = p.parent[u];
        if (p.subtree_marked(u, c)) {
          expected = u;
          break;
        }
      }
      const auto fast = t.lowest_colored_ancestor(NodeId{v}, c);
      const auto walk = t.lowest_colored_ancestor_by_walk(NodeId{v}, c);
      REQUIRE(fast.has_value() == expected.has_value());
      REQUIRE(walk.has_value() == expected.has_value());
      if (expected) {
        REQUIRE(fast->value == *expected);
        REQUIRE(walk->value == *expected);
      }
    }
  }
}

TEST_CASE("subdividing requires adjacent nodes") {
  TreeTopology t;
  const auto a = t.add_leaf(t.root());
  const auto b = t.add_leaf(a);
  CHECK_THROWS_AS(t.subdivide_edge(t.root(), b), UsageError);
  const auto mid = t.subdivide_edge(a, b);
  CHECK(t.parent(b) == mid);
  CHECK(t.parent(mid) == a);
  CHECK_THROWS_AS(t.handle(NodeId{99}), HandleError);
}

TEST_CASE("children keep insertion order in the tour") {
  TreeTopology t;
  const auto a = t.add_leaf(t.root());
  const auto b = t.add_leaf(t.root());
  const auto& l = t.list();
  CHECK(l.order(t.handle(a).close, t.handle(b).open) < 0);
  CHECK(l.order(t.handle(t.root()).open, t.handle(a).open) < 0);
  CHECK(l.order(t.handle(b).close, t.handle(t.root()).close) < 0);
  CHECK(t.owner(t.handle(b).open) == b);
  CHECK(t.owner(t.handle(b).close) == b);
}
