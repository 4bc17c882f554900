#include <random>

#include "doctest.h"
#include "suffixient/errors.hpp"
#include "suffixient/naive_tree.hpp"
#include "suffixient/oracle.hpp"
#include "suffixient/weiner_tree.hpp"

using namespace suffixient;

namespace {

struct Built {
  TextBuffer buffer;
  WeinerTree tree;
  Built(Direction d, std::uint32_t sigma, AlphaEngine e) : buffer(d, sigma), tree(buffer, e) {}
  void push(LetterCode x) {
    buffer.append(x);
    tree.prepend(x);
  }
};

// Feeds `logical` in the direction's arrival order.
void feed(Built& b, const std::vector<LetterCode>& logical) {
  if (b.buffer.direction() == Direction::kLeftToRight) {
    for (auto x : logical) b.push(x);
  } else {
    for (auto it = logical.rbegin(); it != logical.rend(); ++it) b.push(*it);
  }
}

void check_links(const WeinerTree& tree, const NaiveTree& naive) {
  for (std::uint32_t id = 0; id < tree.node_count(); ++id) {
    const auto label = tree.label(NodeId{id});
    const auto it = naive.links.find(label);
    for (LetterCode x = 0; x < tree.buffer().alphabet_size(); ++x) {
      const auto got = tree.resolve_wlink(NodeId{id}, x);
      const bool defined = it != naive.links.end() && it->second.contains(x);
      REQUIRE(got.has_value() == defined);
      if (defined) {
        REQUIRE(tree.label(*got) == it->second.at(x).destination);
        REQUIRE(tree.hard_link(NodeId{id}, x).has_value() == it->second.at(x).hard);
      }
    }
  }
}

void fuzz_direction(Direction d, AlphaEngine e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 60; ++t) {
    const auto sigma = static_cast<std::uint32_t>(2 + rng() % 3);
    const auto n = 1 + rng() % 48;
    Built b(d, sigma + 1, e);
    for (std::size_t i = 0; i < n; ++i) {
      // RTL runs start with the sentinel.
      const LetterCode x = (d == Direction::kRightToLeft && i == 0)
                               ? sigma
                               : static_cast<LetterCode>(rng() % sigma);
      b.push(x);
      const auto naive = naive_builder(b.buffer);
      const auto diff = describe_difference(naive.nodes, canonical_form(b.tree));
      INFO("round " << i << ": " << diff);
      REQUIRE(diff.empty());
      check_links(b.tree, naive);
    }
  }
}

}  // namespace

TEST_CASE("matches the naive builder after every round") {
  fuzz_direction(Direction::kRightToLeft, AlphaEngine::kFringe, 1);
  fuzz_direction(Direction::kLeftToRight, AlphaEngine::kFringe, 2);
  fuzz_direction(Direction::kRightToLeft, AlphaEngine::kNaiveWalk, 3);
  fuzz_direction(Direction::kLeftToRight, AlphaEngine::kNaiveWalk, 4);
}

TEST_CASE("hand-built tree of aab") {
  Built b(Direction::kRightToLeft, 2, AlphaEngine::kFringe);
  feed(b, {0, 0, 1});
  const auto t = canonical_form(b.tree);
  const Label a{0}, aab{0, 0, 1}, ab{0, 1}, bb{1};
  REQUIRE(t.size() == 5);
  CHECK(t.at(Label{}).hard_links == std::map<LetterCode, Label>{{0, a}, {1, bb}});
  CHECK(t.at(a).children == std::map<LetterCode, Label>{{0, aab}, {1, ab}});
  CHECK(t.at(a).hard_links.empty());
  CHECK(t.at(bb).hard_links == std::map<LetterCode, Label>{{0, ab}});
  CHECK(t.at(ab).hard_links == std::map<LetterCode, Label>{{0, aab}});
  CHECK(t.at(a).rec_pos == Coord::from_right(-1));
  CHECK(t.at(aab).rec_pos == Coord::from_right(0));
  CHECK(t.at(ab).rec_pos == Coord::from_right(0));
  // Soft a-link of "a" leads to the leaf aab.
  const auto node_a = b.tree.child(b.tree.root(), 0);
  REQUIRE(node_a);
  const auto soft = b.tree.resolve_wlink(*node_a, 0);
  REQUIRE(soft);
  CHECK(b.tree.label(*soft) == aab);
  CHECK_FALSE(b.tree.hard_link(*node_a, 0));
}

TEST_CASE("left-to-right tree is built over the reversal") {
  Built b(Direction::kLeftToRight, 2, AlphaEngine::kFringe);
  feed(b, {0, 1});
  const auto t = canonical_form(b.tree);
  const Label a{0}, ba{1, 0};
  REQUIRE(t.size() == 3);
  CHECK(t.at(a).rec_pos == Coord::from_left(1));
  CHECK(t.at(ba).rec_pos == Coord::from_left(2));
  CHECK(t.at(a).hard_links == std::map<LetterCode, Label>{{1, ba}});
  CHECK(t.at(Label{}).hard_links == std::map<LetterCode, Label>{{0, a}});
  CHECK(b.tree.label(*b.tree.resolve_wlink(b.tree.root(), 1)) == ba);
}

TEST_CASE("first example string") {
  const auto w = oracle::from_text("aabaababa$");
  for (auto d : {Direction::kRightToLeft, Direction::kLeftToRight}) {
    Built b(d, 256, AlphaEngine::kFringe);
    feed(b, w);
    CHECK(describe_difference(naive_builder(b.buffer).nodes, canonical_form(b.tree)).empty());
    CHECK(b.tree.length() == w.size());
    REQUIRE(b.tree.lambda());
    CHECK(b.tree.node(*b.tree.lambda()).depth == 10);
  }
}

TEST_CASE("round reports") {
  Built b(Direction::kRightToLeft, 3, AlphaEngine::kFringe);
  b.buffer.append(2);
  auto r = b.tree.prepend(2);
  CHECK_FALSE(r.alpha);
  CHECK_FALSE(r.lambda_old);
  b.buffer.append(0);
  r = b.tree.prepend(0);
  CHECK_FALSE(r.alpha);  // new letter
  CHECK(r.root_children_before == 1);
  b.buffer.append(0);
  r = b.tree.prepend(0);
  REQUIRE(r.alpha);
  CHECK(*r.alpha == b.tree.root());
}

TEST_CASE("misuse is rejected") {
  TextBuffer buffer(Direction::kLeftToRight, 2);
  WeinerTree tree(buffer);
  CHECK_THROWS_AS(tree.prepend(0), UsageError);
  buffer.append(0);
  CHECK_THROWS_AS(WeinerTree{buffer}, UsageError);
}

TEST_CASE("engines agree on cost-free structure for a long input") {
  std::mt19937_64 rng(77);
  Built f(Direction::kLeftToRight, 4, AlphaEngine::kFringe);
  Built w(Direction::kLeftToRight, 4, AlphaEngine::kNaiveWalk);
  for (int i = 0; i < 5000; ++i) {
    const auto x = static_cast<LetterCode>(rng() % 4);
    f.buffer.append(x);
    w.buffer.append(x);
    const auto rf = f.tree.prepend(x);
    const auto rw = w.tree.prepend(x);
    REQUIRE(rf.alpha == rw.alpha);
    REQUIRE(rf.gamma == rw.gamma);
    REQUIRE(rf.gamma_created == rw.gamma_created);
  }
  CHECK(f.tree.node_count() == w.tree.node_count());
}
