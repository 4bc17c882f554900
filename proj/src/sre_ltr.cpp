#include "suffixient/sre_ltr.hpp"

#include <algorithm>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

LtrMaintainer::LtrMaintainer(MaintainerOptions options)
    : options_(options),
      buffer_(std::make_unique<TextBuffer>(Direction::kLeftToRight, options.alphabet_size)),
      tree_(*buffer_, options.engine),
      ledger_(Direction::kLeftToRight, options.growth) {}

// Leftmost end in w of u·c, where node is the locus of reverse(u): the
// recorded position of the node the c-link leads to.
Coord LtrMaintainer::link_position(NodeId node, LetterCode c) const {
  const auto dest = tree_.resolve_wlink(node, c);
  if (!dest) throw InvariantViolation("SRE letter without a defined W-link");
  return tree_.node(*dest).rec_pos;
}

DeltaReport LtrMaintainer::feed(LetterCode x) {
  if (x >= options_.alphabet_size) {
    throw AlphabetError("letter " + std::to_string(x) + " outside alphabet");
  }
  const auto before = tree_.counters();
  DeltaReport d;
  d.step = buffer_->size();
  d.letter = x;

  const auto leaf = tree_.lambda();
  if (!leaf) {
    buffer_->append(x);
    ledger_.reserve_slots(1);
    tree_.prepend(x);
    d.cost = tree_.counters() - before;
    chi_trace_.push_back(0);
    return d;
  }

  // Everything below is read from the tree as it was before the round.
  const auto& topo = tree_.topology();
  const auto parent = topo.parent(*leaf);
  const auto multi = tree_.lowest_colored_ancestor(*leaf, tree_.multi_color());
  const bool parent_was_multi = multi && *multi == parent;
  std::optional<LetterCode> sole;
  if (!parent_was_multi) {
    // Every descendant's link letters are a subset of the parent's single
    // letter, so any hard link in the subtree names it.
    const auto holder = topo.first_marked_in_subtree(parent, tree_.hard_color());
    if (!holder) throw InvariantViolation("node without any W-link below the leaf");
    sole = tree_.node(*holder).hard_links.front().first;
  }

  buffer_->append(x);
  ledger_.reserve_slots(buffer_->size());
  const auto round = tree_.prepend(x);

  if (round.alpha != parent) {
    if (!options_.inject_fault) {
      if (round.alpha) {
        if (auto pos = ledger_.remove({*round.alpha, x})) d.removed.push_back({{*round.alpha, x}, *pos});
      }
      if (sole && multi) {
        if (auto pos = ledger_.remove({*multi, *sole})) d.removed.push_back({{*multi, *sole}, *pos});
      }
    }
    const SreEntry fresh{{parent, x}, link_position(parent, x)};
    ledger_.add(fresh.key, fresh.position);
    d.added.push_back(fresh);
    if (sole) {
      const SreEntry other{{parent, *sole}, link_position(parent, *sole)};
      ledger_.add(other.key, other.position);
      d.added.push_back(other);
      tree_.topology().mark(parent, tree_.multi_color());
    }
  }
  d.chi = ledger_.size();
  d.cost = tree_.counters() - before;
  chi_trace_.push_back(d.chi);
  return d;
}

std::vector<Coord> LtrMaintainer::current_sss() const {
  std::vector<Coord> out;
  for (auto slot : ledger_.bits().ones()) {
    out.push_back(Coord::from_left(static_cast<std::int64_t>(slot) + 1));
  }
  return out;
}

std::vector<std::int64_t> LtrMaintainer::sss_positions() const {
  std::vector<std::int64_t> out;
  for (auto c : current_sss()) out.push_back(c.value);
  return out;
}

SrePairs LtrMaintainer::sre_pairs() const {
  SrePairs out;
  for (const auto& e : ledger_.entries()) {
    auto u = tree_.label(e.key.node);
    std::reverse(u.begin(), u.end());
    out.emplace_back(std::move(u), e.key.letter);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace suffixient
