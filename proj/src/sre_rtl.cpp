#include "suffixient/sre_rtl.hpp"

#include <algorithm>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

RtlMaintainer::RtlMaintainer(MaintainerOptions options)
    : options_(options),
      buffer_(std::make_unique<TextBuffer>(Direction::kRightToLeft, options.alphabet_size)),
      tree_(*buffer_, options.engine),
      ledger_(Direction::kRightToLeft, options.growth) {}

// Rightmost end of label(node)·c, read off the child below the c-edge.
Coord RtlMaintainer::edge_position(NodeId node, LetterCode c) const {
  const auto below = tree_.child(node, c);
  if (!below) throw InvariantViolation("SRE without a descending edge");
  const auto& d = tree_.node(*below);
  const auto gap = d.depth - tree_.node(node).depth - 1;
  return Coord::from_right(d.rec_pos.value - gap);
}

void RtlMaintainer::add(DeltaReport& d, NodeId node, LetterCode c) {
  const SreEntry e{{node, c}, edge_position(node, c)};
  ledger_.add(e.key, e.position);
  d.added.push_back(e);
}

void RtlMaintainer::remove(DeltaReport& d, NodeId node, LetterCode c) {
  if (options_.inject_fault) return;
  if (auto pos = ledger_.remove({node, c})) d.removed.push_back({{node, c}, *pos});
}

DeltaReport RtlMaintainer::feed(LetterCode x) {
  if (finished_) throw StateError("feed after the run was finished");
  if (x >= options_.alphabet_size) {
    throw AlphabetError("letter " + std::to_string(x) + " outside alphabet");
  }
  if (sentinel_ && x == *sentinel_) {
    throw InputError("sentinel letter " + std::to_string(x) + " repeated");
  }
  const auto before = tree_.counters();
  DeltaReport d;
  d.step = buffer_->size();
  d.letter = x;
  buffer_->append(x);
  if (!sentinel_) sentinel_ = x;
  ledger_.reserve_slots(buffer_->size());
  const auto round = tree_.prepend(x);

  if (!round.lambda_old) {
    // A single letter has no right-maximal substring.
  } else if (!round.alpha) {
    // x is new: the root gains an x-edge, and becomes right-maximal if it
    // had a single child before.
    add(d, tree_.root(), x);
    if (round.root_children_before == 1) {
      const auto& kids = tree_.node(tree_.root()).children;
      const auto other = std::find_if(kids.begin(), kids.end(),
                                      [&](const auto& e) { return e.first != x; });
      add(d, tree_.root(), other->first);
    }
  } else {
    remove(d, *round.alpha, round.y);
    if (round.gamma_created) remove(d, *round.alpha, *round.z);
    add(d, round.gamma, round.y);
    if (round.gamma_created) add(d, round.gamma, *round.z);
  }
  d.chi = ledger_.size();
  d.cost = tree_.counters() - before;
  chi_trace_.push_back(d.chi);
  return d;
}

std::vector<Coord> RtlMaintainer::current_sss() const {
  std::vector<Coord> out;
  const auto n = static_cast<std::int64_t>(buffer_->size());
  const auto slots = ledger_.bits().ones();
  out.reserve(slots.size());
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    out.push_back(Coord::from_left(n - static_cast<std::int64_t>(*it)));
  }
  return out;
}

std::vector<std::int64_t> RtlMaintainer::sss_positions() const {
  std::vector<std::int64_t> out;
  for (auto c : current_sss()) out.push_back(c.value);
  return out;
}

SrePairs RtlMaintainer::sre_pairs() const {
  SrePairs out;
  for (const auto& e : ledger_.entries()) out.emplace_back(tree_.label(e.key.node), e.key.letter);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace suffixient
