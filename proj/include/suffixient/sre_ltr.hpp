#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "suffixient/sre_ledger.hpp"
#include "suffixient/text_model.hpp"
#include "suffixient/weiner_tree.hpp"

namespace suffixient {

/// Maintains the supermaximal right-extensions and the leftmost-ends
/// smallest suffixient set of a text read from its first letter to its last,
/// over Weiner's tree of the reversed text. No sentinel is needed.
///
/// Which nodes have two or more defined W-links is tracked with one extra
/// color (the tree's multi_color()): the parent of the full-string leaf is
/// marked the first time it gains a second link, and any ancestor of a marked
/// node counts as marked.
class LtrMaintainer {
 public:
  explicit LtrMaintainer(MaintainerOptions options = {});

  DeltaReport feed(LetterCode x);

  /// From-left positions of the current SSS, ascending.
  std::vector<Coord> current_sss() const;
  std::vector<std::int64_t> sss_positions() const;
  std::size_t chi() const { return ledger_.size(); }
  /// chi of every prefix fed so far.
  const std::vector<std::size_t>& chi_trace() const { return chi_trace_; }
  SrePairs sre_pairs() const;

  const TextBuffer& buffer() const { return *buffer_; }
  const WeinerTree& tree() const { return tree_; }
  const SreLedger& ledger() const { return ledger_; }

 private:
  Coord link_position(NodeId node, LetterCode c) const;

  MaintainerOptions options_;
  std::unique_ptr<TextBuffer> buffer_;
  WeinerTree tree_;
  SreLedger ledger_;
  std::vector<std::size_t> chi_trace_;
};

}  // namespace suffixient
