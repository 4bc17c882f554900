#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "suffixient/sre_ledger.hpp"
#include "suffixient/text_model.hpp"
#include "suffixient/weiner_tree.hpp"

namespace suffixient {

/// Maintains the supermaximal right-extensions and the rightmost-ends
/// smallest suffixient set of a text read from its last letter to its first.
/// The first letter fed is the sentinel and may not occur again.
class RtlMaintainer {
 public:
  explicit RtlMaintainer(MaintainerOptions options = {});

  DeltaReport feed(LetterCode x);
  /// Declares the run complete; further feeds throw StateError.
  void finish() { finished_ = true; }
  bool finished() const { return finished_; }

  /// From-left positions of the current SSS, ascending.
  std::vector<Coord> current_sss() const;
  std::vector<std::int64_t> sss_positions() const;
  std::size_t chi() const { return ledger_.size(); }
  const std::vector<std::size_t>& chi_trace() const { return chi_trace_; }
  SrePairs sre_pairs() const;

  std::optional<LetterCode> sentinel() const { return sentinel_; }
  const TextBuffer& buffer() const { return *buffer_; }
  const WeinerTree& tree() const { return tree_; }
  const SreLedger& ledger() const { return ledger_; }

 private:
  Coord edge_position(NodeId node, LetterCode c) const;
  void add(DeltaReport& d, NodeId node, LetterCode c);
  void remove(DeltaReport& d, NodeId node, LetterCode c);

  MaintainerOptions options_;
  std::unique_ptr<TextBuffer> buffer_;
  WeinerTree tree_;
  SreLedger ledger_;
  std::optional<LetterCode> sentinel_;
  std::vector<std::size_t> chi_trace_;
  bool finished_ = false;
};

}  // namespace suffixient
