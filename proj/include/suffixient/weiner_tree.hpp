#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "suffixient/text_model.hpp"
#include "suffixient/tree_topology.hpp"

namespace suffixient {

/// How the lowest x-colored ancestor of the full-string leaf is found.
///  - kFringe: colored predecessor/successor around the leaf plus two LCAs.
///  - kNaiveWalk: climb from the leaf testing each ancestor's subtree.
enum class AlphaEngine { kFringe, kNaiveWalk };

/// Per-run work counters. Snapshots are subtracted to get per-step costs.
struct OpCounters {
  std::uint64_t list_ops = 0;
  std::uint64_t lca_steps = 0;
  std::uint64_t tree_updates = 0;

  std::uint64_t total() const { return list_ops + lca_steps + tree_updates; }
  OpCounters operator-(const OpCounters& o) const {
    return {list_ops - o.list_ops, lca_steps - o.lca_steps, tree_updates - o.tree_updates};
  }
};

struct STNode {
  NodeId parent;
  std::int64_t depth = 0;
  /// RTL: from-right end offset of the rightmost occurrence of the label.
  /// LTR: from-left end position in w of the leftmost occurrence of the
  /// reversed label. Written once at creation.
  Coord rec_pos;
  /// first edge letter -> child, sorted by letter
  std::vector<std::pair<LetterCode, NodeId>> children;
  /// letter -> destination, sorted by letter
  std::vector<std::pair<LetterCode, NodeId>> hard_links;
};

/// What one prepend did.
struct RoundReport {
  LetterCode x = 0;
  std::optional<NodeId> lambda_old;
  NodeId lambda_new;
  std::optional<NodeId> alpha;
  NodeId gamma;
  bool gamma_created = false;
  LetterCode y = 0;
  std::optional<LetterCode> z;
  std::size_t root_children_before = 0;
};

/// Weiner's suffix tree over the text T read in prepend order: the logical
/// string for RTL input, its reverse for LTR input. Only hard W-links are
/// stored; soft links are recovered from the closest hard-linked descendant.
///
/// Every suffix of T is an explicit node, so without a sentinel a former
/// leaf may gain children.
///
/// Colors on the topology: letter codes for hard links, then multi_color()
/// (left to clients) and hard_color() (node has at least one hard link).
class WeinerTree {
 public:
  /// `buffer` must outlive the tree and be empty.
  explicit WeinerTree(const TextBuffer& buffer, AlphaEngine engine = AlphaEngine::kFringe);

  /// Runs one round for the letter just appended to the buffer.
  RoundReport prepend(LetterCode x);

  /// Destination of the x-link of `node` (hard or recovered soft), or nothing
  /// when the link is undefined.
  std::optional<NodeId> resolve_wlink(NodeId node, LetterCode x) const;

  /// Lowest proper ancestor of `node` colored by `color`, using the
  /// configured engine.
  std::optional<NodeId> lowest_colored_ancestor(NodeId node, ColorId color) const;

  const STNode& node(NodeId id) const { return nodes_.at(id.value); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t length() const { return length_; }
  std::optional<NodeId> lambda() const { return lambda_; }
  NodeId root() const { return kRootNode; }

  std::optional<NodeId> child(NodeId node, LetterCode first) const;
  std::optional<NodeId> hard_link(NodeId node, LetterCode x) const;

  /// Letter `j` (1-based) of the node's label.
  LetterCode label_letter(NodeId node, std::int64_t j) const;
  std::vector<LetterCode> label(NodeId node) const;
  /// Length of the shortest suffix of T that starts with the node's label.
  std::int64_t anchor(NodeId node) const;

  const TreeTopology& topology() const { return topo_; }
  TreeTopology& topology() { return topo_; }
  ColorId multi_color() const { return sigma_; }
  ColorId hard_color() const { return sigma_ + 1; }
  AlphaEngine engine() const { return engine_; }
  const TextBuffer& buffer() const { return *buffer_; }

  OpCounters counters() const;

 private:
  NodeId create_node(NodeId parent, std::int64_t depth, std::int64_t anchor);
  NodeId attach_leaf(NodeId parent, std::int64_t depth);
  NodeId split_above(NodeId child, std::int64_t depth);
  void set_hard_link(NodeId from, LetterCode x, NodeId to);
  Coord coord_for(std::int64_t depth, std::int64_t anchor) const;

  const TextBuffer* buffer_;
  AlphaEngine engine_;
  ColorId sigma_;
  TreeTopology topo_;
  std::vector<STNode> nodes_;
  std::optional<NodeId> lambda_;
  std::size_t length_ = 0;
  std::uint64_t tree_updates_ = 0;
};

}  // namespace suffixient
