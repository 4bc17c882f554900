#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "suffixient/colored_list.hpp"

namespace suffixient {

struct NodeId {
  std::uint32_t value = 0;

  friend constexpr bool operator==(const NodeId&, const NodeId&) = default;
  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline constexpr NodeId kRootNode{0};

/// A dynamic rooted tree embedded in an Euler tour list. Every node owns an
/// open and a close item; the subtree of a node is the closed interval
/// between them. Explicit color marks live on open items only, and a node
/// counts as colored by c when its interval contains a c-mark.
class TreeTopology {
 public:
  struct Handle {
    NodeId parent;
    ItemId open;
    ItemId close;
  };

  TreeTopology();

  NodeId root() const { return kRootNode; }
  std::size_t size() const { return nodes_.size(); }
  const Handle& handle(NodeId node) const;
  NodeId parent(NodeId node) const { return handle(node).parent; }

  /// New last child of `parent`.
  NodeId add_leaf(NodeId parent);
  /// New node on the edge parent -> child. Throws UsageError when the two
  /// are not adjacent.
  NodeId subdivide_edge(NodeId parent, NodeId child);

  /// True iff `a` is an ancestor of `b` or a == b.
  bool is_ancestor(NodeId a, NodeId b) const;
  NodeId lca(NodeId a, NodeId b) const;

  void mark(NodeId node, ColorId color);
  bool is_marked(NodeId node, ColorId color) const;

  /// Lowest proper ancestor whose subtree holds a `color` mark, found from the
  /// colored neighbours of the node's Euler interval. The node's own subtree
  /// must carry no such mark.
  std::optional<NodeId> lowest_colored_ancestor(NodeId node, ColorId color) const;
  /// Same answer by walking parents and testing each subtree.
  std::optional<NodeId> lowest_colored_ancestor_by_walk(NodeId node, ColorId color) const;

  /// The node itself if marked, else the first marked node of its subtree in
  /// Euler order, else nothing.
  std::optional<NodeId> first_marked_in_subtree(NodeId node, ColorId color) const;

  const ColoredList& list() const { return list_; }
  NodeId owner(ItemId item) const { return owner_[item.index]; }

  std::uint64_t list_ops() const { return list_.operation_count(); }
  std::uint64_t climb_steps() const { return climb_steps_; }

 private:
  NodeId register_node(NodeId parent, ItemId open, ItemId close);

  ColoredList list_;
  std::vector<Handle> nodes_;
  std::vector<NodeId> owner_;
  mutable std::uint64_t climb_steps_ = 0;
};

}  // namespace suffixient
