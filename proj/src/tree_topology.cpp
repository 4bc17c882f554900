#include "suffixient/tree_topology.hpp"

#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

TreeTopology::TreeTopology() {
  const auto [open, close] = list_.insert_two_after(list_.head());
  owner_.resize(close.index + 1);
  register_node(kRootNode, open, close);
}

const TreeTopology::Handle& TreeTopology::handle(NodeId node) const {
  if (node.value >= nodes_.size()) {
    throw HandleError("unknown tree node " + std::to_string(node.value));
  }
  return nodes_[node.value];
}

NodeId TreeTopology::register_node(NodeId parent, ItemId open, ItemId close) {
  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({parent, open, close});
  if (owner_.size() <= std::max(open.index, close.index)) {
    owner_.resize(std::max(open.index, close.index) + 1);
  }
  owner_[open.index] = id;
  owner_[close.index] = id;
  return id;
}

NodeId TreeTopology::add_leaf(NodeId parent) {
  const auto close_parent = handle(parent).close;
  const auto anchor = *list_.previous(close_parent);
  const auto [open, close] = list_.insert_two_after(anchor);
  return register_node(parent, open, close);
}

NodeId TreeTopology::subdivide_edge(NodeId parent, NodeId child) {
  const auto& c = handle(child);
  handle(parent);
  if (child == root() || c.parent != parent) {
    throw UsageError("subdivide_edge: nodes are not parent and child");
  }
  const auto child_open = c.open;
  const auto child_close = c.close;
  const auto open = list_.insert_after(*list_.previous(child_open));
  const auto close = list_.insert_after(child_close);
  const auto mid = register_node(parent, open, close);
  nodes_[child.value].parent = mid;
  return mid;
}

bool TreeTopology::is_ancestor(NodeId a, NodeId b) const {
  const auto& ha = handle(a);
  const auto& hb = handle(b);
  return list_.order(ha.open, hb.open) <= 0 && list_.order(hb.close, ha.close) <= 0;
}

NodeId TreeTopology::lca(NodeId a, NodeId b) const {
  auto cur = a;
  while (!is_ancestor(cur, b)) {
    ++climb_steps_;
    cur = parent(cur);
  }
  return cur;
}

void TreeTopology::mark(NodeId node, ColorId color) { list_.set_color(handle(node).open, color); }

bool TreeTopology::is_marked(NodeId node, ColorId color) const {
  return list_.has_color(handle(node).open, color);
}

std::optional<NodeId> TreeTopology::lowest_colored_ancestor(NodeId node, ColorId color) const {
  const auto& h = handle(node);
  const auto left = list_.pred(h.open, color);
  const auto right = list_.succ(h.close, color);
  std::optional<NodeId> from_left;
  std::optional<NodeId> from_right;
  if (left) from_left = lca(owner(*left), node);
  if (right) from_right = lca(owner(*right), node);
  if (!from_left) return from_right;
  if (!from_right) return from_left;
  return is_ancestor(*from_left, *from_right) ? from_right : from_left;
}

std::optional<NodeId> TreeTopology::lowest_colored_ancestor_by_walk(NodeId node,
                                                                    ColorId color) const {
  auto cur = node;
  while (cur != root()) {
    ++climb_steps_;
    cur = parent(cur);
    if (first_marked_in_subtree(cur, color)) return cur;
  }
  return std::nullopt;
}

std::optional<NodeId> TreeTopology::first_marked_in_subtree(NodeId node, ColorId color) const {
  const auto& h = handle(node);
  if (list_.has_color(h.open, color)) return node;
  const auto s = list_.succ(h.open, color);
  if (s && list_.order(*s, h.close) < 0) return owner(*s);
  return std::nullopt;
}

}  // namespace suffixient
