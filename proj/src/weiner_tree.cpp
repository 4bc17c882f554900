#include "suffixient/weiner_tree.hpp"

#include <algorithm>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

namespace {

using Entries = std::vector<std::pair<LetterCode, NodeId>>;

std::optional<NodeId> find_entry(const Entries& entries, LetterCode key) {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, LetterCode k) { return e.first < k; });
  if (it == entries.end() || it->first != key) return std::nullopt;
  return it->second;
}

void put_entry(Entries& entries, LetterCode key, NodeId value) {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, LetterCode k) { return e.first < k; });
  if (it != entries.end() && it->first == key) {
    it->second = value;
  } else {
    entries.insert(it, {key, value});
  }
}

}  // namespace

WeinerTree::WeinerTree(const TextBuffer& buffer, AlphaEngine engine)
    : buffer_(&buffer), engine_(engine), sigma_(buffer.alphabet_size()) {
  if (!buffer.empty()) throw UsageError("WeinerTree requires an empty buffer");
  nodes_.push_back({kRootNode, 0, coord_for(0, 0), {}, {}});
}

Coord WeinerTree::coord_for(std::int64_t depth, std::int64_t anchor) const {
  if (buffer_->direction() == Direction::kRightToLeft) return Coord::from_right(depth - anchor);
  return Coord::from_left(anchor);
}

std::int64_t WeinerTree::anchor(NodeId node) const {
  const auto& n = nodes_.at(node.value);
  if (buffer_->direction() == Direction::kRightToLeft) return n.depth - n.rec_pos.value;
  return n.rec_pos.value;
}

LetterCode WeinerTree::label_letter(NodeId node, std::int64_t j) const {
  return buffer_->arrival(static_cast<std::size_t>(anchor(node) - j));
}

std::vector<LetterCode> WeinerTree::label(NodeId node) const {
  const auto depth = nodes_.at(node.value).depth;
  std::vector<LetterCode> out;
  out.reserve(static_cast<std::size_t>(depth));
  for (std::int64_t j = 1; j <= depth; ++j) out.push_back(label_letter(node, j));
  return out;
}

std::optional<NodeId> WeinerTree::child(NodeId node, LetterCode first) const {
  return find_entry(nodes_.at(node.value).children, first);
}

std::optional<NodeId> WeinerTree::hard_link(NodeId node, LetterCode x) const {
  return find_entry(nodes_.at(node.value).hard_links, x);
}

NodeId WeinerTree::create_node(NodeId parent, std::int64_t depth, std::int64_t anchor) {
  ++tree_updates_;
  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({parent, depth, coord_for(depth, anchor), {}, {}});
  return id;
}

NodeId WeinerTree::attach_leaf(NodeId parent, std::int64_t depth) {
  const auto topo_id = topo_.add_leaf(parent);
  const auto leaf = create_node(parent, depth, depth);
  if (topo_id != leaf) throw InvariantViolation("tree and topology node ids diverged");
  const auto first = label_letter(leaf, nodes_[parent.value].depth + 1);
  put_entry(nodes_[parent.value].children, first, leaf);
  ++tree_updates_;
  return leaf;
}

NodeId WeinerTree::split_above(NodeId child, std::int64_t depth) {
  const auto parent = nodes_[child.value].parent;
  const auto topo_id = topo_.subdivide_edge(parent, child);
  const auto mid = create_node(parent, depth, anchor(child));
  if (topo_id != mid) throw InvariantViolation("tree and topology node ids diverged");
  put_entry(nodes_[parent.value].children, label_letter(child, nodes_[parent.value].depth + 1),
            mid);
  put_entry(nodes_[mid.value].children, label_letter(child, depth + 1), child);
  nodes_[child.value].parent = mid;
  tree_updates_ += 2;
  return mid;
}

void WeinerTree::set_hard_link(NodeId from, LetterCode x, NodeId to) {
  put_entry(nodes_[from.value].hard_links, x, to);
  topo_.mark(from, x);
  topo_.mark(from, hard_color());
  ++tree_updates_;
}

std::optional<NodeId> WeinerTree::lowest_colored_ancestor(NodeId node, ColorId color) const {
  if (engine_ == AlphaEngine::kFringe) return topo_.lowest_colored_ancestor(node, color);
  return topo_.lowest_colored_ancestor_by_walk(node, color);
}

std::optional<NodeId> WeinerTree::resolve_wlink(NodeId node, LetterCode x) const {
  if (auto hard = hard_link(node, x)) return hard;
  const auto closest = topo_.first_marked_in_subtree(node, x);
  if (!closest) return std::nullopt;
  return hard_link(*closest, x);
}

RoundReport WeinerTree::prepend(LetterCode x) {
  if (buffer_->size() != length_ + 1 || buffer_->arrival(length_) != x) {
    throw UsageError("prepend: letter must be appended to the buffer first (buffer has " +
                     std::to_string(buffer_->size()) + " letters, tree " +
                     std::to_string(length_) + ")");
  }
  const auto n_old = static_cast<std::int64_t>(length_);
  RoundReport report;
  report.x = x;
  report.lambda_old = lambda_;
  report.root_children_before = nodes_[0].children.size();
  report.gamma = root();

  if (!lambda_) {
    const auto leaf = attach_leaf(root(), 1);
    set_hard_link(root(), x, leaf);
    report.lambda_new = leaf;
    report.y = x;
    lambda_ = leaf;
    length_ = 1;
    return report;
  }

  // Letter k (1-based) of T before this round.
  auto old_letter = [&](std::int64_t k) { return buffer_->arrival(static_cast<std::size_t>(n_old - k)); };

  const auto alpha = lowest_colored_ancestor(*lambda_, x);
  report.alpha = alpha;
  NodeId gamma = root();
  if (!alpha) {
    report.y = old_letter(1);
  } else {
    const auto alpha_depth = nodes_[alpha->value].depth;
    report.y = old_letter(alpha_depth + 1);
    if (auto hard = hard_link(*alpha, x)) {
      gamma = *hard;
      if (nodes_[gamma.value].depth != alpha_depth + 1) {
        throw InvariantViolation("hard W-link destination has unexpected depth");
      }
    } else {
      const auto closest = topo_.first_marked_in_subtree(*alpha, x);
      if (!closest || *closest == *alpha) {
        throw InvariantViolation("soft W-link without a hard-linked descendant");
      }
      const auto below = *hard_link(*closest, x);
      gamma = split_above(below, alpha_depth + 1);
      report.gamma_created = true;
      report.z = label_letter(below, alpha_depth + 2);
    }
  }
  report.gamma = gamma;

  const auto leaf = attach_leaf(gamma, n_old + 1);
  set_hard_link(*lambda_, x, leaf);
  if (alpha) set_hard_link(*alpha, x, gamma);
  report.lambda_new = leaf;
  lambda_ = leaf;
  length_ = static_cast<std::size_t>(n_old + 1);
  return report;
}

OpCounters WeinerTree::counters() const {
  return {topo_.list_ops(), topo_.climb_steps(), tree_updates_};
}

}  // namespace suffixient
