#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suffixient/text_model.hpp"
#include "suffixient/weiner_tree.hpp"

namespace suffixient {

using Label = std::vector<LetterCode>;

/// A tree node named by its label, so trees built by different means can be
/// compared directly.
struct CanonicalNode {
  std::int64_t depth = 0;
  std::optional<Label> parent;           // none for the root
  std::map<LetterCode, Label> children;  // first edge letter -> child label
  std::optional<Coord> rec_pos;          // none for the root
  std::map<LetterCode, Label> hard_links;

  friend bool operator==(const CanonicalNode&, const CanonicalNode&) = default;
};

using CanonicalTree = std::map<Label, CanonicalNode>;

struct WLink {
  Label destination;
  bool hard = false;

  friend bool operator==(const WLink&, const WLink&) = default;
};

/// Suffix tree of the buffer's text in prepend order, built from definitions:
/// nodes are the root, every suffix and every right-maximal substring; the
/// x-link of u is defined iff xu is a substring and leads to locus(xu) or the
/// closest node below it.
struct NaiveTree {
  CanonicalTree nodes;
  std::map<Label, std::map<LetterCode, WLink>> links;
};

inline constexpr std::size_t kNaiveBuilderMaxLength = 256;

NaiveTree naive_builder(const TextBuffer& buffer,
                        std::size_t max_length = kNaiveBuilderMaxLength);

CanonicalTree canonical_form(const WeinerTree& tree);

/// First difference between two canonical trees, or an empty string.
std::string describe_difference(const CanonicalTree& expected, const CanonicalTree& actual);

std::string label_to_string(const Label& label);

}  // namespace suffixient
