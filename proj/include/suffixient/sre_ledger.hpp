#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "suffixient/position_tracker.hpp"
#include "suffixient/text_model.hpp"
#include "suffixient/tree_topology.hpp"
#include "suffixient/weiner_tree.hpp"

namespace suffixient {

/// A supermaximal right-extension (u, x), named by the locus of u (or of its
/// reverse, for left-to-right input) and the letter x.
struct SreKey {
  NodeId node;
  LetterCode letter = 0;

  friend constexpr bool operator==(const SreKey&, const SreKey&) = default;
  friend constexpr auto operator<=>(const SreKey&, const SreKey&) = default;
};

struct SreEntry {
  SreKey key;
  Coord position;

  friend constexpr bool operator==(const SreEntry&, const SreEntry&) = default;
};

/// Changes caused by one letter.
struct DeltaReport {
  std::size_t step = 0;  // 0-based arrival index
  LetterCode letter = 0;
  std::vector<SreEntry> added;
  std::vector<SreEntry> removed;
  std::size_t chi = 0;
  OpCounters cost;
};

/// Live SREs with their recorded end positions, mirrored into a bit vector
/// over position slots (RTL slot = -offset, LTR slot = position - 1).
class SreLedger {
 public:
  explicit SreLedger(Direction direction, GrowthMode growth = GrowthMode::kDoubling);

  /// Throws InvariantViolation when the key is live or the slot is taken.
  void add(SreKey key, Coord position);
  /// Removes the key if live and returns its recorded position.
  std::optional<Coord> remove(SreKey key);
  bool contains(SreKey key) const;
  std::optional<Coord> position(SreKey key) const;

  std::size_t size() const { return live_.size(); }
  std::vector<SreEntry> entries() const;
  const GrowableBits& bits() const { return bits_; }
  void reserve_slots(std::size_t slots) { bits_.grow_to(slots); }

 private:
  static std::uint64_t pack(SreKey k) {
    return (std::uint64_t{k.node.value} << 32) | k.letter;
  }
  std::size_t slot(Coord c) const;

  Direction direction_;
  std::unordered_map<std::uint64_t, Coord> live_;
  GrowableBits bits_;
};

struct MaintainerOptions {
  std::uint32_t alphabet_size = 256;
  AlphaEngine engine = AlphaEngine::kFringe;
  GrowthMode growth = GrowthMode::kDoubling;
  /// Test hook: drop every removal so that verification must fail.
  bool inject_fault = false;
};

/// Key set of a ledger as (u, x) pairs over the logical string.
using SrePairs = std::vector<std::pair<std::vector<LetterCode>, LetterCode>>;

}  // namespace suffixient
