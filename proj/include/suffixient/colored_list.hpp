#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace suffixient {

using ColorId = std::uint32_t;

/// Handle to an element of a ColoredList. Handles are never reused.
struct ItemId {
  std::uint32_t list = 0;
  std::uint32_t index = 0;

  friend constexpr bool operator==(const ItemId&, const ItemId&) = default;
};

/// Linked list with constant-time order comparison and per-color
/// predecessor/successor queries.
///
/// Order is maintained by a two-level labeling: items live in buckets of at
/// most kBucketCapacity elements with local 64-bit labels, and buckets carry
/// top-level labels that are redistributed over the smallest sparse enclosing
/// range when a gap closes. Each color keeps an ordered index of its items;
/// relabeling preserves relative order, so the indexes never need rekeying.
class ColoredList {
 public:
  static constexpr std::uint32_t kBucketCapacity = 64;
  static constexpr ColorId kMaxColors = 1u << 20;

  ColoredList();
  ColoredList(ColoredList&&) noexcept = default;
  ColoredList& operator=(ColoredList&&) noexcept = default;
  ColoredList(const ColoredList&) = delete;
  ColoredList& operator=(const ColoredList&) = delete;

  /// Distinguished first element. It is never colored by clients but may
  /// anchor insertions.
  ItemId head() const { return {id_, 0}; }

  ItemId insert_after(ItemId anchor);
  /// Inserts two adjacent items directly after `anchor`, in order.
  std::array<ItemId, 2> insert_two_after(ItemId anchor);

  std::strong_ordering order(ItemId a, ItemId b) const;
  std::optional<ItemId> next(ItemId item) const;
  std::optional<ItemId> previous(ItemId item) const;

  void set_color(ItemId item, ColorId color);
  bool has_color(ItemId item, ColorId color) const;

  /// Nearest strictly preceding item carrying `color`.
  std::optional<ItemId> pred(ItemId item, ColorId color) const;
  /// Nearest strictly following item carrying `color`.
  std::optional<ItemId> succ(ItemId item, ColorId color) const;

  /// Number of items, excluding the head.
  std::size_t size() const { return core_->items.size() - 1; }

  /// Public operations performed so far (queries included).
  std::uint64_t operation_count() const { return ops_; }
  /// Label writes caused by relabeling, for diagnostics.
  std::uint64_t relabel_work() const { return core_->relabel_work; }

 private:
  static constexpr std::uint32_t kNil = UINT32_MAX;
  static constexpr std::uint64_t kItemSpan = std::uint64_t{1} << 62;
  static constexpr std::uint64_t kTopSpan = std::uint64_t{1} << 62;

  struct Item {
    std::uint32_t bucket;
    std::uint64_t label;
    std::uint32_t prev;
    std::uint32_t next;
  };
  struct Bucket {
    std::uint64_t label;
    std::uint32_t prev;
    std::uint32_t next;
    std::uint32_t first;
    std::uint32_t size;
  };
  struct Core {
    std::vector<Item> items;
    std::vector<Bucket> buckets;
    std::uint64_t relabel_work = 0;

    bool less(std::uint32_t a, std::uint32_t b) const {
      const auto& ia = items[a];
      const auto& ib = items[b];
      const auto la = buckets[ia.bucket].label;
      const auto lb = buckets[ib.bucket].label;
      return la != lb ? la < lb : ia.label < ib.label;
    }
  };
  struct ByPosition {
    const Core* core;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return core->less(a, b); }
  };
  using ColorIndex = std::set<std::uint32_t, ByPosition>;

  std::uint32_t checked(ItemId item) const;
  std::uint32_t insert_raw(std::uint32_t anchor);
  void relabel_bucket(std::uint32_t bucket);
  void split_bucket(std::uint32_t bucket);
  std::uint32_t insert_bucket_after(std::uint32_t bucket);
  void relabel_top(std::uint32_t bucket);

  std::uint32_t id_;
  std::unique_ptr<Core> core_;
  std::vector<ColorIndex> colors_;
  mutable std::uint64_t ops_ = 0;
};

}  // namespace suffixient
