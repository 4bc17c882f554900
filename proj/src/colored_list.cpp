#include "suffixient/colored_list.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

namespace {
std::atomic<std::uint32_t> next_list_id{1};
}

ColoredList::ColoredList() : id_(next_list_id.fetch_add(1)), core_(std::make_unique<Core>()) {
  core_->buckets.push_back({0, kNil, kNil, 0, 1});
  core_->items.push_back({0, 0, kNil, kNil});
}

std::uint32_t ColoredList::checked(ItemId item) const {
  if (item.list != id_) throw UsageError("item belongs to a different list");
  if (item.index >= core_->items.size()) {
    throw HandleError("stale item handle " + std::to_string(item.index));
  }
  return item.index;
}

ItemId ColoredList::insert_after(ItemId anchor) {
  ++ops_;
  return {id_, insert_raw(checked(anchor))};
}

std::array<ItemId, 2> ColoredList::insert_two_after(ItemId anchor) {
  ++ops_;
  const auto first = insert_raw(checked(anchor));
  const auto second = insert_raw(first);
  return {ItemId{id_, first}, ItemId{id_, second}};
}

std::uint32_t ColoredList::insert_raw(std::uint32_t anchor) {
  auto& core = *core_;
  auto gap_after = [&](std::uint32_t a) {
    const auto& it = core.items[a];
    const auto nxt = it.next;
    const auto upper =
        (nxt != kNil && core.items[nxt].bucket == it.bucket) ? core.items[nxt].label : kItemSpan;
    return upper - it.label;
  };
  if (gap_after(anchor) < 2) {
    const auto bucket = core.items[anchor].bucket;
    if (core.buckets[bucket].size >= kBucketCapacity) {
      split_bucket(bucket);
    } else {
      relabel_bucket(bucket);
    }
  }
  const auto gap = gap_after(anchor);
  if (gap < 2) throw InvariantViolation("item relabeling failed to open a gap");

  const auto index = static_cast<std::uint32_t>(core.items.size());
  const auto bucket = core.items[anchor].bucket;
  const auto nxt = core.items[anchor].next;
  core.items.push_back({bucket, core.items[anchor].label + gap / 2, anchor, nxt});
  core.items[anchor].next = index;
  if (nxt != kNil) core.items[nxt].prev = index;
  ++core.buckets[bucket].size;
  return index;
}

void ColoredList::relabel_bucket(std::uint32_t bucket) {
  auto& core = *core_;
  auto& b = core.buckets[bucket];
  const std::uint64_t spacing = kItemSpan / (b.size + 1);
  std::uint32_t cur = b.first;
  for (std::uint32_t k = 0; k < b.size; ++k) {
    core.items[cur].label = spacing * k;
    cur = core.items[cur].next;
  }
  core.relabel_work += b.size;
}

void ColoredList::split_bucket(std::uint32_t bucket) {
  auto& core = *core_;
  const auto fresh = insert_bucket_after(bucket);
  auto& old_b = core.buckets[bucket];
  const std::uint32_t keep = old_b.size / 2;
  std::uint32_t cur = old_b.first;
  for (std::uint32_t k = 0; k < keep; ++k) cur = core.items[cur].next;
  auto& new_b = core.buckets[fresh];
  new_b.first = cur;
  new_b.size = old_b.size - keep;
  old_b.size = keep;
  for (std::uint32_t k = 0; k < new_b.size; ++k) {
    core.items[cur].bucket = fresh;
    cur = core.items[cur].next;
  }
  relabel_bucket(bucket);
  relabel_bucket(fresh);
}

std::uint32_t ColoredList::insert_bucket_after(std::uint32_t bucket) {
  auto& core = *core_;
  auto gap_after = [&](std::uint32_t b) {
    const auto nxt = core.buckets[b].next;
    const auto upper = nxt != kNil ? core.buckets[nxt].label : kTopSpan;
    return upper - core.buckets[b].label;
  };
  if (gap_after(bucket) < 2) relabel_top(bucket);
  const auto gap = gap_after(bucket);
  if (gap < 2) throw InvariantViolation("bucket relabeling failed to open a gap");

  const auto index = static_cast<std::uint32_t>(core.buckets.size());
  const auto nxt = core.buckets[bucket].next;
  core.buckets.push_back({core.buckets[bucket].label + gap / 2, bucket, nxt, kNil, 0});
  core.buckets[bucket].next = index;
  if (nxt != kNil) core.buckets[nxt].prev = index;
  return index;
}

// Finds the smallest aligned label range around `bucket` whose density is
// below (2/T)^i for range size 2^i, then spreads its buckets evenly.
void ColoredList::relabel_top(std::uint32_t bucket) {
  constexpr double kThreshold = 2.0 / 1.5;
  auto& core = *core_;
  const auto label = core.buckets[bucket].label;
  for (int level = 1; level <= 62; ++level) {
    const std::uint64_t range = std::uint64_t{1} << level;
    const std::uint64_t lo = label & ~(range - 1);
    const std::uint64_t hi = lo + range;
    std::uint32_t first = bucket;
    std::uint64_t count = 1;
    while (core.buckets[first].prev != kNil && core.buckets[core.buckets[first].prev].label >= lo) {
      first = core.buckets[first].prev;
      ++count;
    }
    for (auto cur = core.buckets[bucket].next; cur != kNil && core.buckets[cur].label < hi;
         cur = core.buckets[cur].next) {
      ++count;
    }
    if (static_cast<double>(count + 1) >= std::pow(kThreshold, level)) continue;
    const std::uint64_t spacing = range / (count + 1);
    auto cur = first;
    for (std::uint64_t k = 0; k < count; ++k) {
      core.buckets[cur].label = lo + spacing * k;
      cur = core.buckets[cur].next;
    }
    core.relabel_work += count;
    return;
  }
  throw InvariantViolation("order-maintenance label space exhausted");
}

std::strong_ordering ColoredList::order(ItemId a, ItemId b) const {
  ++ops_;
  const auto ia = checked(a);
  const auto ib = checked(b);
  if (ia == ib) return std::strong_ordering::equal;
  return core_->less(ia, ib) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<ItemId> ColoredList::next(ItemId item) const {
  const auto n = core_->items[checked(item)].next;
  if (n == kNil) return std::nullopt;
  return ItemId{id_, n};
}

std::optional<ItemId> ColoredList::previous(ItemId item) const {
  const auto p = core_->items[checked(item)].prev;
  if (p == kNil) return std::nullopt;
  return ItemId{id_, p};
}

void ColoredList::set_color(ItemId item, ColorId color) {
  ++ops_;
  const auto index = checked(item);
  if (color >= kMaxColors) throw UsageError("color id " + std::to_string(color) + " too large");
  while (colors_.size() <= color) colors_.emplace_back(ByPosition{core_.get()});
  colors_[color].insert(index);
}

bool ColoredList::has_color(ItemId item, ColorId color) const {
  ++ops_;
  const auto index = checked(item);
  return color < colors_.size() && colors_[color].contains(index);
}

std::optional<ItemId> ColoredList::pred(ItemId item, ColorId color) const {
  ++ops_;
  const auto index = checked(item);
  if (color >= colors_.size()) return std::nullopt;
  const auto& index_set = colors_[color];
  auto it = index_set.lower_bound(index);
  if (it == index_set.begin()) return std::nullopt;
  return ItemId{id_, *std::prev(it)};
}

std::optional<ItemId> ColoredList::succ(ItemId item, ColorId color) const {
  ++ops_;
  const auto index = checked(item);
  if (color >= colors_.size()) return std::nullopt;
  const auto& index_set = colors_[color];
  auto it = index_set.upper_bound(index);
  if (it == index_set.end()) return std::nullopt;
  return ItemId{id_, *it};
}

}  // namespace suffixient
