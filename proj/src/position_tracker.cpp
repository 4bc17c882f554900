#include "suffixient/position_tracker.hpp"

#include <bit>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

GrowableBits::GrowableBits(GrowthMode mode) : mode_(mode), words_(1, 0) {}

std::size_t GrowableBits::capacity_bits() const {
  return (migrating_ ? next_.capacity() : words_.size()) * 64;
}

std::uint64_t GrowableBits::word(std::size_t w) const {
  if (migrating_ && w < next_.size()) return next_[w];
  return w < words_.size() ? words_[w] : 0;
}

std::uint64_t& GrowableBits::word_ref(std::size_t w) {
  ensure_words(w + 1);
  if (migrating_ && w < next_.size()) return next_[w];
  return words_[w];
}

void GrowableBits::migrate(std::size_t budget) {
  const std::size_t target = words_.size() * 2;
  while (budget-- > 0 && next_.size() < target) {
    next_.push_back(next_.size() < words_.size() ? words_[next_.size()] : 0);
  }
  if (next_.size() == target) {
    words_.swap(next_);
    next_.clear();
    next_.shrink_to_fit();
    migrating_ = false;
  }
}

void GrowableBits::ensure_words(std::size_t words) {
  if (mode_ == GrowthMode::kDoubling) {
    if (words > words_.size()) words_.resize(std::max(words, words_.size() * 2), 0);
    return;
  }
  // Requests past the current capacity finish any migration at once.
  while (words > words_.size()) {
    if (!migrating_) {
      next_.reserve(words_.size() * 2);
      migrating_ = true;
    }
    migrate(SIZE_MAX);
  }
}

void GrowableBits::grow_to(std::size_t slots) {
  const std::size_t words = (slots + 63) / 64;
  if (mode_ == GrowthMode::kDoubling) {
    ensure_words(words);
    return;
  }
  if (words > words_.size()) {
    ensure_words(words);
    return;
  }
  if (!migrating_ && 2 * words >= words_.size()) {
    next_.reserve(words_.size() * 2);
    migrating_ = true;
  }
  if (migrating_) migrate(kMigrationWordsPerCall);
}

void GrowableBits::set(std::size_t slot) {
  auto& w = word_ref(slot / 64);
  const auto bit = std::uint64_t{1} << (slot % 64);
  if (w & bit) throw InvariantViolation("slot " + std::to_string(slot) + " is already set");
  w |= bit;
  ++ones_;
}

void GrowableBits::clear(std::size_t slot) {
  if (!test(slot)) throw InvariantViolation("slot " + std::to_string(slot) + " is not set");
  word_ref(slot / 64) &= ~(std::uint64_t{1} << (slot % 64));
  --ones_;
}

bool GrowableBits::test(std::size_t slot) const {
  return (word(slot / 64) >> (slot % 64)) & 1u;
}

std::vector<std::size_t> GrowableBits::ones() const {
  std::vector<std::size_t> out;
  out.reserve(ones_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = word(w);
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace suffixient
