#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace suffixient {

/// Growth policy of the bit store.
///  - kDoubling: resize on demand (amortized).
///  - kIncremental: once half full, copy the store into one of twice the
///    size a few words per grow_to() call, bounding the work of every call.
enum class GrowthMode { kDoubling, kIncremental };

/// Growable bit vector with an exact population count. Setting a set bit or
/// clearing a clear bit throws InvariantViolation.
class GrowableBits {
 public:
  explicit GrowableBits(GrowthMode mode = GrowthMode::kDoubling);

  void set(std::size_t slot);
  void clear(std::size_t slot);
  bool test(std::size_t slot) const;
  std::size_t count() const { return ones_; }
  /// Set slots in increasing order.
  std::vector<std::size_t> ones() const;

  /// Announces that slots below `slots` may be touched soon.
  void grow_to(std::size_t slots);
  std::size_t capacity_bits() const;
  GrowthMode mode() const { return mode_; }

 private:
  static constexpr std::size_t kMigrationWordsPerCall = 4;

  std::uint64_t word(std::size_t w) const;
  std::uint64_t& word_ref(std::size_t w);
  void ensure_words(std::size_t words);
  void migrate(std::size_t budget);

  GrowthMode mode_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> next_;   // migration target, filled front to back
  bool migrating_ = false;
  std::size_t ones_ = 0;
};

}  // namespace suffixient
