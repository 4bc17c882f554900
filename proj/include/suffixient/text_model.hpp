#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace suffixient {

using LetterCode = std::uint32_t;

/// Direction in which letters arrive.
///  - kRightToLeft: arrival index i is the letter at from-right offset -i.
///  - kLeftToRight: arrival index i is the letter at from-left position i + 1.
enum class Direction { kRightToLeft, kLeftToRight };

enum class CoordScheme { kFromRight, kFromLeft };

/// A position in the logical string. FROM_RIGHT values are <= 0 (0 is the
/// last letter); FROM_LEFT values are 1-based.
struct Coord {
  std::int64_t value = 0;
  CoordScheme scheme = CoordScheme::kFromLeft;

  static constexpr Coord from_right(std::int64_t v) { return {v, CoordScheme::kFromRight}; }
  static constexpr Coord from_left(std::int64_t v) { return {v, CoordScheme::kFromLeft}; }

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

/// Re-expresses `c` in `target` for a string of length `n`.
Coord convert(Coord c, CoordScheme target, std::size_t n);

/// The scheme whose values never change as text arrives in `d`.
constexpr CoordScheme stable_scheme(Direction d) {
  return d == Direction::kRightToLeft ? CoordScheme::kFromRight : CoordScheme::kFromLeft;
}

/// Append-only letter storage. Physical (arrival) indices are stable.
class TextBuffer {
 public:
  TextBuffer(Direction direction, std::uint32_t alphabet_size);

  /// Returns the arrival index of the new letter. Throws AlphabetError.
  std::size_t append(LetterCode letter);

  /// Letter at a logical coordinate given in the buffer's stable scheme.
  /// Throws BoundsError when out of range or in the wrong scheme.
  LetterCode letter_at(Coord coord) const;

  LetterCode arrival(std::size_t index) const { return letters_[index]; }
  std::span<const LetterCode> arrivals() const { return letters_; }

  /// The logical string, first letter first.
  std::vector<LetterCode> logical() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Direction direction() const { return direction_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }

 private:
  Direction direction_;
  std::uint32_t alphabet_size_;
  std::vector<LetterCode> letters_;
};

}  // namespace suffixient
