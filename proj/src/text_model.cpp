#include "suffixient/text_model.hpp"

#include <algorithm>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

Coord convert(Coord c, CoordScheme target, std::size_t n) {
  if (c.scheme == target) return c;
  const auto len = static_cast<std::int64_t>(n);
  if (target == CoordScheme::kFromLeft) return Coord::from_left(c.value + len);
  return Coord::from_right(c.value - len);
}

TextBuffer::TextBuffer(Direction direction, std::uint32_t alphabet_size)
    : direction_(direction), alphabet_size_(alphabet_size) {
  if (alphabet_size == 0) throw AlphabetError("alphabet size must be at least 1");
}

std::size_t TextBuffer::append(LetterCode letter) {
  if (letter >= alphabet_size_) {
    throw AlphabetError("letter code " + std::to_string(letter) + " outside alphabet of size " +
                        std::to_string(alphabet_size_));
  }
  letters_.push_back(letter);
  return letters_.size() - 1;
}

LetterCode TextBuffer::letter_at(Coord coord) const {
  if (coord.scheme != stable_scheme(direction_)) {
    throw BoundsError("coordinate scheme does not match buffer direction");
  }
  const auto n = static_cast<std::int64_t>(letters_.size());
  if (direction_ == Direction::kRightToLeft) {
    if (coord.value > 0 || -coord.value >= n) {
      throw BoundsError("from-right offset " + std::to_string(coord.value) + " out of range");
    }
    return letters_[static_cast<std::size_t>(-coord.value)];
  }
  if (coord.value < 1 || coord.value > n) {
    throw BoundsError("from-left position " + std::to_string(coord.value) + " out of range");
  }
  return letters_[static_cast<std::size_t>(coord.value - 1)];
}

std::vector<LetterCode> TextBuffer::logical() const {
  std::vector<LetterCode> out(letters_.begin(), letters_.end());
  if (direction_ == Direction::kRightToLeft) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace suffixient
