#include "doctest.h"
#include "suffixient/errors.hpp"
#include "suffixient/text_model.hpp"

using namespace suffixient;

TEST_CASE("right-to-left buffer addresses letters from the right") {
  TextBuffer b(Direction::kRightToLeft, 4);
  CHECK(b.empty());
  CHECK(b.append(3) == 0);
  CHECK(b.append(1) == 1);
  CHECK(b.append(0) == 2);
  CHECK(b.size() == 3);
  CHECK(b.letter_at(Coord::from_right(0)) == 3);
  CHECK(b.letter_at(Coord::from_right(-1)) == 1);
  CHECK(b.letter_at(Coord::from_right(-2)) == 0);
  CHECK(b.logical() == std::vector<LetterCode>{0, 1, 3});
  CHECK_THROWS_AS(b.letter_at(Coord::from_right(-3)), BoundsError);
  CHECK_THROWS_AS(b.letter_at(Coord::from_right(1)), BoundsError);
  CHECK_THROWS_AS(b.letter_at(Coord::from_left(1)), BoundsError);
}

TEST_CASE("left-to-right buffer uses 1-based positions") {
  TextBuffer b(Direction::kLeftToRight, 2);
  b.append(0);
  b.append(1);
  CHECK(b.letter_at(Coord::from_left(1)) == 0);
  CHECK(b.letter_at(Coord::from_left(2)) == 1);
  CHECK(b.logical() == std::vector<LetterCode>{0, 1});
  CHECK_THROWS_AS(b.letter_at(Coord::from_left(0)), BoundsError);
  CHECK_THROWS_AS(b.letter_at(Coord::from_left(3)), BoundsError);
  CHECK_THROWS_AS(b.letter_at(Coord::from_right(0)), BoundsError);
}

TEST_CASE("alphabet is enforced") {
  TextBuffer b(Direction::kLeftToRight, 2);
  CHECK_THROWS_AS(b.append(2), AlphabetError);
  CHECK(b.empty());
  CHECK_THROWS_AS(TextBuffer(Direction::kLeftToRight, 0), AlphabetError);
}

TEST_CASE("coordinate conversion round-trips") {
  for (std::size_t n = 1; n < 20; ++n) {
    for (std::int64_t off = 0; off > -static_cast<std::int64_t>(n); --off) {
      const auto left = convert(Coord::from_right(off), CoordScheme::kFromLeft, n);
      CHECK(left.scheme == CoordScheme::kFromLeft);
      CHECK(left.value == off + static_cast<std::int64_t>(n));
      CHECK(convert(left, CoordScheme::kFromRight, n) == Coord::from_right(off));
    }
  }
  CHECK(stable_scheme(Direction::kRightToLeft) == CoordScheme::kFromRight);
  CHECK(stable_scheme(Direction::kLeftToRight) == CoordScheme::kFromLeft);
}

TEST_CASE("stable coordinates survive further arrivals") {
  TextBuffer b(Direction::kRightToLeft, 3);
  b.append(2);
  b.append(0);
  const auto c = Coord::from_right(-1);
  for (int i = 0; i < 10; ++i) {
    b.append(static_cast<LetterCode>(i % 2));
    CHECK(b.letter_at(c) == 0);
  }
}
