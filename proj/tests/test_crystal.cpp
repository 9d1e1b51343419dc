#include <doctest.h>

#include <set>

#include "g2ca/crystal.hpp"
#include "g2ca/letters.hpp"

using namespace g2ca;

TEST_CASE("index-0 operators at the vacuum") {
  CHECK(zero_lower_case(Coord{}) == 1);
  const auto img = lower(Coord{}, 0, 1);
  REQUIRE(img.has_value());
  CHECK(*img == Coord::hw(1));
}

TEST_CASE("classical raising dies at letter 1") {
  CHECK_FALSE(raise(letter_coord(Letter::l1), 1, 1).has_value());
  CHECK_FALSE(raise(letter_coord(Letter::l1), 2, 1).has_value());
}

TEST_CASE("lowering chain f1 f2 f2 f1 from letter 1") {
  // walks the top of the level-1 graph down to 2_3
  auto b = letter_coord(Letter::l1);
  for (int i : {1, 2, 2, 1}) {
    auto nxt = lower(b, i, 1);
    REQUIRE(nxt.has_value());
    b = *nxt;
  }
  CHECK(coord_letter(b) == Letter::l2_3);
  // and the raising chain e1 e2 e2 e1 undoes it
  for (int i : {1, 2, 2, 1}) {
    auto nxt = raise(b, i, 1);
    REQUIRE(nxt.has_value());
    b = *nxt;
  }
  CHECK(coord_letter(b) == Letter::l1);
}

TEST_CASE("string statistics") {
  for (int l = 1; l <= 4; ++l) {
    CHECK(eps(Coord::hw(l), 0, l) == 2 * l);
    CHECK(phi(Coord::hw(l), 0, l) == 0);
    CHECK(phi(Coord::hw(l), 1, l) == l);
    CHECK(eps(Coord::hw(l), 1, l) == 0);
  }
  CHECK(eps(letter_coord(Letter::l1), 1, 1) == 0);
  CHECK(phi(letter_coord(Letter::l1), 1, 1) == 1);
  CHECK(eps(letter_coord(Letter::l2), 2, 1) == 0);
  CHECK(phi(letter_coord(Letter::l2), 2, 1) == 3);  // 2 -> 2_1 -> 2_2 -> 3
}

TEST_CASE("weights") {
  for (int l = 1; l <= 3; ++l)
    CHECK(weight(Coord::hw(l), l) == WeightVector{-2 * l, l, 0});
  CHECK(weight(Coord{}, 1) == WeightVector{0, 0, 0});
  // letter 2 pairs to zero against the canonical central element
  const auto w2 = weight(letter_coord(Letter::l2), 1);
  CHECK(w2 == WeightVector{-1, -1, 3});
  CHECK(w2.h0 + 2 * w2.h1 + w2.h2 == 0);
  // every level-1 element has level-zero classical weight lift
  for (const Coord& b : enumerate_level(1)) {
    const auto w = weight(b, 1);
    CHECK(w.h0 + 2 * w.h1 + w.h2 == 0);
  }
}

TEST_CASE("enumeration") {
  const auto b1 = enumerate_level(1);
  CHECK(b1.size() == 15);
  CHECK(std::is_sorted(b1.begin(), b1.end()));
  std::set<Coord> found(b1.begin(), b1.end());
  CHECK(found.count(letter_coord(Letter::l0h)) == 1);
  for (int x = 0; x < kLetterCount; ++x)
    CHECK(found.count(letter_coord(static_cast<Letter>(x))) == 1);
  CHECK(enumerate_level(2).size() == 92);
  CHECK(enumerate_level(3).size() == 365);
}

TEST_CASE("case analysis is total and matches known cells") {
  CHECK(zero_lower_case(letter_coord(Letter::lb3)) == 4);
  CHECK(zero_lower_case(letter_coord(Letter::lb2)) == 3);
  CHECK(zero_lower_case(letter_coord(Letter::lb1)) == 6);
  CHECK(zero_raise_case(letter_coord(Letter::l2)) == 4);  // e0(2) = b3
  for (const Coord& b : enumerate_level(2)) {
    const int f = zero_lower_case(b);
    const int e = zero_raise_case(b);
    CHECK((1 <= f && f <= 6));
    CHECK((1 <= e && e <= 6));
  }
}

TEST_CASE("operators are mutually inverse on B_2") {
  const int l = 2;
  for (const Coord& b : enumerate_level(l)) {
    for (int i = 0; i < 3; ++i) {
      if (auto d = lower(b, i, l)) CHECK(raise(*d, i, l) == b);
      if (auto u = raise(b, i, l)) CHECK(lower(*u, i, l) == b);
    }
  }
}
