#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "g2ca/crystal.hpp"
#include "g2ca/letters.hpp"

using namespace g2ca;

namespace {

std::vector<Letter> word(std::initializer_list<Letter> xs) { return xs; }
using L = Letter;

}  // namespace

TEST_CASE("letter coordinates match the counts formula") {
  for (int x = 0; x < kLetterCount - 1; ++x) {
    const Letter lt = static_cast<Letter>(x);
    const Letter one[] = {lt};
    CHECK(letter_coord(lt) == tableau_coord(one));
  }
  CHECK(letter_coord(L::l2_3).str() == "(0,1/3,1/3,1,0,0)");
  CHECK(letter_coord(L::lb3).str() == "(0,0,0,2,0,0)");
  CHECK(letter_coord(L::empty) == Coord{});
}

TEST_CASE("letters biject with the level-1 crystal") {
  std::set<Coord> elems;
  for (const Coord& b : enumerate_level(1)) {
    elems.insert(b);
    const auto lt = coord_letter(b);
    REQUIRE(lt.has_value());
    CHECK(letter_coord(*lt) == b);
  }
  CHECK(elems.size() == 15);
  CHECK_FALSE(coord_letter(Coord::hw(2)).has_value());
}

TEST_CASE("token round trip") {
  for (int x = 0; x < kLetterCount; ++x) {
    const Letter lt = static_cast<Letter>(x);
    CHECK(parse_letter(token(lt)) == lt);
  }
  CHECK_FALSE(parse_letter("b4").has_value());
}

TEST_CASE("tableau validation examples") {
  CHECK(validate_tableau(word({L::l2, L::l2_3, L::lb2_1})));
  CHECK_FALSE(validate_tableau(word({L::l2_1, L::l2})));          // decreasing
  CHECK_FALSE(validate_tableau(word({L::l2_3, L::l0})));          // t_{2_3}+t_0 <= 1
  CHECK(validate_tableau(word({L::l3, L::lb2_3})));
  CHECK(validate_tableau(word({L::l2_3, L::lb3})));
  CHECK(validate_tableau(word({L::l3, L::l3, L::l2})));           // soliton run shape
  CHECK_FALSE(validate_tableau(word({L::l2_1, L::l0h})));         // 0h sits off the chain
  CHECK_FALSE(validate_tableau(word({L::l0h, L::lb2_2})));
  CHECK(validate_tableau(word({L::l2, L::l0h, L::lb2})));
  CHECK_FALSE(validate_tableau(word({L::l2_3, L::l3})));          // t_{2_3}+sgn(t_3) <= 1
  CHECK_FALSE(validate_tableau(word({L::l0h, L::lb3})));          // t_{0h}+sgn(tb_3) <= 1
}

TEST_CASE("valid words enumerate the classical components") {
  // the j-column words biject with {b in B_l : s(b) = j}
  const auto b3 = enumerate_level(3);
  std::map<int, int> comp_size;
  for (const Coord& b : b3) ++comp_size[s_times6(b) / 6];
  for (int j = 1; j <= 3; ++j) {
    std::set<Coord> coords;
    long long count = 0;
    std::vector<Letter> w(static_cast<std::size_t>(j));
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == j) {
        if (validate_tableau(w)) {
          ++count;
          const Coord c = tableau_coord(w);
          CHECK(is_member(c, 3));
          CHECK(coords.insert(c).second);  // injective
        }
        return;
      }
      for (int x = 0; x < kLetterCount - 1; ++x) {
        w[static_cast<std::size_t>(pos)] = static_cast<Letter>(x);
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    CHECK(count == comp_size[j]);
  }
}

TEST_CASE("coordinate to tableau round trip") {
  for (int l = 1; l <= 2; ++l) {
    for (const Coord& b : enumerate_level(l)) {
      const auto w = coord_tableau(b, l);
      CHECK(validate_tableau(w));
      CHECK(tableau_coord(w) == b);
      CHECK(static_cast<int>(w.size()) == s_times6(b) / 6);
    }
  }
}
