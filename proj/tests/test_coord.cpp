#include <doctest.h>

#include "g2ca/coord.hpp"
#include "g2ca/letters.hpp"

using namespace g2ca;

namespace {

Coord thirds(int a, int b, int c, int d, int e, int f) {
  return Coord{{2 * a, 2 * b, 2 * c, 2 * d, 2 * e, 2 * f}};
}

}  // namespace

TEST_CASE("membership") {
  for (int l = 1; l <= 4; ++l) CHECK(is_member(Coord::hw(l), l));
  CHECK(is_member(Coord{}, 1));
  // (0, 1/3, 1/3, 1, 0, 0) is the letter 2_3
  CHECK(is_member(thirds(0, 1, 1, 3, 0, 0), 1));
  // x2 - x3 not an integer
  CHECK_FALSE(is_member(thirds(0, 1, 0, 0, 0, 0), 5));
  CHECK(membership_violation(thirds(0, 1, 0, 0, 0, 0), 5) == MembershipError::lattice);
  CHECK(membership_violation(Coord{{-6, 0, 0, 0, 0, 0}}, 1) ==
        MembershipError::negative_entry);
  CHECK(membership_violation(Coord::hw(2), 1) == MembershipError::sum_exceeds_level);
  // 3*x3 and 3*xb3 must agree mod 2: x3 = 1/3, xb3 = 1 has 3x3 = 1, 3xb3 = 3, fine;
  // x3 = 1/3, xb3 = 2/3 has 3x3 = 1, 3xb3 = 2, rejected.
  CHECK(membership_violation(thirds(0, 1, 1, 2, 2, 0), 5) == MembershipError::parity);
}

TEST_CASE("z statistics") {
  for (int l = 1; l <= 3; ++l) {
    const auto z = z_values(Coord::hw(l));
    CHECK(z == ZVector{-l, 0, 0, 0});
  }
  CHECK(z_values(letter_coord(Letter::l0)) == ZVector{0, -1, 1, 0});
  CHECK(z_values(letter_coord(Letter::l0h)) == ZVector{0, 0, 0, 0});
  // z4 genuinely lives in thirds: 2_3 has z4 = 1/3
  CHECK(z_values(letter_coord(Letter::l2_3)).z4_thirds == 1);
}

TEST_CASE("s and t statistics") {
  CHECK(s_times6(Coord::hw(3)) == 18);
  for (int x = 0; x < kLetterCount - 1; ++x)
    CHECK(s_times6(letter_coord(static_cast<Letter>(x))) == 6);  // one column each
  CHECK(s_times6(Coord{}) == 0);
  CHECK(t_times6(letter_coord(Letter::l1)) == 0);
  CHECK(t_times6(letter_coord(Letter::lb1)) == 0);
  CHECK(t_times6(letter_coord(Letter::lb2_2)) == 6);
  CHECK(t_times6(letter_coord(Letter::lb2)) == 6);
}

TEST_CASE("printing") {
  CHECK(Coord::hw(2).str() == "(2,0,0,0,0,0)");
  CHECK(letter_coord(Letter::l2_3).str() == "(0,1/3,1/3,1,0,0)");
}
