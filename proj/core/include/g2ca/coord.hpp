#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace g2ca {

// Element of the level-l coordinate crystal B_l.  An element is a 6-tuple
// (x1, x2, x3, xb3, xb2, xb1) of nonnegative rationals with denominators
// dividing 3; s(b) and the index-0 data additionally involve halves, so we
// store every coordinate in sixth-units as an exact integer:
//
//     stored value = 6 * coordinate.
//
// All arithmetic in the library is integer arithmetic on these values.
struct Coord {
  std::array<int, 6> v{};

  friend auto operator<=>(const Coord&, const Coord&) = default;

  int& operator[](std::size_t i) { return v[i]; }
  int operator[](std::size_t i) const { return v[i]; }

  // (j, 0, 0, 0, 0, 0) — the classical highest weight of the j-column
  // component, and the carrier u_l when j = l.
  static Coord hw(int j) { return Coord{{6 * j, 0, 0, 0, 0, 0}}; }

  std::string str() const;  // "(1,1/3,0,...)" with entries in thirds
};

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : c.v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// z-statistics of an element.  z1, z2, z3 are integers; z4 lives in (1/3)Z
// and is stored in third-units (value = 3 * z4).
struct ZVector {
  int z1 = 0, z2 = 0, z3 = 0, z4_thirds = 0;
  friend bool operator==(const ZVector&, const ZVector&) = default;
};

ZVector z_values(const Coord& b);

// 6*s(b) and 6*t(b).  s(b) = x1 + x2 + (x3+xb3)/2 + xb2 + xb1 is the column
// count of the tableau realization; membership in B_l is s(b) <= l.
int s_times6(const Coord& b);
int t_times6(const Coord& b);

enum class MembershipError {
  ok,
  negative_entry,
  fractional_entry,    // some coordinate not in (1/3)Z
  lattice,             // x1, xb1, x2-x3 or xb3-xb2 not an integer
  parity,              // 3*x3 and 3*xb3 differ mod 2
  sum_exceeds_level,
};

MembershipError membership_violation(const Coord& b, int level);
bool is_member(const Coord& b, int level);
const char* describe(MembershipError e);

}  // namespace g2ca
