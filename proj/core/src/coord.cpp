#include "g2ca/coord.hpp"

#include <cassert>
#include <sstream>

namespace g2ca {

ZVector z_values(const Coord& b) {
  // Sixth-unit differences are multiples of 6 (z1..z3) and of 2 (6*z4).
  const auto& v = b.v;
  assert((v[5] - v[0]) % 6 == 0 && (v[4] - v[3]) % 6 == 0 && (v[2] - v[1]) % 6 == 0);
  assert((v[3] - v[2]) % 4 == 0);
  return ZVector{(v[5] - v[0]) / 6, (v[4] - v[3]) / 6, (v[2] - v[1]) / 6,
                 (v[3] - v[2]) / 4};
}

int s_times6(const Coord& b) {
  const auto& v = b.v;
  return v[0] + v[1] + (v[2] + v[3]) / 2 + v[4] + v[5];
}

int t_times6(const Coord& b) {
  const auto& v = b.v;
  return v[1] + (v[2] + v[3]) / 2 + v[4];
}

MembershipError membership_violation(const Coord& b, int level) {
  const auto& v = b.v;
  for (int x : v)
    if (x < 0) return MembershipError::negative_entry;
  for (int x : v)
    if (x % 2 != 0) return MembershipError::fractional_entry;
  if (v[0] % 6 != 0 || v[5] % 6 != 0 || (v[1] - v[2]) % 6 != 0 || (v[3] - v[4]) % 6 != 0)
    return MembershipError::lattice;
  if ((v[2] - v[3]) % 4 != 0) return MembershipError::parity;
  if (s_times6(b) > 6 * level) return MembershipError::sum_exceeds_level;
  return MembershipError::ok;
}

bool is_member(const Coord& b, int level) {
  return membership_violation(b, level) == MembershipError::ok;
}

const char* describe(MembershipError e) {
  switch (e) {
    case MembershipError::ok: return "ok";
    case MembershipError::negative_entry: return "negative coordinate";
    case MembershipError::fractional_entry: return "coordinate not in (1/3)Z";
    case MembershipError::lattice: return "x1, xb1, x2-x3 or xb3-xb2 not an integer";
    case MembershipError::parity: return "3*x3 and 3*xb3 differ mod 2";
    case MembershipError::sum_exceeds_level: return "s(b) exceeds the level";
  }
  return "?";
}

std::string Coord::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < 6; ++i) {
    if (i) os << ',';
    int x = v[i];
    if (x % 6 == 0) {
      os << x / 6;
    } else if (x % 2 == 0) {
      os << x / 2 << "/3";
    } else {
      os << x << "/6";  // not a crystal coordinate, but printable
    }
  }
  os << ')';
  return os.str();
}

}  // namespace g2ca
