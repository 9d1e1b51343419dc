#include "g2ca/crystal.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace g2ca {
namespace {

// The six A-values of eq. (2), in sixth-units.
std::array<int, 6> a_values(const Coord& b) {
  const auto& v = b.v;
  const int z1 = v[5] - v[0];
  const int z2 = v[4] - v[3];
  const int z3 = v[2] - v[1];
  const int z4x3 = 3 * (v[3] - v[2]) / 2;  // 3*z4 in sixth-units
  return {0, z1, z1 + z2, z1 + z2 + z4x3, z1 + z2 + z3 + z4x3, 2 * z1 + z2 + z3 + z4x3};
}

int max_a(const Coord& b) {
  auto a = a_values(b);
  return *std::max_element(a.begin(), a.end());
}

using Delta = std::array<int, 6>;

// Lowering actions for the index-0 cases, in sixth-units.  (F4) splits on
// z4 = 1/3 and 2/3 like the corresponding raising case splits below zero.
constexpr Delta kF1{6, 0, 0, 0, 0, 0};
constexpr Delta kF2{0, 0, 6, 6, 0, -6};
constexpr Delta kF3{0, 0, 12, 0, -6, 0};
constexpr Delta kF4a{0, 2, 8, -4, -4, 0};   // z4 = 1/3
constexpr Delta kF4b{0, 4, 4, -8, -2, 0};   // z4 = 2/3
constexpr Delta kF4{0, 6, 0, -12, 0, 0};
constexpr Delta kF5{6, 0, -6, -6, 0, 0};
constexpr Delta kF6{0, 0, 0, 0, 0, -6};

Delta negate(const Delta& d) {
  Delta r{};
  for (int i = 0; i < 6; ++i) r[i] = -d[i];
  return r;
}

std::optional<Coord> apply_delta(const Coord& b, const Delta& d, int level) {
  Coord r = b;
  for (int i = 0; i < 6; ++i) r.v[i] += d[i];
  if (!is_member(r, level)) return std::nullopt;
  return r;
}

std::optional<Coord> lower0(const Coord& b, int level) {
  const int z4sixths = (b.v[3] - b.v[2]) / 2;  // 6*z4
  switch (zero_lower_case(b)) {
    case 1: return apply_delta(b, kF1, level);
    case 2: return apply_delta(b, kF2, level);
    case 3: return apply_delta(b, kF3, level);
    case 4:
      if (z4sixths == 2) return apply_delta(b, kF4a, level);
      if (z4sixths == 4) return apply_delta(b, kF4b, level);
      return apply_delta(b, kF4, level);
    case 5: return apply_delta(b, kF5, level);
    default: return apply_delta(b, kF6, level);
  }
}

std::optional<Coord> raise0(const Coord& b, int level) {
  const int z4sixths = (b.v[3] - b.v[2]) / 2;
  switch (zero_raise_case(b)) {
    case 1: return apply_delta(b, negate(kF1), level);
    case 2: return apply_delta(b, negate(kF2), level);
    case 3:
      // Inverses of the (F4) actions land here: z4 = -1/3 undoes the 2/3
      // action, z4 = -2/3 the 1/3 action, anything else undoes (F3).
      if (z4sixths == -2) return apply_delta(b, negate(kF4b), level);
      if (z4sixths == -4) return apply_delta(b, negate(kF4a), level);
      return apply_delta(b, negate(kF3), level);
    case 4: return apply_delta(b, negate(kF4), level);
    case 5: return apply_delta(b, negate(kF5), level);
    default: return apply_delta(b, negate(kF6), level);
  }
}

std::optional<Coord> lower1(const Coord& b, int level) {
  const auto z = z_values(b);
  if (std::max(z.z2, 0) <= -z.z3) return apply_delta(b, {-6, 6, 0, 0, 0, 0}, level);
  if (z.z2 <= 0 && 0 < z.z3) return apply_delta(b, {0, 0, -6, 6, 0, 0}, level);
  return apply_delta(b, {0, 0, 0, 0, -6, 6}, level);
}

std::optional<Coord> raise1(const Coord& b, int level) {
  const auto z = z_values(b);
  if (z.z2 >= std::max(-z.z3, 0)) return apply_delta(b, {0, 0, 0, 0, 6, -6}, level);
  if (z.z2 < 0 && 0 <= z.z3) return apply_delta(b, {0, 0, 6, -6, 0, 0}, level);
  return apply_delta(b, {6, -6, 0, 0, 0, 0}, level);
}

std::optional<Coord> lower2(const Coord& b, int level) {
  if (b.v[3] - b.v[2] <= 0) return apply_delta(b, {0, -2, 4, 0, 0, 0}, level);
  return apply_delta(b, {0, 0, 0, -4, 2, 0}, level);
}

std::optional<Coord> raise2(const Coord& b, int level) {
  if (b.v[3] - b.v[2] >= 0) return apply_delta(b, {0, 0, 0, 4, -2, 0}, level);
  return apply_delta(b, {0, 2, -4, 0, 0, 0}, level);
}

int exact_div6(int x) {
  assert(x % 6 == 0);
  return x / 6;
}

}  // namespace

int zero_lower_case(const Coord& b) {
  auto a = a_values(b);
  return static_cast<int>(std::max_element(a.begin(), a.end()) - a.begin()) + 1;
}

int zero_raise_case(const Coord& b) {
  auto a = a_values(b);
  int best = 0;
  for (int i = 1; i < 6; ++i)
    if (a[i] >= a[best]) best = i;
  return best + 1;
}

std::optional<Coord> lower(const Coord& b, int i, int level) {
  switch (i) {
    case 0: return lower0(b, level);
    case 1: return lower1(b, level);
    default: return lower2(b, level);
  }
}

std::optional<Coord> raise(const Coord& b, int i, int level) {
  switch (i) {
    case 0: return raise0(b, level);
    case 1: return raise1(b, level);
    default: return raise2(b, level);
  }
}

int eps(const Coord& b, int i, int level) {
  const auto& v = b.v;
  const auto pos = [](int x) { return x > 0 ? x : 0; };
  if (i == 1) return exact_div6(v[5] + pos(v[3] - v[4] + pos(v[1] - v[2])));
  if (i == 2) return v[4] / 2 + pos(v[2] - v[3]) / 4;
  const auto z = z_values(b);
  const int span = 2 * z.z1 + z.z2 + z.z3 + z.z4_thirds;  // 2z1+z2+z3+3z4
  return exact_div6(6 * level - s_times6(b) + max_a(b)) - span;
}

int phi(const Coord& b, int i, int level) {
  const auto& v = b.v;
  const auto pos = [](int x) { return x > 0 ? x : 0; };
  if (i == 1) return exact_div6(v[0] + pos(v[2] - v[1] + pos(v[4] - v[3])));
  if (i == 2) return v[1] / 2 + pos(v[3] - v[2]) / 4;
  return exact_div6(6 * level - s_times6(b) + max_a(b));
}

WeightVector weight(const Coord& b, int level) {
  return WeightVector{phi(b, 0, level) - eps(b, 0, level),
                      phi(b, 1, level) - eps(b, 1, level),
                      phi(b, 2, level) - eps(b, 2, level)};
}

std::vector<Coord> enumerate_level(int level) {
  // Walk the lattice directly: x1, xb1 integers, x2 ≡ x3 and xb3 ≡ xb2 in
  // (1/3)Z with integer differences, 3x3 ≡ 3xb3 (mod 2), sum bounded by l.
  std::vector<Coord> out;
  const int cap6 = 6 * level;
  for (int v0 = 0; v0 <= cap6; v0 += 6) {
    for (int v1 = 0; v0 + v1 <= cap6; v1 += 2) {
      for (int v2 = v1 % 6; v0 + v1 + v2 / 2 <= cap6; v2 += 6) {
        for (int v3 = v2 % 4; v0 + v1 + (v2 + v3) / 2 <= cap6; v3 += 4) {
          const int head = v0 + v1 + (v2 + v3) / 2;
          for (int v4 = v3 % 6; head + v4 <= cap6; v4 += 6) {
            for (int v5 = 0; head + v4 + v5 <= cap6; v5 += 6) {
              out.push_back(Coord{{v0, v1, v2, v3, v4, v5}});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2ca
