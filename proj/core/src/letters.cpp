#include "g2ca/letters.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

#include "g2ca/crystal.hpp"
#include "g2ca/errors.hpp"
#include "g2ca/tensor.hpp"

namespace g2ca {
namespace {

constexpr std::array<std::string_view, kLetterCount> kTokens = {
    "1", "2", "2_1", "2_2", "2_3", "3", "0", "0h",
    "b3", "b2_3", "b2_2", "b2_1", "b2", "b1", "e"};

// Coordinate representation of the single-letter tableaux (sixth-units),
// from the counts formula below; pinned by a unit test.
constexpr std::array<std::array<int, 6>, kLetterCount> kCoords = {{
    {6, 0, 0, 0, 0, 0},    // 1
    {0, 6, 0, 0, 0, 0},    // 2
    {0, 4, 4, 0, 0, 0},    // 2_1
    {0, 2, 8, 0, 0, 0},    // 2_2
    {0, 2, 2, 6, 0, 0},    // 2_3
    {0, 0, 12, 0, 0, 0},   // 3
    {0, 0, 6, 6, 0, 0},    // 0
    {0, 2, 2, 2, 2, 0},    // 0h
    {0, 0, 0, 12, 0, 0},   // b3
    {0, 0, 6, 2, 2, 0},    // b2_3
    {0, 0, 0, 8, 2, 0},    // b2_2
    {0, 0, 0, 4, 4, 0},    // b2_1
    {0, 0, 0, 0, 6, 0},    // b2
    {0, 0, 0, 0, 0, 6},    // b1
    {0, 0, 0, 0, 0, 0},    // e
}};

// Total order on the alphabet minus 0h (0h handled separately).
constexpr int rank_of(Letter x) {
  switch (x) {
    case Letter::l1: return 0;
    case Letter::l2: return 1;
    case Letter::l2_1: return 2;
    case Letter::l2_2: return 3;
    case Letter::l2_3: return 4;
    case Letter::l3: return 5;
    case Letter::l0: return 6;
    case Letter::lb2_3: return 7;
    case Letter::lb3: return 8;
    case Letter::lb2_2: return 9;
    case Letter::lb2_1: return 10;
    case Letter::lb2: return 11;
    case Letter::lb1: return 12;
    default: return -1;  // 0h, e
  }
}

}  // namespace

std::string_view token(Letter x) { return kTokens[static_cast<int>(x)]; }

std::optional<Letter> parse_letter(std::string_view tok) {
  for (int i = 0; i < kLetterCount; ++i)
    if (kTokens[i] == tok) return static_cast<Letter>(i);
  return std::nullopt;
}

Coord letter_coord(Letter x) { return Coord{kCoords[static_cast<int>(x)]}; }

std::optional<Letter> coord_letter(const Coord& b) {
  for (int i = 0; i < kLetterCount; ++i)
    if (kCoords[i] == b.v) return static_cast<Letter>(i);
  return std::nullopt;
}

bool tableau_le(Letter a, Letter b) {
  if (a == Letter::empty || b == Letter::empty) return false;
  if (a == b) return true;
  if (a == Letter::l0h) return b == Letter::lb2 || b == Letter::lb1;
  if (b == Letter::l0h) return a == Letter::l1 || a == Letter::l2;
  return rank_of(a) <= rank_of(b);
}

bool validate_tableau(std::span<const Letter> word) {
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (!tableau_le(word[k], word[k + 1])) return false;
  std::array<int, kLetterCount> t{};
  for (Letter x : word) {
    if (x == Letter::empty) return false;
    ++t[static_cast<int>(x)];
  }
  const auto n = [&](Letter x) { return t[static_cast<int>(x)]; };
  const auto sgn = [](int x) { return x > 0 ? 1 : 0; };
  if (n(Letter::l2_3) + n(Letter::l0) + n(Letter::l0h) + n(Letter::lb2_3) > 1) return false;
  if (n(Letter::l2_1) + n(Letter::l2_2) + n(Letter::l2_3) > 1) return false;
  if (n(Letter::lb2_3) + n(Letter::lb2_2) + n(Letter::lb2_1) > 1) return false;
  if (n(Letter::l2_3) + sgn(n(Letter::l3)) + n(Letter::l0h) > 1) return false;
  if (n(Letter::l0h) + sgn(n(Letter::lb3)) + n(Letter::lb2_3) > 1) return false;
  return true;
}

Coord tableau_coord(std::span<const Letter> word) {
  std::array<int, kLetterCount> t{};
  for (Letter x : word) ++t[static_cast<int>(x)];
  const auto n = [&](Letter x) { return t[static_cast<int>(x)]; };
  Coord c;
  c.v[0] = 6 * n(Letter::l1);
  c.v[1] = 2 * (3 * n(Letter::l2) + 2 * n(Letter::l2_1) + n(Letter::l2_2) +
                n(Letter::l2_3) + n(Letter::l0h));
  c.v[2] = 2 * (2 * n(Letter::l2_1) + 4 * n(Letter::l2_2) + n(Letter::l2_3) +
                6 * n(Letter::l3) + n(Letter::l0h) + 3 * n(Letter::l0) +
                3 * n(Letter::lb2_3));
  c.v[3] = 2 * (3 * n(Letter::l2_3) + n(Letter::l0h) + 3 * n(Letter::l0) +
                6 * n(Letter::lb3) + n(Letter::lb2_3) + 4 * n(Letter::lb2_2) +
                2 * n(Letter::lb2_1));
  c.v[4] = 2 * (n(Letter::l0h) + n(Letter::lb2_3) + n(Letter::lb2_2) +
                2 * n(Letter::lb2_1) + 3 * n(Letter::lb2));
  c.v[5] = 6 * n(Letter::lb1);
  return c;
}

std::vector<Letter> coord_tableau(const Coord& b, int level) {
  if (!is_member(b, level))
    throw InvalidInput("coord_tableau: not an element of B_" + std::to_string(level) +
                       ": " + b.str());
  Word w{BElem{b, level}};
  auto [hw, path] = raise_to_classical_hw(std::move(w));
  const Coord& top = std::get<BElem>(hw[0]).coord;
  assert(top.v[1] == 0 && top.v[2] == 0 && top.v[3] == 0 && top.v[4] == 0 && top.v[5] == 0);
  const int j = top.v[0] / 6;
  if (j == 0) return {};
  Word ones(static_cast<std::size_t>(j), make_factor(Letter::l1));
  Word img = replay_lowering(std::move(ones), path);
  std::vector<Letter> out(static_cast<std::size_t>(j));
  for (int k = 0; k < j; ++k) {
    auto lt = coord_letter(std::get<BElem>(img[static_cast<std::size_t>(k)]).coord);
    assert(lt.has_value());
    out[static_cast<std::size_t>(j - 1 - k)] = *lt;  // word is alpha_j ... alpha_1
  }
  return out;
}

}  // namespace g2ca
