#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "g2ca/coord.hpp"

namespace g2ca {

// The 15-element alphabet of B_1: fourteen letters plus the empty tableau.
// ASCII tokens: 1 2 2_1 2_2 2_3 3 0 0h b3 b2_3 b2_2 b2_1 b2 b1 e
// ("0h" is 0-hat, a "b" prefix marks a barred letter, "e" is empty).
enum class Letter : int {
  l1, l2, l2_1, l2_2, l2_3, l3, l0, l0h,
  lb3, lb2_3, lb2_2, lb2_1, lb2, lb1, empty,
};

inline constexpr int kLetterCount = 15;

std::string_view token(Letter x);
std::optional<Letter> parse_letter(std::string_view tok);

Coord letter_coord(Letter x);
std::optional<Letter> coord_letter(const Coord& b);  // level-1 coordinates only

// Ordering used by the one-row tableau condition.  Total on the alphabet
// minus 0h; 0h is comparable only with 1, 2 below it and b2, b1 above it.
bool tableau_le(Letter a, Letter b);

// One-row restricted semistandard condition: weakly increasing entries plus
// the five occurrence constraints.  Valid words of length j enumerate the
// j-column classical component of B_l (j <= l).
bool validate_tableau(std::span<const Letter> word);

// Counts-to-coordinates formula for a (not necessarily valid) word.
Coord tableau_coord(std::span<const Letter> word);

// Tableau word of an element of B_l, via raising to (j,0,...,0) and
// replaying on 1^j.  Inverse of tableau_coord on valid words.
std::vector<Letter> coord_tableau(const Coord& b, int level);

}  // namespace g2ca
