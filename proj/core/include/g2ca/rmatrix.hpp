#pragma once

#include <span>
#include <utility>
#include <vector>

#include "g2ca/coord.hpp"
#include "g2ca/letters.hpp"
#include "g2ca/natural.hpp"
#include "g2ca/tensor.hpp"

namespace g2ca {

// ------------------------------------------------------------------
// Combinatorial R:  B_l ⊗ B_1  ->  B_1 ⊗ B_l, with the energy function.
// ------------------------------------------------------------------

// Image of the classical highest-weight element (j,0,...,0) ⊗ b2.
// Throws InvalidInput if (j, b2) is not one of the highest-weight families.
std::pair<Letter, Coord> r_hw(int j, int level, Letter b2);

// Energy on the highest-weight families: 0 / -1 / -2.
int h_hw(int j, int level, Letter b2);

struct RResult {
  Letter first;   // B_1 part of the image
  Coord second;   // B_l part of the image
  int energy;     // H, constant on the classical component
  friend bool operator==(const RResult&, const RResult&) = default;
};

// The canonical algorithm: raise to classical highest weight, map by the
// highest-weight table, replay the lowering path.  Results are memoized.
RResult r_apply(const Coord& b1, int level, Letter b2);

// Independent cross-check: the insertion-style algorithm.  b1 is given as a
// validated tableau word; returns the image letter and image tableau.
std::pair<Letter, std::vector<Letter>> r_insertion(std::span<const Letter> tableau,
                                                   Letter b2, int level);

// R on B_1 ⊗ B_1 is the identity; H comes from the component.
std::pair<Letter, Letter> r_b1b1(Letter a, Letter b);
int h_b1b1(Letter a, Letter b);

// R-bar: B♮ ⊗ B_1 -> B_1 ⊗ B♮ (the unique isomorphism).
std::pair<Letter, Node> rbar_apply(Node n, Letter b2);

// R: B_l ⊗ B♮ -> B♮ ⊗ B_l.  Built per level by matching classical
// highest-weight signatures and verified to intertwine all operators on the
// whole product; throws ReplayError if verification fails.
std::pair<Node, Coord> r_natural(const Coord& b, int level, Node n);

// ------------------------------------------------------------------
// Affinization over B_l ⊗ B_1.
// ------------------------------------------------------------------

struct AffLetter { int exp = 0; Letter elem = Letter::empty; };
struct AffCoord  { int exp = 0; Coord elem; };

// z^m b1 ⊗ z^n b2  ->  z^{n+H} b2' ⊗ z^{m-H} b1'.  Preserves m + n.
std::pair<AffLetter, AffCoord> aff_r(const AffCoord& b1, int level, const AffLetter& b2);

}  // namespace g2ca
