#pragma once

#include <optional>
#include <vector>

#include "g2ca/coord.hpp"

namespace g2ca {

// Kashiwara operators and string statistics on B_l.  Operators return
// nullopt when the image leaves the crystal (negative coordinate or
// s(b) > l).  Index i ranges over {0, 1, 2}.
std::optional<Coord> raise(const Coord& b, int i, int level);
std::optional<Coord> lower(const Coord& b, int i, int level);

int eps(const Coord& b, int i, int level);
int phi(const Coord& b, int i, int level);

struct WeightVector {
  int h0 = 0, h1 = 0, h2 = 0;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  int operator[](int i) const { return i == 0 ? h0 : (i == 1 ? h1 : h2); }
};

WeightVector weight(const Coord& b, int level);

// Which of the six index-0 case conditions holds at b.  The lowering cases
// partition B_l as "max of A first attained at position k"; the raising
// cases as "max of A last attained at position k".  Exactly one case holds
// for every element.
int zero_lower_case(const Coord& b);  // (F_k), k in 1..6
int zero_raise_case(const Coord& b);  // (E_k), k in 1..6

// All of B_l in lexicographic order on the sixth-unit tuples.
std::vector<Coord> enumerate_level(int level);

}  // namespace g2ca
