#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "g2ca/a1.hpp"
#include "g2ca/coord.hpp"
#include "g2ca/crystal.hpp"
#include "g2ca/letters.hpp"
#include "g2ca/natural.hpp"

namespace g2ca {

// A tensor factor tagged with its home crystal.
struct BElem {
  Coord coord;
  int level = 1;
  friend bool operator==(const BElem&, const BElem&) = default;
};

using Factor = std::variant<BElem, Node, A1>;
using Word = std::vector<Factor>;

bool operator==(const Factor& a, const Factor& b);

Factor make_factor(Letter x);  // level-1 BElem

int eps(const Factor& f, int i);
int phi(const Factor& f, int i);
int pairing(const Factor& f, int i);  // <h_i, wt(f)> = phi - eps
std::optional<Factor> raise(const Factor& f, int i);
std::optional<Factor> lower(const Factor& f, int i);

std::string factor_str(const Factor& f);
std::string word_str(std::span<const Factor> w);

// Tensor-product statistics and operators, left-associated:
//   eps_i(u ⊗ v) = max(eps_i(u), eps_i(v) - <h_i, wt(u)>)
//   phi_i(u ⊗ v) = max(phi_i(v), phi_i(u) + <h_i, wt(v)>)
// with the raising (lowering) operator acting on the left part when
// phi_i(left) >= eps_i(right) (resp. >).
int eps(std::span<const Factor> w, int i);
int phi(std::span<const Factor> w, int i);
int pairing(std::span<const Factor> w, int i);

// Position the operator acts on; always defined, the action itself may be 0.
int raise_position(std::span<const Factor> w, int i);
int lower_position(std::span<const Factor> w, int i);

std::optional<Word> raise(const Word& w, int i);
std::optional<Word> lower(const Word& w, int i);

struct RaiseStep {
  int index;     // which e_i was applied
  int position;  // factor it acted on, for diagnostics
};
using RaisePath = std::vector<RaiseStep>;

// Raise with the classical operators e_1, e_2 (smallest index first) until
// neither applies.  Throws on runaway (defensive bound from factor sizes).
std::pair<Word, RaisePath> raise_to_classical_hw(Word w);

// Apply the reversed path with lowering operators.  Throws ReplayError if a
// step dies; that can only mean a broken operator table.
Word replay_lowering(Word w, const RaisePath& path);

bool is_classical_hw(std::span<const Factor> w);

// Two-factor highest-weight criterion: e_i(b1) = 0 and
// eps_i(b2) <= lambda(h_i) for i = 1, 2, where lambda = classical wt(b1).
bool is_level_hw(const Factor& b1, const Factor& b2, int lambda_h1, int lambda_h2);

}  // namespace g2ca
