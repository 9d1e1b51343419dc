#include "g2ca/rmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>

#include "g2ca/crystal.hpp"
#include "g2ca/errors.hpp"

namespace g2ca {
namespace {

std::string hw_name(int j, Letter b2) {
  return "(j=" + std::to_string(j) + ") . " + std::string(token(b2));
}

}  // namespace

std::pair<Letter, Coord> r_hw(int j, int level, Letter b2) {
  const int l = level;
  const auto bl = [](int a, int b, int c, int d, int e, int f) {
    return Coord{{6 * a, b, c, d, e, f}};
  };
  switch (b2) {
    case Letter::l1:
      if (j == l) return {Letter::l1, Coord::hw(l)};
      if (j == l - 1) return {Letter::empty, Coord::hw(l)};
      if (0 <= j && j <= l - 2) return {Letter::l1, bl(j + 1, 0, 0, 0, 0, 6)};
      break;
    case Letter::empty:
      if (j == l) return {Letter::l1, Coord::hw(l - 1)};
      if (0 <= j && j <= l - 1) return {Letter::empty, Coord::hw(j)};
      break;
    case Letter::l2:
      if (j == l) return {Letter::l1, bl(l - 1, 6, 0, 0, 0, 0)};
      if (1 <= j && j <= l - 1) return {Letter::l1, bl(j - 1, 6, 6, 6, 0, 0)};
      break;
    case Letter::l2_3:
      if (1 <= j && j <= l) return {Letter::l1, bl(j - 1, 2, 2, 6, 0, 0)};
      break;
    case Letter::l0:
      if (1 <= j && j <= l) return {Letter::l1, bl(j - 1, 0, 6, 6, 0, 0)};
      break;
    case Letter::lb3:
      if (2 <= j && j <= l) return {Letter::l1, bl(j - 2, 6, 0, 0, 0, 0)};
      break;
    case Letter::lb1:
      if (j == 1) return {Letter::l1, bl(0, 0, 0, 0, 0, 6)};
      if (2 <= j && j <= l) return {Letter::l1, Coord::hw(j - 2)};
      break;
    default:
      break;
  }
  throw InvalidInput("r_hw: not a highest-weight family: " + hw_name(j, b2));
}

int h_hw(int j, int level, Letter b2) {
  if (b2 == Letter::l1 && j == level) return 0;
  if (b2 == Letter::l1 && j == level - 1) return -1;
  if ((b2 == Letter::l2 || b2 == Letter::empty) && j == level) return -1;
  switch (b2) {
    case Letter::l1: case Letter::empty: case Letter::l2: case Letter::l2_3:
    case Letter::l0: case Letter::lb3: case Letter::lb1:
      return -2;
    default:
      throw InvalidInput("h_hw: not a highest-weight family: " + hw_name(j, b2));
  }
}

namespace {

struct RKey {
  int level;
  Coord b1;
  Letter b2;
  friend bool operator==(const RKey&, const RKey&) = default;
};

struct RKeyHash {
  std::size_t operator()(const RKey& k) const noexcept {
    std::size_t h = CoordHash{}(k.b1);
    h ^= static_cast<std::size_t>(k.level) * 0x9e3779b97f4a7c15ull;
    h ^= (static_cast<std::size_t>(k.b2) + 1) * 0xff51afd7ed558ccdull;
    return h;
  }
};

RResult r_apply_uncached(const Coord& b1, int level, Letter b2) {
  Word w{BElem{b1, level}, make_factor(b2)};
  auto [hw, path] = raise_to_classical_hw(std::move(w));
  const Coord& top = std::get<BElem>(hw[0]).coord;
  if (top.v[1] || top.v[2] || top.v[3] || top.v[4] || top.v[5])
    throw ReplayError("r_apply: raising left a non-rectangular first factor " + top.str());
  const int j = top.v[0] / 6;
  const auto hw2 = coord_letter(std::get<BElem>(hw[1]).coord);
  assert(hw2.has_value());
  auto [lt, bl] = r_hw(j, level, *hw2);
  const int h = h_hw(j, level, *hw2);
  Word img = replay_lowering(Word{make_factor(lt), Factor{BElem{bl, level}}}, path);
  const auto first = coord_letter(std::get<BElem>(img[0]).coord);
  assert(first.has_value());
  return RResult{*first, std::get<BElem>(img[1]).coord, h};
}

}  // namespace

RResult r_apply(const Coord& b1, int level, Letter b2) {
  static std::mutex mu;
  static std::unordered_map<RKey, RResult, RKeyHash> cache;
  const RKey key{level, b1, b2};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  RResult r = r_apply_uncached(b1, level, b2);
  std::lock_guard lock(mu);
  cache.emplace(key, r);
  return r;
}

std::pair<Letter, Letter> r_b1b1(Letter a, Letter b) { return {a, b}; }

int h_b1b1(Letter a, Letter b) {
  static const auto table = [] {
    std::array<std::array<int, kLetterCount>, kLetterCount> t{};
    for (int x = 0; x < kLetterCount; ++x)
      for (int y = 0; y < kLetterCount; ++y) {
        Word w{make_factor(static_cast<Letter>(x)), make_factor(static_cast<Letter>(y))};
        auto [hw, path] = raise_to_classical_hw(std::move(w));
        const int j = std::get<BElem>(hw[0]).coord.v[0] / 6;
        const auto b2 = coord_letter(std::get<BElem>(hw[1]).coord);
        t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = h_hw(j, 1, *b2);
      }
    return t;
  }();
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// ------------------------------------------------------------------
// Insertion algorithm.
// ------------------------------------------------------------------
namespace {

std::vector<Letter> to_letters(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Factor& f : w) {
    auto lt = coord_letter(std::get<BElem>(f).coord);
    assert(lt.has_value());
    out.push_back(*lt);
  }
  return out;
}

Word to_word(std::span<const Letter> xs) {
  Word w;
  w.reserve(xs.size());
  for (Letter x : xs) w.push_back(make_factor(x));
  return w;
}

// The unique classical isomorphism between the components generated by
// dom_hw and img_hw, evaluated by raise / map / replay.  Memoized per map.
class ComponentMap {
 public:
  ComponentMap(std::vector<Letter> dom_hw, std::vector<Letter> img_hw)
      : dom_(std::move(dom_hw)), img_(std::move(img_hw)) {}

  std::vector<Letter> operator()(std::span<const Letter> xs) const {
    const std::vector<Letter> key(xs.begin(), xs.end());
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto [hw, path] = raise_to_classical_hw(to_word(xs));
    if (to_letters(hw) != dom_)
      throw InvalidInput("component map applied outside its domain component");
    auto out = to_letters(replay_lowering(to_word(img_), path));
    std::lock_guard lock(mu_);
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::vector<Letter> dom_, img_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<Letter>, std::vector<Letter>> memo_;
};

using L = Letter;

const ComponentMap& xi_map() {
  static ComponentMap m({L::l1, L::l0}, {L::l1});
  return m;
}
const ComponentMap& xi_inv_map() {
  static ComponentMap m({L::l1}, {L::l1, L::l0});
  return m;
}
const ComponentMap& eta_map() {
  static ComponentMap m({L::l1, L::l1, L::l2}, {L::l1, L::l2, L::l1});
  return m;
}
const ComponentMap& theta_map() {
  static ComponentMap m({L::l1, L::l1, L::l2_3}, {L::l1, L::l2_3, L::l1});
  return m;
}

// Classical component of a two-letter word, identified by its highest weight.
std::pair<Letter, Letter> classify_pair(Letter a, Letter b) {
  auto [hw, path] = raise_to_classical_hw(Word{make_factor(a), make_factor(b)});
  auto xs = to_letters(hw);
  return {xs[0], xs[1]};
}

// eta_i / theta_i act on factors i, i+1, i+2 of a letter word (1-based i).
void apply_triple(std::vector<Letter>& w, int i, const ComponentMap& m) {
  std::span<const Letter> tri(w.data() + (i - 1), 3);
  auto img = m(tri);
  std::copy(img.begin(), img.end(), w.begin() + (i - 1));
}

}  // namespace

std::pair<Letter, std::vector<Letter>> r_insertion(std::span<const Letter> tableau,
                                                   Letter b2, int level) {
  if (!validate_tableau(tableau))
    throw InvalidInput("r_insertion: not a valid one-row tableau");
  const int j = static_cast<int>(tableau.size());
  const int l = level;
  if (j > l) throw InvalidInput("r_insertion: tableau is longer than the level");
  const std::vector<Letter> alphas(tableau.begin(), tableau.end());

  if (b2 == Letter::empty) {
    if (j == l) return {alphas.back(), {alphas.begin(), alphas.end() - 1}};
    return {Letter::empty, alphas};
  }
  if (j == 0) {
    // Empty tableau: (0,...,0) ⊗ b2 is settled by the highest-weight table.
    RResult r = r_apply(Coord{}, l, b2);
    return {r.first, coord_tableau(r.second, l)};
  }

  // The word alpha_j ... alpha_1 beta, leftmost factor first.
  std::vector<Letter> word(alphas.rbegin(), alphas.rend());
  word.push_back(b2);
  const auto comp = classify_pair(alphas[0], b2);

  if (comp == std::pair{L::l1, L::l1}) {
    if (j == l) {
      std::vector<Letter> t{b2};
      t.insert(t.end(), alphas.begin(), alphas.end() - 1);
      return {alphas.back(), t};
    }
    if (j == l - 1) {
      std::vector<Letter> t{b2};
      t.insert(t.end(), alphas.begin(), alphas.end());
      return {Letter::empty, t};
    }
    std::vector<Letter> t{b2};
    t.insert(t.end(), alphas.begin(), alphas.end());
    t.push_back(L::lb1);
    return {L::l1, t};
  }

  if (comp == std::pair{L::l1, L::l2}) {
    for (int i = j - 1; i >= 1; --i) apply_triple(word, i, eta_map());
    if (j == l) {
      // word = q_{l+1} q_l ... q_1
      std::vector<Letter> t(word.rbegin(), word.rend() - 1);
      return {word[0], t};
    }
    // xi_1^{-1} expands factor 1; word becomes p r q_j ... q_1.
    auto head = xi_inv_map()(std::span<const Letter>(word.data(), 1));
    word.insert(word.begin() + 1, head[1]);
    word[0] = head[0];
    std::vector<Letter> t(word.rbegin(), word.rend() - 2);
    t.push_back(word[1]);
    return {word[0], t};
  }

  if (comp == std::pair{L::l1, L::l2_3}) {
    if (j == 1) return {alphas[0], {b2}};
    for (int i = j - 1; i >= 1; --i) apply_triple(word, i, theta_map());
    std::vector<Letter> t(word.rbegin(), word.rend() - 1);
    return {word[0], t};
  }

  if (comp == std::pair{L::l1, L::l0}) {
    if (j == 1) return {alphas[0], {b2}};
    const Letter pair[2] = {alphas[0], b2};
    const Letter r = xi_map()(pair)[0];
    const auto comp2 = classify_pair(alphas[1], r);
    if (comp2 == std::pair{L::l1, L::l1}) {
      auto pq = xi_inv_map()(std::span<const Letter>(&alphas.back(), 1));
      std::vector<Letter> t{r};
      t.insert(t.end(), alphas.begin() + 1, alphas.end() - 1);
      t.push_back(pq[1]);
      return {pq[0], t};
    }
    if (comp2 != std::pair{L::l1, L::l2})
      throw ReplayError("r_insertion: unexpected component after xi at " +
                        std::string(token(alphas[1])) + " . " + std::string(token(r)));
    // xi_j collapses factors j, j+1 (alpha_1 and beta), then eta's.
    const Letter tail[2] = {word[static_cast<std::size_t>(j - 1)],
                            word[static_cast<std::size_t>(j)]};
    word[static_cast<std::size_t>(j - 1)] = xi_map()(tail)[0];
    word.pop_back();
    for (int i = j - 2; i >= 1; --i) apply_triple(word, i, eta_map());
    std::vector<Letter> t(word.rbegin(), word.rend() - 1);
    return {word[0], t};
  }

  // Component of 1 ⊗ b1 (a singleton): the exact word 1 ⊗ b1.
  if (comp == std::pair{L::l1, L::lb1}) {
    if (alphas[0] == L::l1 && b2 == L::lb1 && j > 1)
      return {alphas.back(), {alphas.begin() + 1, alphas.end() - 1}};
    return {alphas[0], {b2}};
  }

  throw ReplayError("r_insertion: unclassified component " +
                    std::string(token(comp.first)) + " . " + std::string(token(comp.second)));
}

// ------------------------------------------------------------------
// R-bar on B♮ ⊗ B_1.
// ------------------------------------------------------------------
namespace {

// Image of the four highest-weight elements 1' ⊗ {1, 2_1, e, 0h}.  The two
// weight-Λ2 components pair the only way that intertwines the 0-operators;
// the iso suite re-verifies this on all 105 words.
std::pair<Letter, Node> rbar_hw(Letter b2) {
  switch (b2) {
    case Letter::l1: return {Letter::l1, Node::n1};
    case Letter::l2_1: return {Letter::l1, Node::n3};
    case Letter::empty: return {Letter::l1, Node::nb2};
    case Letter::l0h: return {Letter::empty, Node::n1};
    default:
      throw ReplayError("rbar: unexpected highest weight 1' . " + std::string(token(b2)));
  }
}

}  // namespace

std::pair<Letter, Node> rbar_apply(Node n, Letter b2) {
  Word w{Factor{n}, make_factor(b2)};
  auto [hw, path] = raise_to_classical_hw(std::move(w));
  if (std::get<Node>(hw[0]) != Node::n1)
    throw ReplayError("rbar: raising did not reach 1' (word " + word_str(hw) + ")");
  const auto top2 = coord_letter(std::get<BElem>(hw[1]).coord);
  auto [lt, nn] = rbar_hw(*top2);
  Word img = replay_lowering(Word{make_factor(lt), Factor{nn}}, path);
  const auto first = coord_letter(std::get<BElem>(img[0]).coord);
  return {*first, std::get<Node>(img[1])};
}

// ------------------------------------------------------------------
// Generic R on B_l ⊗ B♮ by signature matching, verified per level.
// ------------------------------------------------------------------
namespace {

using Signature = std::array<int, 6>;

Signature word_signature(const Word& w) {
  Signature s{};
  for (int i = 0; i < 3; ++i) {
    s[static_cast<std::size_t>(2 * i)] = eps(std::span<const Factor>(w), i);
    s[static_cast<std::size_t>(2 * i + 1)] = phi(std::span<const Factor>(w), i);
  }
  return s;
}

struct NaturalTable {
  // highest-weight word of B_l ⊗ B♮ -> image word in B♮ ⊗ B_l
  std::map<std::pair<Coord, Node>, std::pair<Node, Coord>> hw_map;
};

std::pair<Node, Coord> r_natural_raw(const NaturalTable& table, const Coord& b, int level,
                                     Node n) {
  Word w{Factor{BElem{b, level}}, Factor{n}};
  auto [hw, path] = raise_to_classical_hw(std::move(w));
  const auto key = std::make_pair(std::get<BElem>(hw[0]).coord, std::get<Node>(hw[1]));
  const auto it = table.hw_map.find(key);
  if (it == table.hw_map.end())
    throw ReplayError("r_natural: unmatched highest weight " + word_str(hw));
  Word img = replay_lowering(Word{Factor{it->second.first},
                                  Factor{BElem{it->second.second, level}}},
                             path);
  return {std::get<Node>(img[0]), std::get<BElem>(img[1]).coord};
}

const NaturalTable& natural_table(int level) {
  static std::mutex mu;
  static std::map<int, NaturalTable> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(level); it != cache.end()) return it->second;

  const auto elems = enumerate_level(level);
  std::vector<Word> dom_hw, img_hw;
  for (const Coord& b : elems)
    for (int k = 0; k < kNodeCount; ++k) {
      Word w{Factor{BElem{b, level}}, Factor{static_cast<Node>(k)}};
      if (is_classical_hw(w)) dom_hw.push_back(w);
      Word v{Factor{static_cast<Node>(k)}, Factor{BElem{b, level}}};
      if (is_classical_hw(v)) img_hw.push_back(v);
    }

  NaturalTable table;
  for (const Word& h : dom_hw) {
    const auto sig = word_signature(h);
    const Word* match = nullptr;
    for (const Word& g : img_hw) {
      if (word_signature(g) == sig) {
        if (match) throw ReplayError("r_natural: ambiguous signature at " + word_str(h));
        match = &g;
      }
    }
    if (!match) throw ReplayError("r_natural: no signature match for " + word_str(h));
    table.hw_map.emplace(
        std::make_pair(std::get<BElem>(h[0]).coord, std::get<Node>(h[1])),
        std::make_pair(std::get<Node>((*match)[0]), std::get<BElem>((*match)[1]).coord));
  }

  // Verify the map intertwines every operator on the whole product.
  for (const Coord& b : elems) {
    for (int k = 0; k < kNodeCount; ++k) {
      const Node n = static_cast<Node>(k);
      auto [nn, bb] = r_natural_raw(table, b, level, n);
      const Word w{Factor{BElem{b, level}}, Factor{n}};
      const Word iw{Factor{nn}, Factor{BElem{bb, level}}};
      for (int i = 0; i < 3; ++i) {
        for (bool low : {false, true}) {
          const auto a = low ? lower(w, i) : raise(w, i);
          const auto c = low ? lower(iw, i) : raise(iw, i);
          if (a.has_value() != c.has_value())
            throw ReplayError("r_natural failed verification at " + word_str(w));
          if (a) {
            auto [n2, b2] = r_natural_raw(table, std::get<BElem>((*a)[0]).coord, level,
                                          std::get<Node>((*a)[1]));
            if (!(std::get<Node>((*c)[0]) == n2) ||
                !(std::get<BElem>((*c)[1]).coord == b2))
              throw ReplayError("r_natural failed verification at " + word_str(w));
          }
        }
      }
    }
  }
  return cache.emplace(level, std::move(table)).first->second;
}

}  // namespace

std::pair<Node, Coord> r_natural(const Coord& b, int level, Node n) {
  return r_natural_raw(natural_table(level), b, level, n);
}

std::pair<AffLetter, AffCoord> aff_r(const AffCoord& b1, int level, const AffLetter& b2) {
  RResult r = r_apply(b1.elem, level, b2.elem);
  return {AffLetter{b2.exp + r.energy, r.first}, AffCoord{b1.exp - r.energy, r.second}};
}

}  // namespace g2ca
