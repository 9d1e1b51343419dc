#include "g2ca/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "g2ca/errors.hpp"

namespace g2ca {
namespace {

// Generous upper bound on the size of a factor's home crystal, used only to
// bound raising loops defensively.
long long factor_size_bound(const Factor& f) {
  if (std::holds_alternative<Node>(f)) return kNodeCount;
  if (const auto* a = std::get_if<A1>(&f)) return a->level() + 1;
  const auto& b = std::get<BElem>(f);
  const long long l = b.level;
  return std::min<long long>(1'000'000, (l + 1) * (l + 1) * (3 * l + 1) * (3 * l + 1) *
                                            (2 * l + 1));
}

}  // namespace

bool operator==(const Factor& a, const Factor& b) {
  return static_cast<const std::variant<BElem, Node, A1>&>(a) ==
         static_cast<const std::variant<BElem, Node, A1>&>(b);
}

Factor make_factor(Letter x) { return BElem{letter_coord(x), 1}; }

int eps(const Factor& f, int i) {
  if (const auto* b = std::get_if<BElem>(&f)) return eps(b->coord, i, b->level);
  if (const auto* n = std::get_if<Node>(&f)) return natural_eps(*n, i);
  return a1_eps(std::get<A1>(f), i);
}

int phi(const Factor& f, int i) {
  if (const auto* b = std::get_if<BElem>(&f)) return phi(b->coord, i, b->level);
  if (const auto* n = std::get_if<Node>(&f)) return natural_phi(*n, i);
  return a1_phi(std::get<A1>(f), i);
}

int pairing(const Factor& f, int i) { return phi(f, i) - eps(f, i); }

std::optional<Factor> raise(const Factor& f, int i) {
  if (const auto* b = std::get_if<BElem>(&f)) {
    auto r = raise(b->coord, i, b->level);
    if (!r) return std::nullopt;
    return Factor{BElem{*r, b->level}};
  }
  if (const auto* n = std::get_if<Node>(&f)) {
    auto r = natural_raise(*n, i);
    if (!r) return std::nullopt;
    return Factor{*r};
  }
  auto r = a1_raise(std::get<A1>(f), i);
  if (!r) return std::nullopt;
  return Factor{*r};
}

std::optional<Factor> lower(const Factor& f, int i) {
  if (const auto* b = std::get_if<BElem>(&f)) {
    auto r = lower(b->coord, i, b->level);
    if (!r) return std::nullopt;
    return Factor{BElem{*r, b->level}};
  }
  if (const auto* n = std::get_if<Node>(&f)) {
    auto r = natural_lower(*n, i);
    if (!r) return std::nullopt;
    return Factor{*r};
  }
  auto r = a1_lower(std::get<A1>(f), i);
  if (!r) return std::nullopt;
  return Factor{*r};
}

std::string factor_str(const Factor& f) {
  if (const auto* b = std::get_if<BElem>(&f)) {
    if (b->level == 1) {
      if (auto lt = coord_letter(b->coord)) return std::string(token(*lt));
    }
    return b->coord.str() + "@" + std::to_string(b->level);
  }
  if (const auto* n = std::get_if<Node>(&f)) return std::string(token(*n));
  const auto& a = std::get<A1>(f);
  return "(" + std::to_string(a.x1) + "," + std::to_string(a.x2) + ")";
}

std::string word_str(std::span<const Factor> w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << " . ";
    os << factor_str(w[k]);
  }
  return os.str();
}

int eps(std::span<const Factor> w, int i) {
  int e = 0, wt = 0;
  for (const Factor& f : w) {
    e = std::max(e, eps(f, i) - wt);
    wt += pairing(f, i);
  }
  return e;
}

int phi(std::span<const Factor> w, int i) {
  int ph = 0, wt = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    ph = std::max(ph, phi(*it, i) + wt);
    wt += pairing(*it, i);
  }
  return ph;
}

int pairing(std::span<const Factor> w, int i) {
  int wt = 0;
  for (const Factor& f : w) wt += pairing(f, i);
  return wt;
}

namespace {

// phi of every proper prefix: pre[k] = phi_i(w[0..k)), k >= 1.
std::vector<int> prefix_phi(std::span<const Factor> w, int i) {
  std::vector<int> pre(w.size() + 1, 0);
  int ph = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    ph = std::max(phi(w[k], i), ph + pairing(w[k], i));
    pre[k + 1] = ph;
  }
  return pre;
}

// Both selection rules differ only in the tie: raising recurses into the
// prefix when phi(prefix) >= eps(last), lowering when strictly greater.
int select(std::span<const Factor> w, int i, bool strict) {
  const auto pre = prefix_phi(w, i);
  std::size_t m = w.size();
  while (m >= 2) {
    const int lhs = pre[m - 1];
    const int rhs = eps(w[m - 1], i);
    if (strict ? (lhs > rhs) : (lhs >= rhs)) {
      --m;
    } else {
      return static_cast<int>(m - 1);
    }
  }
  return 0;
}

}  // namespace

int raise_position(std::span<const Factor> w, int i) { return select(w, i, false); }
int lower_position(std::span<const Factor> w, int i) { return select(w, i, true); }

std::optional<Word> raise(const Word& w, int i) {
  const int p = raise_position(w, i);
  auto g = raise(w[static_cast<std::size_t>(p)], i);
  if (!g) return std::nullopt;
  Word out = w;
  out[static_cast<std::size_t>(p)] = std::move(*g);
  return out;
}

std::optional<Word> lower(const Word& w, int i) {
  const int p = lower_position(w, i);
  auto g = lower(w[static_cast<std::size_t>(p)], i);
  if (!g) return std::nullopt;
  Word out = w;
  out[static_cast<std::size_t>(p)] = std::move(*g);
  return out;
}

std::pair<Word, RaisePath> raise_to_classical_hw(Word w) {
  long long bound = 1;
  for (const Factor& f : w) bound = std::min<long long>(10'000'000, bound * factor_size_bound(f));
  RaisePath path;
  long long steps = 0;
  for (;;) {
    bool moved = false;
    for (int i = 1; i <= 2 && !moved; ++i) {
      const int p = raise_position(w, i);
      auto g = raise(w[static_cast<std::size_t>(p)], i);
      if (g) {
        w[static_cast<std::size_t>(p)] = std::move(*g);
        path.push_back(RaiseStep{i, p});
        moved = true;
      }
    }
    if (!moved) return {std::move(w), std::move(path)};
    if (++steps > bound)
      throw ReplayError("raise_to_classical_hw exceeded the step bound; "
                        "operator tables are inconsistent");
  }
}

Word replay_lowering(Word w, const RaisePath& path) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto g = lower(w, it->index);
    if (!g) {
      throw ReplayError("replay died lowering index " + std::to_string(it->index) +
                        " at word " + word_str(w) + " (path length " +
                        std::to_string(path.size()) + ")");
    }
    w = std::move(*g);
  }
  return w;
}

bool is_classical_hw(std::span<const Factor> w) {
  return eps(w, 1) == 0 && eps(w, 2) == 0;
}

bool is_level_hw(const Factor& b1, const Factor& b2, int lambda_h1, int lambda_h2) {
  return eps(b1, 1) == 0 && eps(b1, 2) == 0 && eps(b2, 1) <= lambda_h1 &&
         eps(b2, 2) <= lambda_h2;
}

}  // namespace g2ca
