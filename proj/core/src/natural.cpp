#include "g2ca/natural.hpp"

#include <array>

namespace g2ca {
namespace {

constexpr std::array<std::string_view, kNodeCount> kTokens = {
    "1'", "2'", "3'", "0'", "b3'", "b2'", "b1'"};

constexpr int N = -1;

// lower_to[i][node]: target of the i-arrow out of node, or -1.
constexpr int kLower[3][kNodeCount] = {
    // 0-arrows: b2' -> 1', b1' -> 2'
    {N, N, N, N, N, 0, 1},
    // 1-arrows: 2' -> 3', b3' -> b2'
    {N, 2, N, N, 5, N, N},
    // 2-arrows: 1' -> 2', 3' -> 0', 0' -> b3', b2' -> b1'
    {1, N, 3, 4, N, 6, N},
};

constexpr int raise_of(Node n, int i) {
  for (int s = 0; s < kNodeCount; ++s)
    if (kLower[i][s] == static_cast<int>(n)) return s;
  return N;
}

}  // namespace

std::string_view token(Node n) { return kTokens[static_cast<int>(n)]; }

std::optional<Node> parse_node(std::string_view tok) {
  for (int i = 0; i < kNodeCount; ++i)
    if (kTokens[i] == tok) return static_cast<Node>(i);
  return std::nullopt;
}

std::optional<Node> natural_lower(Node n, int i) {
  const int t = kLower[i][static_cast<int>(n)];
  if (t < 0) return std::nullopt;
  return static_cast<Node>(t);
}

std::optional<Node> natural_raise(Node n, int i) {
  const int t = raise_of(n, i);
  if (t < 0) return std::nullopt;
  return static_cast<Node>(t);
}

int natural_phi(Node n, int i) {
  int c = 0;
  for (auto cur = natural_lower(n, i); cur; cur = natural_lower(*cur, i)) ++c;
  return c;
}

int natural_eps(Node n, int i) {
  int c = 0;
  for (auto cur = natural_raise(n, i); cur; cur = natural_raise(*cur, i)) ++c;
  return c;
}

}  // namespace g2ca
