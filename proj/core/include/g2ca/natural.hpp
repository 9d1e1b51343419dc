#pragma once

#include <optional>
#include <string_view>

namespace g2ca {

// The seven-node crystal B-natural.  Arrows:
//   2: 1' -> 2',  3' -> 0',  0' -> b3',  b2' -> b1'
//   1: 2' -> 3',  b3' -> b2'
//   0: b2' -> 1', b1' -> 2'
enum class Node : int { n1, n2, n3, n0, nb3, nb2, nb1 };

inline constexpr int kNodeCount = 7;

std::string_view token(Node n);
std::optional<Node> parse_node(std::string_view tok);

std::optional<Node> natural_raise(Node n, int i);
std::optional<Node> natural_lower(Node n, int i);
int natural_eps(Node n, int i);   // consecutive raises
int natural_phi(Node n, int i);   // consecutive lowers

}  // namespace g2ca
